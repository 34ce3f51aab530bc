#ifndef TCB_DOCUMENT_HPP
#define TCB_DOCUMENT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tcb/scalar.hpp"

namespace tcb {

/// A problem description as read from an input file. Validated against the
/// documented schema (schema_version 1) before any computation; violations
/// raise schema_error.
struct ProblemDocument {
    FieldDesc field = FieldDesc::rationals();
    std::optional<std::string> hypersurface;
    std::vector<std::string> generators;
    std::optional<std::string> element;
    std::optional<std::pair<int, int>> sweep;
    std::optional<std::vector<int>> degrees;
    std::optional<int> delta;
    std::optional<int> genus;
    std::optional<std::vector<int>> twists;
    bool semistable = false;
    bool strongly_semistable = false;
    bool indecomposable = false;
    bool large_p = false;

    static ProblemDocument from_json_text(const std::string& text);
    static ProblemDocument from_file(const std::string& path);
};

}  // namespace tcb

#endif
