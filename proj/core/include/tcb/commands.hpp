#ifndef TCB_COMMANDS_HPP
#define TCB_COMMANDS_HPP

#include "tcb/decision.hpp"
#include "tcb/document.hpp"

namespace tcb {

inline constexpr int kSchemaVersion = 1;

struct CommandOptions {
    bool json = false;
    std::optional<std::string> element;          // overrides the document
    std::optional<std::pair<int, int>> range;    // overrides sweep / cohomology range
    std::size_t max_pairs = 200000;
    int max_denominator_exp = 64;
};

struct CommandResult {
    int exit_code = 0;
    std::string human;         // formatted report
    std::string machine_json;  // deterministic JSON with stable key order
};

CommandResult cmd_bounds(const ProblemDocument& doc, const CommandOptions& options = {});
CommandResult cmd_syzygy(const ProblemDocument& doc, const CommandOptions& options = {});
CommandResult cmd_decide(const ProblemDocument& doc, const CommandOptions& options = {});
CommandResult cmd_sweep(const ProblemDocument& doc, const CommandOptions& options = {});
CommandResult cmd_cohomology(const ProblemDocument& doc, const CommandOptions& options = {});

/// Exit-code policy: 0 report produced, 2 input error, 3 precondition
/// failure (singular curve), 4 resource limit.
int exit_code_for(const std::exception& e);

}  // namespace tcb

#endif
