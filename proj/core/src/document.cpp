#include "tcb/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace tcb {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) { throw schema_error(message); }

void check_keys(const json& object, const std::set<std::string>& allowed,
                const std::string& where) {
    for (const auto& [key, value] : object.items()) {
        if (!allowed.count(key)) {
            bad("unknown key \"" + key + "\" in " + where);
        }
    }
}

int require_int(const json& value, const std::string& where) {
    if (!value.is_number_integer()) bad(where + " must be an integer");
    return value.get<int>();
}

std::string require_string(const json& value, const std::string& where) {
    if (!value.is_string()) bad(where + " must be a string");
    return value.get<std::string>();
}

bool require_bool(const json& value, const std::string& where) {
    if (!value.is_boolean()) bad(where + " must be a boolean");
    return value.get<bool>();
}

std::vector<int> require_int_array(const json& value, const std::string& where) {
    if (!value.is_array()) bad(where + " must be an array of integers");
    std::vector<int> out;
    for (const auto& item : value) out.push_back(require_int(item, "entry of " + where));
    return out;
}

}  // namespace

ProblemDocument ProblemDocument::from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("input is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) bad("document must be a JSON object");
    check_keys(doc,
               {"schema_version", "field", "hypersurface", "generators", "element", "sweep",
                "degrees", "delta", "genus", "twists", "flags"},
               "document");

    if (!doc.contains("schema_version")) bad("missing schema_version");
    if (require_int(doc["schema_version"], "schema_version") != 1) {
        bad("unsupported schema_version (expected 1)");
    }

    ProblemDocument out;
    if (doc.contains("field")) {
        const json& f = doc["field"];
        if (f.is_string()) {
            if (f.get<std::string>() != "rationals") {
                bad("field must be \"rationals\" or {\"prime\": p}");
            }
        } else if (f.is_object()) {
            check_keys(f, {"prime"}, "field");
            if (!f.contains("prime")) bad("field object needs a \"prime\" key");
            int p = require_int(f["prime"], "field.prime");
            if (p < 2) bad("field.prime must be >= 2");
            try {
                out.field = FieldDesc::prime_field(static_cast<std::uint64_t>(p));
            } catch (const invalid_field& e) {
                bad(e.what());
            }
        } else {
            bad("field must be \"rationals\" or {\"prime\": p}");
        }
    }

    if (doc.contains("hypersurface")) {
        out.hypersurface = require_string(doc["hypersurface"], "hypersurface");
    }
    if (doc.contains("generators")) {
        if (!doc["generators"].is_array()) bad("generators must be an array of strings");
        for (const auto& g : doc["generators"]) {
            out.generators.push_back(require_string(g, "generator"));
        }
    }
    if (doc.contains("element")) out.element = require_string(doc["element"], "element");
    if (doc.contains("sweep")) {
        const json& s = doc["sweep"];
        if (!s.is_object()) bad("sweep must be {\"from\": lo, \"to\": hi}");
        check_keys(s, {"from", "to"}, "sweep");
        if (!s.contains("from") || !s.contains("to")) bad("sweep needs \"from\" and \"to\"");
        out.sweep = {require_int(s["from"], "sweep.from"), require_int(s["to"], "sweep.to")};
    }
    if (doc.contains("degrees")) out.degrees = require_int_array(doc["degrees"], "degrees");
    if (doc.contains("delta")) out.delta = require_int(doc["delta"], "delta");
    if (doc.contains("genus")) out.genus = require_int(doc["genus"], "genus");
    if (doc.contains("twists")) out.twists = require_int_array(doc["twists"], "twists");
    if (doc.contains("flags")) {
        const json& f = doc["flags"];
        if (!f.is_object()) bad("flags must be an object of booleans");
        check_keys(f, {"semistable", "strongly_semistable", "indecomposable", "large_p"}, "flags");
        if (f.contains("semistable")) {
            out.semistable = require_bool(f["semistable"], "flags.semistable");
        }
        if (f.contains("strongly_semistable")) {
            out.strongly_semistable = require_bool(f["strongly_semistable"],
                                                   "flags.strongly_semistable");
        }
        if (f.contains("indecomposable")) {
            out.indecomposable = require_bool(f["indecomposable"], "flags.indecomposable");
        }
        if (f.contains("large_p")) out.large_p = require_bool(f["large_p"], "flags.large_p");
    }
    if (out.large_p && !out.field.is_rational()) {
        bad("flags.large_p describes the generic fiber and requires field \"rationals\"");
    }
    return out;
}

ProblemDocument ProblemDocument::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

}  // namespace tcb
