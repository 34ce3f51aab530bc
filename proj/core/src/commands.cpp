#include "tcb/commands.hpp"

#include <sstream>

#include "json.hpp"

namespace tcb {

namespace {

using ordered_json = nlohmann::ordered_json;

ForcingOptions forcing_options(const CommandOptions& options) {
    ForcingOptions out;
    out.max_denominator_exp = options.max_denominator_exp;
    out.gb.max_pairs = options.max_pairs;
    return out;
}

ordered_json json_optional_int(const std::optional<int>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json json_slope_bound(const SlopeBound& b) {
    ordered_json out;
    out["value"] = rational_to_string(b.value);
    out["strict"] = b.strict;
    out["citation"] = b.citation;
    return out;
}

ordered_json json_entries(const std::vector<BoundEntry>& entries) {
    ordered_json out = ordered_json::array();
    for (const auto& e : entries) {
        ordered_json item;
        item["kind"] = e.kind;
        item["degree"] = e.degree;
        item["citation"] = e.citation;
        item["caveats"] = e.caveats;
        out.push_back(std::move(item));
    }
    return out;
}

ordered_json report_header(const char* command, const ProblemDocument& doc) {
    ordered_json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = command;
    out["field"] = doc.field.name();
    return out;
}

CommandResult finish(ordered_json machine, std::string human) {
    CommandResult out;
    out.machine_json = machine.dump(2) + "\n";
    out.human = std::move(human);
    return out;
}

Characteristic characteristic_of(const ProblemDocument& doc) {
    if (!doc.field.is_rational()) return Characteristic::prime(doc.field.characteristic());
    return doc.large_p ? Characteristic::large_p() : Characteristic::zero();
}

struct RingInputs {
    RingPtr ring;
    std::vector<Polynomial> generators;  // in working coordinates
};

RingPtr build_ring(const ProblemDocument& doc, const CommandOptions& options) {
    if (!doc.hypersurface) throw schema_error("a hypersurface is required for this command");
    Polynomial f = parse_polynomial(*doc.hypersurface, doc.field);
    RingOptions ring_options;
    ring_options.gb.max_pairs = options.max_pairs;
    return HypersurfaceRing::make(f, ring_options);
}

RingInputs build_ring_inputs(const ProblemDocument& doc, const CommandOptions& options) {
    RingInputs out;
    out.ring = build_ring(doc, options);
    if (doc.generators.empty()) throw schema_error("generators are required for this command");
    const CoordinateChange& change = out.ring->coordinate_change();
    for (const auto& text : doc.generators) {
        Polynomial g = parse_polynomial(text, doc.field);
        out.generators.push_back(out.ring->reduce(change.apply(g)));
    }
    return out;
}

/// Degree data for the bounds command; the ring is optional there.
DegreeData bounds_degree_data(const ProblemDocument& doc, const CommandOptions& options,
                              int* delta_out, std::optional<int>* genus_out,
                              std::vector<std::string>* notes) {
    std::vector<int> degrees;
    std::optional<int> delta;
    std::optional<int> genus = doc.genus;

    if (doc.hypersurface) {
        RingPtr ring = build_ring(doc, options);
        delta = ring->degree();
        if (!genus && ring->is_smooth()) genus = ring->genus();
        if (!ring->is_smooth()) {
            notes->push_back(
                "the curve is singular: the plane-curve genus formula does not apply; "
                "genus-based bounds need an explicit genus");
        }
        if (!doc.generators.empty()) {
            const CoordinateChange& change = ring->coordinate_change();
            for (const auto& text : doc.generators) {
                Polynomial g = ring->reduce(change.apply(parse_polynomial(text, doc.field)));
                auto d = g.homogeneous_degree();
                if (!d) throw schema_error("generator \"" + text + "\" is not homogeneous nonzero");
                degrees.push_back(*d);
            }
        }
    } else if (!doc.generators.empty()) {
        for (const auto& text : doc.generators) {
            auto d = parse_polynomial(text, doc.field).homogeneous_degree();
            if (!d) throw schema_error("generator \"" + text + "\" is not homogeneous nonzero");
            degrees.push_back(*d);
        }
    }
    if (doc.degrees) degrees = *doc.degrees;
    if (degrees.empty()) {
        throw schema_error("degrees are required: give \"generators\" or a \"degrees\" list");
    }
    if (doc.delta) delta = *doc.delta;
    if (!delta) throw schema_error("delta is required: give \"hypersurface\" or \"delta\"");

    *delta_out = *delta;
    *genus_out = genus;
    return DegreeData::make(degrees, *delta, genus.value_or(0), characteristic_of(doc), doc.twists,
                            doc.semistable, doc.strongly_semistable, doc.indecomposable);
}

std::string parameter_caveat(int delta) {
    return "valid in characteristic 0 and in characteristic p > 2(g-1)/" + std::to_string(delta);
}

}  // namespace

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const singular_curve*>(&e)) return 3;
    if (dynamic_cast<const resource_exhausted*>(&e)) return 4;
    return 2;
}

CommandResult cmd_bounds(const ProblemDocument& doc, const CommandOptions& options) {
    std::vector<std::string> notes;
    int delta = 1;
    std::optional<int> genus;
    DegreeData data = bounds_degree_data(doc, options, &delta, &genus, &notes);

    SlopeEstimates slopes = slope_estimates(data);
    BoundReport combined = generic_bounds(data);
    ordered_json per_rule = ordered_json::array();
    per_rule.push_back({{"rule", "generic"}, {"bounds", json_entries(combined.entries)}});

    if (data.twists()) {
        BoundReport split = split_bounds(data);
        per_rule.push_back({{"rule", "split"}, {"bounds", json_entries(split.entries)}});
        combined.absorb(split);
    }

    if (data.semistable()) {
        VanishingBound k = vanishing_bound(data);
        BoundReport vanish;
        const bool parameter_case = data.n() == 2;
        std::vector<std::string> caveats;
        if (parameter_case) {
            caveats.push_back(parameter_caveat(data.delta()));
        } else if (data.characteristic().is_zero()) {
            // Stated unconditionally in characteristic zero.
        } else if (data.strongly_semistable()) {
            caveats.push_back("under the asserted strong semistability (characteristic p)");
        } else {
            caveats.push_back(
                "in characteristic p the vanishing statement needs strong semistability; "
                "value advisory");
        }
        const char* tag = parameter_case ? citation::vanishing_parameter
                                         : citation::vanishing_semistable;
        vanish.vanishing_degree = k.k;
        vanish.inclusion_degree = k.k;
        vanish.exclusion_degree = k.k;
        vanish.entries.push_back(BoundEntry{"vanishing", k.k, tag, caveats});
        per_rule.push_back({{"rule", "vanishing"}, {"bounds", json_entries(vanish.entries)}});
        combined.absorb(vanish);
    }

    if (data.n() == 3 && data.indecomposable()) {
        if (!data.characteristic().is_zero()) {
            if (!data.characteristic().is_large_p()) {
                notes.push_back(
                    "genus bounds are stated in characteristic zero; for almost-all-p numbers "
                    "use flags.large_p on a rationals document");
            }
        } else if (genus) {
            BoundReport genus_report = genus_bounds_n3(data);
            per_rule.push_back(
                {{"rule", "genus"}, {"bounds", json_entries(genus_report.entries)}});
            combined.absorb(genus_report);
        } else {
            notes.push_back("genus bounds skipped: genus unknown");
        }
    }

    if (data.characteristic().is_large_p()) {
        SlopeEstimates transferred = charp_transfer(slopes);
        BoundReport large_p;
        int inc = inclusion_degree_from_slope(transferred.mu_max_upper, data.delta());
        int exc = exclusion_degree_from_slope(transferred.mu_min_lower, data.delta());
        large_p.inclusion_degree = inc;
        large_p.exclusion_degree = exc;
        large_p.entries.push_back(
            BoundEntry{"inclusion", inc, citation::slope_large_p, {"for almost all p"}});
        large_p.entries.push_back(
            BoundEntry{"exclusion", exc, citation::slope_large_p, {"for almost all p"}});
        per_rule.push_back({{"rule", "large-p"}, {"bounds", json_entries(large_p.entries)}});
        combined.absorb(large_p);
    }

    combined.notes.insert(combined.notes.begin(), notes.begin(), notes.end());

    ordered_json machine = report_header("bounds", doc);
    machine["characteristic"] = data.characteristic().to_string();
    machine["degrees"] = data.degrees();
    machine["delta"] = data.delta();
    machine["genus"] = json_optional_int(genus);
    machine["twists"] = data.twists() ? ordered_json(*data.twists()) : ordered_json(nullptr);
    machine["flags"] = {{"semistable", data.semistable()},
                        {"strongly_semistable", data.strongly_semistable()},
                        {"indecomposable", data.indecomposable()}};
    machine["slopes"] = {{"mu", rational_to_string(slopes.mu)},
                         {"mu_citation", citation::slope_average},
                         {"mu_min_lower", json_slope_bound(slopes.mu_min_lower)},
                         {"mu_min_upper", json_slope_bound(slopes.mu_min_upper)},
                         {"mu_max_lower", json_slope_bound(slopes.mu_max_lower)},
                         {"mu_max_upper", json_slope_bound(slopes.mu_max_upper)},
                         {"mu_min_exact", slopes.mu_min_exact},
                         {"mu_max_exact", slopes.mu_max_exact}};
    machine["rules"] = per_rule;
    machine["summary"] = {{"inclusion_degree", json_optional_int(combined.inclusion_degree)},
                          {"exclusion_degree", json_optional_int(combined.exclusion_degree)},
                          {"max_excluded_degree", json_optional_int(combined.max_excluded_degree())},
                          {"vanishing_degree", json_optional_int(combined.vanishing_degree)}};
    machine["notes"] = combined.notes;

    std::ostringstream human;
    human << "degree bounds over " << doc.field.name() << ", characteristic "
          << data.characteristic().to_string() << "\n";
    human << "  degrees:";
    for (int d : data.degrees()) human << " " << d;
    human << ", delta = " << data.delta();
    if (genus) human << ", genus = " << *genus;
    human << "\n";
    human << "  slope mu = " << rational_to_string(slopes.mu) << " [" << citation::slope_average
          << "]\n";
    for (const auto& e : combined.entries) {
        human << "  " << e.kind << " at degree " << e.degree << " [" << e.citation << "]";
        for (const auto& c : e.caveats) human << " (" << c << ")";
        human << "\n";
    }
    if (combined.inclusion_degree) {
        human << "  => R_m lies in the tight closure for every m >= "
              << *combined.inclusion_degree << "\n";
    }
    if (combined.exclusion_degree) {
        human << "  => below degree " << *combined.exclusion_degree
              << " membership in the tight closure equals ideal membership\n";
    }
    if (combined.vanishing_degree) {
        human << "  => tight closure = ideal + R_{>=" << *combined.vanishing_degree << "}\n";
    }
    for (const auto& n : combined.notes) human << "  note: " << n << "\n";

    return finish(std::move(machine), human.str());
}

CommandResult cmd_syzygy(const ProblemDocument& doc, const CommandOptions& options) {
    if (doc.generators.size() < 2) throw schema_error("syzygy needs at least two generators");

    bool z_free = true;
    std::vector<Polynomial> parsed;
    for (const auto& text : doc.generators) {
        parsed.push_back(parse_polynomial(text, doc.field));
        if (parsed.back().involves(2)) z_free = false;
    }

    SyzygyMatrix matrix{nullptr, {}, {}, false};
    std::optional<std::string> warning;
    std::vector<int> row_degrees;

    if (z_free) {
        std::vector<Polynomial> base;
        for (const auto& g : parsed) base.push_back(g.restricted_to_xy());
        SyzygyOptions syz_options;
        syz_options.gb.max_pairs = options.max_pairs;
        syz_options.minimalize = true;
        matrix = syzygies(base, syz_options);
        row_degrees = matrix.row_shape->twists;
    } else {
        // Relations over R: compute syzygies of (f_1,...,f_n,F) in K[x,y,z]
        // and drop the F-coordinate. The result generates but is not
        // certified to be a free basis.
        RingInputs inputs = build_ring_inputs(doc, options);
        std::vector<Polynomial> extended = inputs.generators;
        extended.push_back(inputs.ring->defining_polynomial());
        SyzygyOptions syz_options;
        syz_options.gb.max_pairs = options.max_pairs;
        syz_options.minimalize = false;
        SyzygyMatrix raw = syzygies(extended, syz_options);

        const std::size_t n = inputs.generators.size();
        std::vector<int> degrees;
        for (const auto& g : inputs.generators) degrees.push_back(*g.homogeneous_degree());
        FreeModulePtr shape = make_free_module(doc.field, Ambient::xyz, degrees);
        for (const auto& column : raw.columns) {
            ModuleVector projected(shape);
            bool nonzero = false;
            for (std::size_t i = 0; i < n; ++i) {
                Polynomial entry = inputs.ring->reduce(column.entry(static_cast<int>(i)));
                if (!entry.is_zero()) nonzero = true;
                projected.entry(static_cast<int>(i)) = std::move(entry);
            }
            if (!nonzero) continue;
            matrix.columns.push_back(std::move(projected));
            matrix.column_twists.push_back(column.degree().value_or(0));
        }
        matrix.row_shape = shape;
        matrix.minimal_free = false;
        row_degrees = degrees;
        warning = "splitting not established: some generator involves z; the printed relations "
                  "generate the relation module over R but are not certified to be a free basis";
    }

    ordered_json machine = report_header("syzygy", doc);
    machine["generators"] = ordered_json::array();
    for (const auto& g : parsed) machine["generators"].push_back(g.to_string());
    machine["row_degrees"] = row_degrees;
    machine["certified_free_splitting"] = matrix.minimal_free;
    machine["column_twists"] = matrix.column_twists;
    // The dual relation bundle splits as F(0) = ⊕ O_Y(a_j) with a_j = b_j.
    machine["dual_twists"] =
        matrix.minimal_free ? ordered_json(matrix.column_twists) : ordered_json(nullptr);
    ordered_json columns = ordered_json::array();
    for (const auto& c : matrix.columns) {
        ordered_json col = ordered_json::array();
        for (int i = 0; i < matrix.rows(); ++i) col.push_back(c.entry(i).to_string());
        columns.push_back(std::move(col));
    }
    machine["columns"] = columns;
    machine["provenance"] =
        matrix.minimal_free ? SplittingData::provenance() : "relations over the hypersurface ring";
    machine["warning"] = warning ? ordered_json(*warning) : ordered_json(nullptr);

    std::ostringstream human;
    human << "relation module of " << doc.generators.size() << " generators over "
          << doc.field.name() << "\n";
    human << "  columns (one relation per line):\n";
    for (const auto& c : matrix.columns) human << "    " << c.to_string() << "\n";
    human << "  column twists b_j:";
    for (int b : matrix.column_twists) human << " " << b;
    human << "\n";
    if (matrix.minimal_free) {
        human << "  certified free basis; dual splitting twists a_j:";
        for (int b : matrix.column_twists) human << " " << b;
        human << "\n";
    }
    if (warning) human << "  warning: " << *warning << "\n";

    return finish(std::move(machine), human.str());
}

namespace {

ordered_json json_decision(const Decision& decision) {
    ordered_json out;
    out["verdict"] = verdict_name(decision.verdict);
    out["degree"] = decision.degree;
    ordered_json steps = ordered_json::array();
    for (const auto& s : decision.justification) {
        steps.push_back({{"step", s.description}, {"citation", s.citation}});
    }
    out["justification"] = steps;
    out["caveat"] = decision.large_p_caveat ? ordered_json(kLargePCaveat) : ordered_json(nullptr);
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : decision.witnesses) witnesses.push_back(w.to_string());
    out["witnesses"] = witnesses;
    ordered_json components = ordered_json::array();
    for (const auto& c : decision.components) {
        components.push_back({{"twist", c.twist},
                              {"cohomology_degree", c.cohomology_degree},
                              {"zero", c.zero},
                              {"numerically_covered", c.numerically_covered}});
    }
    out["components"] = components;
    return out;
}

void describe_decision(std::ostream& os, const Decision& decision) {
    os << "verdict: " << verdict_name(decision.verdict) << " (degree " << decision.degree << ")\n";
    for (const auto& s : decision.justification) {
        os << "  - " << s.description << " [" << s.citation << "]\n";
    }
    for (const auto& c : decision.components) {
        os << "  component O_Y(-" << c.twist << "): H^1-degree " << c.cohomology_degree
           << (c.zero ? ", class = 0" : ", class != 0")
           << (c.numerically_covered ? ", m >= b_j" : ", m < b_j") << "\n";
    }
    if (decision.large_p_caveat) os << "  caveat: " << kLargePCaveat << "\n";
}

}  // namespace

CommandResult cmd_decide(const ProblemDocument& doc, const CommandOptions& options) {
    RingInputs inputs = build_ring_inputs(doc, options);
    std::optional<std::string> element_text = options.element ? options.element : doc.element;
    if (!element_text) throw schema_error("decide needs an \"element\" (or --element)");

    IdealData ideal(inputs.ring, inputs.generators, forcing_options(options));
    DecisionContext context(std::move(ideal));
    Polynomial candidate = inputs.ring->coordinate_change().apply(
        parse_polynomial(*element_text, doc.field));
    Decision decision = decide(context, candidate);

    ordered_json machine = report_header("decide", doc);
    machine["hypersurface"] = inputs.ring->defining_polynomial().to_string();
    machine["coordinate_change"] = inputs.ring->coordinate_change().to_string();
    machine["element"] = *element_text;
    machine["decision"] = json_decision(decision);
    if (decision.bounds) {
        machine["bounds"] = {
            {"entries", json_entries(decision.bounds->entries)},
            {"inclusion_degree", json_optional_int(decision.bounds->inclusion_degree)},
            {"exclusion_degree", json_optional_int(decision.bounds->exclusion_degree)}};
    } else {
        machine["bounds"] = nullptr;
    }

    std::ostringstream human;
    human << "tight-closure membership of " << *element_text << " over " << doc.field.name()
          << "\n";
    if (!inputs.ring->coordinate_change().is_identity()) {
        human << "  coordinates changed: " << inputs.ring->coordinate_change().to_string() << "\n";
    }
    describe_decision(human, decision);
    return finish(std::move(machine), human.str());
}

CommandResult cmd_sweep(const ProblemDocument& doc, const CommandOptions& options) {
    RingInputs inputs = build_ring_inputs(doc, options);
    std::optional<std::pair<int, int>> range = options.range ? options.range : doc.sweep;
    if (!range) throw schema_error("sweep needs a range (document \"sweep\" or --range)");

    IdealData ideal(inputs.ring, inputs.generators, forcing_options(options));
    DecisionContext context(std::move(ideal));
    std::vector<SweepRow> rows = degree_sweep(context, range->first, range->second);

    ordered_json machine = report_header("sweep", doc);
    machine["from"] = range->first;
    machine["to"] = range->second;
    ordered_json jrows = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json jrow;
        jrow["degree"] = row.degree;
        jrow["counts"] = {
            {"InIdeal", row.count(Verdict::in_ideal)},
            {"InTightClosureNotIdeal", row.count(Verdict::in_tight_closure_not_ideal)},
            {"NotInTightClosure", row.count(Verdict::not_in_tight_closure)},
            {"Undecided", row.count(Verdict::undecided)}};
        ordered_json elements = ordered_json::array();
        for (const auto& [text, verdict] : row.elements) {
            elements.push_back({{"monomial", text}, {"verdict", verdict_name(verdict)}});
        }
        jrow["elements"] = elements;
        jrows.push_back(std::move(jrow));
    }
    machine["rows"] = jrows;
    machine["caveat"] = kLargePCaveat;

    std::ostringstream human;
    human << "degree sweep " << range->first << ".." << range->second << " over "
          << doc.field.name() << "\n";
    for (const auto& row : rows) {
        human << "  m = " << row.degree << ": " << row.count(Verdict::in_ideal) << " InIdeal, "
              << row.count(Verdict::in_tight_closure_not_ideal) << " InTightClosureNotIdeal, "
              << row.count(Verdict::not_in_tight_closure) << " NotInTightClosure";
        if (row.count(Verdict::undecided) > 0) {
            human << ", " << row.count(Verdict::undecided) << " Undecided";
        }
        human << "\n";
    }
    human << "  caveat: " << kLargePCaveat << "\n";
    return finish(std::move(machine), human.str());
}

CommandResult cmd_cohomology(const ProblemDocument& doc, const CommandOptions& options) {
    std::optional<int> delta = doc.delta;
    if (doc.hypersurface) {
        Polynomial f = parse_polynomial(*doc.hypersurface, doc.field);
        auto d = f.homogeneous_degree();
        if (!d || *d < 1) throw schema_error("hypersurface must be homogeneous of degree >= 1");
        delta = *d;
    }
    if (!delta) throw schema_error("cohomology needs \"hypersurface\" or \"delta\"");
    std::pair<int, int> range = options.range.value_or(std::pair<int, int>{-10, 10});
    if (range.first > range.second) throw schema_error("empty cohomology range");

    ordered_json machine = report_header("cohomology", doc);
    machine["delta"] = *delta;
    machine["genus"] = (*delta - 1) * (*delta - 2) / 2;
    ordered_json rows = ordered_json::array();
    std::ostringstream human;
    human << "cohomology of O_Y(k) on a smooth plane curve of degree " << *delta << "\n";
    human << "  k : h^0  h^1\n";
    for (int k = range.first; k <= range.second; ++k) {
        int h0 = hypersurface_h0(*delta, k);
        int h1 = hypersurface_h1(*delta, k);
        rows.push_back({{"k", k}, {"h0", h0}, {"h1", h1}});
        human << "  " << k << " : " << h0 << "  " << h1 << "\n";
    }
    machine["rows"] = rows;
    return finish(std::move(machine), human.str());
}

}  // namespace tcb
