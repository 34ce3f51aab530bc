#include "tcb/decision.hpp"

#include <algorithm>

namespace tcb {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::in_ideal: return "InIdeal";
        case Verdict::in_tight_closure_not_ideal: return "InTightClosureNotIdeal";
        case Verdict::not_in_tight_closure: return "NotInTightClosure";
        case Verdict::undecided: return "Undecided";
    }
    return "Undecided";
}

DecisionContext::DecisionContext(IdealData ideal) : ideal_(std::move(ideal)) {
    try {
        split_ = splitting_data(ideal_);
    } catch (const splitting_unavailable&) {
        split_.reset();
    }
}

const SplittingData& DecisionContext::splitting() const {
    if (!split_) throw splitting_unavailable("splitting not established");
    return *split_;
}

DegreeData DecisionContext::degree_data() const {
    const HypersurfaceRing& ring = *ideal_.ring();
    Characteristic c = ring.field().is_rational()
                           ? Characteristic::zero()
                           : Characteristic::prime(ring.field().characteristic());
    std::optional<std::vector<int>> twists;
    if (split_) twists = split_->twists();
    return DegreeData::make(ideal_.degrees(), ring.degree(), ring.genus(), c, twists);
}

Decision decide(const DecisionContext& context, const Polynomial& f0) {
    const IdealData& ideal = context.ideal();
    const HypersurfaceRing& ring = *ideal.ring();
    if (!ring.is_smooth()) {
        throw singular_curve("the curve is singular; only degree bounds are available");
    }

    Polynomial candidate =
        ring.reduce(f0.ambient() == Ambient::xyz ? f0 : f0.promoted_to_xyz());
    if (candidate.is_zero()) {
        Decision out;
        out.verdict = Verdict::in_ideal;
        out.degree = 0;
        out.justification.push_back(
            DecisionStep{"the candidate is zero in R", citation::ideal_membership_tag});
        return out;
    }
    auto mdeg = candidate.homogeneous_degree();
    if (!mdeg) throw shape_mismatch("candidate element must be homogeneous");

    Decision out;
    out.degree = *mdeg;
    const int m = *mdeg;

    Membership membership = ideal.membership(candidate);
    if (membership.member) {
        out.verdict = Verdict::in_ideal;
        out.witnesses = membership.witnesses;
        out.justification.push_back(DecisionStep{
            "Groebner normal form against (f_1,...,f_n,F) vanishes; witnesses recorded",
            citation::ideal_membership_tag});
        return out;
    }
    out.justification.push_back(DecisionStep{
        "not in the ideal: the Groebner normal form is nonzero", citation::ideal_membership_tag});

    if (context.has_splitting()) {
        const SplittingData& split = context.splitting();
        ForcingClass cls = forcing_class(ideal, split, candidate);
        bool all_ok = true;
        for (std::size_t j = 0; j < cls.components.size(); ++j) {
            Decision::Component comp;
            comp.twist = cls.twists[j];
            comp.cohomology_degree = m - cls.twists[j];
            comp.zero = cls.components[j].is_zero();
            comp.numerically_covered = m >= cls.twists[j];
            if (!comp.numerically_covered && !comp.zero) all_ok = false;
            out.components.push_back(comp);
        }
        out.large_p_caveat = true;
        if (all_ok) {
            out.verdict = Verdict::in_tight_closure_not_ideal;
            out.justification.push_back(DecisionStep{
                "for every summand O_Y(-b_j) of the relation bundle, m >= b_j or the forcing-class "
                "component vanishes",
                citation::split_criterion});
        } else {
            out.verdict = Verdict::not_in_tight_closure;
            out.justification.push_back(DecisionStep{
                "some summand has m < b_j and a nonvanishing forcing-class component",
                citation::split_criterion});
        }
        return out;
    }

    const std::vector<int>& degrees = ideal.degrees();
    std::vector<int> sorted = degrees;
    std::sort(sorted.begin(), sorted.end());
    int top_two = sorted[sorted.size() - 2] + sorted.back();
    if (m >= top_two) {
        out.verdict = Verdict::in_tight_closure_not_ideal;
        out.justification.push_back(DecisionStep{
            "m is at least the sum of the two largest generator degrees",
            citation::inclusion_top_two});
        return out;
    }
    if (m < sorted.front()) {
        out.verdict = Verdict::not_in_tight_closure;
        out.large_p_caveat = true;
        out.justification.push_back(DecisionStep{
            "a nonzero element below the smallest generator degree is excluded",
            citation::exclusion_min_degree});
        return out;
    }

    out.verdict = Verdict::undecided;
    out.bounds = generic_bounds(context.degree_data());
    out.justification.push_back(DecisionStep{
        "no splitting is available and the degree falls between the generic bounds",
        citation::inclusion_top_two});
    return out;
}

int SweepRow::count(Verdict v) const {
    int n = 0;
    for (const auto& [text, verdict] : elements) {
        if (verdict == v) ++n;
    }
    return n;
}

std::vector<SweepRow> degree_sweep(const DecisionContext& context, int lo, int hi) {
    if (lo > hi) throw shape_mismatch("empty sweep range");
    const HypersurfaceRing& ring = *context.ideal().ring();
    std::vector<SweepRow> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int m = lo; m <= hi; ++m) {
        SweepRow row;
        row.degree = m;
        for (const Monomial& mono : ring.monomial_basis(m)) {
            Polynomial element = Polynomial::term(ring.field(), Ambient::xyz, mono,
                                                  Scalar::one(ring.field()));
            Decision d = decide(context, element);
            row.elements.emplace_back(mono.to_string(), d.verdict);
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace tcb
