#ifndef TCB_DECISION_HPP
#define TCB_DECISION_HPP

#include "tcb/bounds.hpp"
#include "tcb/forcing.hpp"

namespace tcb {

enum class Verdict { in_ideal, in_tight_closure_not_ideal, not_in_tight_closure, undecided };

const char* verdict_name(Verdict v);

struct DecisionStep {
    std::string description;
    std::string citation;
};

/// Tight-closure membership verdict with its justification chain.
struct Decision {
    Verdict verdict = Verdict::undecided;
    int degree = 0;
    std::vector<DecisionStep> justification;
    /// Set when the verdict relies on statements proven for characteristic
    /// zero or p >> 0; the caveat text is kLargePCaveat.
    bool large_p_caveat = false;
    /// Ideal-membership witnesses (verdict in_ideal only).
    std::vector<Polynomial> witnesses;
    /// Forcing-class component summary (split path only): twist b_j and
    /// whether the component in H^1(Y, O_Y(m - b_j)) vanishes.
    struct Component {
        int twist = 0;
        int cohomology_degree = 0;
        bool zero = true;
        bool numerically_covered = false;  // m >= b_j
    };
    std::vector<Component> components;
    /// Attached when the verdict is undecided.
    std::optional<BoundReport> bounds;
};

/// The split relation bundle, prepared once per ideal; absent when some
/// generator involves z (the decision engine then falls back to bounds).
class DecisionContext {
  public:
    explicit DecisionContext(IdealData ideal);

    const IdealData& ideal() const { return ideal_; }
    bool has_splitting() const { return split_.has_value(); }
    const SplittingData& splitting() const;
    DegreeData degree_data() const;

  private:
    IdealData ideal_;
    std::optional<SplittingData> split_;
};

/// Decides membership of f0 in the tight closure of the ideal. Pipeline:
/// Groebner ideal membership first; then the split numerical criterion
/// (m >= b_j or c_j = 0 for every j); otherwise the degree-bound fallbacks,
/// with undecided as an honest first-class outcome. Throws singular_curve
/// when the ring failed the smoothness check, shape_mismatch for a
/// non-homogeneous candidate.
Decision decide(const DecisionContext& context, const Polynomial& f0);

/// Per-element verdicts over the monomial basis of R_m for m in [lo, hi].
struct SweepRow {
    int degree = 0;
    std::vector<std::pair<std::string, Verdict>> elements;  // monomial text -> verdict
    int count(Verdict v) const;
};

std::vector<SweepRow> degree_sweep(const DecisionContext& context, int lo, int hi);

}  // namespace tcb

#endif
