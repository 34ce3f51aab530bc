#ifndef TCB_BOUNDS_HPP
#define TCB_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcb/scalar.hpp"

namespace tcb {

/// Citation tags attached to every reported bound; the mapping to the
/// underlying statements is documented in the README.
namespace citation {
inline constexpr const char* slope_average = "slope-average";
inline constexpr const char* slope_max_upper_top_two = "slope-max-upper-top-two";
inline constexpr const char* slope_max_lower_max_degree = "slope-max-lower-max-degree";
inline constexpr const char* slope_min_lower_min_degree = "slope-min-lower-min-degree";
inline constexpr const char* slope_min_upper_average = "slope-min-upper-average";
inline constexpr const char* slope_split_exact = "slope-split-exact";
inline constexpr const char* slope_semistable = "slope-semistable";
inline constexpr const char* slope_genus = "slope-genus-indecomposable";
inline constexpr const char* slope_large_p = "slope-large-p-transfer";
inline constexpr const char* inclusion_slope_max = "inclusion-slope-max";
inline constexpr const char* exclusion_slope_min = "exclusion-slope-min";
inline constexpr const char* inclusion_top_two = "inclusion-top-two-degrees";
inline constexpr const char* exclusion_min_degree = "exclusion-min-degree";
inline constexpr const char* inclusion_split = "inclusion-split-max-twist";
inline constexpr const char* exclusion_split = "exclusion-split-min-twist";
inline constexpr const char* vanishing_semistable = "vanishing-semistable-average";
inline constexpr const char* vanishing_parameter = "vanishing-parameter-pair";
inline constexpr const char* inclusion_genus = "inclusion-genus-indecomposable";
inline constexpr const char* exclusion_genus = "exclusion-genus-indecomposable";
inline constexpr const char* ideal_membership_tag = "ideal-membership-groebner";
inline constexpr const char* split_criterion = "split-membership-criterion";
inline constexpr const char* class_vanishing = "class-vanishing-membership";
inline constexpr const char* ample_positive_twists = "ample-positive-twists";
}  // namespace citation

/// The standard validity caveat for statements proven in characteristic
/// zero or for almost all positive characteristics.
inline constexpr const char* kLargePCaveat =
    "valid in characteristic 0; in characteristic p valid for p >> 0";

struct Characteristic {
    enum class Kind { zero, prime, large_p };
    Kind kind = Kind::zero;
    std::uint64_t p = 0;

    static Characteristic zero() { return {Kind::zero, 0}; }
    static Characteristic prime(std::uint64_t p) { return {Kind::prime, p}; }
    static Characteristic large_p() { return {Kind::large_p, 0}; }

    bool is_zero() const { return kind == Kind::zero; }
    bool is_large_p() const { return kind == Kind::large_p; }
    std::string to_string() const;
};

/// Numeric input of every bound: generator count and degrees, curve degree
/// delta, genus, characteristic, optional dual splitting twists a_j with
/// F(0) = ⊕ O_Y(a_j), and semistability flags. Degrees are sorted ascending
/// at construction. For n = 2 the relation sheaf is invertible, so the
/// Koszul twist d_1 + d_2 and the strong-semistability flags are filled in
/// automatically.
class DegreeData {
  public:
    static DegreeData make(std::vector<int> degrees, int delta, int genus,
                           Characteristic characteristic,
                           std::optional<std::vector<int>> twists = std::nullopt,
                           bool semistable = false, bool strongly_semistable = false,
                           bool indecomposable = false);

    int n() const { return static_cast<int>(degrees_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree_sum() const;
    int delta() const { return delta_; }
    int genus() const { return genus_; }
    const Characteristic& characteristic() const { return characteristic_; }
    const std::optional<std::vector<int>>& twists() const { return twists_; }
    bool semistable() const { return semistable_; }
    bool strongly_semistable() const { return strongly_semistable_; }
    bool indecomposable() const { return indecomposable_; }

  private:
    std::vector<int> degrees_;
    int delta_ = 1;
    int genus_ = 0;
    Characteristic characteristic_;
    std::optional<std::vector<int>> twists_;
    bool semistable_ = false;
    bool strongly_semistable_ = false;
    bool indecomposable_ = false;
};

/// One-sided bound on a slope invariant, with strictness and provenance.
struct SlopeBound {
    Rational value;
    bool strict = false;  // strict: the invariant is < (or >) value
    std::string citation;
};

/// Slope data of the dual relation bundle F(0) in degree units on Y.
/// mu is exact; the min/max slopes are bracketed, or exact when the bundle
/// splits or is semistable.
struct SlopeEstimates {
    Rational mu;
    SlopeBound mu_min_lower;
    SlopeBound mu_min_upper;
    SlopeBound mu_max_lower;
    SlopeBound mu_max_upper;
    bool mu_min_exact = false;
    bool mu_max_exact = false;
    Characteristic characteristic;
    int delta = 1;
};

/// A single reported degree bound.
struct BoundEntry {
    std::string kind;  // "inclusion" | "exclusion" | "vanishing"
    int degree = 0;
    std::string citation;
    std::vector<std::string> caveats;
};

/// Degree bounds for the tight closure of the ideal. Conventions:
///   - inclusion_degree: R_m is contained in the tight closure for every
///     m >= inclusion_degree;
///   - exclusion_degree: for every m < exclusion_degree, a degree-m element
///     lies in the tight closure iff it lies in the ideal;
///   - vanishing_degree k: both at once, I* = I + R_{>= k}.
struct BoundReport {
    std::optional<int> inclusion_degree;
    std::optional<int> exclusion_degree;
    std::optional<int> vanishing_degree;
    std::vector<BoundEntry> entries;
    std::vector<std::string> notes;

    /// Largest degree covered by the exclusion statement, when one exists.
    std::optional<int> max_excluded_degree() const;
    void absorb(const BoundReport& other);
};

/// Exact slope data: mu = delta * (d_1 + ... + d_n)/(n-1), bracketed
/// min/max estimates, exact values when twists or semistability are known.
SlopeEstimates slope_estimates(const DegreeData& d);

/// Inclusion at the sum of the two largest degrees, exclusion below the
/// smallest degree.
BoundReport generic_bounds(const DegreeData& d);

/// Exact bounds from a known splitting: inclusion at max a_j, exclusion
/// below min a_j. Throws shape_mismatch when no twists are present.
BoundReport split_bounds(const DegreeData& d);

struct VanishingBound {
    int k = 0;
    /// Set when the semistable hypothesis was not asserted by the caller.
    bool advisory = false;
};

/// k = ceil((d_1 + ... + d_n)/(n-1)) with I* = I + R_{>= k} under the
/// semistability hypothesis.
VanishingBound vanishing_bound(const DegreeData& d);

/// Genus-refined bounds for n = 3 and an indecomposable relation sheaf in
/// characteristic zero.
BoundReport genus_bounds_n3(const DegreeData& d);

/// Transfer of generic-fiber slope bounds to almost all positive
/// characteristics: the lower bound drops to ceil(value) - 1 (strict), the
/// upper bound rises to floor(value) + 1 (strict).
SlopeEstimates charp_transfer(const SlopeEstimates& generic_fiber);

/// Minimal degree of a rank-s quotient of the split bundle ⊕ O_Y(d_i):
/// delta * (d_1 + ... + d_s).
int mindeg_split(const DegreeData& d, int s);

/// A split bundle ⊕ O_Y(a_j) is ample iff every twist is positive.
bool ample_split(const std::vector<int>& twists);

/// Integer degree bounds derived from slope bounds: the least m with
/// delta*m >= bound (>= strict bound) for inclusions, and the least m not
/// covered by delta*m < bound (<= strict bound) for exclusions.
int inclusion_degree_from_slope(const SlopeBound& mu_max_upper, int delta);
int exclusion_degree_from_slope(const SlopeBound& mu_min_lower, int delta);

/// ceil/floor of an exact rational.
long ceil_rational(const Rational& q);
long floor_rational(const Rational& q);

}  // namespace tcb

#endif
