#include "tcb/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace tcb {

std::string Characteristic::to_string() const {
    switch (kind) {
        case Kind::zero: return "0";
        case Kind::prime: return std::to_string(p);
        case Kind::large_p: return "p >> 0";
    }
    return "0";
}

DegreeData DegreeData::make(std::vector<int> degrees, int delta, int genus,
                            Characteristic characteristic, std::optional<std::vector<int>> twists,
                            bool semistable, bool strongly_semistable, bool indecomposable) {
    if (degrees.size() < 2) throw shape_mismatch("need at least two generator degrees");
    for (int d : degrees) {
        if (d < 1) throw shape_mismatch("generator degrees must be >= 1");
    }
    if (delta < 1) throw shape_mismatch("curve degree must be >= 1");
    if (genus < 0) throw shape_mismatch("genus must be >= 0");
    std::sort(degrees.begin(), degrees.end());

    DegreeData out;
    out.degrees_ = std::move(degrees);
    out.delta_ = delta;
    out.genus_ = genus;
    out.characteristic_ = characteristic;
    out.semistable_ = semistable || strongly_semistable;
    out.strongly_semistable_ = strongly_semistable;
    out.indecomposable_ = indecomposable;

    if (out.degrees_.size() == 2) {
        // The relation sheaf of a parameter pair is the invertible Koszul
        // summand O_Y(d_1 + d_2), hence strongly semistable.
        int koszul = out.degrees_[0] + out.degrees_[1];
        if (!twists) twists = std::vector<int>{koszul};
        out.semistable_ = true;
        out.strongly_semistable_ = true;
    }
    if (twists) {
        if (twists->size() + 1 != out.degrees_.size()) {
            throw shape_mismatch("expected n-1 splitting twists");
        }
        std::sort(twists->begin(), twists->end());
        int twist_sum = std::accumulate(twists->begin(), twists->end(), 0);
        int degree_sum = std::accumulate(out.degrees_.begin(), out.degrees_.end(), 0);
        if (twist_sum != degree_sum) {
            throw shape_mismatch("splitting twists must sum to the generator degrees");
        }
        out.twists_ = std::move(*twists);
    }
    return out;
}

int DegreeData::degree_sum() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), 0);
}

namespace {

// mpq_class(num, den) does not canonicalize on its own.
Rational ratio(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

long ceil_rational(const Rational& q) {
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out.get_si();
}

long floor_rational(const Rational& q) {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out.get_si();
}

int inclusion_degree_from_slope(const SlopeBound& mu_max_upper, int delta) {
    // delta*m >= U forces delta*m >= mu-bar-max whether U is strict or not.
    return static_cast<int>(ceil_rational(mu_max_upper.value / delta));
}

int exclusion_degree_from_slope(const SlopeBound& mu_min_lower, int delta) {
    // Non-strict L: delta*m < L suffices, first uncovered m is ceil(L/delta).
    // Strict L: delta*m <= L suffices, first uncovered m is floor(L/delta)+1.
    if (mu_min_lower.strict) {
        return static_cast<int>(floor_rational(mu_min_lower.value / delta) + 1);
    }
    return static_cast<int>(ceil_rational(mu_min_lower.value / delta));
}

std::optional<int> BoundReport::max_excluded_degree() const {
    if (!exclusion_degree) return std::nullopt;
    return *exclusion_degree - 1;
}

void BoundReport::absorb(const BoundReport& other) {
    if (other.inclusion_degree &&
        (!inclusion_degree || *other.inclusion_degree < *inclusion_degree)) {
        inclusion_degree = other.inclusion_degree;
    }
    if (other.exclusion_degree &&
        (!exclusion_degree || *other.exclusion_degree > *exclusion_degree)) {
        exclusion_degree = other.exclusion_degree;
    }
    if (other.vanishing_degree) vanishing_degree = other.vanishing_degree;
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

SlopeEstimates slope_estimates(const DegreeData& d) {
    SlopeEstimates out;
    out.characteristic = d.characteristic();
    out.delta = d.delta();
    const int n = d.n();
    const std::vector<int>& deg = d.degrees();
    out.mu = Rational(d.delta()) * ratio(d.degree_sum(), n - 1);

    out.mu_min_lower = SlopeBound{Rational(d.delta() * deg.front()), false,
                                  citation::slope_min_lower_min_degree};
    out.mu_min_upper = SlopeBound{out.mu, false, citation::slope_min_upper_average};
    out.mu_max_lower = SlopeBound{Rational(d.delta() * deg.back()), false,
                                  citation::slope_max_lower_max_degree};
    out.mu_max_upper = SlopeBound{Rational(d.delta() * (deg[static_cast<std::size_t>(n - 2)] +
                                                        deg[static_cast<std::size_t>(n - 1)])),
                                  false, citation::slope_max_upper_top_two};

    if (d.twists()) {
        const std::vector<int>& a = *d.twists();
        Rational lo = Rational(d.delta() * a.front());
        Rational hi = Rational(d.delta() * a.back());
        out.mu_min_lower = SlopeBound{lo, false, citation::slope_split_exact};
        out.mu_min_upper = out.mu_min_lower;
        out.mu_max_lower = SlopeBound{hi, false, citation::slope_split_exact};
        out.mu_max_upper = out.mu_max_lower;
        out.mu_min_exact = out.mu_max_exact = true;
    } else if (d.semistable()) {
        SlopeBound exact{out.mu, false, citation::slope_semistable};
        out.mu_min_lower = out.mu_min_upper = exact;
        out.mu_max_lower = out.mu_max_upper = exact;
        out.mu_min_exact = out.mu_max_exact = true;
    }
    return out;
}

BoundReport generic_bounds(const DegreeData& d) {
    const std::vector<int>& deg = d.degrees();
    BoundReport out;
    int inclusion = deg[static_cast<std::size_t>(d.n() - 2)] + deg[static_cast<std::size_t>(d.n() - 1)];
    out.inclusion_degree = inclusion;
    out.entries.push_back(BoundEntry{"inclusion", inclusion, citation::inclusion_top_two, {}});
    int exclusion = deg.front();
    out.exclusion_degree = exclusion;
    out.entries.push_back(
        BoundEntry{"exclusion", exclusion, citation::exclusion_min_degree, {kLargePCaveat}});
    return out;
}

BoundReport split_bounds(const DegreeData& d) {
    if (!d.twists()) throw shape_mismatch("split bounds require splitting twists");
    const std::vector<int>& a = *d.twists();
    BoundReport out;
    out.inclusion_degree = a.back();
    out.entries.push_back(BoundEntry{"inclusion", a.back(), citation::inclusion_split, {}});
    out.exclusion_degree = a.front();
    out.entries.push_back(
        BoundEntry{"exclusion", a.front(), citation::exclusion_split, {kLargePCaveat}});
    if (a.front() == a.back()) out.vanishing_degree = a.front();
    return out;
}

VanishingBound vanishing_bound(const DegreeData& d) {
    VanishingBound out;
    out.k = static_cast<int>(ceil_rational(ratio(d.degree_sum(), d.n() - 1)));
    out.advisory = !d.semistable();
    return out;
}

BoundReport genus_bounds_n3(const DegreeData& d) {
    if (d.n() != 3) throw shape_mismatch("genus bounds require exactly three generators");
    if (!d.indecomposable()) {
        throw shape_mismatch("genus bounds require the indecomposable flag");
    }
    if (!d.characteristic().is_zero()) {
        throw shape_mismatch("genus bounds are stated in characteristic zero");
    }
    Rational half_sum = ratio(d.degree_sum(), 2);
    SlopeBound upper{Rational(d.delta()) * half_sum + Rational(d.genus() - 1), false,
                     citation::slope_genus};
    SlopeBound lower{Rational(d.delta()) * half_sum - Rational(d.genus() - 1), false,
                     citation::slope_genus};

    BoundReport out;
    int inclusion = inclusion_degree_from_slope(upper, d.delta());
    out.inclusion_degree = inclusion;
    out.entries.push_back(BoundEntry{"inclusion", inclusion, citation::inclusion_genus, {}});
    int exclusion = exclusion_degree_from_slope(lower, d.delta());
    out.exclusion_degree = exclusion;
    out.entries.push_back(
        BoundEntry{"exclusion", exclusion, citation::exclusion_genus, {kLargePCaveat}});
    out.notes.push_back(
        "exclusion threshold computed from the exact genus as (d_1+d_2+d_3)/2 - (g-1)/delta");
    return out;
}

SlopeEstimates charp_transfer(const SlopeEstimates& generic_fiber) {
    if (!generic_fiber.characteristic.is_large_p()) {
        throw shape_mismatch("transfer applies to the p >> 0 characteristic descriptor");
    }
    SlopeEstimates out = generic_fiber;
    out.mu_min_lower = SlopeBound{Rational(ceil_rational(generic_fiber.mu_min_lower.value) - 1),
                                  true, citation::slope_large_p};
    out.mu_max_upper = SlopeBound{Rational(floor_rational(generic_fiber.mu_max_upper.value) + 1),
                                  true, citation::slope_large_p};
    out.mu_min_exact = false;
    out.mu_max_exact = false;
    return out;
}

int mindeg_split(const DegreeData& d, int s) {
    if (s < 1 || s > d.n()) throw shape_mismatch("quotient rank out of range");
    int sum = 0;
    for (int i = 0; i < s; ++i) sum += d.degrees()[static_cast<std::size_t>(i)];
    return d.delta() * sum;
}

bool ample_split(const std::vector<int>& twists) {
    for (int t : twists) {
        if (t <= 0) return false;
    }
    return true;
}

}  // namespace tcb
