#ifndef TCB_FORCING_HPP
#define TCB_FORCING_HPP

#include "tcb/hypersurface.hpp"
#include "tcb/syzygy.hpp"

namespace tcb {

struct ForcingOptions {
    /// Search cap for the least N with x^N (resp. y^N) in the ideal.
    int max_denominator_exp = 64;
    BuchbergerOptions gb;
};

/// Witnesses that the ideal is primary for the irrelevant maximal ideal:
/// x^nx = sum_i x_witnesses[i] * f_i holds in R, and likewise for y and z.
struct PrimaryCertificate {
    int nx = 0;
    int ny = 0;
    int nz = 0;
    std::vector<Polynomial> x_witnesses;
    std::vector<Polynomial> y_witnesses;
};

/// A homogeneous primary ideal (f_1, ..., f_n) in a hypersurface ring,
/// with the primary certificate validated at construction. Generators are
/// stored in the ring's working coordinates, z-reduced.
class IdealData {
  public:
    IdealData(RingPtr ring, std::vector<Polynomial> generators, const ForcingOptions& options = {});

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }
    const PrimaryCertificate& certificate() const { return certificate_; }
    const ForcingOptions& options() const { return options_; }

    /// Membership of f0 in (f_1, ..., f_n) inside R, with witnesses over the
    /// generators. f0 is z-reduced first.
    Membership membership(const Polynomial& f0) const;

  private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::vector<int> degrees_;
    ForcingOptions options_;
    GroebnerBasis extended_gb_;  // of (f_1, ..., f_n, F) in K[x,y,z]
    PrimaryCertificate certificate_;
};

/// Free-basis splitting of the relation module of generators that live in
/// the subring K[x,y]: by Hilbert-Burch the two-variable syzygy module is
/// free of rank n-1, and it base-changes to R because R is free over K[x,y].
/// The relation sheaf splits as R(m) = ⊕_j O_Y(m - b_j).
class SplittingData {
  public:
    SplittingData(SyzygyMatrix basis, const BuchbergerOptions& options);

    const SyzygyMatrix& basis() const { return solver_.basis(); }
    const std::vector<int>& twists() const { return solver_.basis().column_twists; }
    int rank() const { return solver_.basis().cols(); }
    const CoordinateSolver& solver() const { return solver_; }
    static const char* provenance() { return "hilbert-burch over two-variable subring"; }

  private:
    CoordinateSolver solver_;
};

/// Splitting data for the ideal; throws splitting_unavailable when some
/// generator involves z.
SplittingData splitting_data(const IdealData& ideal);

/// The forcing class of f0 with respect to the split relation module:
/// component j lives in H^1(Y, O_Y(m - b_j)).
struct ForcingClass {
    int m = 0;
    std::vector<int> twists;
    std::vector<CechClass> components;

    bool all_zero() const {
        for (const auto& c : components) {
            if (!c.is_zero()) return false;
        }
        return true;
    }
};

/// Computes the forcing class by the Cech recipe on the cover {x != 0},
/// {y != 0}: lift f0 over each chart through the primary certificate, take
/// the difference relation on the overlap, express it in the free syzygy
/// basis and project each coordinate to cohomology.
ForcingClass forcing_class(const IdealData& ideal, const SplittingData& split,
                           const Polynomial& f0);

/// Test hook: the same computation with explicit chart denominators x^nx,
/// y^ny (both must be in the ideal). Well-definedness means the result
/// agrees with forcing_class for any valid choice.
ForcingClass forcing_class_with_exponents(const IdealData& ideal, const SplittingData& split,
                                          const Polynomial& f0, int nx, int ny);

}  // namespace tcb

#endif
