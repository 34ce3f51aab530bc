#ifndef TCB_HYPERSURFACE_HPP
#define TCB_HYPERSURFACE_HPP

#include <memory>

#include "tcb/groebner.hpp"
#include "tcb/laurent.hpp"

namespace tcb {

/// Graded coordinate change x <- x + a*z, y <- y + b*z used to make the
/// defining polynomial monic in z.
struct CoordinateChange {
    Scalar a;
    Scalar b;

    bool is_identity() const { return a.is_zero() && b.is_zero(); }
    Polynomial apply(const Polynomial& p) const {
        return is_identity() ? p : p.substituted_xy_by_z(a, b);
    }
    std::string to_string() const;
};

struct RingOptions {
    /// Candidate offsets for the monic coordinate search, per variable.
    int max_substitution = 16;
    BuchbergerOptions gb;
};

/// The ring R = K[x,y,z]/(F) of a degree-delta plane curve, viewed as a free
/// K[x,y]-module with basis 1, z, ..., z^(delta-1). F is stored monic in z
/// (after a deterministic coordinate change when needed), which also makes
/// (x, y) a homogeneous system of parameters. Immutable after construction.
class HypersurfaceRing {
  public:
    /// Builds the ring from a homogeneous F of degree >= 1. Applies the
    /// coordinate search, scales F monic in z, and runs the Jacobian
    /// smoothness check; a singular curve is recorded, not rejected.
    /// Throws no_monic_coordinate when the search is exhausted.
    static std::shared_ptr<const HypersurfaceRing> make(const Polynomial& f,
                                                        const RingOptions& options = {});

    const Polynomial& defining_polynomial() const { return f_; }
    int degree() const { return delta_; }
    /// Arithmetic genus (delta-1)(delta-2)/2 of the plane curve.
    int genus() const { return genus_; }
    bool is_smooth() const { return smooth_; }
    /// (x, y) is a homogeneous system of parameters; holds by construction
    /// since F is monic in z.
    bool sop_xy() const { return true; }
    const FieldDesc& field() const { return field_; }
    const CoordinateChange& coordinate_change() const { return change_; }

    /// dim_K R_k = C(k+2,2) - C(k-delta+2,2); zero for k < 0.
    int h0_dim(int k) const;
    /// dim_K H^1(Y, O_Y(k)) = sum_{c=0}^{delta-1} max(0, c-k-1).
    int h1_dim(int k) const;

    /// z-reduced normal form: rewrites every z-exponent below delta using
    /// z^delta = -(F - z^delta).
    Polynomial reduce(const Polynomial& p) const;
    Polynomial multiply(const Polynomial& p, const Polynomial& q) const { return reduce(p * q); }

    /// Product in the localization R_{xy}, z-reduced.
    LaurentElement multiply(const LaurentElement& u, const LaurentElement& v) const;

    /// Projects a homogeneous z-reduced Laurent element of ring degree k to
    /// its class in H^1(Y, O_Y(k)): terms with a >= 0 or b >= 0 lie in
    /// R_x + R_y and are deleted. Idempotent and linear.
    CechClass cech_reduce(const LaurentElement& u, int k) const;

    /// Monomial K-basis of R_k (z-exponents below delta), in descending
    /// grevlex order.
    std::vector<Monomial> monomial_basis(int k) const;

  private:
    HypersurfaceRing(Polynomial f, int delta, bool smooth, CoordinateChange change)
        : field_(f.field()),
          f_(std::move(f)),
          delta_(delta),
          genus_((delta - 1) * (delta - 2) / 2),
          smooth_(smooth),
          change_(std::move(change)),
          z_tail_(Polynomial::zero(field_, Ambient::xyz)) {}

    FieldDesc field_;
    Polynomial f_;
    int delta_;
    int genus_;
    bool smooth_;
    CoordinateChange change_;
    Polynomial z_tail_;  // z^delta - F; has z-degree < delta
};

using RingPtr = std::shared_ptr<const HypersurfaceRing>;

/// Hilbert function of a degree-delta plane hypersurface, as free functions
/// for bounds-only callers.
int hypersurface_h0(int delta, int k);
int hypersurface_h1(int delta, int k);

}  // namespace tcb

#endif
