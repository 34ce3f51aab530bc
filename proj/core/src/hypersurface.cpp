#include "tcb/hypersurface.hpp"

#include <algorithm>

namespace tcb {

namespace {

long binom2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Partial derivative in the ambient characteristic.
Polynomial derivative(const Polynomial& p, int var) {
    Polynomial out(p.field(), p.ambient());
    for (const auto& [m, c] : p.terms()) {
        int e = m.e[static_cast<std::size_t>(var)];
        if (e == 0) continue;
        Scalar factor = Scalar::of_int(p.field(), e) * c;
        if (factor.is_zero()) continue;
        Monomial d = m;
        d.e[static_cast<std::size_t>(var)] -= 1;
        out.add_term(d, factor);
    }
    return out;
}

// The ideal is (x,y,z)-primary iff its leading terms contain a pure power of
// every variable (a unit counts for all three).
bool zero_dimensional(const std::vector<Polynomial>& gens, const BuchbergerOptions& options) {
    std::vector<ModuleVector> vectors;
    for (const auto& g : gens) {
        if (!g.is_zero()) vectors.push_back(ModuleVector::from_polynomial(g));
    }
    if (vectors.empty()) return false;
    GroebnerBasis gb = buchberger(vectors, MonomialOrder::grevlex_top_order(), options);
    return has_pure_power_leading_term(gb, 0) && has_pure_power_leading_term(gb, 1) &&
           has_pure_power_leading_term(gb, 2);
}

}  // namespace

std::string CoordinateChange::to_string() const {
    if (is_identity()) return "identity";
    std::string out = "x -> x";
    if (!a.is_zero()) out += " + " + a.to_string() + "*z";
    out += ", y -> y";
    if (!b.is_zero()) out += " + " + b.to_string() + "*z";
    return out;
}

std::shared_ptr<const HypersurfaceRing> HypersurfaceRing::make(const Polynomial& f,
                                                               const RingOptions& options) {
    if (f.is_zero()) throw shape_mismatch("defining polynomial is zero");
    Polynomial working = f.ambient() == Ambient::xyz ? f : f.promoted_to_xyz();
    auto degree = working.homogeneous_degree();
    if (!degree || *degree < 1) {
        throw shape_mismatch("defining polynomial must be homogeneous of degree >= 1");
    }
    int delta = *degree;
    const FieldDesc field = working.field();
    Monomial z_top = Monomial::variable(2, delta);

    // Search x <- x + a*z, y <- y + b*z over a deterministic grid until the
    // z^delta coefficient is nonzero. A nonzero form of degree delta cannot
    // vanish on a grid larger than delta in each direction, so over the
    // rationals a bound of delta+1 always succeeds; over F_p the residues
    // may be exhausted first.
    CoordinateChange change{Scalar::zero(field), Scalar::zero(field)};
    Polynomial monic = working;
    bool found = false;
    long limit = options.max_substitution;
    if (field.is_rational()) {
        limit = std::max(limit, static_cast<long>(delta) + 1);
    } else {
        limit = std::min<long>(limit, static_cast<long>(field.characteristic()));
    }
    for (long total = 0; total <= 2 * (limit - 1) && !found; ++total) {
        for (long a = total; a >= 0 && !found; --a) {
            long b = total - a;
            if (a >= limit || b >= limit) continue;
            CoordinateChange candidate{Scalar::of_int(field, a), Scalar::of_int(field, b)};
            Polynomial image = candidate.apply(working);
            if (!image.coefficient(z_top).is_zero()) {
                change = candidate;
                monic = std::move(image);
                found = true;
            }
        }
    }
    if (!found) {
        throw no_monic_coordinate(
            "no linear substitution x -> x + a*z, y -> y + b*z makes the curve monic in z");
    }
    monic = monic.scaled(monic.coefficient(z_top).inverse());

    // Jacobian criterion: the curve is smooth iff (F, dF/dx, dF/dy, dF/dz)
    // contains a power of each variable.
    std::vector<Polynomial> jacobian{monic, derivative(monic, 0), derivative(monic, 1),
                                     derivative(monic, 2)};
    bool smooth = zero_dimensional(jacobian, options.gb);

    auto ring = std::shared_ptr<HypersurfaceRing>(
        new HypersurfaceRing(std::move(monic), delta, smooth, std::move(change)));
    Polynomial tail = Polynomial::term(field, Ambient::xyz, z_top, Scalar::one(field)) - ring->f_;
    ring->z_tail_ = std::move(tail);
    return ring;
}

int HypersurfaceRing::h0_dim(int k) const { return hypersurface_h0(delta_, k); }
int HypersurfaceRing::h1_dim(int k) const { return hypersurface_h1(delta_, k); }

int hypersurface_h0(int delta, int k) {
    if (k < 0) return 0;
    return static_cast<int>(binom2(k + 2) - binom2(k - delta + 2));
}

int hypersurface_h1(int delta, int k) {
    int total = 0;
    for (int c = 0; c < delta; ++c) total += std::max(0, c - k - 1);
    return total;
}

Polynomial HypersurfaceRing::reduce(const Polynomial& p) const {
    if (p.ambient() != Ambient::xyz) return reduce(p.promoted_to_xyz());
    Polynomial out = p;
    while (true) {
        int top = out.max_exponent(2);
        if (top < delta_) return out;
        // Rewrite every term with z-exponent == top via z^delta = z_tail_.
        Polynomial high(field_, Ambient::xyz);
        for (const auto& [m, c] : out.terms()) {
            if (m.e[2] != top) continue;
            high.add_term(Monomial{{m.e[0], m.e[1], m.e[2] - delta_}}, c);
        }
        for (const auto& [m, c] : high.terms()) {
            out.add_term(Monomial{{m.e[0], m.e[1], m.e[2] + delta_}}, -c);
        }
        out += high * z_tail_;
    }
}

LaurentElement HypersurfaceRing::multiply(const LaurentElement& u, const LaurentElement& v) const {
    if (u.field() != field_ || v.field() != field_) {
        throw field_mismatch("Laurent element over the wrong field");
    }
    LaurentElement raw(field_);
    for (const auto& [mu, cu] : u.terms()) {
        for (const auto& [mv, cv] : v.terms()) {
            raw.add_term(LaurentMonomial{mu.a + mv.a, mu.b + mv.b, mu.c + mv.c}, cu * cv);
        }
    }
    // z-reduce: replace z^c (c >= delta) by z^(c-delta) * z_tail_.
    LaurentElement tail = LaurentElement::from_polynomial(z_tail_);
    while (raw.max_z_exponent() >= delta_) {
        int top = raw.max_z_exponent();
        LaurentElement high(field_);
        for (const auto& [m, c] : raw.terms()) {
            if (m.c == top) high.add_term(LaurentMonomial{m.a, m.b, m.c - delta_}, c);
        }
        for (const auto& [m, c] : high.terms()) {
            raw.add_term(LaurentMonomial{m.a, m.b, m.c + delta_}, -c);
        }
        raw += multiply(high, tail);
    }
    return raw;
}

CechClass HypersurfaceRing::cech_reduce(const LaurentElement& u, int k) const {
    CechClass out(field_, k);
    if (u.is_zero()) return out;
    auto d = u.homogeneous_degree();
    if (!d || *d != k) {
        throw shape_mismatch("Laurent element is not homogeneous of ring degree " +
                             std::to_string(k));
    }
    if (u.max_z_exponent() >= delta_) {
        throw shape_mismatch("Laurent element is not z-reduced");
    }
    for (const auto& [m, c] : u.terms()) {
        if (m.a >= 0 || m.b >= 0) continue;  // lies in R_x + R_y
        out.add_term(m, c);
    }
    return out;
}

std::vector<Monomial> HypersurfaceRing::monomial_basis(int k) const {
    std::vector<Monomial> out;
    if (k < 0) return out;
    for (int c = 0; c < delta_ && c <= k; ++c) {
        for (int a = k - c; a >= 0; --a) {
            out.push_back(Monomial{{a, k - c - a, c}});
        }
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return grevlex_less(b, a);
    });
    return out;
}

}  // namespace tcb
