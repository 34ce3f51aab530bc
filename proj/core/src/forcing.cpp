#include "tcb/forcing.hpp"

namespace tcb {

namespace {

// Least exponent N <= cap with var^N in the ideal of gb's input generators,
// together with witnesses over the first n inputs (the last input is F,
// whose coefficient is discarded: the identity is read in R).
std::pair<int, std::vector<Polynomial>> least_power_in_ideal(const GroebnerBasis& gb,
                                                             const HypersurfaceRing& ring,
                                                             std::size_t n, int var, int cap) {
    const FieldDesc field = ring.field();
    for (int e = 1; e <= cap; ++e) {
        Polynomial p = Polynomial::term(field, Ambient::xyz, Monomial::variable(var, e),
                                        Scalar::one(field));
        Division div = normal_form(ModuleVector::from_polynomial(p), gb);
        if (!div.remainder.is_zero()) continue;
        std::vector<Polynomial> witnesses;
        witnesses.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial w = Polynomial::zero(field, Ambient::xyz);
            for (std::size_t k = 0; k < gb.size(); ++k) {
                if (div.quotients[k].is_zero() || gb.transform[k][i].is_zero()) continue;
                w += div.quotients[k] * gb.transform[k][i];
            }
            witnesses.push_back(ring.reduce(w));
        }
        return {e, std::move(witnesses)};
    }
    throw resource_exhausted("no power of " + std::string(variable_name(var)) + " up to " +
                             std::to_string(cap) + " lies in the ideal");
}

}  // namespace

IdealData::IdealData(RingPtr ring, std::vector<Polynomial> generators,
                     const ForcingOptions& options)
    : ring_(std::move(ring)), options_(options) {
    if (!ring_) throw shape_mismatch("missing ring");
    if (generators.empty()) throw shape_mismatch("no generators");

    gens_.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.field() != ring_->field()) {
            throw field_mismatch("generator over the wrong field");
        }
        Polynomial reduced = ring_->reduce(g.ambient() == Ambient::xyz ? g : g.promoted_to_xyz());
        auto d = reduced.homogeneous_degree();
        if (!d || *d < 1) {
            throw shape_mismatch("generators must be homogeneous of degree >= 1 and nonzero in R");
        }
        degrees_.push_back(*d);
        gens_.push_back(std::move(reduced));
    }

    // Groebner basis of (f_1, ..., f_n, F): quotient-ring computations are
    // carried out in the ambient ring with F adjoined.
    std::vector<ModuleVector> vectors;
    vectors.reserve(gens_.size() + 1);
    for (const auto& g : gens_) vectors.push_back(ModuleVector::from_polynomial(g));
    vectors.push_back(ModuleVector::from_polynomial(ring_->defining_polynomial()));
    extended_gb_ = buchberger(vectors, MonomialOrder::grevlex_top_order(), options_.gb);
    if (!has_pure_power_leading_term(extended_gb_, 0) ||
        !has_pure_power_leading_term(extended_gb_, 1) ||
        !has_pure_power_leading_term(extended_gb_, 2)) {
        throw not_primary(
            "the generators are not primary for the irrelevant maximal ideal of R");
    }

    auto [nx, wx] =
        least_power_in_ideal(extended_gb_, *ring_, gens_.size(), 0, options_.max_denominator_exp);
    auto [ny, wy] =
        least_power_in_ideal(extended_gb_, *ring_, gens_.size(), 1, options_.max_denominator_exp);
    auto [nz, wz] =
        least_power_in_ideal(extended_gb_, *ring_, gens_.size(), 2, options_.max_denominator_exp);
    certificate_ = PrimaryCertificate{nx, ny, nz, std::move(wx), std::move(wy)};
}

Membership IdealData::membership(const Polynomial& f0) const {
    Polynomial reduced = ring_->reduce(f0.ambient() == Ambient::xyz ? f0 : f0.promoted_to_xyz());
    Division div = normal_form(ModuleVector::from_polynomial(reduced), extended_gb_);
    Membership out;
    out.member = div.remainder.is_zero();
    if (out.member) {
        out.witnesses.reserve(gens_.size());
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            Polynomial w = Polynomial::zero(ring_->field(), Ambient::xyz);
            for (std::size_t k = 0; k < extended_gb_.size(); ++k) {
                if (div.quotients[k].is_zero() || extended_gb_.transform[k][i].is_zero()) continue;
                w += div.quotients[k] * extended_gb_.transform[k][i];
            }
            out.witnesses.push_back(ring_->reduce(w));
        }
    }
    return out;
}

SplittingData::SplittingData(SyzygyMatrix basis, const BuchbergerOptions& options)
    : solver_(std::move(basis), options) {}

SplittingData splitting_data(const IdealData& ideal) {
    std::vector<Polynomial> base_gens;
    base_gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) {
        if (g.involves(2)) {
            throw splitting_unavailable(
                "splitting not established: generator " + g.to_string() +
                " involves z, so the two-variable free basis does not apply");
        }
        base_gens.push_back(g.restricted_to_xy());
    }
    SyzygyOptions options;
    options.gb = ideal.options().gb;
    options.minimalize = true;
    return SplittingData(syzygies(base_gens, options), ideal.options().gb);
}

ForcingClass forcing_class_with_exponents(const IdealData& ideal, const SplittingData& split,
                                          const Polynomial& f0, int nx, int ny) {
    const HypersurfaceRing& ring = *ideal.ring();
    const FieldDesc field = ring.field();
    const int delta = ring.degree();
    const std::size_t n = ideal.generators().size();

    Polynomial candidate =
        ring.reduce(f0.ambient() == Ambient::xyz ? f0 : f0.promoted_to_xyz());
    auto mdeg = candidate.homogeneous_degree();
    if (!candidate.is_zero() && !mdeg) {
        throw shape_mismatch("candidate element must be homogeneous");
    }

    std::vector<Polynomial> x_witnesses = ideal.certificate().x_witnesses;
    std::vector<Polynomial> y_witnesses = ideal.certificate().y_witnesses;
    if (nx != ideal.certificate().nx || ny != ideal.certificate().ny) {
        // Recompute witnesses for the requested chart denominators.
        std::vector<Polynomial> gens_and_f = ideal.generators();
        gens_and_f.push_back(ring.defining_polynomial());
        auto check = [&](int var, int e) {
            Polynomial p = Polynomial::term(field, Ambient::xyz, Monomial::variable(var, e),
                                            Scalar::one(field));
            Membership m = ideal_membership(p, gens_and_f, ideal.options().gb);
            if (!m.member) {
                throw not_a_relation("requested chart denominator is not in the ideal");
            }
            m.witnesses.resize(n, Polynomial::zero(field, Ambient::xyz));
            std::vector<Polynomial> out;
            out.reserve(n);
            for (std::size_t i = 0; i < n; ++i) out.push_back(ring.reduce(m.witnesses[i]));
            return out;
        };
        x_witnesses = check(0, nx);
        y_witnesses = check(1, ny);
    }

    ForcingClass out;
    out.m = mdeg.value_or(0);
    out.twists = split.twists();
    int m = out.m;

    if (candidate.is_zero()) {
        for (int b : out.twists) out.components.emplace_back(field, m - b);
        return out;
    }

    // Chart lifts: over {x != 0} we have f0 = sum_i (h_i f0 / x^nx) f_i, and
    // symmetrically over {y != 0}. The difference of the lifts is a relation
    // on the overlap; rho clears both denominators.
    std::vector<Polynomial> rho;
    rho.reserve(n);
    Monomial x_shift = Monomial::variable(0, nx);
    Monomial y_shift = Monomial::variable(1, ny);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial qx = ring.multiply(x_witnesses[i], candidate);
        Polynomial qy = ring.multiply(y_witnesses[i], candidate);
        rho.push_back(qx.times_monomial(y_shift) - qy.times_monomial(x_shift));
    }

    // Each z-layer of rho is a relation over K[x,y]; express it in the free
    // syzygy basis and reassemble the coordinates along powers of z.
    const SyzygyMatrix& basis = split.basis();
    std::vector<Polynomial> assembled(static_cast<std::size_t>(basis.cols()),
                                      Polynomial::zero(field, Ambient::xyz));
    for (int c = 0; c < delta; ++c) {
        ModuleVector layer(basis.row_shape);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial entry = rho[i].z_layer(c);
            if (!entry.is_zero()) nonzero = true;
            layer.entry(static_cast<int>(i)) = std::move(entry);
        }
        if (!nonzero) continue;
        std::vector<Polynomial> coords = split.solver().coordinates(layer);
        Monomial zc = Monomial::variable(2, c);
        for (std::size_t j = 0; j < coords.size(); ++j) {
            if (coords[j].is_zero()) continue;
            assembled[j] += coords[j].promoted_to_xyz().times_monomial(zc);
        }
    }

    for (std::size_t j = 0; j < assembled.size(); ++j) {
        LaurentElement u = LaurentElement::from_polynomial(assembled[j]).shifted(-nx, -ny);
        out.components.push_back(ring.cech_reduce(u, m - out.twists[j]));
    }
    return out;
}

ForcingClass forcing_class(const IdealData& ideal, const SplittingData& split,
                           const Polynomial& f0) {
    return forcing_class_with_exponents(ideal, split, f0, ideal.certificate().nx,
                                        ideal.certificate().ny);
}

}  // namespace tcb
