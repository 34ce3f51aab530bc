#include "doctest.h"

#include "tcb/hypersurface.hpp"

#include "test_util.hpp"

using namespace tcb;

namespace {
const FieldDesc kQ = FieldDesc::rationals();

Polynomial parse(const std::string& text, const FieldDesc& field = kQ) {
    return parse_polynomial(text, field, Ambient::xyz);
}
}  // namespace

TEST_CASE("fermat cubic over the rationals") {
    RingPtr ring = HypersurfaceRing::make(parse("x^3+y^3+z^3"));
    CHECK(ring->degree() == 3);
    CHECK(ring->genus() == 1);
    CHECK(ring->is_smooth());
    CHECK(ring->sop_xy());
    CHECK(ring->coordinate_change().is_identity());
    // z^3 = -x^3 - y^3 in R.
    CHECK(ring->reduce(parse("z^3")) == parse("-x^3-y^3"));
}

TEST_CASE("fermat cubic is singular over F_3") {
    FieldDesc f3 = FieldDesc::prime_field(3);
    RingPtr ring = HypersurfaceRing::make(parse("x^3+y^3+z^3", f3));
    CHECK_FALSE(ring->is_smooth());
    CHECK(ring->degree() == 3);
}

TEST_CASE("a line") {
    RingPtr ring = HypersurfaceRing::make(parse("z"));
    CHECK(ring->degree() == 1);
    CHECK(ring->genus() == 0);
    CHECK(ring->is_smooth());
}

TEST_CASE("monic coordinate search") {
    SUBCASE("z^delta coefficient restored by x <- x + z") {
        RingPtr ring = HypersurfaceRing::make(parse("x^2*z + y^3"));
        CHECK(ring->degree() == 3);
        Monomial z3{{0, 0, 3}};
        CHECK(ring->defining_polynomial().coefficient(z3) == Scalar::one(kQ));
        CHECK_FALSE(ring->coordinate_change().is_identity());
    }
    SUBCASE("a singular curve without z is recorded as singular") {
        RingPtr ring = HypersurfaceRing::make(parse("x^3 + y^3"));
        CHECK(ring->degree() == 3);
        CHECK_FALSE(ring->is_smooth());
        Monomial z3{{0, 0, 3}};
        CHECK(ring->defining_polynomial().coefficient(z3) == Scalar::one(kQ));
    }
    SUBCASE("inhomogeneous input is rejected") {
        CHECK_THROWS_AS(HypersurfaceRing::make(parse("x^2 + y")), shape_mismatch);
        CHECK_THROWS_AS(HypersurfaceRing::make(parse("0")), shape_mismatch);
    }
    SUBCASE("the search can be exhausted over a tiny field") {
        // x*y*(x+y) vanishes at every point (a, b, 1) of F_2^2.
        FieldDesc f2 = FieldDesc::prime_field(2);
        CHECK_THROWS_AS(HypersurfaceRing::make(parse("x^2*y + x*y^2", f2)),
                        no_monic_coordinate);
    }
}

TEST_CASE("hilbert function h0") {
    CHECK(hypersurface_h0(5, 2) == 6);
    CHECK(hypersurface_h0(3, 3) == 9);   // 10 - 1
    CHECK(hypersurface_h0(4, 0) == 1);
    CHECK(hypersurface_h0(2, -1) == 0);
    CHECK(hypersurface_h0(3, 1) == 3);
}

TEST_CASE("first cohomology dimensions") {
    CHECK(hypersurface_h1(3, 0) == 1);   // elliptic curve: h^1(O) = g = 1
    CHECK(hypersurface_h1(3, -2) == 6);
    CHECK(hypersurface_h1(5, 1) == 3);
    CHECK(hypersurface_h1(1, 0) == 0);
}

TEST_CASE("serre duality and riemann-roch sweeps") {
    for (int delta = 1; delta <= 8; ++delta) {
        int genus = (delta - 1) * (delta - 2) / 2;
        for (int k = -10; k <= 10; ++k) {
            CHECK(hypersurface_h1(delta, k) == hypersurface_h0(delta, delta - 3 - k));
            CHECK(hypersurface_h0(delta, k) - hypersurface_h1(delta, k) ==
                  delta * k + 1 - genus);
        }
    }
}

TEST_CASE("monomial basis matches the hilbert function") {
    RingPtr ring = HypersurfaceRing::make(parse("x^3+y^3+z^3"));
    for (int k = 0; k <= 8; ++k) {
        CHECK(static_cast<int>(ring->monomial_basis(k).size()) == ring->h0_dim(k));
    }
    CHECK(ring->monomial_basis(-1).empty());
}

TEST_CASE("z-reduction respects ring arithmetic") {
    RingPtr ring = HypersurfaceRing::make(parse("x^3+y^3+z^3"));
    test::Rng rng(2718);
    for (int i = 0; i < 60; ++i) {
        Polynomial p = test::random_homogeneous(rng, kQ, Ambient::xyz, 2 + i % 3, false);
        Polynomial q = test::random_homogeneous(rng, kQ, Ambient::xyz, 2 + (i + 1) % 3, false);
        CHECK(ring->reduce(p * q) == ring->multiply(ring->reduce(p), ring->reduce(q)));
        CHECK(ring->reduce(ring->reduce(p)) == ring->reduce(p));
        CHECK(ring->reduce(p).max_exponent(2) < ring->degree());
    }
}

TEST_CASE("laurent arithmetic") {
    RingPtr ring = HypersurfaceRing::make(parse("x^3+y^3+z^3"));
    LaurentElement u = LaurentElement::from_polynomial(parse("x^2*z")).shifted(-3, -1);
    CHECK(u.homogeneous_degree() == -1);
    CHECK(u.to_string() == "x^-1*y^-1*z");

    // Multiplication with z-reduction: z^2 * z^2 = z * z^3 = -z(x^3 + y^3).
    LaurentElement z2 = LaurentElement::from_polynomial(parse("z^2"));
    LaurentElement product = ring->multiply(z2, z2);
    CHECK(product == LaurentElement::from_polynomial(parse("-x^3*z - y^3*z")));

    LaurentElement sum = u + u;
    CHECK(sum.scaled(Scalar::of_fraction(kQ, Rational(1, 2))) == u);
    CHECK((u - u).is_zero());
}

TEST_CASE("cech reduction") {
    RingPtr ring = HypersurfaceRing::make(parse("x^3+y^3+z^3"));

    SUBCASE("a basis monomial survives") {
        LaurentElement u(kQ);
        u.add_term(LaurentMonomial{-1, -1, 0}, Scalar::one(kQ));
        CechClass c = ring->cech_reduce(u, -2);
        CHECK_FALSE(class_is_zero(c));
        CHECK(c.degree() == -2);
        CHECK(c.coefficients().size() == 1);
    }
    SUBCASE("global ring elements die") {
        test::Rng rng(13);
        for (int i = 0; i < 30; ++i) {
            int d = i % 5;
            Polynomial p = ring->reduce(test::random_homogeneous(rng, kQ, Ambient::xyz, d, false));
            if (p.is_zero()) continue;
            CechClass c = ring->cech_reduce(LaurentElement::from_polynomial(p), d);
            CHECK(class_is_zero(c));
        }
    }
    SUBCASE("inhomogeneous input is rejected") {
        LaurentElement u(kQ);
        u.add_term(LaurentMonomial{-1, -1, 0}, Scalar::one(kQ));
        u.add_term(LaurentMonomial{2, -3, 0}, Scalar::one(kQ));
        CHECK_THROWS_AS(ring->cech_reduce(u, -2), shape_mismatch);
    }
    SUBCASE("idempotence and linearity") {
        test::Rng rng(77);
        FieldDesc f7 = FieldDesc::prime_field(7);
        RingPtr ring7 = HypersurfaceRing::make(parse("x^3+y^3+z^3", f7));
        for (int i = 0; i < 40; ++i) {
            // Random z-reduced Laurent element, homogeneous of degree -2.
            LaurentElement u(f7), v(f7);
            for (int t = 0; t < 4; ++t) {
                std::uniform_int_distribution<int> a_dist(-3, 2);
                std::uniform_int_distribution<int> c_dist(0, 2);
                int a = a_dist(rng), c = c_dist(rng);
                int b = -2 - a - c;
                u.add_term(LaurentMonomial{a, b, c}, test::random_scalar(rng, f7));
                int a2 = a_dist(rng), c2 = c_dist(rng);
                v.add_term(LaurentMonomial{a2, -2 - a2 - c2, c2}, test::random_scalar(rng, f7));
            }
            CechClass cu = ring7->cech_reduce(u, -2);
            CechClass cv = ring7->cech_reduce(v, -2);
            // Reducing a reduced class changes nothing.
            LaurentElement reduced(f7);
            for (const auto& [m, c] : cu.coefficients()) reduced.add_term(m, c);
            CHECK(ring7->cech_reduce(reduced, -2) == cu);
            // Linearity.
            CechClass sum = ring7->cech_reduce(u + v, -2);
            CHECK(sum == cu + cv);
            // Adding terms with a >= 0 or b >= 0 does not change the class.
            LaurentElement noise = u;
            noise.add_term(LaurentMonomial{3, -5, 0}, Scalar::one(f7));
            CHECK(ring7->cech_reduce(noise, -2) == cu);
        }
    }
}

TEST_CASE("h1 dimension counts the cech basis monomials") {
    for (int delta : {1, 2, 3, 5}) {
        for (int k = -6; k <= 4; ++k) {
            int count = 0;
            for (int c = 0; c < delta; ++c) {
                for (int a = -1; a >= k - c + 1; --a) {
                    int b = k - c - a;
                    if (b <= -1) ++count;
                }
            }
            CHECK(count == hypersurface_h1(delta, k));
        }
    }
}
