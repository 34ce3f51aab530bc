#include "doctest.h"

#include "tcb/polynomial.hpp"

#include "test_util.hpp"

using namespace tcb;

namespace {
const FieldDesc kQ = FieldDesc::rationals();

Polynomial parse(const std::string& text, const FieldDesc& field = kQ,
                 Ambient ambient = Ambient::xyz) {
    return parse_polynomial(text, field, ambient);
}
}  // namespace

TEST_CASE("parsing basics") {
    Polynomial fermat = parse("x^3+y^3+z^3");
    CHECK(fermat.term_count() == 3);
    CHECK(fermat.homogeneous_degree() == 3);
    CHECK(fermat.total_degree() == 3);

    CHECK(parse("x - x").is_zero());
    CHECK(parse("x^4").homogeneous_degree() == 4);
    CHECK(parse("x^4").total_degree() == 4);

    // Juxtaposition, explicit '*', parentheses and rational literals.
    CHECK(parse("2xy^2") == parse("2*x*y^2"));
    CHECK(parse("(x+y)*(x-y)") == parse("x^2-y^2"));
    CHECK(parse("1/2x + 1/2x") == parse("x"));
    CHECK(parse("-x + 2x") == parse("x"));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse("x +"), parse_error);
    CHECK_THROWS_AS(parse("w^2"), parse_error);
    CHECK_THROWS_AS(parse("x^"), parse_error);
    CHECK_THROWS_AS(parse("(x+y"), parse_error);
    CHECK_THROWS_AS(parse("x$y"), parse_error);
    try {
        parse("x + w");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position() == 4);
    }
    // z is unknown in the two-variable ring.
    CHECK_THROWS_AS(parse("z", kQ, Ambient::xy), parse_error);
}

TEST_CASE("arithmetic") {
    CHECK(parse("(x+y)") * parse("(x-y)") == parse("x^2 - y^2"));
    Polynomial p = parse("x^2*y - 3z^3");
    CHECK(p + Polynomial::zero(kQ, Ambient::xyz) == p);
    CHECK((p - p).is_zero());

    FieldDesc f3 = FieldDesc::prime_field(3);
    CHECK(parse("3x", f3).is_zero());
    CHECK(parse("x + x + x", f3).is_zero());
    CHECK_FALSE(parse("3x").is_zero());

    CHECK_THROWS_AS(parse("x") + parse("x", f3), field_mismatch);
    CHECK_THROWS_AS(parse("x") + parse("x", kQ, Ambient::xy), shape_mismatch);
}

TEST_CASE("degrees") {
    CHECK(parse("x^4").total_degree() == 4);
    CHECK(parse("x^3+y^3+z^3").total_degree() == 3);
    CHECK_FALSE(parse("0").total_degree().has_value());
    CHECK_FALSE(parse("x^2 + y").homogeneous_degree().has_value());
    CHECK(parse("x^2 + y").total_degree() == 2);

    // Homogeneous degrees add under multiplication.
    test::Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = test::random_homogeneous(rng, kQ, Ambient::xyz, 2);
        Polynomial q = test::random_homogeneous(rng, kQ, Ambient::xyz, 3);
        Polynomial pq = p * q;
        REQUIRE_FALSE(pq.is_zero());  // a domain
        CHECK(pq.homogeneous_degree() == 5);
    }
}

TEST_CASE("grevlex leading terms and printing") {
    Polynomial p = parse("z^2 + x*y + y^2 + x^2");
    CHECK(p.leading_monomial() == Monomial{{2, 0, 0}});
    CHECK(p.to_string() == "x^2 + x*y + y^2 + z^2");
    CHECK(parse("y^3 + x^2*y").to_string() == "x^2*y + y^3");
    CHECK(parse("2x - 3y").to_string() == "2*x - 3*y");
    CHECK(parse("0").to_string() == "0");
    CHECK(parse("-1/2 x^2").to_string() == "-1/2*x^2");
}

TEST_CASE("print-parse round trip is a fixed point") {
    for (const FieldDesc& field : {kQ, FieldDesc::prime_field(13)}) {
        test::Rng rng(99);
        for (int i = 0; i < 100; ++i) {
            Polynomial p = test::random_homogeneous(rng, field, Ambient::xyz, 1 + i % 5, false);
            Polynomial q = parse(p.to_string(), field);
            CHECK(p == q);
            CHECK(p.to_string() == q.to_string());
        }
    }
}

TEST_CASE("substitution x <- x + a*z is graded and invertible") {
    Polynomial f = parse("x^2*z + y^3");
    Polynomial g = f.substituted_xy_by_z(Scalar::one(kQ), Scalar::zero(kQ));
    CHECK(g == parse("(x+z)^2*z + y^3"));
    CHECK(g.homogeneous_degree() == 3);
    // Undo with a = -1.
    CHECK(g.substituted_xy_by_z(Scalar::of_int(kQ, -1), Scalar::zero(kQ)) == f);
}

TEST_CASE("z layers") {
    Polynomial p = parse("x^2*z + x*y*z + y^3 + z^3");
    CHECK(p.z_layer(0) == parse("y^3", kQ, Ambient::xy));
    CHECK(p.z_layer(1) == parse("x^2 + x*y", kQ, Ambient::xy));
    CHECK(p.z_layer(2).is_zero());
    CHECK(p.z_layer(3) == parse("1", kQ, Ambient::xy));
}
