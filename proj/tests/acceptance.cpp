// Acceptance suite: one checked criterion per test case, each printing a
// single [PASS]/[FAIL] line with its runtime.

#include "doctest.h"

#include <chrono>
#include <cstdio>
#include <numeric>

#include "tcb/decision.hpp"

#include "test_util.hpp"

using namespace tcb;

namespace {

const FieldDesc kQ = FieldDesc::rationals();

Polynomial parse(const std::string& text, const FieldDesc& field = kQ) {
    return parse_polynomial(text, field, Ambient::xyz);
}

class Criterion {
  public:
    Criterion(int id, const char* name) : id_(id), name_(name) {
        start_ = std::chrono::steady_clock::now();
    }

    void check(bool condition) { ok_ = ok_ && condition; }
    bool ok() const { return ok_; }

    double finish_and_report() {
        auto elapsed = std::chrono::steady_clock::now() - start_;
        double seconds = std::chrono::duration<double>(elapsed).count();
        std::printf("[%s] criterion %d: %s (%.3fs)\n", ok_ ? "PASS" : "FAIL", id_, name_, seconds);
        std::fflush(stdout);
        return seconds;
    }

  private:
    int id_;
    const char* name_;
    bool ok_ = true;
    std::chrono::steady_clock::time_point start_;
};

DecisionContext fermat_context(const FieldDesc& field) {
    RingPtr ring = HypersurfaceRing::make(parse("x^3+y^3+z^3", field));
    return DecisionContext(
        IdealData(ring, {parse("x^4", field), parse("x*y", field), parse("y^2", field)}));
}

}  // namespace

TEST_CASE("criterion 1: splitting twists of (x^4, xy, y^2) are {5, 3}") {
    Criterion c(1, "splitting twists of (x^4, xy, y^2) are {5, 3}");
    SyzygyMatrix syz = syzygies({parse_polynomial("x^4", kQ, Ambient::xy),
                                 parse_polynomial("x*y", kQ, Ambient::xy),
                                 parse_polynomial("y^2", kQ, Ambient::xy)});
    c.check(syz.cols() == 2);
    c.check(syz.column_twists == std::vector<int>{3, 5});
    c.check(syz.minimal_free);
    double seconds = c.finish_and_report();
    CHECK(c.ok());
    CHECK(seconds < 1.0);
}

TEST_CASE("criterion 2: worked memberships on the fermat cubic") {
    Criterion c(2, "worked memberships on the fermat cubic (QQ, F_7, F_13)");
    for (const FieldDesc& field :
         {kQ, FieldDesc::prime_field(7), FieldDesc::prime_field(13)}) {
        DecisionContext context = fermat_context(field);
        c.check(decide(context, parse("y*z^2", field)).verdict ==
                Verdict::in_tight_closure_not_ideal);
        c.check(decide(context, parse("x*z^2", field)).verdict ==
                Verdict::not_in_tight_closure);
        // Degrees 5..8: nothing is excluded from the tight closure.
        for (int m = 5; m <= 8; ++m) {
            for (const Monomial& mono : context.ideal().ring()->monomial_basis(m)) {
                Polynomial f0 = Polynomial::term(field, Ambient::xyz, mono, Scalar::one(field));
                c.check(decide(context, f0).verdict != Verdict::not_in_tight_closure);
            }
        }
        // Degree 4: only InIdeal / NotInTightClosure, and InIdeal matches
        // Groebner ideal membership exactly.
        for (const Monomial& mono : context.ideal().ring()->monomial_basis(4)) {
            Polynomial f0 = Polynomial::term(field, Ambient::xyz, mono, Scalar::one(field));
            Decision d = decide(context, f0);
            c.check(d.verdict == Verdict::in_ideal ||
                    d.verdict == Verdict::not_in_tight_closure);
            c.check((d.verdict == Verdict::in_ideal) ==
                    context.ideal().membership(f0).member);
        }
    }
    double seconds = c.finish_and_report();
    CHECK(c.ok());
    CHECK(seconds < 10.0);
}

TEST_CASE("criterion 3: large worked bounds (100,100,100), delta 5, genus 6") {
    Criterion c(3, "bounds for degrees (100,100,100), delta 5, genus 6");
    DegreeData d = DegreeData::make({100, 100, 100}, 5, 6, Characteristic::zero(), std::nullopt,
                                    false, false, /*indecomposable=*/true);
    BoundReport genus = genus_bounds_n3(d);
    c.check(genus.inclusion_degree == 151);
    c.check(genus.max_excluded_degree() == 148);
    BoundReport generic = generic_bounds(d);
    c.check(generic.inclusion_degree == 200);
    double seconds = c.finish_and_report();
    CHECK(c.ok());
    CHECK(seconds < 0.1);
}

TEST_CASE("criterion 4: parameter pairs collapse to d1 + d2") {
    Criterion c(4, "parameter pairs: vanishing = split inclusion = exclusion = d1+d2");
    test::Rng rng(1234);
    std::uniform_int_distribution<int> deg(1, 9);
    for (int i = 0; i < 20; ++i) {
        int d1 = deg(rng), d2 = deg(rng);
        DegreeData d = DegreeData::make({d1, d2}, 1 + i % 4, 0, Characteristic::zero());
        VanishingBound v = vanishing_bound(d);
        BoundReport split = split_bounds(d);
        c.check(v.k == d1 + d2);
        c.check(!v.advisory);
        c.check(split.inclusion_degree == d1 + d2);
        c.check(split.exclusion_degree == d1 + d2);
    }
    double seconds = c.finish_and_report();
    CHECK(c.ok());
    (void)seconds;
}

TEST_CASE("criterion 5: cohomology dimensions satisfy duality and riemann-roch") {
    Criterion c(5, "h^0/h^1 satisfy Serre duality and Riemann-Roch");
    for (int delta = 1; delta <= 8; ++delta) {
        int genus = (delta - 1) * (delta - 2) / 2;
        for (int k = -10; k <= 10; ++k) {
            c.check(hypersurface_h1(delta, k) == hypersurface_h0(delta, delta - 3 - k));
            c.check(hypersurface_h0(delta, k) - hypersurface_h1(delta, k) ==
                    delta * k + 1 - genus);
            if (k < 0) c.check(hypersurface_h0(delta, k) == 0);
        }
    }
    double seconds = c.finish_and_report();
    CHECK(c.ok());
    CHECK(seconds < 0.1);
}

TEST_CASE("criterion 6: class vanishing matches ideal membership") {
    Criterion c(6, "forcing-class vanishing == Groebner membership (>= 300 random)");
    int checked = 0;
    for (std::uint64_t p : {5ULL, 7ULL}) {
        FieldDesc field = FieldDesc::prime_field(p);
        RingPtr ring = HypersurfaceRing::make(parse("x^3+y^3+z^3", field));
        std::vector<std::vector<Polynomial>> ideals = {
            {parse("x^4", field), parse("x*y", field), parse("y^2", field)},
            {parse("x^3", field), parse("x*y^2", field), parse("y^4", field)}};
        for (const auto& gens : ideals) {
            IdealData ideal(ring, gens);
            SplittingData split = splitting_data(ideal);
            test::Rng rng(90210 + p);
            for (int m = 2; m <= 7; ++m) {
                for (int i = 0; i < 14; ++i) {
                    Polynomial f0 = ring->reduce(
                        test::random_homogeneous(rng, field, Ambient::xyz, m, true));
                    if (f0.is_zero()) continue;
                    bool member = ideal.membership(f0).member;
                    bool zero = forcing_class(ideal, split, f0).all_zero();
                    c.check(member == zero);
                    ++checked;
                }
            }
        }
    }
    c.check(checked >= 300);
    double seconds = c.finish_and_report();
    CHECK(c.ok());
    CHECK(seconds < 60.0);
}

TEST_CASE("criterion 7: groebner engine properties") {
    Criterion c(7, "Groebner properties: S-pairs, division, syzygies, twist sums");
    test::Rng rng(777);

    // All S-pairs of a returned basis reduce to zero.
    auto check_gb = [&](const std::vector<Polynomial>& gens) {
        std::vector<ModuleVector> vectors;
        for (const auto& g : gens) vectors.push_back(ModuleVector::from_polynomial(g));
        GroebnerBasis gb = buchberger(vectors, MonomialOrder::grevlex_top_order());
        for (std::size_t i = 0; i < gb.size(); ++i) {
            for (std::size_t j = i + 1; j < gb.size(); ++j) {
                ModuleVector s = s_vector(gb.elements[i], gb.elements[j], gb.order);
                if (!s.is_zero()) c.check(normal_form(s, gb).remainder.is_zero());
            }
        }
        return gb;
    };
    GroebnerBasis fixed = check_gb({parse_polynomial("x^4", kQ, Ambient::xy),
                                    parse_polynomial("x*y", kQ, Ambient::xy),
                                    parse_polynomial("y^2", kQ, Ambient::xy)});
    check_gb({parse("x^2 - y^2"), parse("x^2 + y^2"), parse("x*y*z")});

    // Division identity on 200 random inputs against the fixed basis.
    for (int i = 0; i < 200; ++i) {
        Polynomial v = test::random_homogeneous(rng, kQ, Ambient::xy, 1 + i % 7, false);
        Division d = normal_form(ModuleVector::from_polynomial(v), fixed);
        ModuleVector acc = d.remainder;
        for (std::size_t k = 0; k < fixed.size(); ++k) {
            acc += fixed.elements[k].times_polynomial(d.quotients[k]);
        }
        c.check(acc == ModuleVector::from_polynomial(v));
    }

    // Syzygy columns annihilate, and twist sums match degree sums, on 20
    // random primary monomial ideals in K[x,y].
    std::uniform_int_distribution<int> e(1, 6);
    std::uniform_int_distribution<int> extra(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> gens = {
            parse_polynomial("x^" + std::to_string(e(rng)), kQ, Ambient::xy),
            parse_polynomial("y^" + std::to_string(e(rng)), kQ, Ambient::xy)};
        for (int k = extra(rng); k > 0; --k) {
            gens.push_back(parse_polynomial(
                "x^" + std::to_string(e(rng)) + "*y^" + std::to_string(e(rng)), kQ, Ambient::xy));
        }
        SyzygyMatrix syz = syzygies(gens);
        c.check(syz.annihilates(gens));
        c.check(syz.cols() == static_cast<int>(gens.size()) - 1);
        int twist_sum = std::accumulate(syz.column_twists.begin(), syz.column_twists.end(), 0);
        int degree_sum = 0;
        for (const auto& g : gens) degree_sum += *g.homogeneous_degree();
        c.check(twist_sum == degree_sum);
    }
    double seconds = c.finish_and_report();
    CHECK(c.ok());
    (void)seconds;
}

TEST_CASE("criterion 8: decision consistency properties") {
    Criterion c(8, "no exclusion above the inclusion bound; verdicts invariant under shifts");
    FieldDesc f7 = FieldDesc::prime_field(7);
    DecisionContext context = fermat_context(f7);
    const IdealData& ideal = context.ideal();
    int top_two = 4 + 2;
    test::Rng rng(31415);
    for (int m = 2; m <= 8; ++m) {
        for (int i = 0; i < 8; ++i) {
            Polynomial f0 =
                ideal.ring()->reduce(test::random_homogeneous(rng, f7, Ambient::xyz, m, false));
            if (f0.is_zero()) continue;
            Decision base = decide(context, f0);
            if (m >= top_two) c.check(base.verdict != Verdict::not_in_tight_closure);

            Scalar lambda = test::random_scalar(rng, f7, true);
            Polynomial shift = Polynomial::zero(f7, Ambient::xyz);
            for (const Polynomial& g : ideal.generators()) {
                int cof = m - *g.homogeneous_degree();
                if (cof < 0) continue;
                shift += g * test::random_homogeneous(rng, f7, Ambient::xyz, cof, false);
            }
            Polynomial moved = ideal.ring()->reduce(f0.scaled(lambda) + shift);
            if (moved.is_zero()) continue;
            Decision shifted = decide(context, moved);
            if (base.verdict == Verdict::in_ideal || shifted.verdict == Verdict::in_ideal) {
                c.check(base.verdict == Verdict::in_ideal &&
                        shifted.verdict == Verdict::in_ideal);
            } else {
                c.check(shifted.verdict == base.verdict);
            }
        }
    }
    double seconds = c.finish_and_report();
    CHECK(c.ok());
    (void)seconds;
}
