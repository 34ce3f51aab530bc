// Microbenchmarks for the exact-arithmetic and rewriting kernels.

#include <benchmark/benchmark.h>

#include "tcb/decision.hpp"

using namespace tcb;

namespace {

const FieldDesc kQ = FieldDesc::rationals();

Polynomial parse(const std::string& text, const FieldDesc& field = kQ,
                 Ambient ambient = Ambient::xyz) {
    return parse_polynomial(text, field, ambient);
}

std::vector<ModuleVector> wrap(const std::vector<Polynomial>& polys) {
    std::vector<ModuleVector> out;
    for (const auto& p : polys) out.push_back(ModuleVector::from_polynomial(p));
    return out;
}

void BM_buchberger_monomial_ideal(benchmark::State& state) {
    auto gens = wrap({parse("x^4", kQ, Ambient::xy), parse("x*y", kQ, Ambient::xy),
                      parse("y^2", kQ, Ambient::xy)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(buchberger(gens, MonomialOrder::grevlex_top_order()));
    }
}
BENCHMARK(BM_buchberger_monomial_ideal);

void BM_buchberger_extended_fermat(benchmark::State& state) {
    auto gens = wrap({parse("x^4"), parse("x*y"), parse("y^2"), parse("x^3+y^3+z^3")});
    for (auto _ : state) {
        benchmark::DoNotOptimize(buchberger(gens, MonomialOrder::grevlex_top_order()));
    }
}
BENCHMARK(BM_buchberger_extended_fermat);

void BM_syzygies_worked_ideal(benchmark::State& state) {
    std::vector<Polynomial> gens = {parse("x^4", kQ, Ambient::xy), parse("x*y", kQ, Ambient::xy),
                                    parse("y^2", kQ, Ambient::xy)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(syzygies(gens));
    }
}
BENCHMARK(BM_syzygies_worked_ideal);

void BM_forcing_class(benchmark::State& state) {
    FieldDesc f7 = FieldDesc::prime_field(7);
    RingPtr ring = HypersurfaceRing::make(parse("x^3+y^3+z^3", f7));
    IdealData ideal(ring, {parse("x^4", f7), parse("x*y", f7), parse("y^2", f7)});
    SplittingData split = splitting_data(ideal);
    Polynomial f0 = parse("y*z^2", f7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(forcing_class(ideal, split, f0));
    }
}
BENCHMARK(BM_forcing_class);

void BM_decide(benchmark::State& state) {
    RingPtr ring = HypersurfaceRing::make(parse("x^3+y^3+z^3"));
    DecisionContext context(IdealData(ring, {parse("x^4"), parse("x*y"), parse("y^2")}));
    Polynomial f0 = parse("y*z^2");
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide(context, f0));
    }
}
BENCHMARK(BM_decide);

void BM_degree_sweep(benchmark::State& state) {
    FieldDesc f7 = FieldDesc::prime_field(7);
    RingPtr ring = HypersurfaceRing::make(parse("x^3+y^3+z^3", f7));
    DecisionContext context(IdealData(ring, {parse("x^4", f7), parse("x*y", f7), parse("y^2", f7)}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(degree_sweep(context, 3, 5));
    }
}
BENCHMARK(BM_degree_sweep);

void BM_ring_reduce(benchmark::State& state) {
    RingPtr ring = HypersurfaceRing::make(parse("x^5+y^5+z^5"));
    Polynomial p = parse("(x^2+y*z+z^2)^4");
    Polynomial q = parse("(x+y+z)^5");
    Polynomial product = p * q;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ring->reduce(product));
    }
}
BENCHMARK(BM_ring_reduce);

}  // namespace

BENCHMARK_MAIN();
