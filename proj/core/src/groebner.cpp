#include "tcb/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace tcb {

namespace {

int module_monomial_degree(const FreeModule& shape, const ModuleMonomial& m) {
    return m.mono.degree() + shape.twists[static_cast<std::size_t>(m.position)];
}

struct WorkingElement {
    ModuleVector value;
    std::vector<Polynomial> row;  // expression in the input generators
    ModuleTerm lead;
};

// v -> (remainder, quotients over basis) with full tail reduction.
Division divide_impl(const ModuleVector& v, const std::vector<const ModuleVector*>& divisors,
                     const std::vector<ModuleTerm>& leads, const MonomialOrder& order) {
    const FreeModulePtr& shape = v.shape();
    Division out{ModuleVector(shape), {}};
    out.quotients.reserve(divisors.size());
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        out.quotients.emplace_back(Polynomial::zero(shape->field, shape->ambient));
    }
    ModuleVector p = v;
    while (!p.is_zero()) {
        ModuleTerm t = leading_term(p, order);
        bool reduced = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            const ModuleTerm& lk = leads[k];
            if (lk.mono.position != t.mono.position || !lk.mono.mono.divides(t.mono.mono)) continue;
            Monomial factor = lk.mono.mono.quotient_of(t.mono.mono);
            Scalar coeff = t.coefficient / lk.coefficient;
            p -= divisors[k]->times_term(factor, coeff);
            out.quotients[k].add_term(factor, coeff);
            reduced = true;
            break;
        }
        if (!reduced) {
            out.remainder.entry(t.mono.position).add_term(t.mono.mono, t.coefficient);
            p.entry(t.mono.position).add_term(t.mono.mono, -t.coefficient);
        }
    }
    return out;
}

Division divide_working(const ModuleVector& v, const std::vector<WorkingElement>& basis,
                        const MonomialOrder& order) {
    std::vector<const ModuleVector*> divisors;
    std::vector<ModuleTerm> leads;
    divisors.reserve(basis.size());
    leads.reserve(basis.size());
    for (const auto& b : basis) {
        divisors.push_back(&b.value);
        leads.push_back(b.lead);
    }
    return divide_impl(v, divisors, leads, order);
}

}  // namespace

Division divide(const ModuleVector& v, const std::vector<ModuleVector>& divisors,
                const MonomialOrder& order) {
    std::vector<const ModuleVector*> ptrs;
    std::vector<ModuleTerm> leads;
    ptrs.reserve(divisors.size());
    leads.reserve(divisors.size());
    for (const auto& d : divisors) {
        ptrs.push_back(&d);
        leads.push_back(leading_term(d, order));
    }
    return divide_impl(v, ptrs, leads, order);
}

Division normal_form(const ModuleVector& v, const GroebnerBasis& gb) {
    if (!(*v.shape() == *gb.shape)) throw shape_mismatch("vector does not match basis module");
    return divide(v, gb.elements, gb.order);
}

ModuleVector s_vector(const ModuleVector& a, const ModuleVector& b, const MonomialOrder& order) {
    ModuleTerm la = leading_term(a, order);
    ModuleTerm lb = leading_term(b, order);
    if (la.mono.position != lb.mono.position) {
        throw shape_mismatch("S-vector requires leading terms in the same component");
    }
    Monomial m = lcm(la.mono.mono, lb.mono.mono);
    ModuleVector left = a.times_term(la.mono.mono.quotient_of(m), la.coefficient.inverse());
    ModuleVector right = b.times_term(lb.mono.mono.quotient_of(m), lb.coefficient.inverse());
    return left - right;
}

GroebnerBasis buchberger(const std::vector<ModuleVector>& generators, MonomialOrder order,
                         const BuchbergerOptions& options) {
    if (generators.empty()) throw shape_mismatch("no generators");
    FreeModulePtr shape = generators.front().shape();
    const FieldDesc field = shape->field;
    std::size_t input_count = generators.size();
    for (const auto& g : generators) {
        if (!(*g.shape() == *shape)) throw shape_mismatch("generators live in different modules");
        if (!g.is_homogeneous()) throw shape_mismatch("generators must be homogeneous");
    }

    std::vector<WorkingElement> basis;
    // Pairs keyed by (S-pair degree, i, j) for the normal selection strategy.
    std::set<std::tuple<int, std::size_t, std::size_t>> pairs;

    auto add_element = [&](ModuleVector value, std::vector<Polynomial> row) {
        ModuleTerm lead = leading_term(value, order);
        Scalar inv = lead.coefficient.inverse();
        if (!lead.coefficient.is_one()) {
            value = value.scaled(inv);
            for (auto& r : row) r = r.scaled(inv);
            lead.coefficient = Scalar::one(field);
        }
        std::size_t index = basis.size();
        for (std::size_t k = 0; k < index; ++k) {
            const ModuleTerm& lk = basis[k].lead;
            if (lk.mono.position != lead.mono.position) continue;
            if (options.use_product_criterion && shape->rank() == 1 &&
                lk.mono.mono.coprime_with(lead.mono.mono)) {
                continue;
            }
            Monomial m = lcm(lk.mono.mono, lead.mono.mono);
            int degree = module_monomial_degree(*shape, ModuleMonomial{m, lead.mono.position});
            pairs.emplace(degree, k, index);
        }
        basis.push_back(WorkingElement{std::move(value), std::move(row), lead});
    };

    for (std::size_t i = 0; i < input_count; ++i) {
        if (generators[i].is_zero()) continue;
        std::vector<Polynomial> row;
        row.reserve(input_count);
        for (std::size_t j = 0; j < input_count; ++j) {
            row.push_back(j == i ? Polynomial::constant(field, shape->ambient, Scalar::one(field))
                                 : Polynomial::zero(field, shape->ambient));
        }
        add_element(generators[i], std::move(row));
    }

    std::size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > options.max_pairs) {
            throw resource_exhausted("S-pair limit of " + std::to_string(options.max_pairs) +
                                     " exceeded");
        }
        auto [degree, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());

        const WorkingElement& a = basis[i];
        const WorkingElement& b = basis[j];
        Monomial m = lcm(a.lead.mono.mono, b.lead.mono.mono);
        Monomial ua = a.lead.mono.mono.quotient_of(m);
        Monomial ub = b.lead.mono.mono.quotient_of(m);
        ModuleVector s = a.value.times_term(ua, Scalar::one(field)) -
                         b.value.times_term(ub, Scalar::one(field));
        if (s.is_zero()) continue;
        Division div = divide_working(s, basis, order);
        if (div.remainder.is_zero()) continue;

        std::vector<Polynomial> row;
        row.reserve(input_count);
        for (std::size_t c = 0; c < input_count; ++c) {
            Polynomial acc = a.row[c].times_monomial(ua) - b.row[c].times_monomial(ub);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (div.quotients[k].is_zero()) continue;
                acc -= div.quotients[k] * basis[k].row[c];
            }
            row.push_back(std::move(acc));
        }
        add_element(std::move(div.remainder), std::move(row));
    }

    // Minimalize: drop elements whose leading term is divisible by another's.
    std::vector<std::size_t> by_lead(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) by_lead[k] = k;
    std::sort(by_lead.begin(), by_lead.end(), [&](std::size_t a, std::size_t b) {
        if (basis[a].lead.mono == basis[b].lead.mono) return a < b;
        return order.less(basis[a].lead.mono, basis[b].lead.mono);
    });
    std::vector<WorkingElement> kept;
    for (std::size_t k : by_lead) {
        bool redundant = false;
        for (const auto& other : kept) {
            if (other.lead.mono.position == basis[k].lead.mono.position &&
                other.lead.mono.mono.divides(basis[k].lead.mono.mono)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(std::move(basis[k]));
    }

    // Tail-reduce until stable; leading terms are pairwise non-divisible, so
    // only tails change and the loop terminates with the reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < kept.size(); ++k) {
            std::vector<WorkingElement> others;
            others.reserve(kept.size() - 1);
            for (std::size_t l = 0; l < kept.size(); ++l) {
                if (l != k) others.push_back(kept[l]);
            }
            Division div = divide_working(kept[k].value, others, order);
            if (div.remainder == kept[k].value) continue;
            changed = true;
            std::vector<Polynomial> row = kept[k].row;
            std::size_t oi = 0;
            for (std::size_t l = 0; l < kept.size(); ++l) {
                if (l == k) continue;
                if (!div.quotients[oi].is_zero()) {
                    for (std::size_t c = 0; c < input_count; ++c) {
                        row[c] -= div.quotients[oi] * kept[l].row[c];
                    }
                }
                ++oi;
            }
            kept[k].value = div.remainder;
            kept[k].row = std::move(row);
            kept[k].lead = leading_term(kept[k].value, order);
        }
    }

    std::sort(kept.begin(), kept.end(), [&](const WorkingElement& a, const WorkingElement& b) {
        int da = module_monomial_degree(*shape, a.lead.mono);
        int db = module_monomial_degree(*shape, b.lead.mono);
        if (da != db) return da < db;
        return order.less(a.lead.mono, b.lead.mono);
    });

    GroebnerBasis out;
    out.shape = shape;
    out.order = order;
    out.input = generators;
    out.elements.reserve(kept.size());
    out.transform.reserve(kept.size());
    for (auto& e : kept) {
        out.elements.push_back(std::move(e.value));
        out.transform.push_back(std::move(e.row));
    }
    return out;
}

bool has_pure_power_leading_term(const GroebnerBasis& gb, int var) {
    for (const auto& g : gb.elements) {
        Monomial m = leading_term(g, gb.order).mono.mono;
        bool pure = true;
        for (int v = 0; v < 3; ++v) {
            if (v != var && m.e[static_cast<std::size_t>(v)] != 0) pure = false;
        }
        if (pure) return true;
    }
    return false;
}

Membership ideal_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                            const BuchbergerOptions& options) {
    if (gens.empty()) throw shape_mismatch("no generators");
    std::vector<ModuleVector> vectors;
    vectors.reserve(gens.size());
    for (const auto& g : gens) vectors.push_back(ModuleVector::from_polynomial(g));
    GroebnerBasis gb = buchberger(vectors, MonomialOrder::grevlex_top_order(), options);

    Division div = normal_form(ModuleVector::from_polynomial(f), gb);
    Membership out;
    out.member = div.remainder.is_zero();
    if (out.member) {
        out.witnesses.reserve(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Polynomial w = Polynomial::zero(f.field(), f.ambient());
            for (std::size_t k = 0; k < gb.size(); ++k) {
                if (div.quotients[k].is_zero() || gb.transform[k][i].is_zero()) continue;
                w += div.quotients[k] * gb.transform[k][i];
            }
            out.witnesses.push_back(std::move(w));
        }
    }
    return out;
}

}  // namespace tcb
