#include "tcb/syzygy.hpp"

#include <algorithm>
#include <numeric>

namespace tcb {

namespace {

ModuleVector normalized_column(ModuleVector column, const MonomialOrder& order) {
    ModuleTerm lead = leading_term(column, order);
    if (!lead.coefficient.is_one()) column = column.scaled(lead.coefficient.inverse());
    return column;
}

}  // namespace

bool SyzygyMatrix::annihilates(const std::vector<Polynomial>& gens) const {
    if (static_cast<int>(gens.size()) != rows()) return false;
    for (const auto& column : columns) {
        Polynomial acc = Polynomial::zero(row_shape->field, row_shape->ambient);
        for (int i = 0; i < rows(); ++i) acc += column.entry(i) * gens[static_cast<std::size_t>(i)];
        if (!acc.is_zero()) return false;
    }
    return true;
}

SyzygyMatrix syzygies(const std::vector<Polynomial>& gens, const SyzygyOptions& options) {
    if (gens.size() < 2) throw shape_mismatch("need at least two generators");
    const FieldDesc field = gens.front().field();
    const Ambient ambient = gens.front().ambient();
    std::vector<int> degrees;
    degrees.reserve(gens.size());
    for (const auto& g : gens) {
        auto d = g.homogeneous_degree();
        if (!d) throw shape_mismatch("generators must be homogeneous and nonzero");
        degrees.push_back(*d);
    }

    MonomialOrder order = MonomialOrder::grevlex_top_order();
    std::vector<ModuleVector> vectors;
    vectors.reserve(gens.size());
    for (const auto& g : gens) vectors.push_back(ModuleVector::from_polynomial(g));
    BuchbergerOptions gb_options = options.gb;
    // Pair reductions double as syzygy sources, so no pair may be skipped.
    gb_options.use_product_criterion = false;
    GroebnerBasis gb = buchberger(vectors, order, gb_options);

    if (options.minimalize) {
        if (ambient != Ambient::xy) {
            throw not_primary("free-basis minimalization requires generators in K[x,y]");
        }
        if (!has_pure_power_leading_term(gb, 0) || !has_pure_power_leading_term(gb, 1)) {
            throw not_primary("generators are not (x,y)-primary");
        }
    }

    FreeModulePtr syz_shape = make_free_module(field, ambient, degrees);
    const std::size_t n = gens.size();
    const std::size_t t = gb.size();
    std::vector<ModuleVector> candidates;

    auto push_candidate = [&](ModuleVector v) {
        if (v.is_zero()) return;
        v = normalized_column(std::move(v), order);
        if (std::find(candidates.begin(), candidates.end(), v) == candidates.end()) {
            candidates.push_back(std::move(v));
        }
    };

    // Pair syzygies of the reduced basis, pulled back through the
    // transformation matrix.
    for (std::size_t k = 0; k < t; ++k) {
        for (std::size_t l = k + 1; l < t; ++l) {
            Monomial mk = gb.elements[k].entry(0).leading_monomial();
            Monomial ml = gb.elements[l].entry(0).leading_monomial();
            Monomial m = lcm(mk, ml);
            Monomial uk = mk.quotient_of(m);
            Monomial ul = ml.quotient_of(m);
            ModuleVector s = gb.elements[k].times_term(uk, Scalar::one(field)) -
                             gb.elements[l].times_term(ul, Scalar::one(field));
            Division div = s.is_zero() ? Division{ModuleVector(gb.shape), {}} : normal_form(s, gb);
            if (!div.remainder.is_zero()) {
                throw error("internal error: S-pair of a Groebner basis did not reduce to zero");
            }
            // sigma = uk e_k - ul e_l - sum_s q_s e_s, composed with transform.
            ModuleVector relation(syz_shape);
            for (std::size_t i = 0; i < n; ++i) {
                Polynomial acc = gb.transform[k][i].times_monomial(uk) -
                                 gb.transform[l][i].times_monomial(ul);
                for (std::size_t s2 = 0; s2 < t && !div.quotients.empty(); ++s2) {
                    if (div.quotients[s2].is_zero()) continue;
                    acc -= div.quotients[s2] * gb.transform[s2][i];
                }
                relation.entry(static_cast<int>(i)) = std::move(acc);
            }
            push_candidate(std::move(relation));
        }
    }

    // Unit syzygies e_i - (division of input i by the basis) * transform.
    for (std::size_t i = 0; i < n; ++i) {
        Division div = normal_form(vectors[i], gb);
        if (!div.remainder.is_zero()) {
            throw error("internal error: generator did not reduce to zero against its own basis");
        }
        ModuleVector relation(syz_shape);
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial acc = j == i ? Polynomial::constant(field, ambient, Scalar::one(field))
                                    : Polynomial::zero(field, ambient);
            for (std::size_t k = 0; k < t; ++k) {
                if (div.quotients[k].is_zero() || gb.transform[k][j].is_zero()) continue;
                acc -= div.quotients[k] * gb.transform[k][j];
            }
            relation.entry(static_cast<int>(j)) = std::move(acc);
        }
        push_candidate(std::move(relation));
    }

    if (options.minimalize) {
        // Drop columns lying in the span of the others until none is
        // redundant; for graded modules the surviving set is minimal.
        bool removed = true;
        while (removed && candidates.size() > 1) {
            removed = false;
            // Try highest degree first so low-degree columns survive.
            std::vector<std::size_t> order_idx(candidates.size());
            std::iota(order_idx.begin(), order_idx.end(), 0);
            std::stable_sort(order_idx.begin(), order_idx.end(),
                             [&](std::size_t a, std::size_t b) {
                                 return candidates[a].degree().value_or(0) >
                                        candidates[b].degree().value_or(0);
                             });
            for (std::size_t idx : order_idx) {
                std::vector<ModuleVector> others;
                others.reserve(candidates.size() - 1);
                for (std::size_t j = 0; j < candidates.size(); ++j) {
                    if (j != idx) others.push_back(candidates[j]);
                }
                GroebnerBasis other_gb = buchberger(others, order, options.gb);
                if (normal_form(candidates[idx], other_gb).remainder.is_zero()) {
                    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(idx));
                    removed = true;
                    break;
                }
            }
        }
        if (candidates.size() != n - 1) {
            throw not_primary("relation module did not minimalize to n-1 free columns");
        }
    }

    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const ModuleVector& a, const ModuleVector& b) {
                         int da = a.degree().value_or(0);
                         int db = b.degree().value_or(0);
                         if (da != db) return da < db;
                         return order.less(leading_term(a, order).mono,
                                           leading_term(b, order).mono);
                     });

    SyzygyMatrix out;
    out.row_shape = syz_shape;
    out.columns = std::move(candidates);
    out.column_twists.reserve(out.columns.size());
    for (const auto& c : out.columns) out.column_twists.push_back(c.degree().value_or(0));
    out.minimal_free = options.minimalize;

    if (!out.annihilates(gens)) {
        throw error("internal error: computed syzygy does not annihilate the generators");
    }
    if (out.minimal_free) {
        int twist_sum = std::accumulate(out.column_twists.begin(), out.column_twists.end(), 0);
        int degree_sum = std::accumulate(degrees.begin(), degrees.end(), 0);
        if (twist_sum != degree_sum) {
            throw error("internal error: syzygy twists do not sum to the generator degrees");
        }
    }
    return out;
}

namespace {

const SyzygyMatrix& require_free(const SyzygyMatrix& basis) {
    if (!basis.minimal_free) {
        throw basis_not_free("coordinate solver requires a minimal free syzygy basis");
    }
    return basis;
}

}  // namespace

CoordinateSolver::CoordinateSolver(SyzygyMatrix basis, const BuchbergerOptions& options)
    : basis_(require_free(basis)),
      gb_(buchberger(basis_.columns, MonomialOrder::grevlex_top_order(), options)) {}

std::vector<Polynomial> CoordinateSolver::coordinates(const ModuleVector& r) const {
    if (!(*r.shape() == *basis_.row_shape)) {
        throw shape_mismatch("vector does not match the syzygy module");
    }
    const FieldDesc field = basis_.row_shape->field;
    const Ambient ambient = basis_.row_shape->ambient;
    std::vector<Polynomial> out(static_cast<std::size_t>(basis_.cols()),
                                Polynomial::zero(field, ambient));
    if (r.is_zero()) return out;
    Division div = normal_form(r, gb_);
    if (!div.remainder.is_zero()) {
        throw not_a_relation("vector is not a combination of the basis columns");
    }
    for (std::size_t k = 0; k < gb_.size(); ++k) {
        if (div.quotients[k].is_zero()) continue;
        for (std::size_t j = 0; j < out.size(); ++j) {
            if (gb_.transform[k][j].is_zero()) continue;
            out[j] += div.quotients[k] * gb_.transform[k][j];
        }
    }
    return out;
}

std::vector<Polynomial> module_coordinates(const ModuleVector& r, const SyzygyMatrix& basis) {
    return CoordinateSolver(basis).coordinates(r);
}

}  // namespace tcb
