#ifndef TCB_GROEBNER_HPP
#define TCB_GROEBNER_HPP

#include <cstddef>
#include <vector>

#include "tcb/module.hpp"

namespace tcb {

struct BuchbergerOptions {
    /// Hard cap on the number of S-pairs processed; exceeding it raises
    /// resource_exhausted.
    std::size_t max_pairs = 200000;
    /// Skip S-pairs with coprime leading monomials (ring case only; the
    /// criterion is not valid for module components).
    bool use_product_criterion = true;
};

/// Reduced Groebner basis with the transformation matrix expressing every
/// basis element in the input generators. Elements are monic and sorted by
/// (degree, leading term), so results are reproducible bit for bit.
struct GroebnerBasis {
    FreeModulePtr shape;
    MonomialOrder order = MonomialOrder::grevlex_top_order();
    std::vector<ModuleVector> elements;
    /// elements[k] == sum_i transform[k][i] * input[i]
    std::vector<std::vector<Polynomial>> transform;
    std::vector<ModuleVector> input;

    std::size_t size() const { return elements.size(); }
};

/// Result of division: v == sum_k quotients[k] * divisor_k + remainder,
/// with no remainder term divisible by any divisor leading term.
struct Division {
    ModuleVector remainder;
    std::vector<Polynomial> quotients;
};

/// Buchberger's algorithm with the normal (lowest degree first) pair
/// strategy. Generators must be homogeneous elements of a common free module.
GroebnerBasis buchberger(const std::vector<ModuleVector>& generators, MonomialOrder order,
                         const BuchbergerOptions& options = {});

/// Deterministic full division of v by an ordered list of divisors.
Division divide(const ModuleVector& v, const std::vector<ModuleVector>& divisors,
                const MonomialOrder& order);

/// Division by the basis elements of gb.
Division normal_form(const ModuleVector& v, const GroebnerBasis& gb);

struct Membership {
    bool member = false;
    /// When member: f == sum_i witnesses[i] * gens[i].
    std::vector<Polynomial> witnesses;
};

/// Ideal membership via normal form, with witnesses pulled back through the
/// transformation matrix.
Membership ideal_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                            const BuchbergerOptions& options = {});

/// Convenience: the S-vector of two basis elements with leading terms in the
/// same component (throws shape_mismatch otherwise). Used by the property
/// tests that re-check the Groebner condition.
ModuleVector s_vector(const ModuleVector& a, const ModuleVector& b, const MonomialOrder& order);

/// True when some leading term of the rank-one basis is a pure power of the
/// given variable (a constant leading term counts for every variable). For a
/// homogeneous ideal this witnesses that a power of the variable lies in it.
bool has_pure_power_leading_term(const GroebnerBasis& gb, int var);

}  // namespace tcb

#endif
