#ifndef TCB_SYZYGY_HPP
#define TCB_SYZYGY_HPP

#include <vector>

#include "tcb/groebner.hpp"

namespace tcb {

struct SyzygyOptions {
    /// Minimalize to a free basis (two-variable (x,y)-primary case). When
    /// set, the result has exactly n-1 columns or not_primary is thrown.
    bool minimalize = true;
    BuchbergerOptions gb;
};

/// Generators of the relation module of (f_1, ..., f_n), as columns of an
/// n x c matrix over the coefficient ring. Column j is homogeneous of degree
/// b_j: entry (i, j) has degree b_j - d_i or is zero, and every column
/// annihilates the generator row.
struct SyzygyMatrix {
    /// Shape of the ambient free module ⊕_i A(-d_i); twists are the d_i.
    FreeModulePtr row_shape;
    std::vector<ModuleVector> columns;
    std::vector<int> column_twists;  // the b_j, ascending
    /// True when the columns were minimalized to a free basis.
    bool minimal_free = false;

    int rows() const { return row_shape->rank(); }
    int cols() const { return static_cast<int>(columns.size()); }

    /// Exact check that every column annihilates the generators.
    bool annihilates(const std::vector<Polynomial>& gens) const;
};

/// Relation module of homogeneous nonzero generators, computed from the
/// transformation data of a Buchberger run (the pair reductions of the
/// reduced basis pulled back through the transformation matrix) and then
/// minimalized when requested.
SyzygyMatrix syzygies(const std::vector<Polynomial>& gens, const SyzygyOptions& options = {});

/// Expresses relations in a free syzygy basis. The column basis is cached
/// as a module Groebner basis, so repeated coordinate queries are cheap.
class CoordinateSolver {
  public:
    explicit CoordinateSolver(SyzygyMatrix basis, const BuchbergerOptions& options = {});

    const SyzygyMatrix& basis() const { return basis_; }

    /// Unique u with r = sum_j u_j * column_j. Throws not_a_relation when r
    /// is outside the column span, basis_not_free when the basis was not
    /// certified free.
    std::vector<Polynomial> coordinates(const ModuleVector& r) const;

  private:
    SyzygyMatrix basis_;
    GroebnerBasis gb_;
};

/// One-shot convenience wrapper around CoordinateSolver.
std::vector<Polynomial> module_coordinates(const ModuleVector& r, const SyzygyMatrix& basis);

}  // namespace tcb

#endif
