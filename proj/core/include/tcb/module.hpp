#ifndef TCB_MODULE_HPP
#define TCB_MODULE_HPP

#include <memory>
#include <optional>
#include <vector>

#include "tcb/polynomial.hpp"

namespace tcb {

/// Shape of a graded free module F = ⊕_i A(-d_i): the ambient ring, the
/// coefficient field and the generator twists d_i. An element of degree t
/// has entry i homogeneous of degree t - d_i (or zero).
struct FreeModule {
    FieldDesc field;
    Ambient ambient;
    std::vector<int> twists;

    int rank() const { return static_cast<int>(twists.size()); }

    friend bool operator==(const FreeModule& a, const FreeModule& b) {
        return a.field == b.field && a.ambient == b.ambient && a.twists == b.twists;
    }
};

using FreeModulePtr = std::shared_ptr<const FreeModule>;

inline FreeModulePtr make_free_module(FieldDesc field, Ambient ambient, std::vector<int> twists) {
    return std::make_shared<const FreeModule>(FreeModule{field, ambient, std::move(twists)});
}

/// A ring monomial sitting in one component of a free module.
struct ModuleMonomial {
    Monomial mono;
    int position = 0;

    friend bool operator==(const ModuleMonomial& a, const ModuleMonomial& b) {
        return a.position == b.position && a.mono == b.mono;
    }
};

/// An element of a graded free module.
class ModuleVector {
  public:
    explicit ModuleVector(FreeModulePtr shape);

    static ModuleVector unit(FreeModulePtr shape, int position);
    /// Wraps a ring element as a rank-one module vector with twist 0.
    static ModuleVector from_polynomial(const Polynomial& p);

    const FreeModulePtr& shape() const { return shape_; }
    int rank() const { return shape_->rank(); }
    const Polynomial& entry(int i) const { return entries_[static_cast<std::size_t>(i)]; }
    Polynomial& entry(int i) { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<Polynomial>& entries() const { return entries_; }

    bool is_zero() const;

    /// Degree t such that entry i is homogeneous of degree t - d_i or zero;
    /// nullopt for the zero vector or an inhomogeneous one.
    std::optional<int> degree() const;
    bool is_homogeneous() const;

    ModuleVector operator-() const;
    ModuleVector& operator+=(const ModuleVector& rhs);
    ModuleVector& operator-=(const ModuleVector& rhs);
    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }

    ModuleVector scaled(const Scalar& c) const;
    ModuleVector times_term(const Monomial& m, const Scalar& c) const;
    ModuleVector times_polynomial(const Polynomial& p) const;

    friend bool operator==(const ModuleVector& a, const ModuleVector& b);
    friend bool operator!=(const ModuleVector& a, const ModuleVector& b) { return !(a == b); }

    std::string to_string() const;

  private:
    void require_same_shape(const ModuleVector& rhs) const;

    FreeModulePtr shape_;
    std::vector<Polynomial> entries_;
};

/// Total order on module monomials, compatible with multiplication by ring
/// monomials. Either the term-over-position extension of grevlex (ties in
/// the monomial broken by position, earlier components larger), or the
/// Schreyer order induced by the leading terms of a generating set.
class MonomialOrder {
  public:
    enum class Kind { grevlex_top, schreyer };

    static MonomialOrder grevlex_top_order() { return MonomialOrder(Kind::grevlex_top, {}); }

    /// Schreyer order induced by generators g_k with the given leading
    /// module monomials: e_k * m < e_l * m' iff lt(g_k)*m < lt(g_l)*m'
    /// under grevlex-TOP, ties broken by position (smaller k larger).
    static MonomialOrder schreyer_order(std::vector<ModuleMonomial> images) {
        return MonomialOrder(Kind::schreyer, std::move(images));
    }

    Kind kind() const { return kind_; }

    bool less(const ModuleMonomial& a, const ModuleMonomial& b) const;

  private:
    MonomialOrder(Kind kind, std::vector<ModuleMonomial> images)
        : kind_(kind), images_(std::move(images)) {}

    Kind kind_;
    std::vector<ModuleMonomial> images_;
};

/// Leading term data of a module vector under an order.
struct ModuleTerm {
    ModuleMonomial mono;
    Scalar coefficient;
};

/// Leading module term of a nonzero vector under the given order.
ModuleTerm leading_term(const ModuleVector& v, const MonomialOrder& order);

}  // namespace tcb

#endif
