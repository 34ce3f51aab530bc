#ifndef TCB_POLYNOMIAL_HPP
#define TCB_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcb/monomial.hpp"
#include "tcb/scalar.hpp"

namespace tcb {

/// Exact multivariate polynomial: a finite map from monomials to nonzero
/// field elements, stored in descending grevlex order so printing and
/// leading-term access are deterministic.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Scalar, GrevlexDescending>;

    Polynomial(FieldDesc field, Ambient ambient) : field_(field), ambient_(ambient) {}

    static Polynomial zero(const FieldDesc& field, Ambient ambient) {
        return Polynomial(field, ambient);
    }
    static Polynomial constant(const FieldDesc& field, Ambient ambient, const Scalar& c);
    static Polynomial term(const FieldDesc& field, Ambient ambient, const Monomial& m,
                           const Scalar& c);
    static Polynomial variable(const FieldDesc& field, Ambient ambient, int index,
                               std::int32_t power = 1);

    const FieldDesc& field() const { return field_; }
    Ambient ambient() const { return ambient_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Max total degree of the support; nullopt for the zero polynomial.
    std::optional<int> total_degree() const;

    /// The common degree when every term has the same total degree;
    /// nullopt for the zero polynomial or an inhomogeneous one.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }

    const Monomial& leading_monomial() const;  // grevlex; requires nonzero
    const Scalar& leading_coefficient() const;

    Scalar coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);  // accumulates, drops zeros

    int max_exponent(int var_index) const;
    bool involves(int var_index) const { return max_exponent(var_index) > 0; }

    /// The same polynomial viewed in K[x,y]; requires z-free support.
    Polynomial restricted_to_xy() const;
    /// The same polynomial viewed in K[x,y,z].
    Polynomial promoted_to_xyz() const;

    /// Substitute x <- x + a*z, y <- y + b*z (a graded automorphism of K[x,y,z]).
    Polynomial substituted_xy_by_z(const Scalar& a, const Scalar& b) const;

    /// Extract the coefficient of z^c as a polynomial in K[x,y].
    Polynomial z_layer(int c) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(const Scalar& c) const;
    Polynomial times_term(const Monomial& m, const Scalar& c) const;
    Polynomial times_monomial(const Monomial& m) const { return times_term(m, Scalar::one(field_)); }

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Canonical text form: terms in descending grevlex, explicit '*' and '^',
    /// e.g. "x^3 + y^3 + z^3" or "2*x*y - 1/2*z^2". Parsing this text yields
    /// the same polynomial back.
    std::string to_string() const;

  private:
    void require_compatible(const Polynomial& rhs) const;

    FieldDesc field_;
    Ambient ambient_;
    TermMap terms_;
};

/// Parse polynomial text over the given field. The grammar accepts +, -, *,
/// ^ with nonnegative integer exponents, integer or integer/integer
/// coefficients, parentheses, and juxtaposition ("2xy^2" = "2*x*y^2").
/// Throws parse_error with the offending position; using z under the
/// two-variable ambient is an unknown-variable error.
Polynomial parse_polynomial(const std::string& text, const FieldDesc& field,
                            Ambient ambient = Ambient::xyz);

}  // namespace tcb

#endif
