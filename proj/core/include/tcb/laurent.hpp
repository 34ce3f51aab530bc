#ifndef TCB_LAURENT_HPP
#define TCB_LAURENT_HPP

#include <map>
#include <optional>
#include <string>

#include "tcb/polynomial.hpp"

namespace tcb {

/// x^a y^b z^c with a, b of either sign; carrier for sections of the ring
/// localized at x*y, in z-reduced form (0 <= c < delta). The ring degree of
/// a term is a + b + c.
struct LaurentMonomial {
    int a = 0;
    int b = 0;
    int c = 0;

    int degree() const { return a + b + c; }

    friend bool operator==(const LaurentMonomial& l, const LaurentMonomial& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }

    std::string to_string() const;
};

struct LaurentDescending {
    bool operator()(const LaurentMonomial& l, const LaurentMonomial& r) const {
        if (l.degree() != r.degree()) return l.degree() > r.degree();
        if (l.a != r.a) return l.a > r.a;
        if (l.b != r.b) return l.b > r.b;
        return l.c > r.c;
    }
};

/// Element of the localization R_{xy} in z-reduced form: a finite map from
/// Laurent monomials to nonzero coefficients.
class LaurentElement {
  public:
    using TermMap = std::map<LaurentMonomial, Scalar, LaurentDescending>;

    explicit LaurentElement(FieldDesc field) : field_(field) {}

    /// View a z-reduced polynomial as a Laurent element.
    static LaurentElement from_polynomial(const Polynomial& p);

    const FieldDesc& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const LaurentMonomial& m, const Scalar& c);

    /// Multiply by x^da * y^db (da, db may be negative).
    LaurentElement shifted(int da, int db) const;

    LaurentElement operator-() const;
    LaurentElement& operator+=(const LaurentElement& rhs);
    LaurentElement& operator-=(const LaurentElement& rhs);
    friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
    friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
    LaurentElement scaled(const Scalar& c) const;

    /// Common ring degree of all terms; nullopt when zero or inhomogeneous.
    std::optional<int> homogeneous_degree() const;
    int max_z_exponent() const;

    friend bool operator==(const LaurentElement& a, const LaurentElement& b) {
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentElement& a, const LaurentElement& b) { return !(a == b); }

    std::string to_string() const;

  private:
    FieldDesc field_;
    TermMap terms_;
};

/// Element of H^1(Y, O_Y(k)) in the monomial basis
/// { x^a y^b z^c : a, b <= -1, 0 <= c <= delta-1, a+b+c = k }.
/// The zero class is the empty map.
class CechClass {
  public:
    CechClass(FieldDesc field, int degree) : field_(field), degree_(degree) {}

    int degree() const { return degree_; }
    const FieldDesc& field() const { return field_; }
    const LaurentElement::TermMap& coefficients() const { return coefficients_; }
    bool is_zero() const { return coefficients_.empty(); }

    void add_term(const LaurentMonomial& m, const Scalar& c);

    CechClass& operator+=(const CechClass& rhs);
    friend CechClass operator+(CechClass a, const CechClass& b) { return a += b; }
    CechClass scaled(const Scalar& c) const;

    friend bool operator==(const CechClass& a, const CechClass& b) {
        return a.field_ == b.field_ && a.degree_ == b.degree_ &&
               a.coefficients_ == b.coefficients_;
    }
    friend bool operator!=(const CechClass& a, const CechClass& b) { return !(a == b); }

    std::string to_string() const;

  private:
    FieldDesc field_;
    int degree_;
    LaurentElement::TermMap coefficients_;
};

/// True iff the coefficient map is empty.
bool class_is_zero(const CechClass& c);

}  // namespace tcb

#endif
