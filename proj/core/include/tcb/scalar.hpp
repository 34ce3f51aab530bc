#ifndef TCB_SCALAR_HPP
#define TCB_SCALAR_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "tcb/errors.hpp"

namespace tcb {

/// Arbitrary-precision rational; always kept in lowest terms with a
/// positive denominator (gmp canonical form).
using Rational = mpq_class;

std::string rational_to_string(const Rational& q);

/// Deterministic 64-bit primality test (Miller-Rabin with a fixed base set).
bool is_prime_u64(std::uint64_t n);

/// Identifies a coefficient field: the rationals or a prime field F_p.
class FieldDesc {
  public:
    static FieldDesc rationals() { return FieldDesc(0); }

    /// Throws invalid_field unless p is prime.
    static FieldDesc prime_field(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    std::string name() const;

    friend bool operator==(const FieldDesc& a, const FieldDesc& b) { return a.p_ == b.p_; }
    friend bool operator!=(const FieldDesc& a, const FieldDesc& b) { return a.p_ != b.p_; }

  private:
    explicit FieldDesc(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

/// An element of a coefficient field, tagged with the field it belongs to.
/// Rationals are reduced eagerly, prime-field residues are stored in [0, p).
class Scalar {
  public:
    static Scalar zero(const FieldDesc& field) { return of_int(field, 0); }
    static Scalar one(const FieldDesc& field) { return of_int(field, 1); }
    static Scalar of_int(const FieldDesc& field, long n);

    /// num/den over the rationals, the residue of the quotient over F_p.
    /// Throws invalid_field for a zero denominator (or a denominator
    /// divisible by p in the prime-field case).
    static Scalar of_fraction(const FieldDesc& field, const Rational& value);

    const FieldDesc& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;  // throws error on zero

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical text: "5", "-3/4" over the rationals, the residue over F_p.
    std::string to_string() const;

    /// The rational value; only valid over the rationals.
    const Rational& rational() const;
    /// The residue in [0, p); only valid over a prime field.
    std::uint64_t residue() const;

  private:
    Scalar(FieldDesc field, std::variant<Rational, std::uint64_t> value)
        : field_(field), value_(std::move(value)) {}

    void require_same_field(const Scalar& other) const;

    FieldDesc field_;
    std::variant<Rational, std::uint64_t> value_;
};

}  // namespace tcb

#endif
