#include "tcb/scalar.hpp"

namespace tcb {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1UL % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1UL) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1UL;
    }
    return result;
}

// Inverse of a modulo the prime p, via the extended Euclidean algorithm.
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz_mod(const mpz_class& z, std::uint64_t p) {
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

}  // namespace

std::string rational_to_string(const Rational& q) { return q.get_str(); }

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t s : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL}) {
        if (n % s == 0) return n == s;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1UL) == 0) {
        d >>= 1UL;
        ++r;
    }
    // This base set decides 64-bit primality exactly.
    for (std::uint64_t a : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldDesc FieldDesc::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) {
        throw invalid_field("modulus " + std::to_string(p) + " is not prime");
    }
    return FieldDesc(p);
}

std::string FieldDesc::name() const {
    return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::of_int(const FieldDesc& field, long n) {
    if (field.is_rational()) return Scalar(field, Rational(n));
    std::uint64_t p = field.characteristic();
    std::int64_t r = static_cast<std::int64_t>(n) % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return Scalar(field, static_cast<std::uint64_t>(r));
}

Scalar Scalar::of_fraction(const FieldDesc& field, const Rational& value) {
    if (field.is_rational()) {
        Rational v = value;
        v.canonicalize();
        return Scalar(field, std::move(v));
    }
    std::uint64_t p = field.characteristic();
    std::uint64_t den = reduce_mpz_mod(value.get_den(), p);
    if (den == 0) {
        throw invalid_field("denominator of " + value.get_str() + " vanishes in " + field.name());
    }
    std::uint64_t num = reduce_mpz_mod(value.get_num(), p);
    return Scalar(field, mulmod_u64(num, invmod_u64(den, p), p));
}

bool Scalar::is_zero() const {
    if (field_.is_rational()) return sgn(std::get<Rational>(value_)) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_rational()) return std::get<Rational>(value_) == 1;
    return std::get<std::uint64_t>(value_) == 1;
}

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return Scalar(field_, Rational(-std::get<Rational>(value_)));
    std::uint64_t v = std::get<std::uint64_t>(value_);
    return Scalar(field_, v == 0 ? 0 : field_.characteristic() - v);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("division by zero in " + field_.name());
    if (field_.is_rational()) return Scalar(field_, Rational(1 / std::get<Rational>(value_)));
    return Scalar(field_, invmod_u64(std::get<std::uint64_t>(value_), field_.characteristic()));
}

void Scalar::require_same_field(const Scalar& other) const {
    if (field_ != other.field_) {
        throw field_mismatch("mixed fields: " + field_.name() + " and " + other.field_.name());
    }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<Rational>(value_) += std::get<Rational>(rhs.value_);
    } else {
        std::uint64_t p = field_.characteristic();
        std::uint64_t v = std::get<std::uint64_t>(value_) + std::get<std::uint64_t>(rhs.value_);
        if (v >= p) v -= p;
        value_ = v;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<Rational>(value_) -= std::get<Rational>(rhs.value_);
    } else {
        std::uint64_t p = field_.characteristic();
        std::uint64_t a = std::get<std::uint64_t>(value_);
        std::uint64_t b = std::get<std::uint64_t>(rhs.value_);
        value_ = a >= b ? a - b : a + p - b;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<Rational>(value_) *= std::get<Rational>(rhs.value_);
    } else {
        value_ = mulmod_u64(std::get<std::uint64_t>(value_), std::get<std::uint64_t>(rhs.value_),
                            field_.characteristic());
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    return a.value_ == b.value_;
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) return std::get<Rational>(value_).get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
}

const Rational& Scalar::rational() const {
    if (!field_.is_rational()) throw error("not a rational scalar");
    return std::get<Rational>(value_);
}

std::uint64_t Scalar::residue() const {
    if (field_.is_rational()) throw error("not a prime-field scalar");
    return std::get<std::uint64_t>(value_);
}

}  // namespace tcb
