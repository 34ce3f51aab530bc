#ifndef TCB_MONOMIAL_HPP
#define TCB_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <string>

#include "tcb/errors.hpp"

namespace tcb {

/// Which polynomial ring a value lives in: K[x,y] or K[x,y,z].
enum class Ambient : std::uint8_t { xy = 2, xyz = 3 };

inline int variable_count(Ambient a) { return static_cast<int>(a); }

inline const char* variable_name(int index) {
    static const char* names[3] = {"x", "y", "z"};
    return names[index];
}

/// A power product x^a y^b z^c with nonnegative exponents.
struct Monomial {
    std::array<std::int32_t, 3> e{0, 0, 0};

    static Monomial one() { return Monomial{}; }
    static Monomial variable(int index, std::int32_t power = 1) {
        Monomial m;
        m.e[static_cast<std::size_t>(index)] = power;
        return m;
    }

    int degree() const { return e[0] + e[1] + e[2]; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return Monomial{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
    }

    bool divides(const Monomial& other) const {
        return e[0] <= other.e[0] && e[1] <= other.e[1] && e[2] <= other.e[2];
    }

    /// Quotient of other by this; requires divisibility.
    Monomial quotient_of(const Monomial& other) const {
        return Monomial{{other.e[0] - e[0], other.e[1] - e[1], other.e[2] - e[2]}};
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        return Monomial{{a.e[0] > b.e[0] ? a.e[0] : b.e[0], a.e[1] > b.e[1] ? a.e[1] : b.e[1],
                         a.e[2] > b.e[2] ? a.e[2] : b.e[2]}};
    }

    bool coprime_with(const Monomial& b) const {
        return (e[0] == 0 || b.e[0] == 0) && (e[1] == 0 || b.e[1] == 0) &&
               (e[2] == 0 || b.e[2] == 0);
    }

    std::string to_string() const;
};

/// Graded reverse lexicographic order with x > y > z: first by total degree,
/// ties broken by the last variable in which the exponents differ (the
/// monomial with the larger late exponent is the smaller one).
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = 2; i >= 0; --i) {
        if (a.e[static_cast<std::size_t>(i)] != b.e[static_cast<std::size_t>(i)]) {
            return a.e[static_cast<std::size_t>(i)] > b.e[static_cast<std::size_t>(i)];
        }
    }
    return false;
}

/// Map comparator placing large monomials first.
struct GrevlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

inline std::string Monomial::to_string() const {
    if (degree() == 0) return "1";
    std::string out;
    for (int i = 0; i < 3; ++i) {
        std::int32_t p = e[static_cast<std::size_t>(i)];
        if (p == 0) continue;
        if (!out.empty()) out += "*";
        out += variable_name(i);
        if (p != 1) out += "^" + std::to_string(p);
    }
    return out;
}

}  // namespace tcb

#endif
