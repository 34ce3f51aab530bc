#include "tcb/polynomial.hpp"

namespace tcb {

Polynomial Polynomial::constant(const FieldDesc& field, Ambient ambient, const Scalar& c) {
    Polynomial p(field, ambient);
    p.add_term(Monomial::one(), c);
    return p;
}

Polynomial Polynomial::term(const FieldDesc& field, Ambient ambient, const Monomial& m,
                            const Scalar& c) {
    Polynomial p(field, ambient);
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::variable(const FieldDesc& field, Ambient ambient, int index,
                                std::int32_t power) {
    if (index >= variable_count(ambient)) {
        throw shape_mismatch("variable index out of range for ambient");
    }
    return term(field, ambient, Monomial::variable(index, power), Scalar::one(field));
}

std::optional<int> Polynomial::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    // Leading term under grevlex has maximal total degree.
    return terms_.begin()->first.degree();
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) {
        if (m.degree() != d) return std::nullopt;
    }
    return d;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw error("leading term of the zero polynomial");
    return terms_.begin()->first;
}

const Scalar& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw error("leading term of the zero polynomial");
    return terms_.begin()->second;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Polynomial::max_exponent(int var_index) const {
    int best = 0;
    for (const auto& [m, c] : terms_) {
        int e = m.e[static_cast<std::size_t>(var_index)];
        if (e > best) best = e;
    }
    return best;
}

Polynomial Polynomial::restricted_to_xy() const {
    if (involves(2)) throw shape_mismatch("polynomial involves z, cannot restrict to K[x,y]");
    Polynomial out(field_, Ambient::xy);
    out.terms_ = terms_;
    return out;
}

Polynomial Polynomial::promoted_to_xyz() const {
    Polynomial out(field_, Ambient::xyz);
    out.terms_ = terms_;
    return out;
}

Polynomial Polynomial::substituted_xy_by_z(const Scalar& a, const Scalar& b) const {
    Polynomial x_image = Polynomial::variable(field_, Ambient::xyz, 0);
    if (!a.is_zero()) x_image.add_term(Monomial::variable(2), a);
    Polynomial y_image = Polynomial::variable(field_, Ambient::xyz, 1);
    if (!b.is_zero()) y_image.add_term(Monomial::variable(2), b);

    Polynomial out(field_, Ambient::xyz);
    for (const auto& [m, c] : terms_) {
        Polynomial part = Polynomial::constant(field_, Ambient::xyz, c);
        for (int i = 0; i < m.e[0]; ++i) part = part * x_image;
        for (int i = 0; i < m.e[1]; ++i) part = part * y_image;
        if (m.e[2] != 0) part = part.times_monomial(Monomial::variable(2, m.e[2]));
        out += part;
    }
    return out;
}

Polynomial Polynomial::z_layer(int c) const {
    Polynomial out(field_, Ambient::xy);
    for (const auto& [m, coeff] : terms_) {
        if (m.e[2] != c) continue;
        out.add_term(Monomial{{m.e[0], m.e[1], 0}}, coeff);
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(field_, ambient_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

void Polynomial::require_compatible(const Polynomial& rhs) const {
    if (field_ != rhs.field_) {
        throw field_mismatch("mixed fields: " + field_.name() + " and " + rhs.field_.name());
    }
    if (ambient_ != rhs.ambient_) throw shape_mismatch("mixed ambient variable sets");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    require_compatible(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    require_compatible(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_compatible(b);
    Polynomial out(a.field_, a.ambient_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial out(field_, ambient_);
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
    Polynomial out(field_, ambient_);
    if (c.is_zero()) return out;
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono * m, coeff * c);
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.to_string();
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            if (negative) {
                out += "-";
                cs = cs.substr(1);
            }
            first = false;
        } else {
            out += negative ? " - " : " + ";
            if (negative) cs = cs.substr(1);
        }
        if (m.degree() == 0) {
            out += cs;
        } else if (cs == "1") {
            out += m.to_string();
        } else {
            out += cs + "*" + m.to_string();
        }
    }
    return out;
}

}  // namespace tcb
