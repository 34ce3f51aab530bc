#include "tcb/laurent.hpp"

namespace tcb {

namespace {

std::string power_text(const char* name, int e) {
    std::string out = name;
    if (e != 1) out += "^" + std::to_string(e);
    return out;
}

std::string monomial_body(const LaurentMonomial& m) {
    std::string out;
    if (m.a != 0) out += power_text("x", m.a);
    if (m.b != 0) {
        if (!out.empty()) out += "*";
        out += power_text("y", m.b);
    }
    if (m.c != 0) {
        if (!out.empty()) out += "*";
        out += power_text("z", m.c);
    }
    return out.empty() ? "1" : out;
}

std::string terms_to_string(const LaurentElement::TermMap& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
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
        std::string body = monomial_body(m);
        if (body == "1") {
            out += cs;
        } else if (cs == "1") {
            out += body;
        } else {
            out += cs + "*" + body;
        }
    }
    return out;
}

}  // namespace

std::string LaurentMonomial::to_string() const { return monomial_body(*this); }

LaurentElement LaurentElement::from_polynomial(const Polynomial& p) {
    LaurentElement out(p.field());
    for (const auto& [m, c] : p.terms()) {
        out.terms_.emplace(LaurentMonomial{m.e[0], m.e[1], m.e[2]}, c);
    }
    return out;
}

void LaurentElement::add_term(const LaurentMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentElement LaurentElement::shifted(int da, int db) const {
    LaurentElement out(field_);
    for (const auto& [m, c] : terms_) {
        out.terms_.emplace(LaurentMonomial{m.a + da, m.b + db, m.c}, c);
    }
    return out;
}

LaurentElement LaurentElement::operator-() const {
    LaurentElement out(field_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& rhs) {
    if (field_ != rhs.field_) throw field_mismatch("mixed fields in Laurent arithmetic");
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& rhs) {
    if (field_ != rhs.field_) throw field_mismatch("mixed fields in Laurent arithmetic");
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

LaurentElement LaurentElement::scaled(const Scalar& c) const {
    LaurentElement out(field_);
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

std::optional<int> LaurentElement::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) {
        if (m.degree() != d) return std::nullopt;
    }
    return d;
}

int LaurentElement::max_z_exponent() const {
    int best = 0;
    for (const auto& [m, c] : terms_) {
        if (m.c > best) best = m.c;
    }
    return best;
}

std::string LaurentElement::to_string() const { return terms_to_string(terms_); }

void CechClass::add_term(const LaurentMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coefficients_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coefficients_.erase(it);
    }
}

CechClass& CechClass::operator+=(const CechClass& rhs) {
    if (field_ != rhs.field_ || degree_ != rhs.degree_) {
        throw shape_mismatch("cohomology classes of different degree");
    }
    for (const auto& [m, c] : rhs.coefficients_) add_term(m, c);
    return *this;
}

CechClass CechClass::scaled(const Scalar& c) const {
    CechClass out(field_, degree_);
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : coefficients_) out.coefficients_.emplace(m, coeff * c);
    return out;
}

std::string CechClass::to_string() const { return terms_to_string(coefficients_); }

bool class_is_zero(const CechClass& c) { return c.is_zero(); }

}  // namespace tcb
