#include "tcb/module.hpp"

namespace tcb {

ModuleVector::ModuleVector(FreeModulePtr shape) : shape_(std::move(shape)) {
    entries_.reserve(static_cast<std::size_t>(shape_->rank()));
    for (int i = 0; i < shape_->rank(); ++i) {
        entries_.emplace_back(Polynomial::zero(shape_->field, shape_->ambient));
    }
}

ModuleVector ModuleVector::unit(FreeModulePtr shape, int position) {
    ModuleVector v(std::move(shape));
    v.entry(position) =
        Polynomial::constant(v.shape_->field, v.shape_->ambient, Scalar::one(v.shape_->field));
    return v;
}

ModuleVector ModuleVector::from_polynomial(const Polynomial& p) {
    ModuleVector v(make_free_module(p.field(), p.ambient(), {0}));
    v.entry(0) = p;
    return v;
}

bool ModuleVector::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

std::optional<int> ModuleVector::degree() const {
    std::optional<int> t;
    for (int i = 0; i < rank(); ++i) {
        if (entries_[static_cast<std::size_t>(i)].is_zero()) continue;
        auto d = entries_[static_cast<std::size_t>(i)].homogeneous_degree();
        if (!d) return std::nullopt;
        int candidate = *d + shape_->twists[static_cast<std::size_t>(i)];
        if (t && *t != candidate) return std::nullopt;
        t = candidate;
    }
    return t;
}

bool ModuleVector::is_homogeneous() const { return is_zero() || degree().has_value(); }

ModuleVector ModuleVector::operator-() const {
    ModuleVector out(shape_);
    for (int i = 0; i < rank(); ++i) out.entry(i) = -entries_[static_cast<std::size_t>(i)];
    return out;
}

void ModuleVector::require_same_shape(const ModuleVector& rhs) const {
    if (!(*shape_ == *rhs.shape_)) throw shape_mismatch("module shapes differ");
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& rhs) {
    require_same_shape(rhs);
    for (int i = 0; i < rank(); ++i) entries_[static_cast<std::size_t>(i)] += rhs.entry(i);
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& rhs) {
    require_same_shape(rhs);
    for (int i = 0; i < rank(); ++i) entries_[static_cast<std::size_t>(i)] -= rhs.entry(i);
    return *this;
}

ModuleVector ModuleVector::scaled(const Scalar& c) const {
    ModuleVector out(shape_);
    for (int i = 0; i < rank(); ++i) out.entry(i) = entries_[static_cast<std::size_t>(i)].scaled(c);
    return out;
}

ModuleVector ModuleVector::times_term(const Monomial& m, const Scalar& c) const {
    ModuleVector out(shape_);
    for (int i = 0; i < rank(); ++i) {
        out.entry(i) = entries_[static_cast<std::size_t>(i)].times_term(m, c);
    }
    return out;
}

ModuleVector ModuleVector::times_polynomial(const Polynomial& p) const {
    ModuleVector out(shape_);
    for (int i = 0; i < rank(); ++i) out.entry(i) = entries_[static_cast<std::size_t>(i)] * p;
    return out;
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
    return *a.shape_ == *b.shape_ && a.entries_ == b.entries_;
}

std::string ModuleVector::to_string() const {
    std::string out = "(";
    for (int i = 0; i < rank(); ++i) {
        if (i > 0) out += ", ";
        out += entries_[static_cast<std::size_t>(i)].to_string();
    }
    return out + ")";
}

bool MonomialOrder::less(const ModuleMonomial& a, const ModuleMonomial& b) const {
    if (kind_ == Kind::grevlex_top) {
        if (a.mono != b.mono) return grevlex_less(a.mono, b.mono);
        return a.position > b.position;
    }
    const ModuleMonomial& ia = images_[static_cast<std::size_t>(a.position)];
    const ModuleMonomial& ib = images_[static_cast<std::size_t>(b.position)];
    Monomial pa = a.mono * ia.mono;
    Monomial pb = b.mono * ib.mono;
    if (pa != pb) return grevlex_less(pa, pb);
    if (ia.position != ib.position) return ia.position > ib.position;
    return a.position > b.position;
}

ModuleTerm leading_term(const ModuleVector& v, const MonomialOrder& order) {
    std::optional<ModuleTerm> best;
    for (int i = 0; i < v.rank(); ++i) {
        const Polynomial& e = v.entry(i);
        if (e.is_zero()) continue;
        // Within one component every order here restricts to grevlex.
        ModuleMonomial candidate{e.leading_monomial(), i};
        if (!best || order.less(best->mono, candidate)) {
            best = ModuleTerm{candidate, e.leading_coefficient()};
        }
    }
    if (!best) throw error("leading term of the zero module vector");
    return *best;
}

}  // namespace tcb
