#include "cychb/poly.hpp"

namespace cychb {

Poly Poly::zero(Field f, Var v) {
    Poly p;
    p.field_ = f;
    p.var_ = v;
    return p;
}

Poly Poly::constant(const FieldElem& c, Var v) {
    Poly p = zero(c.field(), v);
    p.c_.push_back(c);
    p.normalize();
    return p;
}

Poly Poly::variable(Field f, Var v) { return monomial(FieldElem::one(f), 1, v); }

Poly Poly::monomial(const FieldElem& c, int deg, Var v) {
    if (deg < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    Poly p = zero(c.field(), v);
    if (!c.is_zero()) {
        p.c_.assign(static_cast<std::size_t>(deg) + 1, FieldElem::zero(c.field()));
        p.c_.back() = c;
    }
    return p;
}

Poly Poly::from_coeffs(Field f, Var v, std::vector<FieldElem> c) {
    Poly p = zero(f, v);
    p.c_ = std::move(c);
    for (const auto& e : p.c_)
        if (e.field() != f) throw std::invalid_argument("Poly::from_coeffs: mixed fields");
    p.normalize();
    return p;
}

Poly Poly::from_ints(Field f, Var v, std::initializer_list<std::int64_t> c) {
    return from_ints(f, v, std::vector<std::int64_t>(c));
}

Poly Poly::from_ints(Field f, Var v, const std::vector<std::int64_t>& c) {
    std::vector<FieldElem> e;
    e.reserve(c.size());
    for (auto n : c) e.push_back(FieldElem::of(f, n));
    return from_coeffs(f, v, std::move(e));
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

FieldElem Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElem::zero(field_);
    return c_[static_cast<std::size_t>(i)];
}

FieldElem Poly::lead() const {
    if (is_zero()) throw std::invalid_argument("Poly::lead: zero polynomial");
    return c_.back();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inv();
}

Poly Poly::derivative() const {
    Poly r = zero(field_, var_);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * FieldElem::of(field_, static_cast<std::int64_t>(i)));
    r.normalize();
    return r;
}

FieldElem Poly::eval(const FieldElem& a) const {
    FieldElem r = FieldElem::zero(field_);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * a + c_[i];
    return r;
}

Poly Poly::compose(const Poly& inner) const {
    Poly r = zero(field_, inner.var());
    for (std::size_t i = c_.size(); i-- > 0;) r = r * inner + constant(c_[i], inner.var());
    return r;
}

Poly Poly::with_var(Var v) const {
    Poly r = *this;
    r.var_ = v;
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& e : r.c_) e = -e;
    return r;
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_compatible(const Poly& a, const Poly& b) {
    if (a.field_ != b.field_) throw std::invalid_argument("Poly: mixed fields");
    if (a.var_ != b.var_) throw std::invalid_argument("Poly: mixed variables");
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly::check_compatible(a, b);
    Poly r = a;
    if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size(), FieldElem::zero(a.field_));
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.normalize();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    Poly::check_compatible(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_, a.var_);
    Poly r = Poly::zero(a.field_, a.var_);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, FieldElem::zero(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
}

Poly Poly::operator*(const FieldElem& s) const {
    Poly r = *this;
    for (auto& e : r.c_) e *= s;
    r.normalize();
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    Poly::check_compatible(a, b);
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
    check_compatible(a, b);
    if (b.is_zero()) throw std::invalid_argument("Poly::divrem: division by zero");
    Poly q = zero(a.field_, a.var_);
    Poly r = a;
    const FieldElem lb = b.lead().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int d = r.degree() - b.degree();
        const FieldElem c = r.lead() * lb;
        const Poly m = monomial(c, d, a.var_);
        q += m;
        r -= m * b;
    }
    return {q, r};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::invalid_argument("Poly::exact_div: inexact division");
    return q;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || !c_[i].is_one()) s += c_[i].str();
        if (i > 0) {
            if (i == 0 || !c_[i].is_one()) s += "*";
            s += var_name(var_);
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = Poly::remainder(a, b);
        a = b;
        b = r;
    }
    return a.monic();
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) return f;
    Poly d = f.derivative();
    if (d.is_zero()) return f.monic(); // constant, or char-p degenerate input
    return Poly::exact_div(f, poly_gcd(f, d)).monic();
}

} // namespace cychb
