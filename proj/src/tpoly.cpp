#include "cychb/tpoly.hpp"

#include <optional>

#include "cychb/bareiss.hpp"

namespace cychb {

TPoly TPoly::zero(Field f) {
    TPoly p;
    p.field_ = f;
    return p;
}

TPoly TPoly::from_xpoly(const Poly& px) {
    if (px.var() != Var::x) throw std::invalid_argument("TPoly::from_xpoly: expected an x-polynomial");
    TPoly p = zero(px.field());
    if (!px.is_zero()) p.c_.push_back(px);
    return p;
}

TPoly TPoly::constant(const FieldElem& c) { return from_xpoly(Poly::constant(c, Var::x)); }

TPoly TPoly::t(Field f) {
    TPoly p = zero(f);
    p.c_ = {Poly::zero(f, Var::x), Poly::from_ints(f, Var::x, {1})};
    return p;
}

TPoly TPoly::from_tcoeffs(Field f, std::vector<Poly> c) {
    TPoly p = zero(f);
    for (auto& e : c) {
        if (e.field() != f || e.var() != Var::x)
            throw std::invalid_argument("TPoly::from_tcoeffs: coefficients must be x-polynomials over the field");
    }
    p.c_ = std::move(c);
    p.normalize();
    return p;
}

TPoly TPoly::from_ints(Field f, const std::vector<std::vector<std::int64_t>>& c) {
    std::vector<Poly> cs;
    cs.reserve(c.size());
    for (const auto& row : c) cs.push_back(Poly::from_ints(f, Var::x, row));
    return from_tcoeffs(f, std::move(cs));
}

bool TPoly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

int TPoly::deg_x() const {
    int d = -1;
    for (const auto& p : c_) d = std::max(d, p.degree());
    return d;
}

Poly TPoly::tcoeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Poly::zero(field_, Var::x);
    return c_[static_cast<std::size_t>(i)];
}

Poly TPoly::lead_t() const {
    if (is_zero()) throw std::invalid_argument("TPoly::lead_t: zero polynomial");
    return c_.back();
}

bool TPoly::is_monic_t() const { return !is_zero() && c_.back().is_one(); }

int TPoly::t_valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

TPoly TPoly::strip_t_power(int k) const {
    if (k == 0) return *this;
    if (is_zero() || t_valuation() < k) throw std::invalid_argument("TPoly::strip_t_power: valuation too small");
    TPoly r = zero(field_);
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
}

TPoly TPoly::derivative_t() const {
    TPoly r = zero(field_);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * FieldElem::of(field_, static_cast<std::int64_t>(i)));
    r.normalize();
    return r;
}

TPoly TPoly::derivative_x() const {
    TPoly r = zero(field_);
    for (const auto& p : c_) r.c_.push_back(p.derivative());
    r.normalize();
    return r;
}

Poly TPoly::eval_t(const Poly& g) const {
    Poly r = Poly::zero(field_, Var::x);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * g + c_[i];
    return r;
}

Poly TPoly::eval_x(const FieldElem& x0) const {
    std::vector<FieldElem> c;
    c.reserve(c_.size());
    for (const auto& p : c_) c.push_back(p.eval(x0));
    return Poly::from_coeffs(field_, Var::t, std::move(c));
}

FieldElem TPoly::eval(const FieldElem& x0, const FieldElem& t0) const { return eval_x(x0).eval(t0); }

TPoly TPoly::shift_x(const FieldElem& a) const {
    const Poly xa = Poly::variable(field_, Var::x) + Poly::constant(a, Var::x);
    TPoly r = zero(field_);
    for (const auto& p : c_) r.c_.push_back(p.compose(xa));
    r.normalize();
    return r;
}

TPoly TPoly::operator-() const {
    TPoly r = *this;
    for (auto& p : r.c_) p = -p;
    return r;
}

void TPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void TPoly::check_same(const TPoly& a, const TPoly& b) {
    if (a.field_ != b.field_) throw std::invalid_argument("TPoly: mixed fields");
}

TPoly operator+(const TPoly& a, const TPoly& b) {
    TPoly::check_same(a, b);
    TPoly r = a;
    if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size(), Poly::zero(a.field_, Var::x));
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.normalize();
    return r;
}

TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly::check_same(a, b);
    if (a.is_zero() || b.is_zero()) return TPoly::zero(a.field_);
    TPoly r = TPoly::zero(a.field_);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Poly::zero(a.field_, Var::x));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
}

TPoly TPoly::operator*(const FieldElem& s) const {
    TPoly r = *this;
    for (auto& p : r.c_) p = p * s;
    r.normalize();
    return r;
}

TPoly TPoly::operator*(const Poly& s) const {
    TPoly r = *this;
    for (auto& p : r.c_) p = p * s;
    r.normalize();
    return r;
}

bool operator==(const TPoly& a, const TPoly& b) {
    TPoly::check_same(a, b);
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

std::pair<TPoly, TPoly> TPoly::divrem_monic(const TPoly& a, const TPoly& b) {
    check_same(a, b);
    if (!b.is_monic_t()) throw std::invalid_argument("TPoly::divrem_monic: divisor not monic in t");
    TPoly q = zero(a.field_), r = a;
    while (!r.is_zero() && r.deg_t() >= b.deg_t()) {
        TPoly m = from_xpoly(r.lead_t());
        m.c_.insert(m.c_.begin(), static_cast<std::size_t>(r.deg_t() - b.deg_t()), Poly::zero(a.field_, Var::x));
        q += m;
        r -= m * b;
    }
    return {q, r};
}

namespace {

std::optional<TPoly> try_exact_div_impl(const TPoly& a, const TPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("TPoly::exact_div: division by zero");
    TPoly q = TPoly::zero(a.field());
    TPoly r = a;
    while (!r.is_zero() && r.deg_t() >= b.deg_t()) {
        auto [qc, rem] = Poly::divrem(r.lead_t(), b.lead_t());
        if (!rem.is_zero()) return std::nullopt;
        std::vector<Poly> mc(static_cast<std::size_t>(r.deg_t() - b.deg_t()), Poly::zero(a.field(), Var::x));
        mc.push_back(qc);
        TPoly m = TPoly::from_tcoeffs(a.field(), std::move(mc));
        q += m;
        r -= m * b;
    }
    if (!r.is_zero()) return std::nullopt;
    return q;
}

// pseudo-remainder: some power of lc_t(g) times f, reduced mod g
TPoly prem_t(TPoly f, const TPoly& g) {
    const Poly lc = g.lead_t();
    while (!f.is_zero() && f.deg_t() >= g.deg_t()) {
        std::vector<Poly> mc(static_cast<std::size_t>(f.deg_t() - g.deg_t()), Poly::zero(f.field(), Var::x));
        mc.push_back(f.lead_t());
        TPoly m = TPoly::from_tcoeffs(f.field(), std::move(mc));
        f = f * lc - m * g;
    }
    return f;
}

} // namespace

TPoly TPoly::exact_div(const TPoly& a, const TPoly& b) {
    auto q = try_exact_div_impl(a, b);
    if (!q) throw std::invalid_argument("TPoly::exact_div: inexact division");
    return *q;
}

Poly TPoly::content_x() const {
    Poly g = Poly::zero(field_, Var::x);
    for (const auto& p : c_) g = poly_gcd(g, p);
    return g;
}

TPoly TPoly::primitive_part_x() const {
    if (is_zero()) return *this;
    const Poly cont = content_x();
    TPoly r = zero(field_);
    for (const auto& p : c_) r.c_.push_back(Poly::exact_div(p, cont));
    return r;
}

std::string TPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += c_[i].str();
            continue;
        }
        s += "(" + c_[i].str() + ")*t";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

TPoly tpoly_gcd_primitive(const TPoly& f, const TPoly& g) {
    auto normalize = [](TPoly h) {
        if (h.is_zero()) return h;
        return h.primitive_part_x() * h.primitive_part_x().lead_t().lead().inv();
    };
    if (f.is_zero()) return normalize(g);
    if (g.is_zero()) return normalize(f);
    TPoly a = f.primitive_part_x(), b = g.primitive_part_x();
    if (a.deg_t() < b.deg_t()) std::swap(a, b);
    while (!b.is_zero()) {
        TPoly r = prem_t(a, b);
        if (!r.is_zero()) r = r.primitive_part_x();
        a = b;
        b = r;
    }
    const Poly cont = poly_gcd(f.content_x(), g.content_x());
    return normalize(a * cont);
}

TPoly squarefree_part_t(const TPoly& f) {
    if (!f.is_monic_t()) throw std::invalid_argument("squarefree_part_t: input not monic in t");
    const TPoly dt = f.derivative_t();
    if (dt.is_zero()) return f;
    TPoly g = tpoly_gcd_primitive(f, dt);
    // a primitive factor of a monic-in-t polynomial has constant leading t-coefficient
    if (g.lead_t().degree() != 0) throw std::logic_error("squarefree_part_t: unexpected gcd leading coefficient");
    g = g * g.lead_t().lead().inv();
    return TPoly::exact_div(f, g);
}

Poly resultant_t(const TPoly& f, const TPoly& g) {
    if (f.field() != g.field()) throw std::invalid_argument("resultant_t: mixed fields");
    const Field k = f.field();
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("resultant_t: both inputs zero");
    if (f.is_zero() || g.is_zero()) return Poly::zero(k, Var::x);
    const int n = f.deg_t(), m = g.deg_t();
    if (n == 0 && m == 0) return Poly::from_ints(k, Var::x, {1});
    if (n == 0) {
        Poly r = Poly::from_ints(k, Var::x, {1});
        for (int i = 0; i < m; ++i) r *= f.tcoeff(0);
        return r;
    }
    if (m == 0) {
        Poly r = Poly::from_ints(k, Var::x, {1});
        for (int i = 0; i < n; ++i) r *= g.tcoeff(0);
        return r;
    }
    const std::size_t size = static_cast<std::size_t>(n + m);
    std::vector<std::vector<Poly>> syl(size, std::vector<Poly>(size, Poly::zero(k, Var::x)));
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) syl[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] = f.tcoeff(n - j);
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j)
            syl[static_cast<std::size_t>(m + row)][static_cast<std::size_t>(row + j)] = g.tcoeff(m - j);
    return bareiss_det(std::move(syl), Poly::from_ints(k, Var::x, {1}));
}

} // namespace cychb
