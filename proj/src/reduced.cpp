#include "cychb/reduced.hpp"

namespace cychb {

ReducedElem::ReducedElem(Field f, int m) : field_(f), m_(m) {
    if (m < 1) throw std::invalid_argument("ReducedElem: m must be positive");
    c_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), TPoly::zero(f));
}

ReducedElem ReducedElem::basis(Field f, int m, int i, int j) {
    ReducedElem e(f, m);
    e.coeff(i, j) = TPoly::constant(FieldElem::one(f));
    return e;
}

ReducedElem ReducedElem::unit(Field f, int m) {
    ReducedElem e(f, m);
    for (int j = 0; j < m; ++j) e.coeff(j, j) = TPoly::constant(FieldElem::one(f));
    return e;
}

ReducedElem ReducedElem::arrow_class(Field f, int m, int i) {
    if (m == 1) {
        ReducedElem e(f, 1);
        e.coeff(0, 0) = TPoly::t(f);
        return e;
    }
    return basis(f, m, (i + 1) % m, i % m);
}

bool ReducedElem::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

const TPoly& ReducedElem::coeff(int i, int j) const {
    if (i < 0 || i >= m_ || j < 0 || j >= m_) throw std::invalid_argument("ReducedElem::coeff: index out of range");
    return c_[static_cast<std::size_t>(i) * m_ + j];
}

TPoly& ReducedElem::coeff(int i, int j) {
    if (i < 0 || i >= m_ || j < 0 || j >= m_) throw std::invalid_argument("ReducedElem::coeff: index out of range");
    return c_[static_cast<std::size_t>(i) * m_ + j];
}

void ReducedElem::check_same(const ReducedElem& a, const ReducedElem& b) {
    if (a.field_ != b.field_) throw std::invalid_argument("ReducedElem: mixed fields");
    if (a.m_ != b.m_) throw std::invalid_argument("ReducedElem: mismatched m");
}

ReducedElem ReducedElem::operator-() const {
    ReducedElem r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ReducedElem operator+(const ReducedElem& a, const ReducedElem& b) {
    ReducedElem::check_same(a, b);
    ReducedElem r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

ReducedElem operator-(const ReducedElem& a, const ReducedElem& b) { return a + (-b); }

ReducedElem operator*(const ReducedElem& a, const ReducedElem& b) {
    ReducedElem::check_same(a, b);
    const int m = a.m_;
    const TPoly t = TPoly::t(a.field_);
    ReducedElem r(a.field_, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (a.coeff(i, j).is_zero()) continue;
            for (int k = 0; k < m; ++k) {
                if (b.coeff(j, k).is_zero()) continue;
                TPoly prod = a.coeff(i, j) * b.coeff(j, k);
                // two paths of length < m compose with at most one wrap
                if (((i - j) % m + m) % m + ((j - k) % m + m) % m >= m) prod *= t;
                r.coeff(i, k) += prod;
            }
        }
    return r;
}

ReducedElem ReducedElem::operator*(const TPoly& s) const {
    ReducedElem r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

bool operator==(const ReducedElem& a, const ReducedElem& b) {
    ReducedElem::check_same(a, b);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

std::string ReducedElem::str() const {
    std::string s;
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) {
            if (coeff(i, j).is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + coeff(i, j).str() + ")*b(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    return s.empty() ? "0" : s;
}

int rank_check(int m) {
    if (m < 1) throw std::invalid_argument("rank_check: m must be positive");
    int count = 0;
    for (int j = 0; j < m; ++j)
        for (int len = 0; len < m; ++len) ++count; // the unique path of length len from v_j
    return count;
}

std::vector<FieldElem> TableAlgebra::multiply(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) const {
    std::vector<FieldElem> r(dim, FieldElem::zero(field));
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            const FieldElem c = a[i] * b[j];
            for (std::size_t k = 0; k < dim; ++k) r[k] += c * table[i][j][k];
        }
    }
    return r;
}

bool TableAlgebra::is_associative() const {
    auto unit_vec = [&](std::size_t i) {
        std::vector<FieldElem> v(dim, FieldElem::zero(field));
        v[i] = FieldElem::one(field);
        return v;
    };
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t c = 0; c < dim; ++c) {
                const auto lhs = multiply(multiply(unit_vec(a), unit_vec(b)), unit_vec(c));
                const auto rhs = multiply(unit_vec(a), multiply(unit_vec(b), unit_vec(c)));
                if (lhs != rhs) return false;
            }
    return true;
}

bool TableAlgebra::unit_law_holds(const std::vector<FieldElem>& unit) const {
    for (std::size_t a = 0; a < dim; ++a) {
        std::vector<FieldElem> v(dim, FieldElem::zero(field));
        v[a] = FieldElem::one(field);
        if (multiply(unit, v) != v || multiply(v, unit) != v) return false;
    }
    return true;
}

TableAlgebra fiber_at(Field f, int m, const FieldElem& x0, const FieldElem& t0) {
    (void)x0; // structure constants of A^(m) do not involve x; kept for the fiber interface
    TableAlgebra alg;
    alg.field = f;
    alg.dim = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
    alg.names.reserve(alg.dim);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) alg.names.push_back("b(" + std::to_string(i) + "," + std::to_string(j) + ")");
    alg.table.assign(alg.dim, std::vector<std::vector<FieldElem>>(alg.dim, std::vector<FieldElem>(alg.dim, FieldElem::zero(f))));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    if (j != k) continue;
                    const std::size_t a = static_cast<std::size_t>(i) * m + j;
                    const std::size_t b = static_cast<std::size_t>(k) * m + l;
                    const std::size_t out = static_cast<std::size_t>(i) * m + l;
                    const bool wrap = ((i - j) % m + m) % m + ((j - l) % m + m) % m >= m;
                    alg.table[a][b][out] = wrap ? t0 : FieldElem::one(f);
                }
    return alg;
}

std::vector<FieldElem> fiber_unit(Field f, int m) {
    std::vector<FieldElem> u(static_cast<std::size_t>(m) * m, FieldElem::zero(f));
    for (int j = 0; j < m; ++j) u[static_cast<std::size_t>(j) * m + j] = FieldElem::one(f);
    return u;
}

MatrixIso matrix_iso(Field f, int m, const FieldElem& t0, const FieldElem& s0) {
    if (t0.is_zero()) throw regime_error("matrix_iso: degenerate fiber over the zero section (t0 = 0)");
    if (s0.pow(m) != t0) throw std::invalid_argument("matrix_iso: s0^m != t0");
    MatrixIso iso;
    iso.images.reserve(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            KMat e(f, static_cast<std::size_t>(m), static_cast<std::size_t>(m));
            e.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = s0.pow(((i - j) % m + m) % m);
            iso.images.push_back(std::move(e));
        }
    const TableAlgebra alg = fiber_at(f, m, FieldElem::zero(f), t0);
    iso.verified = true;
    for (std::size_t a = 0; a < alg.dim && iso.verified; ++a)
        for (std::size_t b = 0; b < alg.dim && iso.verified; ++b) {
            KMat lhs = iso.images[a] * iso.images[b];
            KMat rhs(f, static_cast<std::size_t>(m), static_cast<std::size_t>(m));
            for (std::size_t k = 0; k < alg.dim; ++k)
                if (!alg.table[a][b][k].is_zero()) rhs = rhs + iso.images[k] * alg.table[a][b][k];
            if (lhs != rhs) iso.verified = false;
        }
    return iso;
}

std::optional<FieldElem> find_mth_root(Field f, const FieldElem& t0, int m) {
    if (f.is_rational()) throw std::invalid_argument("find_mth_root: root search is exhaustive, prime fields only");
    for (std::uint64_t s = 0; s < f.characteristic(); ++s) {
        const FieldElem cand = FieldElem::of(f, static_cast<std::int64_t>(s));
        if (cand.pow(m) == t0) return cand;
    }
    return std::nullopt;
}

bool simplicity_check(const TableAlgebra& alg) {
    const Field f = alg.field;
    for (std::size_t g = 0; g < alg.dim; ++g) {
        // close the span of basis element g under left and right multiplication
        std::vector<std::vector<FieldElem>> span;
        std::vector<FieldElem> start(alg.dim, FieldElem::zero(f));
        start[g] = FieldElem::one(f);
        span.push_back(start);
        bool grew = true;
        while (grew) {
            grew = false;
            const std::size_t cur = span.size();
            for (std::size_t v = 0; v < cur; ++v)
                for (std::size_t b = 0; b < alg.dim; ++b) {
                    std::vector<FieldElem> bv(alg.dim, FieldElem::zero(f));
                    bv[b] = FieldElem::one(f);
                    for (const auto& prod : {alg.multiply(bv, span[v]), alg.multiply(span[v], bv)}) {
                        if (!span_contains(f, span, prod)) {
                            span.push_back(prod);
                            grew = true;
                        }
                    }
                }
        }
        if (span_rank(f, span) != alg.dim) return false;
    }
    return true;
}

bool reduced_center_check(Field f, int m, int xcap, int tcap) {
    // unknowns: coefficients of z = sum z_{i,j,dx,dt} x^dx t^dt b(i,j)
    const int nb = m * m;
    const std::size_t per = static_cast<std::size_t>(xcap + 1) * static_cast<std::size_t>(tcap + 1);
    const std::size_t unknowns = static_cast<std::size_t>(nb) * per;

    auto unknown_index = [&](int i, int j, int dx, int dt) {
        return (static_cast<std::size_t>(i) * m + j) * per + static_cast<std::size_t>(dx) * (tcap + 1) + dt;
    };

    // commutators shift t-degree by at most one
    const std::size_t out_per = static_cast<std::size_t>(xcap + 1) * static_cast<std::size_t>(tcap + 2);
    KMat sys(f, static_cast<std::size_t>(nb) * static_cast<std::size_t>(nb) * out_per, unknowns);

    std::size_t eq_block = 0;
    for (int bi = 0; bi < m; ++bi)
        for (int bj = 0; bj < m; ++bj, ++eq_block) {
            const ReducedElem b = ReducedElem::basis(f, m, bi, bj);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    for (int dx = 0; dx <= xcap; ++dx)
                        for (int dt = 0; dt <= tcap; ++dt) {
                            ReducedElem z(f, m);
                            z.coeff(i, j) = TPoly::from_tcoeffs(
                                f, [&] {
                                    std::vector<Poly> c(static_cast<std::size_t>(dt) + 1, Poly::zero(f, Var::x));
                                    c.back() = Poly::monomial(FieldElem::one(f), dx, Var::x);
                                    return c;
                                }());
                            const ReducedElem comm = z * b - b * z;
                            for (int oi = 0; oi < m; ++oi)
                                for (int oj = 0; oj < m; ++oj) {
                                    const TPoly& cc = comm.coeff(oi, oj);
                                    for (int odt = 0; odt <= tcap + 1; ++odt) {
                                        const Poly px = cc.tcoeff(odt);
                                        for (int odx = 0; odx <= xcap; ++odx) {
                                            const FieldElem v = px.coeff(odx);
                                            if (v.is_zero()) continue;
                                            const std::size_t row =
                                                (eq_block * static_cast<std::size_t>(nb) +
                                                 static_cast<std::size_t>(oi) * m + oj) *
                                                    out_per +
                                                static_cast<std::size_t>(odx) * (tcap + 2) + odt;
                                            sys.at(row, unknown_index(i, j, dx, dt)) = v;
                                        }
                                    }
                                }
                        }
        }

    const auto null = sys.nullspace();
    if (null.size() != per) return false; // center must be exactly R[t].1 within the caps
    for (const auto& v : null) {
        // every solution must be diagonal with equal diagonal coefficients
        for (int dx = 0; dx <= xcap; ++dx)
            for (int dt = 0; dt <= tcap; ++dt) {
                const FieldElem d0 = v[unknown_index(0, 0, dx, dt)];
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) {
                        const FieldElem c = v[unknown_index(i, j, dx, dt)];
                        if (i == j ? c != d0 : !c.is_zero()) return false;
                    }
            }
    }
    return true;
}

} // namespace cychb
