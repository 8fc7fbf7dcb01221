#include "cychb/matrix.hpp"

#include "cychb/bareiss.hpp"

namespace cychb {

// ---------------------------------------------------------------------------
// KMat

KMat::KMat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, FieldElem::zero(f)) {}

KMat KMat::identity(Field f, std::size_t n) {
    KMat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElem::one(f);
    return m;
}

KMat KMat::from_ints(Field f, const std::vector<std::vector<std::int64_t>>& a) {
    KMat m(f, a.size(), a.empty() ? 0 : a[0].size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
        if (a[i].size() != m.cols_) throw std::invalid_argument("KMat::from_ints: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = FieldElem::of(f, a[i][j]);
    }
    return m;
}

void KMat::check_same(const KMat& a, const KMat& b, bool mul) {
    if (a.field_ != b.field_) throw std::invalid_argument("KMat: mixed fields");
    if (mul ? a.cols_ != b.rows_ : (a.rows_ != b.rows_ || a.cols_ != b.cols_))
        throw std::invalid_argument("KMat: shape mismatch");
}

KMat KMat::operator-() const {
    KMat r = *this;
    for (auto& e : r.a_) e = -e;
    return r;
}

KMat operator+(const KMat& a, const KMat& b) {
    KMat::check_same(a, b, false);
    KMat r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
}

KMat operator-(const KMat& a, const KMat& b) { return a + (-b); }

KMat operator*(const KMat& a, const KMat& b) {
    KMat::check_same(a, b, true);
    KMat r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

KMat KMat::operator*(const FieldElem& s) const {
    KMat r = *this;
    for (auto& e : r.a_) e *= s;
    return r;
}

bool operator==(const KMat& a, const KMat& b) {
    KMat::check_same(a, b, false);
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (a.a_[i] != b.a_[i]) return false;
    return true;
}

bool KMat::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

KMat KMat::transpose() const {
    KMat r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<std::size_t> KMat::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = row;
        while (sel < rows_ && at(sel, col).is_zero()) ++sel;
        if (sel == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(row, j), at(sel, j));
        const FieldElem inv = at(row, col).inv();
        for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            const FieldElem c = at(i, col);
            for (std::size_t j = col; j < cols_; ++j) at(i, j) -= c * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t KMat::rank() const {
    KMat m = *this;
    return m.rref().size();
}

FieldElem KMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("KMat::det: non-square");
    KMat m = *this;
    FieldElem d = FieldElem::one(field_);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t sel = col;
        while (sel < rows_ && m.at(sel, col).is_zero()) ++sel;
        if (sel == rows_) return FieldElem::zero(field_);
        if (sel != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(col, j), m.at(sel, j));
            d = -d;
        }
        d *= m.at(col, col);
        const FieldElem inv = m.at(col, col).inv();
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            const FieldElem c = m.at(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= c * m.at(col, j);
        }
    }
    return d;
}

std::optional<KMat> KMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("KMat::inverse: non-square");
    KMat aug(field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = FieldElem::one(field_);
    }
    auto pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
    KMat inv(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::vector<std::vector<FieldElem>> KMat::nullspace() const {
    KMat m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<FieldElem>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElem> v(cols_, FieldElem::zero(field_));
        v[free] = FieldElem::one(field_);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<FieldElem>> KMat::solve(const std::vector<FieldElem>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("KMat::solve: size mismatch");
    KMat aug(field_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<FieldElem> x(cols_, FieldElem::zero(field_));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

std::size_t span_rank(Field f, const std::vector<std::vector<FieldElem>>& vecs) {
    if (vecs.empty()) return 0;
    KMat m(f, vecs.size(), vecs[0].size());
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < vecs[i].size(); ++j) m.at(i, j) = vecs[i][j];
    return m.rank();
}

bool span_contains(Field f, const std::vector<std::vector<FieldElem>>& span, const std::vector<FieldElem>& v) {
    auto ext = span;
    ext.push_back(v);
    return span_rank(f, ext) == span_rank(f, span);
}

bool spans_equal(Field f, const std::vector<std::vector<FieldElem>>& a, const std::vector<std::vector<FieldElem>>& b) {
    auto all = a;
    all.insert(all.end(), b.begin(), b.end());
    const std::size_t r = span_rank(f, all);
    return r == span_rank(f, a) && r == span_rank(f, b);
}

// ---------------------------------------------------------------------------
// PMat

PMat::PMat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Poly::zero(f, Var::x)) {}

PMat PMat::identity(Field f, std::size_t n) {
    PMat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::from_ints(f, Var::x, {1});
    return m;
}

PMat PMat::scalar(Field f, std::size_t n, const Poly& d) {
    PMat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = d;
    return m;
}

PMat PMat::from_ints(Field f, const std::vector<std::vector<std::vector<std::int64_t>>>& a) {
    PMat m(f, a.size(), a.empty() ? 0 : a[0].size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
        if (a[i].size() != m.cols_) throw std::invalid_argument("PMat::from_ints: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = Poly::from_ints(f, Var::x, a[i][j]);
    }
    return m;
}

void PMat::check_same(const PMat& a, const PMat& b, bool mul) {
    if (a.field_ != b.field_) throw std::invalid_argument("PMat: mixed fields");
    if (mul ? a.cols_ != b.rows_ : (a.rows_ != b.rows_ || a.cols_ != b.cols_))
        throw std::invalid_argument("PMat: shape mismatch");
}

PMat PMat::operator-() const {
    PMat r = *this;
    for (auto& e : r.a_) e = -e;
    return r;
}

PMat operator+(const PMat& a, const PMat& b) {
    PMat::check_same(a, b, false);
    PMat r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
}

PMat operator-(const PMat& a, const PMat& b) { return a + (-b); }

PMat operator*(const PMat& a, const PMat& b) {
    PMat::check_same(a, b, true);
    PMat r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

PMat PMat::operator*(const Poly& s) const {
    PMat r = *this;
    for (auto& e : r.a_) e *= s;
    return r;
}

PMat PMat::operator*(const FieldElem& s) const { return *this * Poly::constant(s, Var::x); }

bool operator==(const PMat& a, const PMat& b) {
    PMat::check_same(a, b, false);
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (a.a_[i] != b.a_[i]) return false;
    return true;
}

bool PMat::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

bool PMat::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(field_, rows_);
}

PMat PMat::transpose() const {
    PMat r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

KMat PMat::eval_x(const FieldElem& x0) const {
    KMat r(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).eval(x0);
    return r;
}

int PMat::max_degree() const {
    int d = -1;
    for (const auto& e : a_) d = std::max(d, e.degree());
    return d;
}

Poly PMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("PMat::det: non-square");
    std::vector<std::vector<Poly>> a(rows_, std::vector<Poly>(cols_, Poly::zero(field_, Var::x)));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) a[i][j] = at(i, j);
    return bareiss_det(std::move(a), Poly::from_ints(field_, Var::x, {1}));
}

Poly PMat::minor_det(std::size_t skip_row, std::size_t skip_col) const {
    PMat m(field_, rows_ - 1, cols_ - 1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i == skip_row) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j == skip_col) continue;
            m.at(r, c) = at(i, j);
            ++c;
        }
        ++r;
    }
    return m.det();
}

PMat PMat::adjugate() const {
    if (rows_ != cols_) throw std::invalid_argument("PMat::adjugate: non-square");
    if (rows_ == 0) return *this;
    if (rows_ == 1) return identity(field_, 1);
    PMat adj(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            Poly m = minor_det(i, j);
            adj.at(j, i) = ((i + j) % 2 == 0) ? m : -m;
        }
    return adj;
}

PMat PMat::pow(std::size_t e) const {
    if (rows_ != cols_) throw std::invalid_argument("PMat::pow: non-square");
    PMat acc = identity(field_, rows_);
    PMat base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::vector<Poly> PMat::mul_vec(const std::vector<Poly>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("PMat::mul_vec: size mismatch");
    std::vector<Poly> r(rows_, Poly::zero(field_, Var::x));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

PMat PMat::map(const std::function<Poly(const Poly&)>& fn) const {
    PMat r = *this;
    for (auto& e : r.a_) e = fn(e);
    return r;
}

// ---------------------------------------------------------------------------
// Normal forms

namespace {

void row_op_sub(PMat& m, std::size_t dst, std::size_t src, const Poly& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) -= q * m.at(src, j);
}

void col_op_sub(PMat& m, std::size_t dst, std::size_t src, const Poly& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) -= q * m.at(i, src);
}

void row_swap(PMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void col_swap(PMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void row_add(PMat& m, std::size_t dst, std::size_t src) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += m.at(src, j);
}

} // namespace

SnfResult smith_normal_form(const PMat& M) {
    const Field f = M.field();
    PMat D = M;
    PMat U = PMat::identity(f, M.rows());
    PMat V = PMat::identity(f, M.cols());
    const std::size_t n = std::min(M.rows(), M.cols());

    bool block_zero = false;
    for (std::size_t t = 0; t < n && !block_zero; ++t) {
        for (;;) {
            // smallest-degree pivot in the remaining block, ties by row then column
            std::size_t pi = M.rows(), pj = M.cols();
            int best = -1;
            for (std::size_t i = t; i < M.rows(); ++i)
                for (std::size_t j = t; j < M.cols(); ++j) {
                    const Poly& e = D.at(i, j);
                    if (e.is_zero()) continue;
                    if (best < 0 || e.degree() < best) {
                        best = e.degree();
                        pi = i;
                        pj = j;
                    }
                }
            if (best < 0) {
                block_zero = true;
                break;
            }
            row_swap(D, t, pi);
            row_swap(U, t, pi);
            col_swap(D, t, pj);
            col_swap(V, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < M.rows(); ++i) {
                if (D.at(i, t).is_zero()) continue;
                const Poly q = Poly::quotient(D.at(i, t), D.at(t, t));
                row_op_sub(D, i, t, q);
                row_op_sub(U, i, t, q);
                if (!D.at(i, t).is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < M.cols(); ++j) {
                if (D.at(t, j).is_zero()) continue;
                const Poly q = Poly::quotient(D.at(t, j), D.at(t, t));
                col_op_sub(D, j, t, q);
                col_op_sub(V, j, t, q);
                if (!D.at(t, j).is_zero()) clean = false;
            }
            if (!clean) continue;

            // divisibility of the remaining block by the pivot
            bool fixed = false;
            for (std::size_t i = t + 1; i < M.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < M.cols() && !fixed; ++j) {
                    if (!Poly::remainder(D.at(i, j), D.at(t, t)).is_zero()) {
                        row_add(D, t, i);
                        row_add(U, t, i);
                        fixed = true;
                    }
                }
            if (!fixed) break;
        }
    }

    // monic pivots
    for (std::size_t t = 0; t < n; ++t) {
        if (D.at(t, t).is_zero() || D.at(t, t).lead().is_one()) continue;
        const FieldElem u = D.at(t, t).lead().inv();
        for (std::size_t j = 0; j < M.cols(); ++j) D.at(t, j) = D.at(t, j) * u;
        for (std::size_t j = 0; j < U.cols(); ++j) U.at(t, j) = U.at(t, j) * u;
    }
    return {U, D, V};
}

PMat hermite_form(const PMat& M) {
    const Field f = M.field();
    const std::size_t p = M.rows();
    std::vector<std::vector<Poly>> cols(M.cols(), std::vector<Poly>(p, Poly::zero(f, Var::x)));
    for (std::size_t j = 0; j < M.cols(); ++j)
        for (std::size_t i = 0; i < p; ++i) cols[j][i] = M.at(i, j);

    std::vector<std::vector<Poly>> pivot(p, std::vector<Poly>(p, Poly::zero(f, Var::x)));
    std::size_t live = cols.size();
    for (std::size_t r = p; r-- > 0;) {
        for (;;) {
            std::size_t jmin = live;
            int best = -1;
            for (std::size_t j = 0; j < live; ++j) {
                const Poly& e = cols[j][r];
                if (e.is_zero()) continue;
                if (best < 0 || e.degree() < best) {
                    best = e.degree();
                    jmin = j;
                }
            }
            if (jmin == live) throw std::invalid_argument("hermite_form: column span has deficient rank");
            bool others = false;
            for (std::size_t j = 0; j < live; ++j) {
                if (j == jmin || cols[j][r].is_zero()) continue;
                const Poly q = Poly::quotient(cols[j][r], cols[jmin][r]);
                for (std::size_t i = 0; i < p; ++i) cols[j][i] -= q * cols[jmin][i];
                if (!cols[j][r].is_zero()) others = true;
            }
            if (!others) {
                pivot[r] = cols[jmin];
                std::swap(cols[jmin], cols[live - 1]);
                --live;
                break;
            }
        }
    }

    PMat H(f, p, p);
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t i = 0; i < p; ++i) H.at(i, r) = pivot[r][i];
    // make diagonal monic, then reduce entries to the right of each pivot
    for (std::size_t r = 0; r < p; ++r) {
        const FieldElem u = H.at(r, r).lead().inv();
        for (std::size_t i = 0; i < p; ++i) H.at(i, r) = H.at(i, r) * u;
    }
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) {
            const Poly q = Poly::quotient(H.at(i, j), H.at(i, i));
            if (q.is_zero()) continue;
            for (std::size_t k = 0; k <= i; ++k) H.at(k, j) -= q * H.at(k, i);
        }
    return H;
}

TPoly char_poly(const PMat& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("char_poly: non-square");
    const Field f = M.field();
    const std::size_t n = M.rows();
    std::vector<std::vector<TPoly>> a(n, std::vector<TPoly>(n, TPoly::zero(f)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = -TPoly::from_xpoly(M.at(i, j));
            if (i == j) a[i][j] += TPoly::t(f);
        }
    TPoly c = bareiss_det(std::move(a), TPoly::constant(FieldElem::one(f)));
    if (static_cast<std::size_t>(c.deg_t()) != n || !c.is_monic_t())
        throw std::logic_error("char_poly: result not monic of the expected degree");
    return c;
}

bool divides_all(const Poly& d, const PMat& M) {
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (!Poly::remainder(M.at(i, j), d).is_zero()) return false;
    return true;
}

} // namespace cychb
