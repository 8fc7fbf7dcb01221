#include "cychb/quiver.hpp"

namespace cychb {

std::optional<Path> compose_paths(int m, const Path& p, const Path& q) {
    if (p.src != q.target(m)) return std::nullopt;
    return Path{q.src, q.len + p.len};
}

PathElem PathElem::path(Field f, int m, const Path& p, const Poly& coeff) {
    if (p.src < 0 || p.src >= m || p.len < 0) throw std::invalid_argument("PathElem::path: bad path");
    PathElem e(f, m);
    e.insert(p, coeff);
    return e;
}

PathElem PathElem::unit(Field f, int m) {
    PathElem e(f, m);
    for (int i = 0; i < m; ++i) e.insert(Path{i, 0}, Poly::from_ints(f, Var::x, {1}));
    return e;
}

int PathElem::max_length() const {
    int len = -1;
    for (const auto& [p, c] : c_) len = std::max(len, p.len);
    return len;
}

Poly PathElem::coeff(const Path& p) const {
    auto it = c_.find(p);
    return it == c_.end() ? Poly::zero(field_, Var::x) : it->second;
}

void PathElem::insert(const Path& p, const Poly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = c_.try_emplace(p, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) c_.erase(it);
    }
}

void PathElem::check_same(const PathElem& a, const PathElem& b) {
    if (a.field_ != b.field_ || a.m_ != b.m_) throw std::invalid_argument("PathElem: mixed algebras");
}

PathElem PathElem::operator-() const {
    PathElem r = *this;
    for (auto& [p, c] : r.c_) c = -c;
    return r;
}

PathElem operator+(const PathElem& a, const PathElem& b) {
    PathElem::check_same(a, b);
    PathElem r = a;
    for (const auto& [p, c] : b.c_) r.insert(p, c);
    return r;
}

PathElem operator-(const PathElem& a, const PathElem& b) { return a + (-b); }

PathElem operator*(const PathElem& a, const PathElem& b) {
    PathElem::check_same(a, b);
    PathElem r(a.field_, a.m_);
    for (const auto& [p, cp] : a.c_)
        for (const auto& [q, cq] : b.c_)
            if (auto pq = compose_paths(a.m_, p, q)) r.insert(*pq, cp * cq);
    return r;
}

PathElem PathElem::operator*(const Poly& s) const {
    PathElem r(field_, m_);
    for (const auto& [p, c] : c_) r.insert(p, c * s);
    return r;
}

bool operator==(const PathElem& a, const PathElem& b) {
    PathElem::check_same(a, b);
    return a.c_ == b.c_;
}

std::map<std::pair<int, int>, PathElem> PathElem::idempotent_decompose() const {
    std::map<std::pair<int, int>, PathElem> out;
    for (const auto& [p, c] : c_) {
        auto key = std::make_pair(p.target(m_), p.src);
        auto [it, fresh] = out.try_emplace(key, PathElem(field_, m_));
        it->second.insert(p, c);
    }
    return out;
}

std::string PathElem::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : c_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*";
        if (p.len == 0)
            s += "e" + std::to_string(p.src);
        else
            s += "p(" + std::to_string(p.src) + ",len=" + std::to_string(p.len) + ")";
    }
    return s;
}

PathElem diagonal_embed(Field f, int m, int l, const Poly& coeff) {
    if (l < 0) throw std::invalid_argument("diagonal_embed: negative degree");
    PathElem r(f, m);
    for (int i = 0; i < m; ++i) r += PathElem::path(f, m, Path{i, m * l}, coeff);
    return r;
}

namespace {

std::vector<Path> paths_up_to(int m, int N) {
    std::vector<Path> ps;
    for (int len = 0; len <= N; ++len)
        for (int s = 0; s < m; ++s) ps.push_back(Path{s, len});
    return ps;
}

std::size_t path_index(int m, const Path& p) {
    return static_cast<std::size_t>(p.len) * static_cast<std::size_t>(m) + static_cast<std::size_t>(p.src);
}

} // namespace

std::vector<PathElem> truncated_center(Field f, int m, int N, int xdeg_cap) {
    if (N < 0) throw std::invalid_argument("truncated_center: N must be nonnegative");
    (void)xdeg_cap; // the commutation system is degreewise-constant; one solve serves all degrees
    const auto basis = paths_up_to(m, N);
    const std::size_t nb = basis.size();

    std::vector<PathElem> gens;
    for (int i = 0; i < m; ++i) gens.push_back(PathElem::idempotent(f, m, i));
    for (int i = 0; i < m; ++i) gens.push_back(PathElem::arrow(f, m, i));

    // one equation row per (generator, result path of length <= N+1)
    const std::size_t out = static_cast<std::size_t>(N + 2) * static_cast<std::size_t>(m);
    KMat sys(f, gens.size() * out, nb);
    for (std::size_t col = 0; col < nb; ++col) {
        const PathElem z = PathElem::path(f, m, basis[col], Poly::from_ints(f, Var::x, {1}));
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const PathElem comm = z * gens[g] - gens[g] * z;
            for (const auto& [p, c] : comm.terms()) {
                if (c.degree() > 0) throw std::logic_error("truncated_center: nonconstant commutator coefficient");
                sys.at(g * out + path_index(m, p), col) = c.coeff(0);
            }
        }
    }

    std::vector<PathElem> result;
    for (const auto& v : sys.nullspace()) {
        PathElem z(f, m);
        for (std::size_t col = 0; col < nb; ++col)
            if (!v[col].is_zero()) z += PathElem::path(f, m, basis[col], Poly::constant(v[col], Var::x));
        result.push_back(std::move(z));
    }
    return result;
}

bool pushforward_kernel_check(Field f, int m, int N) {
    if (N < m) throw std::invalid_argument("pushforward_kernel_check: truncation too small for the generator");

    // homogeneous slice of total degree delta: monomials t^d (x) p with
    // m*d + len(p) == delta; the multiplication map sends one to the path
    // c^d . p of length delta at the same source.
    for (int delta = 0; delta <= N; ++delta) {
        struct Mono {
            int d;
            Path p;
        };
        std::vector<Mono> slice;
        for (int d = 0; m * d <= delta; ++d) {
            const int len = delta - m * d;
            for (int s = 0; s < m; ++s) slice.push_back({d, Path{s, len}});
        }
        const std::size_t nb = slice.size();

        // multiplication map into the m paths of length delta
        KMat mu(f, static_cast<std::size_t>(m), nb);
        for (std::size_t col = 0; col < nb; ++col) mu.at(static_cast<std::size_t>(slice[col].p.src), col) = FieldElem::one(f);
        auto kernel = mu.nullspace();

        // span of the in-slice products x.(1 (x) Delta(t) - t (x) 1).y
        auto mono_index = [&](int d, const Path& p) -> std::size_t {
            for (std::size_t i = 0; i < nb; ++i)
                if (slice[i].d == d && slice[i].p == p) return i;
            throw std::logic_error("pushforward_kernel_check: monomial out of slice");
        };
        std::vector<std::vector<FieldElem>> ideal;
        for (int d = 0; m * d + m <= delta; ++d) {
            const int rest = delta - m * d - m; // len(p) + len(q)
            for (int lp = 0; lp <= rest; ++lp) {
                const int lq = rest - lp;
                for (int sq = 0; sq < m; ++sq) {
                    // p runs from the target of q; the product is
                    // t^d (x) p.c.q - t^(d+1) (x) p.q, both at source sq
                    std::vector<FieldElem> v(nb, FieldElem::zero(f));
                    v[mono_index(d, Path{sq, lp + lq + m})] += FieldElem::one(f);
                    v[mono_index(d + 1, Path{sq, lp + lq})] -= FieldElem::one(f);
                    ideal.push_back(std::move(v));
                }
            }
        }
        if (!spans_equal(f, kernel, ideal)) return false;
    }
    return true;
}

} // namespace cychb
