// Test-side oracles, kept independent of the library's computation paths:
// naive cofactor determinants, brute-force divisor search, direct path
// concatenation, loop-to-t reduction, and a tiny F_49 for point scans.
#pragma once

#include <map>
#include <vector>

#include "cychb/instance.hpp"
#include "cychb/quiver.hpp"
#include "cychb/reduced.hpp"

namespace oracles {

using namespace cychb;

// determinant by first-row cofactor expansion over any ring with +,-,*
template <class R>
R cofactor_det(const std::vector<std::vector<R>>& a, const R& one) {
    const std::size_t n = a.size();
    if (n == 0) return one;
    if (n == 1) return a[0][0];
    R acc = one - one;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<R>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<R> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            sub.push_back(std::move(row));
        }
        const R term = a[0][j] * cofactor_det(sub, one);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

inline TPoly cofactor_char_poly(const PMat& M) {
    const Field f = M.field();
    const std::size_t n = M.rows();
    std::vector<std::vector<TPoly>> a(n, std::vector<TPoly>(n, TPoly::zero(f)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = -TPoly::from_xpoly(M.at(i, j));
            if (i == j) a[i][j] += TPoly::t(f);
        }
    return cofactor_det(a, TPoly::constant(FieldElem::one(f)));
}

// every monic polynomial over F_p of degree exactly d, by counting
inline std::vector<Poly> all_monic(Field f, Var v, int d) {
    std::vector<Poly> out;
    const std::int64_t p = static_cast<std::int64_t>(f.characteristic());
    std::vector<std::int64_t> digits(static_cast<std::size_t>(d), 0);
    for (;;) {
        std::vector<std::int64_t> coeffs = digits;
        coeffs.push_back(1);
        out.push_back(Poly::from_ints(f, v, coeffs));
        int i = 0;
        while (i < d && ++digits[static_cast<std::size_t>(i)] == p) digits[static_cast<std::size_t>(i++)] = 0;
        if (i == d) break;
    }
    return out;
}

// greatest-degree monic common divisor by exhaustive search (small fields)
inline Poly brute_force_gcd(const Poly& a, const Poly& b) {
    const Field f = a.field();
    Poly best = Poly::from_ints(f, a.var(), {1});
    const int cap = std::min(a.degree(), b.degree());
    for (int d = 1; d <= cap; ++d)
        for (const Poly& cand : all_monic(f, a.var(), d))
            if (Poly::remainder(a, cand).is_zero() && Poly::remainder(b, cand).is_zero()) best = cand;
    return best;
}

// direct product table of the path algebra: paths multiply by concatenation
struct OraclePath {
    int src, len;
};

inline std::map<std::pair<int, int>, Poly> concat_product(
    Field f, int m, const std::map<std::pair<int, int>, Poly>& a, const std::map<std::pair<int, int>, Poly>& b) {
    // keys are (src, len); p * q concatenates when src(p) == (src(q)+len(q)) mod m
    std::map<std::pair<int, int>, Poly> out;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            if (pa.first != (pb.first + pb.second) % m) continue;
            const auto key = std::make_pair(pb.first, pa.second + pb.second);
            auto [it, fresh] = out.try_emplace(key, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

inline std::map<std::pair<int, int>, Poly> as_table(const PathElem& e) {
    std::map<std::pair<int, int>, Poly> out;
    for (const auto& [p, c] : e.terms()) out.emplace(std::make_pair(p.src, p.len), c);
    return out;
}

// the loop-to-t reduction of a path: p = c_target^(len/m) . p_short
inline ReducedElem reduce_path(Field f, int m, const Path& p, const Poly& coeff) {
    const int wraps = p.len / m;
    const int rem = p.len % m;
    const int tgt = p.target(m);
    const int src = (p.src + 0) % m;
    ReducedElem out(f, m);
    std::vector<Poly> tc(static_cast<std::size_t>(wraps), Poly::zero(f, Var::x));
    tc.push_back(coeff);
    (void)rem;
    out.coeff(tgt, src) = TPoly::from_tcoeffs(f, std::move(tc));
    return out;
}

inline ReducedElem reduce_elem(const PathElem& e) {
    ReducedElem out(e.field(), e.m());
    for (const auto& [p, c] : e.terms()) out = out + reduce_path(e.field(), e.m(), p, c);
    return out;
}

// F_49 = F_7[w]/(w^2 - 3), for scanning Jacobian systems over the closure
struct F49 {
    int a = 0, b = 0; // a + b w

    friend F49 operator+(F49 u, F49 v) { return {(u.a + v.a) % 7, (u.b + v.b) % 7}; }
    friend F49 operator-(F49 u, F49 v) { return {(u.a - v.a + 7) % 7, (u.b - v.b + 7) % 7}; }
    friend F49 operator*(F49 u, F49 v) {
        return {(u.a * v.a + 3 * u.b * v.b) % 7, (u.a * v.b + u.b * v.a) % 7};
    }
    bool is_zero() const { return a == 0 && b == 0; }
};

inline F49 f49_pow(F49 u, int e) {
    F49 acc{1, 0};
    for (int i = 0; i < e; ++i) acc = acc * u;
    return acc;
}

// evaluate a TPoly over F_7 at an F_49 point
inline F49 eval_f49(const TPoly& c, F49 x0, F49 t0) {
    F49 acc{0, 0};
    for (int i = c.deg_t(); i >= 0; --i) {
        F49 cx{0, 0};
        const Poly px = c.tcoeff(i);
        for (int d = px.degree(); d >= 0; --d) {
            const F49 coef{static_cast<int>(px.coeff(d).residue()), 0};
            cx = cx * x0 + coef;
        }
        acc = acc * t0 + cx;
    }
    return acc;
}

} // namespace oracles
