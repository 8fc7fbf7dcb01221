#pragma once

#include <map>
#include <optional>

#include "cychb/matrix.hpp"

namespace cychb {

/// The cyclic quiver Q(m): vertices v_0..v_{m-1}, arrows a_i : v_i -> v_{i+1}.
struct CyclicQuiver {
    int m;
    explicit CyclicQuiver(int m_) : m(m_) {
        if (m < 1) throw std::invalid_argument("CyclicQuiver: m must be positive");
    }
};

/// A path of Q(m) is determined by its source and length; the target is
/// source + length mod m. Length-0 paths are the idempotents e_i.
struct Path {
    int src = 0;
    int len = 0;

    int target(int m) const { return ((src + len) % m + m) % m; }

    friend bool operator==(const Path& a, const Path& b) { return a.src == b.src && a.len == b.len; }
    friend bool operator<(const Path& a, const Path& b) {
        return a.len != b.len ? a.len < b.len : a.src < b.src;
    }
};

/// Concatenation p.q (q first, then p); empty when tail(p) != head(q).
std::optional<Path> compose_paths(int m, const Path& p, const Path& q);

/// Element of the twisted path algebra A(m) in the trivialized local model:
/// a finite k[x]-combination of paths, graded by path length.
class PathElem {
  public:
    PathElem(Field f, int m) : field_(f), m_(m) {
        if (m < 1) throw std::invalid_argument("PathElem: m must be positive");
    }

    static PathElem zero(Field f, int m) { return PathElem(f, m); }
    static PathElem path(Field f, int m, const Path& p, const Poly& coeff);
    static PathElem idempotent(Field f, int m, int i) { return path(f, m, Path{i, 0}, Poly::from_ints(f, Var::x, {1})); }
    static PathElem arrow(Field f, int m, int i) { return path(f, m, Path{i, 1}, Poly::from_ints(f, Var::x, {1})); }
    static PathElem loop(Field f, int m, int i) { return path(f, m, Path{i, m}, Poly::from_ints(f, Var::x, {1})); }
    static PathElem unit(Field f, int m);

    Field field() const { return field_; }
    int m() const { return m_; }
    bool is_zero() const { return c_.empty(); }
    int max_length() const; // -1 for zero

    Poly coeff(const Path& p) const;
    const std::map<Path, Poly>& terms() const { return c_; }

    PathElem operator-() const;
    friend PathElem operator+(const PathElem& a, const PathElem& b);
    friend PathElem operator-(const PathElem& a, const PathElem& b);
    friend PathElem operator*(const PathElem& a, const PathElem& b); // bilinear concatenation
    PathElem operator*(const Poly& s) const;
    PathElem& operator+=(const PathElem& b) { return *this = *this + b; }
    PathElem& operator*=(const PathElem& b) { return *this = *this * b; }

    friend bool operator==(const PathElem& a, const PathElem& b);
    friend bool operator!=(const PathElem& a, const PathElem& b) { return !(a == b); }

    /// Components e_i * a * e_j of the idempotent decomposition, keyed by
    /// (target i, source j); zero components omitted.
    std::map<std::pair<int, int>, PathElem> idempotent_decompose() const;

    std::string str() const;

  private:
    Field field_;
    int m_;
    std::map<Path, Poly> c_;

    void insert(const Path& p, const Poly& coeff);
    static void check_same(const PathElem& a, const PathElem& b);
};

/// coeff * sum_i (c_i)^l: the image of the degree-l piece of the diagonal map
/// into A(m), a sum of length-m*l loops.
PathElem diagonal_embed(Field f, int m, int l, const Poly& coeff);

/// k[x]-basis of the degree-truncated center: elements of length <= N
/// commuting with every idempotent and arrow. The commutation system has
/// constant coefficients in the path basis, so it is solved once over k and
/// the same solution space serves every x-degree up to `xdeg_cap`.
std::vector<PathElem> truncated_center(Field f, int m, int N, int xdeg_cap = 2);

/// Degreewise comparison (total degree <= N, t weighted by m) of the kernel of
/// R[t] (x) A(m) -> A(m), t |-> sum_i c_i, with the two-sided ideal generated
/// by 1 (x) Delta(t) - t (x) 1. Requires N >= m.
bool pushforward_kernel_check(Field f, int m, int N);

} // namespace cychb
