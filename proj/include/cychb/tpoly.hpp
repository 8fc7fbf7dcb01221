#pragma once

#include <vector>

#include "cychb/poly.hpp"

namespace cychb {

/// Element of k[x][t]: dense in t, with k[x] coefficients.
/// Invariant: the leading t-coefficient is a nonzero polynomial.
class TPoly {
  public:
    TPoly() = default;

    static TPoly zero(Field f);
    static TPoly from_xpoly(const Poly& px); // t-degree 0
    static TPoly constant(const FieldElem& c);
    static TPoly t(Field f); // the variable t
    static TPoly from_tcoeffs(Field f, std::vector<Poly> c);
    /// rows = ascending t-degree, each row ascending x-degree
    static TPoly from_ints(Field f, const std::vector<std::vector<std::int64_t>>& c);

    Field field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    int deg_t() const { return static_cast<int>(c_.size()) - 1; }
    int deg_x() const;

    Poly tcoeff(int i) const; // Poly in x; zero beyond degree
    Poly lead_t() const;      // throws on zero
    bool is_monic_t() const;

    /// Smallest i with t-coefficient nonzero (t-adic valuation); -1 for zero.
    int t_valuation() const;
    TPoly strip_t_power(int k) const; // divide by t^k (requires valuation >= k)

    TPoly derivative_t() const;
    TPoly derivative_x() const;

    Poly eval_t(const Poly& g) const;       // substitute t = g(x), result in k[x]
    Poly eval_x(const FieldElem& x0) const; // result in k[t]
    FieldElem eval(const FieldElem& x0, const FieldElem& t0) const;
    TPoly shift_x(const FieldElem& a) const; // x -> x + a

    TPoly operator-() const;
    friend TPoly operator+(const TPoly& a, const TPoly& b);
    friend TPoly operator-(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    TPoly operator*(const FieldElem& s) const;
    TPoly operator*(const Poly& s) const; // s in k[x]
    TPoly& operator+=(const TPoly& b) { return *this = *this + b; }
    TPoly& operator-=(const TPoly& b) { return *this = *this - b; }
    TPoly& operator*=(const TPoly& b) { return *this = *this * b; }

    friend bool operator==(const TPoly& a, const TPoly& b);
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

    /// Division by a divisor monic in t: a = q*b + r with deg_t r < deg_t b.
    static std::pair<TPoly, TPoly> divrem_monic(const TPoly& a, const TPoly& b);
    /// Exact division in k[x][t]; throws if the quotient does not exist.
    static TPoly exact_div(const TPoly& a, const TPoly& b);

    /// gcd of the t-coefficients in k[x] (monic), zero for the zero poly.
    Poly content_x() const;
    TPoly primitive_part_x() const;

    std::string str() const;

    const std::vector<Poly>& tcoeffs() const { return c_; }

  private:
    Field field_;
    std::vector<Poly> c_; // c_[i] = coefficient of t^i, in k[x]

    void normalize();
    static void check_same(const TPoly& a, const TPoly& b);
};

/// Primitive gcd in k[x][t] via pseudo-remainders, normalized so the leading
/// t-coefficient is monic in x. gcd(0,0) = 0.
TPoly tpoly_gcd_primitive(const TPoly& f, const TPoly& g);

/// Squarefree part with respect to t of a polynomial monic in t, again monic.
TPoly squarefree_part_t(const TPoly& f);

/// Res_t(f, g) as a polynomial in x (Sylvester determinant, f-rows first).
Poly resultant_t(const TPoly& f, const TPoly& g);

} // namespace cychb
