#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "cychb/field.hpp"

namespace cychb {

enum class Var : unsigned char { x = 0, t = 1 };

inline const char* var_name(Var v) { return v == Var::x ? "x" : "t"; }

/// Dense univariate polynomial over an exact field, tagged with its variable.
/// Invariant: the trailing (leading-degree) coefficient is nonzero.
class Poly {
  public:
    Poly() = default; // zero over Q in x

    static Poly zero(Field f, Var v = Var::x);
    static Poly constant(const FieldElem& c, Var v = Var::x);
    static Poly variable(Field f, Var v = Var::x);
    static Poly monomial(const FieldElem& c, int deg, Var v = Var::x);
    static Poly from_coeffs(Field f, Var v, std::vector<FieldElem> c);
    static Poly from_ints(Field f, Var v, std::initializer_list<std::int64_t> c);
    static Poly from_ints(Field f, Var v, const std::vector<std::int64_t>& c);

    Field field() const { return field_; }
    Var var() const { return var_; }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const;

    FieldElem coeff(int i) const; // 0 beyond the degree
    FieldElem lead() const;       // throws on zero
    FieldElem constant_term() const { return coeff(0); }

    Poly monic() const; // zero stays zero
    Poly derivative() const;
    FieldElem eval(const FieldElem& a) const;
    Poly compose(const Poly& inner) const; // substitute the variable by inner
    Poly with_var(Var v) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const FieldElem& s) const;
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division by a nonzero divisor: a = q*b + r, deg r < deg b.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
    static Poly quotient(const Poly& a, const Poly& b) { return divrem(a, b).first; }
    static Poly remainder(const Poly& a, const Poly& b) { return divrem(a, b).second; }
    // Throws if the remainder is nonzero.
    static Poly exact_div(const Poly& a, const Poly& b);

    std::string str() const;

    const std::vector<FieldElem>& coeffs() const { return c_; }

  private:
    Field field_;
    Var var_ = Var::x;
    std::vector<FieldElem> c_; // ascending degree

    void normalize();
    static void check_compatible(const Poly& a, const Poly& b);
};

/// Monic greatest common divisor; gcd(0,0) = 0.
Poly poly_gcd(const Poly& f, const Poly& g);

/// f with repeated roots stripped: f / gcd(f, f'), made monic.
Poly squarefree_part(const Poly& f);

} // namespace cychb
