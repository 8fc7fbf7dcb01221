#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace cychb {

// Thrown when an input is mathematically valid but outside the regime the
// library supports (reducible/singular curve, missing root, ...).  The CLI
// maps this to its own exit code, distinct from plain argument errors.
class regime_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Exact ground field: the rationals, or a prime field F_p.
class Field {
  public:
    Field() = default; // rationals

    static Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    std::string name() const;
    // Accepts "Q" or "F<p>", e.g. "F7", "F10007".
    static Field parse(const std::string& s);

    friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }
    friend bool operator!=(Field a, Field b) { return a.p_ != b.p_; }

  private:
    std::uint64_t p_ = 0; // 0 = rationals
};

/// Immutable field element; every element knows its field.
class FieldElem {
  public:
    FieldElem() = default; // 0 in Q

    static FieldElem zero(Field f);
    static FieldElem one(Field f);
    static FieldElem of(Field f, std::int64_t n);
    static FieldElem ratio(Field f, std::int64_t num, std::int64_t den);
    static FieldElem from_string(Field f, const std::string& s);

    Field field() const { return p_ ? Field::prime(p_) : Field::rationals(); }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator-() const;
    FieldElem inv() const; // throws on zero
    FieldElem pow(std::int64_t e) const;

    // Prime-field value in [0,p); only valid when the field is F_p.
    std::uint64_t residue() const;

    // Underlying rational; only valid over Q.
    const mpq_class& rational_value() const;

    std::string str() const;

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
    FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
    FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }

  private:
    // invariant: p_ != 0 holds a residue, p_ == 0 holds a rational
    std::uint64_t p_ = 0;
    std::variant<std::uint64_t, mpq_class> v_{std::in_place_type<mpq_class>};

    std::uint64_t res() const { return std::get<std::uint64_t>(v_); }
    std::uint64_t& res() { return std::get<std::uint64_t>(v_); }
    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    mpq_class& rat() { return std::get<mpq_class>(v_); }

    static void check_same(const FieldElem& a, const FieldElem& b);
};

} // namespace cychb
