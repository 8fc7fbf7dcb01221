#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cychb/tpoly.hpp"

namespace cychb {

/// Dense matrix over the ground field.
class KMat {
  public:
    KMat() = default;
    KMat(Field f, std::size_t rows, std::size_t cols);
    static KMat identity(Field f, std::size_t n);
    static KMat from_ints(Field f, const std::vector<std::vector<std::int64_t>>& a);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const FieldElem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    KMat operator-() const;
    friend KMat operator+(const KMat& a, const KMat& b);
    friend KMat operator-(const KMat& a, const KMat& b);
    friend KMat operator*(const KMat& a, const KMat& b);
    KMat operator*(const FieldElem& s) const;
    friend bool operator==(const KMat& a, const KMat& b);
    friend bool operator!=(const KMat& a, const KMat& b) { return !(a == b); }

    bool is_zero() const;
    KMat transpose() const;
    FieldElem det() const;
    std::size_t rank() const;
    std::optional<KMat> inverse() const;

    /// Reduced row echelon form (in place); returns pivot columns.
    std::vector<std::size_t> rref();

    /// Basis of the right nullspace, as columns.
    std::vector<std::vector<FieldElem>> nullspace() const;

    /// One solution of A x = b, if any.
    std::optional<std::vector<FieldElem>> solve(const std::vector<FieldElem>& b) const;

  private:
    Field field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElem> a_;

    static void check_same(const KMat& a, const KMat& b, bool mul);
};

/// Span utilities for row vectors over k.
std::size_t span_rank(Field f, const std::vector<std::vector<FieldElem>>& vecs);
bool span_contains(Field f, const std::vector<std::vector<FieldElem>>& span, const std::vector<FieldElem>& v);
bool spans_equal(Field f, const std::vector<std::vector<FieldElem>>& a, const std::vector<std::vector<FieldElem>>& b);

/// Dense matrix over k[x].
class PMat {
  public:
    PMat() = default;
    PMat(Field f, std::size_t rows, std::size_t cols); // zero matrix
    static PMat identity(Field f, std::size_t n);
    static PMat from_ints(Field f, const std::vector<std::vector<std::vector<std::int64_t>>>& a);
    static PMat scalar(Field f, std::size_t n, const Poly& d); // d * Id

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Poly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    PMat operator-() const;
    friend PMat operator+(const PMat& a, const PMat& b);
    friend PMat operator-(const PMat& a, const PMat& b);
    friend PMat operator*(const PMat& a, const PMat& b);
    PMat operator*(const Poly& s) const;
    PMat operator*(const FieldElem& s) const;
    friend bool operator==(const PMat& a, const PMat& b);
    friend bool operator!=(const PMat& a, const PMat& b) { return !(a == b); }

    bool is_zero() const;
    bool is_identity() const;
    PMat transpose() const;
    KMat eval_x(const FieldElem& x0) const;
    int max_degree() const;

    Poly det() const;     // Bareiss
    PMat adjugate() const; // cofactor expansion; adj(A)*A = det(A)*Id
    PMat pow(std::size_t e) const;

    std::vector<Poly> mul_vec(const std::vector<Poly>& v) const;
    PMat map(const std::function<Poly(const Poly&)>& fn) const;

  private:
    Field field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Poly> a_;

    Poly minor_det(std::size_t skip_row, std::size_t skip_col) const;
    static void check_same(const PMat& a, const PMat& b, bool mul);
};

struct SnfResult {
    PMat U, D, V; // U*M*V = D, U and V unimodular, D diagonal with d_i | d_{i+1}, monic
};

/// Smith normal form over k[x]; pivots chosen by smallest degree, ties by
/// lowest row then column index.
SnfResult smith_normal_form(const PMat& M);

/// Canonical column Hermite form of the lattice spanned by the columns of M:
/// upper triangular, monic diagonal, off-diagonal degrees reduced.
/// Requires the column span to have full rank = rows; throws otherwise.
PMat hermite_form(const PMat& M);

/// det(t*Id - M) as a monic polynomial in t over k[x]; throws on non-square.
TPoly char_poly(const PMat& M);

/// Whether the polynomial divides every entry.
bool divides_all(const Poly& d, const PMat& M);

} // namespace cychb
