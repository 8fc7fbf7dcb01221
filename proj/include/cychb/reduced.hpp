#pragma once

#include <optional>

#include "cychb/matrix.hpp"

namespace cychb {

/// Element of the central reduction A^(m): the free R[t]-algebra on the m^2
/// symbols b(i,j) (class of the unique path v_j -> v_i of length (i-j) mod m),
/// with product b(i,j).b(j,k) = t^w b(i,k), w = 1 when the lengths wrap past m.
class ReducedElem {
  public:
    ReducedElem(Field f, int m);

    static ReducedElem zero(Field f, int m) { return ReducedElem(f, m); }
    static ReducedElem basis(Field f, int m, int i, int j);
    static ReducedElem unit(Field f, int m);
    /// Class of the arrow a_i; equals b(i+1,i) for m >= 2 and t*b(0,0) for m = 1.
    static ReducedElem arrow_class(Field f, int m, int i);

    Field field() const { return field_; }
    int m() const { return m_; }
    bool is_zero() const;

    const TPoly& coeff(int i, int j) const;
    TPoly& coeff(int i, int j);

    ReducedElem operator-() const;
    friend ReducedElem operator+(const ReducedElem& a, const ReducedElem& b);
    friend ReducedElem operator-(const ReducedElem& a, const ReducedElem& b);
    friend ReducedElem operator*(const ReducedElem& a, const ReducedElem& b);
    ReducedElem operator*(const TPoly& s) const;
    ReducedElem& operator+=(const ReducedElem& b) { return *this = *this + b; }
    ReducedElem& operator-=(const ReducedElem& b) { return *this = *this - b; }

    friend bool operator==(const ReducedElem& a, const ReducedElem& b);
    friend bool operator!=(const ReducedElem& a, const ReducedElem& b) { return !(a == b); }

    std::string str() const;

  private:
    Field field_;
    int m_;
    std::vector<TPoly> c_; // row-major m x m, entry (i,j) = coefficient of b(i,j)

    static void check_same(const ReducedElem& a, const ReducedElem& b);
};

/// Number of basis symbols of A^(m), counted by enumerating the paths of
/// length < m between all vertex pairs; equals m^2.
int rank_check(int m);

/// Finite-dimensional algebra given by a multiplication table on named basis
/// elements: table[a][b] = coordinates of (basis_a * basis_b).
struct TableAlgebra {
    Field field;
    std::size_t dim = 0;
    std::vector<std::string> names;
    std::vector<std::vector<std::vector<FieldElem>>> table;

    std::vector<FieldElem> multiply(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) const;
    bool is_associative() const;
    bool unit_law_holds(const std::vector<FieldElem>& unit) const;
};

/// The fiber of A^(m) at (x0, t0): all structure constants evaluated.
TableAlgebra fiber_at(Field f, int m, const FieldElem& x0, const FieldElem& t0);

/// Coordinates of the unit sum_j b(j,j) in the fiber basis.
std::vector<FieldElem> fiber_unit(Field f, int m);

struct MatrixIso {
    std::vector<KMat> images; // images[i*m+j] = image of b(i,j) as an m x m matrix
    bool verified = false;    // all m^4 basis products transported
};

/// The basis map b(i,j) |-> s0^((i-j) mod m) E(i,j) onto the m x m matrix
/// algebra; requires t0 != 0 and s0^m = t0.
MatrixIso matrix_iso(Field f, int m, const FieldElem& t0, const FieldElem& s0);

/// Exhaustive search for an m-th root of t0 in a prime field.
std::optional<FieldElem> find_mth_root(Field f, const FieldElem& t0, int m);

/// True iff the two-sided ideal generated by every single basis element is the
/// whole algebra (the Wedderburn-style argument of the matrix-fiber proof;
/// valid for bases aligned with the Peirce components, as here).
bool simplicity_check(const TableAlgebra& alg);

/// True iff every element of t-degree <= tcap and x-degree <= xcap commuting
/// with all basis symbols is an R[t]-multiple of the unit.
bool reduced_center_check(Field f, int m, int xcap = 2, int tcap = 2);

} // namespace cychb
