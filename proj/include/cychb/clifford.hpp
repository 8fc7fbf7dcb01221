#pragma once

#include "cychb/reduced.hpp"

namespace cychb {

/// Trace on A^(2): sum of the two idempotent coefficients.
TPoly trace_map(const ReducedElem& a);

struct TraceDecomposition {
    TPoly scalar;         // Tr(a), so a = scalar/2 (e0+e1) + traceless
    ReducedElem traceless;
};

/// Unique splitting along A^(2) = O_Y(e0+e1) (+) ker(Tr); char != 2.
TraceDecomposition traceless_decompose(const ReducedElem& a);

/// Tr vanishes on all commutators: exhaustive over the 4x4 basis plus the
/// given number of seeded random pairs.
bool commutator_trace_check(Field f, int samples = 16);

/// Symmetric Gram matrix over k[x][t] of a ternary quadratic form.
struct TernaryQuadraticForm {
    Field field;
    std::array<std::array<TPoly, 3>, 3> gram;

    TPoly evaluate(const std::array<TPoly, 3>& v) const; // v^T B v
    TPoly discriminant() const;                          // det(2B)
};

/// q(a,b,c) = t a^2 + b c, whose discriminant locus is exactly {t = 0}.
/// Rejected in characteristic 2.
TernaryQuadraticForm build_quadratic_form(Field f);

/// Even Clifford algebra of a ternary form on the basis {1, v12, v13, v23},
/// v_ij = g_i g_j, with the relations g_i g_j + g_j g_i = 2 B_ij.
struct EvenCliffordAlgebra {
    Field field;
    std::array<std::string, 4> names;
    // table[a][b][k] = coefficient of basis k in (basis_a * basis_b)
    std::array<std::array<std::array<TPoly, 4>, 4>, 4> table;

    std::array<TPoly, 4> multiply(const std::array<TPoly, 4>& a, const std::array<TPoly, 4>& b) const;
    bool is_associative() const;

    /// Fiber at t = t0 (the structure constants do not involve x).
    TableAlgebra fiber_at(const FieldElem& t0) const;
};

EvenCliffordAlgebra even_clifford(const TernaryQuadraticForm& q);

struct CliffordIsoReport {
    bool ok = false;
    // images of e0, b(0,1), b(1,0), e1 in the basis {1, v12, v13, v23}
    std::array<std::array<TPoly, 4>, 4> images;
    // first failing product, when !ok: the basis pair and both sides in
    // Clifford coordinates
    std::string failure;
    std::array<std::string, 2> failing_pair;
    std::array<std::string, 4> lhs, rhs;
    bool unique_up_to_units = false;
};

/// Verifies e0 -> v23, e1 -> 1 - v23, b(0,1) -> -v12, b(1,0) -> v13 as an
/// algebra isomorphism A^(2) ~ Cl0(q), as polynomial identities in (x, t),
/// and checks the map is unique up to the expected unit rescalings.
CliffordIsoReport clifford_iso_check(Field f);

/// At t0 != 0 both fibers are simple and the isomorphism specializes; at
/// t0 = 0 both are non-simple and the isomorphism still holds.
bool fiber_clifford_check(Field f, const FieldElem& t0);

} // namespace cychb
