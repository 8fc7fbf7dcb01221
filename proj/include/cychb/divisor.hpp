#pragma once

#include <optional>

#include "cychb/higgs.hpp"

namespace cychb {

// ---------------------------------------------------------------------------
// Curve certificates

enum class SmoothVerdict { Smooth, Singular, Unknown };

struct SmoothCertificate {
    SmoothVerdict verdict = SmoothVerdict::Unknown;
    Poly resultant_gcd; // gcd(Res_t(c, c_t), Res_t(c, c_x)) in k[x]
    std::optional<std::pair<FieldElem, FieldElem>> witness; // a singular point (x0, t0)
};

/// Smooth when the resultant gcd is a nonzero constant; Singular with a
/// witness when a rational common zero of (c, c_t, c_x) is found; Unknown
/// otherwise. Requires c monic in t of positive t-degree.
SmoothCertificate smoothness_certificate(const TPoly& c);

enum class IrredVerdict { Irreducible, Reducible, Unknown };

struct IrredCertificate {
    IrredVerdict verdict = IrredVerdict::Unknown;
    std::optional<TPoly> factor; // a proper monic factor, when Reducible
};

/// Irreducibility of c over k(x), for c monic in t. Complete for t-degree
/// <= 3 over prime fields (specialization test plus Hensel lifting of linear
/// factors); degree >= 4 may return Unknown.
IrredCertificate irreducibility_certificate(const TPoly& c);

// ---------------------------------------------------------------------------
// The affine curve ring S = k[x][t]/(c) on the power basis 1, t, .., t^(p-1)

struct CurveRing {
    TPoly c;    // monic in t, deg_t = p >= 1
    int p = 0;
    PMat mult_t; // multiplication by the class of t on the power basis

    Field field() const { return c.field(); }
};

CurveRing make_curve_ring(const TPoly& c);

/// Product of two S-elements in power-basis coordinates.
std::vector<Poly> curve_multiply(const CurveRing& S, const std::vector<Poly>& a, const std::vector<Poly>& b);

/// Multiplication-by-f matrix on the power basis, f of t-degree < p.
PMat multiplication_matrix(const CurveRing& S, const TPoly& f);

// ---------------------------------------------------------------------------
// Effective divisors as finite-colength ideal lattices in Hermite form

struct EffectiveDivisor {
    PMat lattice; // p x p column Hermite form; columns span the ideal over k[x]
    int length = 0; // deg det = dim_k (S / I)

    friend bool operator==(const EffectiveDivisor& a, const EffectiveDivisor& b) {
        return a.lattice == b.lattice;
    }
    friend bool operator!=(const EffectiveDivisor& a, const EffectiveDivisor& b) { return !(a == b); }
};

/// Annihilator of coker(psi) as an ideal lattice of S, where psi is a
/// t-equivariant injective map between lattices supported on S's curve.
/// Throws on non-equivariance; det psi = 0 is reported as a regime error.
EffectiveDivisor divisor_of_map(const CurveRing& S, const PMat& psi, const PMat& T_src, const PMat& T_dst);

/// div(f) for a non-zerodivisor f in S (t-degree < p).
EffectiveDivisor divisor_of_function(const CurveRing& S, const TPoly& f);

/// Ideal product, lengths add.
EffectiveDivisor sum_divisors(const CurveRing& S, const EffectiveDivisor& a, const EffectiveDivisor& b);

/// Whether the lattice is closed under the t-action (an ideal, not just a
/// sublattice).
bool is_t_stable(const CurveRing& S, const PMat& lattice);

/// Membership of a power-basis vector in the column lattice.
bool lattice_contains(const PMat& lattice, const std::vector<Poly>& v);

/// Hermite basis of the lattice {(f_0..f_{p-1}) in k[x]^p : sum_l f_l P_l = 0
/// mod d}; always contains d * k[x]^p, so the solve is finite (degreewise
/// over k modulo d).
PMat annihilator_lattice(const std::vector<PMat>& P, const Poly& d);

/// Rank-one certificate for an S-lattice over a smooth irreducible curve:
/// char_poly(F.T) == c. Throws regime_error when c is not certified smooth
/// and irreducible.
bool invertibility_certificate(const SLattice& F, const TPoly& c);

} // namespace cychb
