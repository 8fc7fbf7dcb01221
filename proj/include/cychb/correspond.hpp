#pragma once

#include "cychb/divisor.hpp"

namespace cychb {

/// The reduced spectral data of the equal-dimension regime: the common smooth
/// irreducible curve, the first line-bundle lattice, and the divisor chain.
struct SpectralData {
    Field field;
    int m = 0;
    TPoly c;
    SLattice L0;
    std::vector<EffectiveDivisor> divisors;
};

/// Fractional lattice num/den inside k(x)^p; canonical after normalize().
struct FracLattice {
    PMat num;
    Poly den;

    void normalize(); // Hermite num, monic den, cancel common factors
    friend bool operator==(const FracLattice& a, const FracLattice& b) {
        return a.num == b.num && a.den == b.den;
    }
};

/// (S : I) = I^{-1} for a full-colength ideal lattice I.
FracLattice inverse_ideal(const CurveRing& S, const PMat& ideal);

/// Product of a fractional lattice with an ideal inverse and friends.
FracLattice mult_frac(const CurveRing& S, const FracLattice& a, const FracLattice& b);

/// Higgs data (dims (p,...,p)) -> (c, L0, D_0..D_{m-1}).
/// Throws regime_error when preconditions of the reduced regime fail.
SpectralData forward_spectral_data(const CyclicHiggsData& H);

/// sum of the divisors equals div(t) on the curve, as Hermite lattices.
bool check_divisor_relation(const CurveRing& S, const std::vector<EffectiveDivisor>& divisors);

/// (c, L0, D) -> Higgs data; inverse of forward up to unit rescalings.
CyclicHiggsData reverse_construct(const SpectralData& SD);

struct RoundTripReport {
    bool spectral_invariants_equal = false;
    bool intertwiner_found = false;
};

/// forward -> reverse -> forward; compares curves and divisor lattices, then
/// searches for a constant-determinant intertwiner with bounded x-degrees.
RoundTripReport round_trip(const CyclicHiggsData& H, int intertwiner_degree_cap = 2);

/// Best-effort search for invertible X_i with X_{i+1} phi_i = phi'_i X_i and
/// det X_i a nonzero constant; entries of x-degree <= cap.
bool find_intertwiner(const CyclicHiggsData& A, const CyclicHiggsData& B, int cap);

} // namespace cychb
