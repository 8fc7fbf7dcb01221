#include "cychb/correspond.hpp"

#include <random>

namespace cychb {

void FracLattice::normalize() {
    num = hermite_form(num);
    den = den.monic();
    Poly content = Poly::zero(num.field(), Var::x);
    for (std::size_t i = 0; i < num.rows(); ++i)
        for (std::size_t j = 0; j < num.cols(); ++j) content = poly_gcd(content, num.at(i, j));
    const Poly g = poly_gcd(content, den);
    if (g.degree() > 0) {
        num = num.map([&](const Poly& e) { return Poly::exact_div(e, g); });
        den = Poly::exact_div(den, g);
    }
}

FracLattice inverse_ideal(const CurveRing& S, const PMat& ideal) {
    const std::size_t p = static_cast<std::size_t>(S.p);
    if (ideal.rows() != p || ideal.cols() != p) throw std::invalid_argument("inverse_ideal: shape mismatch");
    const Poly d = ideal.det();
    if (d.is_zero()) throw std::invalid_argument("inverse_ideal: degenerate lattice");
    // (S : I) = (1/d) {g in S : g * I <= d S}; the condition on g = sum g_l t^l
    // is sum_l g_l (M_t^l * A) = 0 mod d
    std::vector<PMat> P;
    PMat power = PMat::identity(S.field(), p);
    for (std::size_t l = 0; l < p; ++l) {
        P.push_back(power * ideal);
        if (l + 1 < p) power = power * S.mult_t;
    }
    FracLattice inv{annihilator_lattice(P, d), d};
    inv.normalize();
    return inv;
}

FracLattice mult_frac(const CurveRing& S, const FracLattice& a, const FracLattice& b) {
    const std::size_t p = static_cast<std::size_t>(S.p);
    PMat prod(S.field(), p, p * p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            std::vector<Poly> u, v;
            for (std::size_t r = 0; r < p; ++r) {
                u.push_back(a.num.at(r, i));
                v.push_back(b.num.at(r, j));
            }
            const auto w = curve_multiply(S, u, v);
            for (std::size_t r = 0; r < p; ++r) prod.at(r, i * p + j) = w[r];
        }
    FracLattice out{hermite_form(prod), a.den * b.den};
    out.normalize();
    return out;
}

namespace {

// matrix of the inclusion A <= B in the Hermite bases: B^{-1} A, which must be
// polynomial when the inclusion holds
PMat change_of_basis(const FracLattice& A, const FracLattice& B) {
    const PMat numer = (B.num.adjugate() * A.num) * B.den;
    const Poly denom = B.num.det() * A.den;
    return numer.map([&](const Poly& e) { return Poly::exact_div(e, denom); });
}

// fractional lattice of the embedding of an abstract rank-p lattice (k[x]^p, T)
// into Frac(S) via a cyclic vector
FracLattice embed_lattice(const CurveRing& S, const SLattice& L) {
    const Field f = S.field();
    const std::size_t p = static_cast<std::size_t>(S.p);
    for (std::size_t k = 0; k < p; ++k) {
        PMat V(f, p, p);
        std::vector<Poly> v(p, Poly::zero(f, Var::x));
        v[k] = Poly::from_ints(f, Var::x, {1});
        for (std::size_t l = 0; l < p; ++l) {
            for (std::size_t i = 0; i < p; ++i) V.at(i, l) = v[i];
            if (l + 1 < p) v = L.T.mul_vec(v);
        }
        const Poly d = V.det();
        if (d.is_zero()) continue; // not a cyclic vector
        FracLattice out{V.adjugate(), d};
        out.normalize();
        return out;
    }
    throw regime_error("embed_lattice: no cyclic basis vector (is the curve irreducible?)");
}

} // namespace

SpectralData forward_spectral_data(const CyclicHiggsData& H) {
    H.validate();
    for (int i = 1; i < H.m; ++i)
        if (H.dims[i] != H.dims[0])
            throw regime_error("forward_spectral_data: dimension vector is not (p,...,p)");

    const auto common = common_component_check(H);
    for (int qi : common.q)
        if (qi != 0) throw regime_error("forward_spectral_data: spectral curve meets the zero section with multiplicity");
    if (!common.strict) throw regime_error("forward_spectral_data: spectral curves do not coincide");

    SpectralData SD;
    SD.field = H.field;
    SD.m = H.m;
    SD.c = *common.common;

    const SpectralQuiverData S = to_spectral_module(H);
    for (int i = 0; i < H.m; ++i)
        if (!invertibility_certificate(S.F[i], SD.c))
            throw regime_error("forward_spectral_data: invertibility certificate failed at vertex " + std::to_string(i));

    const CurveRing ring = make_curve_ring(SD.c);
    for (int i = 0; i < H.m; ++i)
        SD.divisors.push_back(divisor_of_map(ring, H.phi[i], S.F[i].T, S.F[(i + 1) % H.m].T));
    SD.L0 = S.F[0];

    if (!check_divisor_relation(ring, SD.divisors))
        throw std::logic_error("forward_spectral_data: divisor relation violated");
    return SD;
}

bool check_divisor_relation(const CurveRing& S, const std::vector<EffectiveDivisor>& divisors) {
    if (divisors.empty()) throw std::invalid_argument("check_divisor_relation: no divisors");
    EffectiveDivisor acc{PMat::identity(S.field(), static_cast<std::size_t>(S.p)), 0};
    for (const auto& d : divisors) acc = sum_divisors(S, acc, d);
    const EffectiveDivisor divt = divisor_of_function(S, TPoly::t(S.field()));
    return acc == divt;
}

CyclicHiggsData reverse_construct(const SpectralData& SD) {
    const Field f = SD.field;
    if (SD.m < 1 || static_cast<int>(SD.divisors.size()) != SD.m)
        throw std::invalid_argument("reverse_construct: need m divisors");
    if (SD.c.deg_t() != SD.L0.rank) throw std::invalid_argument("reverse_construct: rank does not match the curve degree");
    if (SD.c == TPoly::t(f)) throw regime_error("reverse_construct: the curve equals the zero section");

    if (!invertibility_certificate(SD.L0, SD.c))
        throw regime_error("reverse_construct: L0 is not invertible over the curve");

    const CurveRing ring = make_curve_ring(SD.c);
    std::vector<EffectiveDivisor> divisors = SD.divisors; // canonicalize inputs
    for (auto& d : divisors) {
        if (d.lattice.det().is_zero()) throw std::invalid_argument("reverse_construct: degenerate divisor lattice");
        d.lattice = hermite_form(d.lattice);
        if (!is_t_stable(ring, d.lattice)) throw std::invalid_argument("reverse_construct: divisor lattice is not an ideal");
    }
    if (!check_divisor_relation(ring, divisors))
        throw regime_error("reverse_construct: divisors do not sum to div(t)");

    std::vector<FracLattice> L;
    L.push_back(embed_lattice(ring, SD.L0));
    for (int i = 0; i < SD.m; ++i) L.push_back(mult_frac(ring, L.back(), inverse_ideal(ring, divisors[static_cast<std::size_t>(i)].lattice)));

    // canonically L_m = t^{-1} L_0
    FracLattice tinv{ring.mult_t.adjugate() * L[0].num, ring.mult_t.det() * L[0].den};
    tinv.normalize();
    if (!(L.back() == tinv)) throw std::logic_error("reverse_construct: L_m != t^{-1} L_0");

    CyclicHiggsData H;
    H.m = SD.m;
    H.field = f;
    H.dims.assign(SD.m, SD.L0.rank);
    for (int i = 0; i + 1 < SD.m; ++i) H.phi.push_back(change_of_basis(L[i], L[i + 1]));
    {
        // last arrow: multiplication by t composed with the inclusion L_{m-1} <= t^{-1} L_0
        const FracLattice& A = L[SD.m - 1];
        const FracLattice& B = L[0];
        const PMat numer = (B.num.adjugate() * (ring.mult_t * A.num)) * B.den;
        const Poly denom = B.num.det() * A.den;
        H.phi.push_back(numer.map([&](const Poly& e) { return Poly::exact_div(e, denom); }));
    }
    H.validate();
    if (!verify_loop_relation(to_spectral_module(H)))
        throw std::logic_error("reverse_construct: output violates the loop relation");
    return H;
}

bool find_intertwiner(const CyclicHiggsData& A, const CyclicHiggsData& B, int cap) {
    if (A.m != B.m || A.field != B.field || A.dims != B.dims) return false;
    const Field f = A.field;
    const int m = A.m;

    // unknowns: coefficients of X_i (dims[i] x dims[i], x-degree <= cap)
    std::vector<std::size_t> offset(m + 1, 0);
    for (int i = 0; i < m; ++i)
        offset[i + 1] = offset[i] + static_cast<std::size_t>(A.dims[i]) * A.dims[i] * (cap + 1);
    const std::size_t unknowns = offset[m];

    int eqdeg = cap;
    for (const auto& ph : A.phi) eqdeg = std::max(eqdeg, cap + ph.max_degree());
    for (const auto& ph : B.phi) eqdeg = std::max(eqdeg, cap + ph.max_degree());

    // X_{i+1} A.phi[i] - B.phi[i] X_i = 0 for all i
    std::size_t rows = 0;
    for (int i = 0; i < m; ++i)
        rows += static_cast<std::size_t>(A.dims[(i + 1) % m]) * A.dims[i] * (eqdeg + 1);
    KMat sys(f, rows, unknowns);

    std::size_t row0 = 0;
    for (int i = 0; i < m; ++i) {
        const int ip = (i + 1) % m;
        const std::size_t ri = static_cast<std::size_t>(A.dims[ip]), ci = static_cast<std::size_t>(A.dims[i]);
        for (std::size_t r = 0; r < ri; ++r)
            for (std::size_t c = 0; c < ci; ++c)
                for (int e = 0; e <= eqdeg; ++e) {
                    const std::size_t row = row0 + (r * ci + c) * (eqdeg + 1) + e;
                    // + (X_{ip})_{r,s} * (A.phi[i])_{s,c}
                    for (std::size_t s = 0; s < ri; ++s)
                        for (int dd = 0; dd <= cap; ++dd) {
                            const FieldElem coef = A.phi[i].at(s, c).coeff(e - dd);
                            if (coef.is_zero()) continue;
                            const std::size_t u = offset[ip] + (r * ri + s) * (cap + 1) + dd;
                            sys.at(row, u) += coef;
                        }
                    // - (B.phi[i])_{r,s} * (X_i)_{s,c}
                    for (std::size_t s = 0; s < ci; ++s)
                        for (int dd = 0; dd <= cap; ++dd) {
                            const FieldElem coef = B.phi[i].at(r, s).coeff(e - dd);
                            if (coef.is_zero()) continue;
                            const std::size_t u = offset[i] + (s * ci + c) * (cap + 1) + dd;
                            sys.at(row, u) -= coef;
                        }
                }
        row0 += ri * ci * static_cast<std::size_t>(eqdeg + 1);
    }

    const auto null = sys.nullspace();
    if (null.empty()) return false;

    auto unit_dets = [&](const std::vector<FieldElem>& sol) {
        for (int i = 0; i < m; ++i) {
            const std::size_t n = static_cast<std::size_t>(A.dims[i]);
            PMat X(f, n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    std::vector<FieldElem> cs;
                    for (int dd = 0; dd <= cap; ++dd) cs.push_back(sol[offset[i] + (r * n + c) * (cap + 1) + dd]);
                    X.at(r, c) = Poly::from_coeffs(f, Var::x, std::move(cs));
                }
            const Poly d = X.det();
            if (d.is_zero() || d.degree() != 0) return false;
        }
        return true;
    };

    for (const auto& v : null)
        if (unit_dets(v)) return true;

    std::mt19937_64 rng(0x5eed1234u);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<FieldElem> cand(unknowns, FieldElem::zero(f));
        for (const auto& v : null) {
            const FieldElem c = FieldElem::of(f, static_cast<std::int64_t>(rng() % 23) - 11);
            for (std::size_t u = 0; u < unknowns; ++u) cand[u] += c * v[u];
        }
        if (unit_dets(cand)) return true;
    }
    return false;
}

RoundTripReport round_trip(const CyclicHiggsData& H, int intertwiner_degree_cap) {
    RoundTripReport rep;
    const SpectralData SD = forward_spectral_data(H);
    const CyclicHiggsData H2 = reverse_construct(SD);
    const SpectralData SD2 = forward_spectral_data(H2);

    rep.spectral_invariants_equal = SD.c == SD2.c && SD.divisors.size() == SD2.divisors.size();
    if (rep.spectral_invariants_equal)
        for (std::size_t i = 0; i < SD.divisors.size(); ++i)
            if (SD.divisors[i] != SD2.divisors[i]) rep.spectral_invariants_equal = false;

    rep.intertwiner_found = find_intertwiner(H, H2, intertwiner_degree_cap);
    return rep;
}

} // namespace cychb
