#include "cychb/divisor.hpp"

#include <algorithm>

namespace cychb {

// ---------------------------------------------------------------------------
// Root finding helpers

namespace {

struct RootScan {
    std::vector<FieldElem> roots;
    bool complete = false;
};

constexpr std::uint64_t kExhaustiveCap = 1u << 20;

// all roots in k of a nonzero univariate polynomial
RootScan univariate_roots(const Poly& u) {
    RootScan scan;
    const Field f = u.field();
    if (u.is_zero()) throw std::invalid_argument("univariate_roots: zero polynomial");
    if (u.degree() == 0) {
        scan.complete = true;
        return scan;
    }
    if (!f.is_rational()) {
        if (f.characteristic() > kExhaustiveCap) return scan; // incomplete
        for (std::uint64_t a = 0; a < f.characteristic(); ++a) {
            const FieldElem cand = FieldElem::of(f, static_cast<std::int64_t>(a));
            if (u.eval(cand).is_zero()) scan.roots.push_back(cand);
        }
        scan.complete = true;
        return scan;
    }

    // over Q: rational root enumeration on the scaled integer polynomial
    Poly v = u;
    // strip roots at zero first
    while (!v.is_zero() && v.coeff(0).is_zero()) {
        if (scan.roots.empty() || !scan.roots.back().is_zero()) scan.roots.push_back(FieldElem::zero(f));
        std::vector<FieldElem> c;
        for (int i = 1; i <= v.degree(); ++i) c.push_back(v.coeff(i));
        v = Poly::from_coeffs(f, v.var(), std::move(c));
    }
    if (v.degree() < 1) {
        scan.complete = true;
        return scan;
    }
    mpz_class den(1);
    for (int i = 0; i <= v.degree(); ++i) den = lcm(den, v.coeff(i).rational_value().get_den());
    mpz_class a0 = v.coeff(0).rational_value().get_num() * (den / v.coeff(0).rational_value().get_den());
    mpz_class an = v.coeff(v.degree()).rational_value().get_num() *
                   (den / v.coeff(v.degree()).rational_value().get_den());
    a0 = abs(a0);
    an = abs(an);

    auto divisors_of = [](mpz_class n, bool& full) {
        std::vector<mpz_class> divs{1};
        full = true;
        for (mpz_class d = 2; d * d <= n && d < 1000000; ++d) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            if (e == 0) continue;
            const std::size_t base = divs.size();
            mpz_class pw = 1;
            for (int k = 1; k <= e; ++k) {
                pw *= d;
                for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
            }
        }
        if (n > 1) {
            const std::size_t base = divs.size();
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * n);
            if (!mpz_probab_prime_p(n.get_mpz_t(), 25)) full = false; // n may hide more divisors
        }
        return divs;
    };
    bool full_num = true, full_den = true;
    const auto nums = divisors_of(a0, full_num);
    const auto dens = divisors_of(an, full_den);
    for (const auto& nu : nums)
        for (const auto& de : dens)
            for (int sign : {1, -1}) {
                mpq_class cand(sign * nu, de);
                cand.canonicalize();
                FieldElem e = FieldElem::from_string(f, cand.get_str());
                if (u.eval(e).is_zero() &&
                    std::find(scan.roots.begin(), scan.roots.end(), e) == scan.roots.end())
                    scan.roots.push_back(e);
            }
    scan.complete = full_num && full_den;
    return scan;
}

Poly series_trunc(const Poly& a, int K) {
    std::vector<FieldElem> c;
    for (int i = 0; i < K && i <= a.degree(); ++i) c.push_back(a.coeff(i));
    return Poly::from_coeffs(a.field(), a.var(), std::move(c));
}

Poly series_mul(const Poly& a, const Poly& b, int K) { return series_trunc(a * b, K); }

// inverse of a unit power series mod x^K by Newton iteration
Poly series_inv(const Poly& a, int K) {
    if (a.coeff(0).is_zero()) throw std::invalid_argument("series_inv: not a unit");
    Poly inv = Poly::constant(a.coeff(0).inv(), a.var());
    const Poly two = Poly::from_ints(a.field(), a.var(), {2});
    int prec = 1;
    while (prec < K) {
        prec = std::min(2 * prec, K);
        inv = series_mul(inv, two - series_mul(a, inv, prec), prec);
    }
    return inv;
}

// evaluate c(x, r(x)) truncated mod x^K
Poly series_eval_t(const TPoly& c, const Poly& r, int K) {
    Poly acc = Poly::zero(c.field(), Var::x);
    for (int i = c.deg_t(); i >= 0; --i) acc = series_mul(acc, r, K) + series_trunc(c.tcoeff(i), K);
    return acc;
}

struct LinearRootScan {
    std::vector<Poly> roots; // r with c(x, r(x)) = 0
    bool complete = false;   // every k[x]-root of c is listed
};

// k[x]-roots of c (monic in t) by Hensel lifting from a squarefree specialization
LinearRootScan linear_roots(const TPoly& c) {
    LinearRootScan out;
    const Field f = c.field();
    const int D = std::max(c.deg_x(), 0); // a root has x-degree at most deg_x(c)
    const int K = D + 1;

    const std::uint64_t limit =
        f.is_rational() ? 200 : std::min<std::uint64_t>(f.characteristic(), 200);
    for (std::uint64_t xi = 0; xi < limit; ++xi) {
        const FieldElem x0 = FieldElem::of(f, static_cast<std::int64_t>(xi));
        const Poly u = c.eval_x(x0);
        if (poly_gcd(u, u.derivative()).degree() != 0) continue; // want simple roots
        RootScan base = univariate_roots(u);
        if (!base.complete && base.roots.empty()) return out; // cannot even start
        const TPoly shifted = c.shift_x(x0);
        for (const FieldElem& alpha : base.roots) {
            // Newton lifting of the simple root alpha in k[[x]]
            Poly r = Poly::constant(alpha, Var::x);
            int prec = 1;
            while (prec < K) {
                prec = std::min(2 * prec, K);
                const Poly val = series_eval_t(shifted, r, prec);
                const Poly der = series_eval_t(shifted.derivative_t(), r, prec);
                r = series_trunc(r - series_mul(val, series_inv(der, prec), prec), prec);
            }
            const Poly root = r.compose(Poly::variable(f, Var::x) - Poly::constant(x0, Var::x));
            const TPoly lin = TPoly::t(f) - TPoly::from_xpoly(root);
            if (TPoly::divrem_monic(c, lin).second.is_zero()) out.roots.push_back(root);
        }
        out.complete = base.complete;
        return out;
    }
    return out;
}

// Rabin irreducibility test over F_p
Poly poly_modpow(Poly base, std::uint64_t e, const Poly& mod) {
    Poly acc = Poly::from_ints(base.field(), base.var(), {1});
    base = Poly::remainder(base, mod);
    while (e) {
        if (e & 1) acc = Poly::remainder(acc * base, mod);
        base = Poly::remainder(base * base, mod);
        e >>= 1;
    }
    return acc;
}

bool univariate_irreducible_fp(const Poly& u) {
    const Field f = u.field();
    const std::uint64_t p = f.characteristic();
    const int n = u.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const Poly tv = Poly::variable(f, u.var());
    // iterated Frobenius: frob[k] = t^(p^k) mod u
    std::vector<Poly> frob(static_cast<std::size_t>(n) + 1, tv);
    for (int k = 1; k <= n; ++k) frob[k] = poly_modpow(frob[k - 1], p, u);
    if (frob[n] != Poly::remainder(tv, u)) return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l) continue;
        bool prime = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) prime = false;
        if (!prime) continue;
        if (poly_gcd(frob[n / l] - tv, u).degree() != 0) return false;
    }
    return true;
}

// Over Q only small degrees are decided (no rational root <=> irreducible for 2,3).
enum class UniIrred { Yes, No, DontKnow };

UniIrred univariate_irreducible(const Poly& u) {
    if (u.degree() == 1) return UniIrred::Yes;
    if (u.degree() <= 0) return UniIrred::No;
    if (!u.field().is_rational()) return univariate_irreducible_fp(u) ? UniIrred::Yes : UniIrred::No;
    if (u.degree() > 3) return UniIrred::DontKnow;
    RootScan scan = univariate_roots(u);
    if (!scan.roots.empty()) return UniIrred::No;
    return scan.complete ? UniIrred::Yes : UniIrred::DontKnow;
}

} // namespace

// ---------------------------------------------------------------------------
// Certificates

SmoothCertificate smoothness_certificate(const TPoly& c) {
    if (!c.is_monic_t() || c.deg_t() < 1)
        throw std::invalid_argument("smoothness_certificate: need c monic in t of positive degree");
    SmoothCertificate cert;
    const Field f = c.field();
    const Poly r1 = resultant_t(c, c.derivative_t());
    const Poly r2 = resultant_t(c, c.derivative_x());
    cert.resultant_gcd = poly_gcd(r1, r2);
    if (cert.resultant_gcd.degree() == 0 && !cert.resultant_gcd.is_zero()) {
        cert.verdict = SmoothVerdict::Smooth;
        return cert;
    }

    // hunt for a rational singular point among the roots of the resultant gcd
    std::vector<FieldElem> xs;
    if (!cert.resultant_gcd.is_zero()) {
        xs = univariate_roots(cert.resultant_gcd).roots;
    } else if (!f.is_rational() && f.characteristic() <= kExhaustiveCap) {
        for (std::uint64_t a = 0; a < f.characteristic(); ++a) xs.push_back(FieldElem::of(f, static_cast<std::int64_t>(a)));
    } else {
        for (int a = -20; a <= 20; ++a) xs.push_back(FieldElem::of(f, a));
    }
    for (const FieldElem& x0 : xs) {
        Poly u = poly_gcd(c.eval_x(x0), c.derivative_t().eval_x(x0));
        const Poly cx = c.derivative_x().eval_x(x0);
        if (!cx.is_zero()) u = poly_gcd(u, cx);
        if (u.is_zero() || u.degree() < 1) continue;
        for (const FieldElem& t0 : univariate_roots(u).roots) {
            cert.verdict = SmoothVerdict::Singular;
            cert.witness = std::make_pair(x0, t0);
            return cert;
        }
    }
    cert.verdict = SmoothVerdict::Unknown;
    return cert;
}

IrredCertificate irreducibility_certificate(const TPoly& c) {
    if (!c.is_monic_t() || c.deg_t() < 1)
        throw std::invalid_argument("irreducibility_certificate: need c monic in t of positive degree");
    IrredCertificate cert;
    if (c.deg_t() == 1) {
        cert.verdict = IrredVerdict::Irreducible;
        return cert;
    }

    // repeated factors
    const TPoly dt = c.derivative_t();
    if (dt.is_zero()) return cert; // char divides every exponent; out of scope
    const TPoly sf = squarefree_part_t(c);
    if (sf.deg_t() < c.deg_t()) {
        cert.verdict = IrredVerdict::Reducible;
        cert.factor = sf;
        return cert;
    }

    // specialization certificate: c(x0, t) irreducible over k forces irreducibility
    const Field f = c.field();
    const std::uint64_t limit =
        f.is_rational() ? 40 : std::min<std::uint64_t>(f.characteristic(), 40);
    for (std::uint64_t xi = 0; xi < limit; ++xi) {
        const Poly u = c.eval_x(FieldElem::of(f, static_cast<std::int64_t>(xi)));
        if (univariate_irreducible(u) == UniIrred::Yes) {
            cert.verdict = IrredVerdict::Irreducible;
            return cert;
        }
    }

    // linear factors by Hensel lifting; complete for degree <= 3
    LinearRootScan lin = linear_roots(c);
    if (!lin.roots.empty()) {
        cert.verdict = IrredVerdict::Reducible;
        cert.factor = TPoly::t(f) - TPoly::from_xpoly(lin.roots.front());
        return cert;
    }
    if (c.deg_t() <= 3 && lin.complete) cert.verdict = IrredVerdict::Irreducible;
    return cert;
}

// ---------------------------------------------------------------------------
// Curve ring

CurveRing make_curve_ring(const TPoly& c) {
    if (!c.is_monic_t() || c.deg_t() < 1)
        throw std::invalid_argument("make_curve_ring: need c monic in t of positive degree");
    CurveRing S;
    S.c = c;
    S.p = c.deg_t();
    const Field f = c.field();
    const std::size_t p = static_cast<std::size_t>(S.p);
    S.mult_t = PMat(f, p, p);
    for (std::size_t l = 0; l + 1 < p; ++l) S.mult_t.at(l + 1, l) = Poly::from_ints(f, Var::x, {1});
    for (std::size_t i = 0; i < p; ++i) S.mult_t.at(i, p - 1) = -c.tcoeff(static_cast<int>(i));
    return S;
}

std::vector<Poly> curve_multiply(const CurveRing& S, const std::vector<Poly>& a, const std::vector<Poly>& b) {
    const std::size_t p = static_cast<std::size_t>(S.p);
    if (a.size() != p || b.size() != p) throw std::invalid_argument("curve_multiply: size mismatch");
    std::vector<Poly> r(p, Poly::zero(S.field(), Var::x));
    std::vector<Poly> tb = b; // t^l * b
    for (std::size_t l = 0; l < p; ++l) {
        for (std::size_t i = 0; i < p; ++i) r[i] += a[l] * tb[i];
        if (l + 1 < p) tb = S.mult_t.mul_vec(tb);
    }
    return r;
}

PMat multiplication_matrix(const CurveRing& S, const TPoly& f) {
    const TPoly red = f.deg_t() < S.p ? f : TPoly::divrem_monic(f, S.c).second;
    const std::size_t p = static_cast<std::size_t>(S.p);
    PMat M(S.field(), p, p);
    PMat power = PMat::identity(S.field(), p);
    for (int l = 0; l <= red.deg_t(); ++l) {
        M = M + power * red.tcoeff(l);
        if (l < red.deg_t()) power = power * S.mult_t;
    }
    return M;
}

// ---------------------------------------------------------------------------
// Divisors

bool lattice_contains(const PMat& lattice, const std::vector<Poly>& v) {
    const Poly d = lattice.det();
    if (d.is_zero()) throw std::invalid_argument("lattice_contains: degenerate lattice");
    PMat col(lattice.field(), lattice.rows(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) col.at(i, 0) = v[i];
    const PMat w = lattice.adjugate() * col;
    for (std::size_t i = 0; i < w.rows(); ++i)
        if (!Poly::remainder(w.at(i, 0), d).is_zero()) return false;
    return true;
}

bool is_t_stable(const CurveRing& S, const PMat& lattice) {
    for (std::size_t j = 0; j < lattice.cols(); ++j) {
        std::vector<Poly> v;
        for (std::size_t i = 0; i < lattice.rows(); ++i) v.push_back(lattice.at(i, j));
        if (!lattice_contains(lattice, S.mult_t.mul_vec(v))) return false;
    }
    return true;
}

PMat annihilator_lattice(const std::vector<PMat>& P, const Poly& d) {
    if (P.empty()) throw std::invalid_argument("annihilator_lattice: empty family");
    const Field f = d.field();
    const std::size_t p = P.size();
    const std::size_t rows = P[0].rows(), cols = P[0].cols();
    const int D = d.degree();
    if (D <= 0) {
        if (d.is_zero()) throw std::invalid_argument("annihilator_lattice: zero modulus");
        return PMat::identity(f, p); // everything is 0 mod a unit
    }

    const std::size_t unknowns = p * static_cast<std::size_t>(D);
    KMat sys(f, rows * cols * static_cast<std::size_t>(D), unknowns);
    const Poly x = Poly::variable(f, Var::x);
    for (std::size_t l = 0; l < p; ++l) {
        Poly xd = Poly::from_ints(f, Var::x, {1});
        for (int dd = 0; dd < D; ++dd) {
            const std::size_t col = l * static_cast<std::size_t>(D) + static_cast<std::size_t>(dd);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) {
                    const Poly entry = Poly::remainder(xd * P[l].at(i, j), d);
                    for (int e = 0; e <= entry.degree(); ++e)
                        sys.at((i * cols + j) * static_cast<std::size_t>(D) + static_cast<std::size_t>(e), col) =
                            entry.coeff(e);
                }
            xd *= x;
        }
    }

    const auto null = sys.nullspace();
    PMat gens(f, p, null.size() + p);
    for (std::size_t v = 0; v < null.size(); ++v)
        for (std::size_t l = 0; l < p; ++l) {
            std::vector<FieldElem> cs;
            for (int dd = 0; dd < D; ++dd)
                cs.push_back(null[v][l * static_cast<std::size_t>(D) + static_cast<std::size_t>(dd)]);
            gens.at(l, v) = Poly::from_coeffs(f, Var::x, std::move(cs));
        }
    for (std::size_t l = 0; l < p; ++l) gens.at(l, null.size() + l) = d;
    return hermite_form(gens);
}

EffectiveDivisor divisor_of_map(const CurveRing& S, const PMat& psi, const PMat& T_src, const PMat& T_dst) {
    const Field f = S.field();
    const std::size_t p = static_cast<std::size_t>(S.p);
    if (psi.rows() != p || psi.cols() != p) throw std::invalid_argument("divisor_of_map: shape mismatch");
    if (psi * T_src != T_dst * psi) throw std::invalid_argument("divisor_of_map: map is not t-equivariant");
    if (!matrix_annihilated_by(T_dst, S.c)) throw std::invalid_argument("divisor_of_map: target not supported on the curve");

    const Poly d = psi.det();
    if (d.is_zero()) throw regime_error("divisor_of_map: det psi = 0, the map vanishes on a component");
    const int D = d.degree();
    if (D == 0) return EffectiveDivisor{PMat::identity(f, p), 0};

    // Ann(coker psi): f = sum f_l t^l annihilates iff adj(psi) * sum f_l T_dst^l = 0 mod det(psi)
    const PMat adj = psi.adjugate();
    std::vector<PMat> P; // adj * T_dst^l
    PMat power = PMat::identity(f, p);
    for (std::size_t l = 0; l < p; ++l) {
        P.push_back(adj * power);
        if (l + 1 < p) power = power * T_dst;
    }

    EffectiveDivisor div;
    div.lattice = annihilator_lattice(P, d);
    div.length = D;
    int hnf_len = 0;
    for (std::size_t i = 0; i < p; ++i) hnf_len += div.lattice.at(i, i).degree();
    if (hnf_len != D)
        throw regime_error("divisor_of_map: cokernel is not locally cyclic (annihilator colength " +
                           std::to_string(hnf_len) + " != " + std::to_string(D) + ")");
    return div;
}

EffectiveDivisor divisor_of_function(const CurveRing& S, const TPoly& f) {
    const PMat M = multiplication_matrix(S, f);
    if (M.det().is_zero()) throw std::invalid_argument("divisor_of_function: zerodivisor");
    return divisor_of_map(S, M, S.mult_t, S.mult_t);
}

EffectiveDivisor sum_divisors(const CurveRing& S, const EffectiveDivisor& a, const EffectiveDivisor& b) {
    const std::size_t p = static_cast<std::size_t>(S.p);
    PMat prod(S.field(), p, p * p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            std::vector<Poly> u, v;
            for (std::size_t r = 0; r < p; ++r) {
                u.push_back(a.lattice.at(r, i));
                v.push_back(b.lattice.at(r, j));
            }
            const auto w = curve_multiply(S, u, v);
            for (std::size_t r = 0; r < p; ++r) prod.at(r, i * p + j) = w[r];
        }
    EffectiveDivisor out;
    out.lattice = hermite_form(prod);
    out.length = 0;
    for (std::size_t i = 0; i < p; ++i) out.length += out.lattice.at(i, i).degree();
    return out;
}

bool invertibility_certificate(const SLattice& F, const TPoly& c) {
    const auto smooth = smoothness_certificate(c);
    if (smooth.verdict != SmoothVerdict::Smooth)
        throw regime_error("invertibility_certificate: curve not certified smooth");
    const auto irred = irreducibility_certificate(c);
    if (irred.verdict != IrredVerdict::Irreducible)
        throw regime_error("invertibility_certificate: curve not certified irreducible over k");
    return char_poly(F.T) == c;
}

} // namespace cychb
