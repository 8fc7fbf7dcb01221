#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

using namespace cychb;

namespace {
const Field Q = Field::rationals();
const Field F10007 = Field::prime(10007);

Poly px(Field f, std::initializer_list<std::int64_t> c) { return Poly::from_ints(f, Var::x, c); }

CyclicHiggsData m2_rank1(Field f) {
    // phi = ([x], [x-1])
    CyclicHiggsData H;
    H.m = 2;
    H.field = f;
    H.dims = {1, 1};
    PMat p0(f, 1, 1), p1(f, 1, 1);
    p0.at(0, 0) = px(f, {0, 1});
    p1.at(0, 0) = px(f, {-1, 1});
    H.phi = {p0, p1};
    return H;
}

CyclicHiggsData m2_mixed(Field f) {
    // dims (2,1): phi0 = [1, x] (1x2), phi1 = [1; 1] (2x1)
    CyclicHiggsData H;
    H.m = 2;
    H.field = f;
    H.dims = {2, 1};
    PMat p0(f, 1, 2), p1(f, 2, 1);
    p0.at(0, 0) = px(f, {1});
    p0.at(0, 1) = px(f, {0, 1});
    p1.at(0, 0) = px(f, {1});
    p1.at(1, 0) = px(f, {1});
    H.phi = {p0, p1};
    return H;
}

CyclicHiggsData random_equal_dims(Rng& rng, Field f, int m, int p, int cap) {
    InstanceSpec spec;
    spec.m = m;
    spec.dims.assign(static_cast<std::size_t>(m), p);
    spec.field = f;
    spec.deg_cap = cap;
    spec.seed = rng.next(1u << 30);
    return random_instance(spec);
}
} // namespace

TEST_CASE("loop_composite") {
    // m=1
    {
        CyclicHiggsData H;
        H.m = 1;
        H.field = Q;
        H.dims = {2};
        H.phi = {PMat::from_ints(Q, {{{0}, {1}}, {{1}, {0}}})};
        CHECK(loop_composite(H, 0) == H.phi[0]);
    }
    // m=2, phi = ([x],[x-1]): both loops are [x^2 - x]
    {
        const CyclicHiggsData H = m2_rank1(Q);
        PMat expect(Q, 1, 1);
        expect.at(0, 0) = px(Q, {0, -1, 1});
        CHECK(loop_composite(H, 0) == expect);
        CHECK(loop_composite(H, 1) == expect);
    }
    // mixed dims: shapes and products by the matrix oracle
    {
        const CyclicHiggsData H = m2_mixed(Q);
        const PMat L1 = loop_composite(H, 1);
        REQUIRE(L1.rows() == 1);
        CHECK(L1.at(0, 0) == px(Q, {1, 1})); // 1 + x
        const PMat L0 = loop_composite(H, 0);
        REQUIRE(L0.rows() == 2);
        CHECK(L0.at(0, 0) == px(Q, {1}));
        CHECK(L0.at(0, 1) == px(Q, {0, 1}));
        CHECK(L0.at(1, 0) == px(Q, {1}));
        CHECK(L0.at(1, 1) == px(Q, {0, 1}));
    }
}

TEST_CASE("spectral_curve") {
    {
        const CyclicHiggsData H = m2_rank1(Q);
        const TPoly c = spectral_curve(H, 0);
        CHECK(c == TPoly::t(Q) - TPoly::from_xpoly(px(Q, {0, -1, 1})));
        CHECK(c == spectral_curve(H, 1));
    }
    {
        const CyclicHiggsData H = m2_mixed(Q);
        CHECK(spectral_curve(H, 1) == TPoly::t(Q) - TPoly::from_xpoly(px(Q, {1, 1})));
        // c0 = t^2 - (1+x) t
        const TPoly c0 = spectral_curve(H, 0);
        TPoly expect = TPoly::t(Q) * TPoly::t(Q) - TPoly::t(Q) * px(Q, {1, 1});
        CHECK(c0 == expect);
    }
    {
        CyclicHiggsData H;
        H.m = 1;
        H.field = Q;
        H.dims = {2};
        H.phi = {PMat::from_ints(Q, {{{0}, {1}}, {{1}, {0}}})};
        CHECK(spectral_curve(H, 0) == TPoly::from_ints(Q, {{-1}, {}, {1}}));
    }
}

TEST_CASE("spectral curve conjugation invariance") {
    Rng rng(23);
    for (int it = 0; it < 8; ++it) {
        const int m = 2 + static_cast<int>(rng.next(2));
        const int p = 2;
        CyclicHiggsData H = random_equal_dims(rng, F10007, m, p, 1);
        // conjugate by constant invertible matrices g_i
        std::vector<KMat> g;
        for (int i = 0; i < m; ++i) {
            KMat gi(F10007, p, p);
            do {
                for (std::size_t r = 0; r < 2; ++r)
                    for (std::size_t c = 0; c < 2; ++c) gi.at(r, c) = rng.next_elem(F10007);
            } while (gi.det().is_zero());
            g.push_back(gi);
        }
        CyclicHiggsData H2 = H;
        for (int i = 0; i < m; ++i) {
            PMat gi(F10007, p, p), gi_inv(F10007, p, p);
            const KMat inv = *g[static_cast<std::size_t>(i)].inverse();
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c) {
                    gi.at(r, c) = Poly::constant(g[static_cast<std::size_t>((i + 1) % m)].at(r, c), Var::x);
                    gi_inv.at(r, c) = Poly::constant(inv.at(r, c), Var::x);
                }
            H2.phi[static_cast<std::size_t>(i)] = gi * H.phi[static_cast<std::size_t>(i)] * gi_inv;
        }
        for (int i = 0; i < m; ++i) CHECK(spectral_curve(H, i) == spectral_curve(H2, i));
    }
}

TEST_CASE("common_component_check") {
    // mixed dims: c0 = t (t-1-x), c1 = t-1-x
    {
        const auto rep = common_component_check(m2_mixed(Q));
        CHECK(rep.strict);
        CHECK(rep.q == std::vector<int>{1, 0});
        CHECK(*rep.common == TPoly::t(Q) - TPoly::from_xpoly(px(Q, {1, 1})));
    }
    // nilpotent loops: phi = ([0],[x])
    {
        CyclicHiggsData H;
        H.m = 2;
        H.field = Q;
        H.dims = {1, 1};
        PMat z(Q, 1, 1), xm(Q, 1, 1);
        xm.at(0, 0) = px(Q, {0, 1});
        H.phi = {z, xm};
        const auto rep = common_component_check(H);
        CHECK(rep.strict);
        CHECK(rep.q == std::vector<int>{1, 1});
        CHECK(rep.common->is_one());
    }
    // equal dims: random instances have identical curves and q = 0
    Rng rng(29);
    for (int it = 0; it < 15; ++it) {
        const int m = 1 + static_cast<int>(rng.next(4));
        const int p = 1 + static_cast<int>(rng.next(3));
        const auto rep = common_component_check(random_equal_dims(rng, F10007, m, p, 2));
        CHECK(rep.strict);
        for (int q : rep.q) CHECK(q == 0);
    }
}

TEST_CASE("path_action") {
    const CyclicHiggsData H = m2_mixed(Q);
    CHECK(path_action(H, Path{0, 0}) == PMat::identity(Q, 2));
    CHECK(path_action(H, Path{1, 0}) == PMat::identity(Q, 1));
    // a1 a0 = phi1 phi0
    CHECK(path_action(H, Path{0, 2}) == H.phi[1] * H.phi[0]);
    // the loop at v_i
    CHECK(path_action(H, Path{0, 2}) == loop_composite(H, 0));
    CHECK(path_action(H, Path{1, 2}) == loop_composite(H, 1));
}

TEST_CASE("to/from spectral module") {
    // m=1 BNR local model
    {
        CyclicHiggsData H;
        H.m = 1;
        H.field = Q;
        H.dims = {2};
        H.phi = {PMat::from_ints(Q, {{{1}, {0, 1}}, {{0}, {2}}})};
        const auto S = to_spectral_module(H);
        CHECK(S.F[0].T == H.phi[0]);
        CHECK(verify_loop_relation(S));
        CHECK(from_spectral_module(S) == H);
    }
    // m=2 example: T0 = T1 = [x^2-x]
    {
        const auto S = to_spectral_module(m2_rank1(Q));
        PMat expect(Q, 1, 1);
        expect.at(0, 0) = px(Q, {0, -1, 1});
        CHECK(S.F[0].T == expect);
        CHECK(S.F[1].T == expect);
        CHECK(verify_loop_relation(S));
        CHECK(verify_support(S));
    }
    // equivariance identity on random instances
    Rng rng(31);
    for (int it = 0; it < 15; ++it) {
        const int m = 1 + static_cast<int>(rng.next(4));
        InstanceSpec spec;
        spec.m = m;
        for (int i = 0; i < m; ++i) spec.dims.push_back(1 + static_cast<int>(rng.next(3)));
        spec.field = F10007;
        spec.deg_cap = 2;
        spec.seed = rng.next(1u << 30);
        const CyclicHiggsData H = random_instance(spec);
        const auto S = to_spectral_module(H);
        for (int i = 0; i < m; ++i) {
            const int ip = (i + 1) % m;
            CHECK(S.psi[i] * S.F[i].T == S.F[ip].T * S.psi[i]);
        }
        CHECK(verify_loop_relation(S));
        CHECK(verify_support(S));
        CHECK(from_spectral_module(S) == H);
    }
}

TEST_CASE("verify_loop_relation rejects perturbations") {
    auto S = to_spectral_module(m2_rank1(Q));
    S.psi[0].at(0, 0) += px(Q, {1});
    CHECK(!verify_loop_relation(S));
    CHECK_THROWS_AS(from_spectral_module(S), std::invalid_argument);
}

TEST_CASE("verify_support on hand-built lattices") {
    SpectralQuiverData S;
    S.m = 1;
    S.field = Q;
    S.F = {SLattice{2, PMat::from_ints(Q, {{{0}, {1}}, {{0}, {0}}})}};
    S.psi = {S.F[0].T};
    // c = t^2 annihilates the nilpotent action
    CHECK(matrix_annihilated_by(S.F[0].T, TPoly::from_ints(Q, {{}, {}, {1}})));
    // c = t does not
    CHECK(!matrix_annihilated_by(S.F[0].T, TPoly::from_ints(Q, {{}, {1}})));
    CHECK(verify_support(S, 0)); // char poly of a nilpotent 2x2 is t^2
}

TEST_CASE("block matrix determinant identity for equal dims") {
    // det(s Id - Phi)^m = +- prod_i c_i(s^m) pointwise, for dims (p,...,p)
    Rng rng(37);
    for (int it = 0; it < 10; ++it) {
        const int m = 2 + static_cast<int>(rng.next(2));
        const int p = 1 + static_cast<int>(rng.next(2));
        const CyclicHiggsData H = random_equal_dims(rng, F10007, m, p, 1);
        const PMat Phi = associated_matrix(H);
        const FieldElem x0 = rng.next_elem(F10007);
        const FieldElem s0 = rng.next_elem(F10007);
        // det(s0 Id - Phi) at x0
        KMat A = Phi.eval_x(x0);
        KMat sI = KMat::identity(F10007, A.rows());
        for (std::size_t i = 0; i < A.rows(); ++i) sI.at(i, i) = s0;
        const FieldElem lhs = (sI - A).det().pow(m);
        FieldElem rhs = FieldElem::one(F10007);
        for (int i = 0; i < m; ++i) rhs *= spectral_curve(H, i).eval(x0, s0.pow(m));
        CHECK((lhs == rhs || lhs == -rhs));
    }
}
