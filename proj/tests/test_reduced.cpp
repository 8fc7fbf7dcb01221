#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

using namespace cychb;

namespace {
const Field Q = Field::rationals();
const Field F5 = Field::prime(5);
const Field F7 = Field::prime(7);
} // namespace

TEST_CASE("reduced_multiply examples") {
    // m=3: b(2,1) b(1,0) = b(2,0), verified against the path-reduction oracle
    {
        const ReducedElem lhs = ReducedElem::basis(Q, 3, 2, 1) * ReducedElem::basis(Q, 3, 1, 0);
        CHECK(lhs == ReducedElem::basis(Q, 3, 2, 0));
        const PathElem p21 = PathElem::path(Q, 3, Path{1, 1}, Poly::from_ints(Q, Var::x, {1}));
        const PathElem p10 = PathElem::path(Q, 3, Path{0, 1}, Poly::from_ints(Q, Var::x, {1}));
        CHECK(oracles::reduce_elem(p21 * p10) == lhs);
    }
    // m=3: b(0,2) b(2,0) = t b(0,0): lengths 1 + 2 wrap once
    {
        const ReducedElem lhs = ReducedElem::basis(Q, 3, 0, 2) * ReducedElem::basis(Q, 3, 2, 0);
        CHECK(lhs == ReducedElem::basis(Q, 3, 0, 0) * TPoly::t(Q));
        const PathElem p02 = PathElem::path(Q, 3, Path{2, 1}, Poly::from_ints(Q, Var::x, {1}));
        const PathElem p20 = PathElem::path(Q, 3, Path{0, 2}, Poly::from_ints(Q, Var::x, {1}));
        CHECK(oracles::reduce_elem(p02 * p20) == lhs);
    }
    // orthogonality of mismatched tails and heads
    CHECK((ReducedElem::basis(Q, 3, 0, 1) * ReducedElem::basis(Q, 3, 2, 0)).is_zero());
    CHECK_THROWS_AS((void)(ReducedElem::basis(Q, 2, 0, 0) * ReducedElem::basis(Q, 3, 0, 0)),
                    std::invalid_argument);
}

TEST_CASE("reduced_multiply matches the path-reduction oracle everywhere") {
    for (int m = 1; m <= 4; ++m)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k)
                    for (int l = 0; l < m; ++l) {
                        const PathElem pa =
                            PathElem::path(Q, m, Path{j, ((i - j) % m + m) % m}, Poly::from_ints(Q, Var::x, {1}));
                        const PathElem pb =
                            PathElem::path(Q, m, Path{l, ((k - l) % m + m) % m}, Poly::from_ints(Q, Var::x, {1}));
                        CHECK(oracles::reduce_elem(pa * pb) ==
                              ReducedElem::basis(Q, m, i, j) * ReducedElem::basis(Q, m, k, l));
                    }
}

TEST_CASE("rank_check") {
    CHECK(rank_check(1) == 1);
    CHECK(rank_check(2) == 4);
    CHECK(rank_check(5) == 25);
}

TEST_CASE("associativity, unit, loop identity") {
    for (int m = 1; m <= 5; ++m) {
        std::vector<ReducedElem> basis;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) basis.push_back(ReducedElem::basis(Q, m, i, j));
        for (const auto& a : basis)
            for (const auto& b : basis)
                for (const auto& c : basis) CHECK((a * b) * c == a * (b * c));
        const ReducedElem unit = ReducedElem::unit(Q, m);
        for (const auto& b : basis) {
            CHECK(unit * b == b);
            CHECK(b * unit == b);
        }
        // the composite of arrow classes around the cycle is t . b(i,i)
        for (int i = 0; i < m; ++i) {
            ReducedElem acc = unit;
            for (int step = 0; step < m; ++step) acc = ReducedElem::arrow_class(Q, m, (i + step) % m) * acc;
            CHECK(acc == ReducedElem::basis(Q, m, i, i) * TPoly::t(Q));
        }
    }
}

TEST_CASE("fiber_at examples") {
    // m=2, t0=0: the ideal generated by b(0,1) stays one-dimensional
    {
        const TableAlgebra alg = fiber_at(Q, 2, FieldElem::zero(Q), FieldElem::zero(Q));
        std::vector<FieldElem> b01(4, FieldElem::zero(Q));
        b01[1] = FieldElem::one(Q);
        std::vector<FieldElem> b10(4, FieldElem::zero(Q));
        b10[2] = FieldElem::one(Q);
        CHECK(alg.multiply(b01, b10) == std::vector<FieldElem>(4, FieldElem::zero(Q)));
        CHECK(!simplicity_check(alg));
    }
    // m=2, t0=1: b(0,1) b(1,0) = b(0,0)
    {
        const TableAlgebra alg = fiber_at(Q, 2, FieldElem::zero(Q), FieldElem::one(Q));
        std::vector<FieldElem> b01(4, FieldElem::zero(Q));
        b01[1] = FieldElem::one(Q);
        std::vector<FieldElem> b10(4, FieldElem::zero(Q));
        b10[2] = FieldElem::one(Q);
        std::vector<FieldElem> e0(4, FieldElem::zero(Q));
        e0[0] = FieldElem::one(Q);
        CHECK(alg.multiply(b01, b10) == e0);
    }
    // associativity of the full table
    for (int m = 1; m <= 3; ++m)
        for (int t0 = 0; t0 < 3; ++t0) {
            const TableAlgebra alg = fiber_at(F7, m, FieldElem::zero(F7), FieldElem::of(F7, t0));
            CHECK(alg.is_associative());
            CHECK(alg.unit_law_holds(fiber_unit(F7, m)));
        }
}

TEST_CASE("matrix_iso") {
    // m=2, t0=4, s0=2 over Q
    {
        const MatrixIso iso = matrix_iso(Q, 2, FieldElem::of(Q, 4), FieldElem::of(Q, 2));
        CHECK(iso.verified);
        CHECK(iso.images[1].at(0, 1) == FieldElem::of(Q, 2)); // b(0,1) -> 2 E(0,1)
        CHECK(iso.images[2].at(1, 0) == FieldElem::of(Q, 2)); // b(1,0) -> 2 E(1,0)
    }
    // m=1: anything nonzero works with s0 = t0
    CHECK(matrix_iso(Q, 1, FieldElem::of(Q, 5), FieldElem::of(Q, 5)).verified);
    // m=3 over F7, t0=1: all three cube roots of unity verify
    for (int s0 : {1, 2, 4})
        CHECK(matrix_iso(F7, 3, FieldElem::one(F7), FieldElem::of(F7, s0)).verified);
    CHECK_THROWS_AS(matrix_iso(Q, 2, FieldElem::of(Q, 4), FieldElem::of(Q, 3)), std::invalid_argument);
    CHECK_THROWS_AS(matrix_iso(Q, 2, FieldElem::zero(Q), FieldElem::zero(Q)), regime_error);
}

TEST_CASE("find_mth_root") {
    CHECK(find_mth_root(F7, FieldElem::one(F7), 3).has_value());
    // 3 is not a square mod 7
    CHECK(!find_mth_root(F7, FieldElem::of(F7, 3), 2).has_value());
    CHECK_THROWS_AS(find_mth_root(Q, FieldElem::of(Q, 4), 2), std::invalid_argument);
}

TEST_CASE("simplicity dichotomy") {
    // m=4 over F5 with t0=2: no 4th root exists, the fiber is still simple
    {
        CHECK(!find_mth_root(F5, FieldElem::of(F5, 2), 4).has_value());
        const TableAlgebra alg = fiber_at(F5, 4, FieldElem::zero(F5), FieldElem::of(F5, 2));
        CHECK(simplicity_check(alg));
    }
    // exhaustive over F7: simple iff t0 != 0 (m >= 2); m = 1 fibers are fields
    for (int m = 1; m <= 4; ++m)
        for (int t0 = 0; t0 < 7; ++t0) {
            const bool simple = simplicity_check(fiber_at(F7, m, FieldElem::zero(F7), FieldElem::of(F7, t0)));
            CHECK(simple == (m == 1 || t0 != 0));
        }
}

TEST_CASE("reduced_center_check") {
    CHECK(reduced_center_check(Q, 1));
    CHECK(reduced_center_check(Q, 2));
    CHECK(reduced_center_check(Q, 3));
    CHECK(reduced_center_check(F7, 2));
}
