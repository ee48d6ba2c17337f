#include <doctest.h>

#include "bgd/algebra.hpp"
#include "helpers.hpp"

using namespace bgd;
using namespace bgd::testing;

TEST_CASE("constructor rejects bad structure constants") {
    Field q = Field::rationals();

    // non-unital: "unit" is not an identity
    std::vector<Scalar> sc(8, q.zero());
    sc[(0 * 2 + 0) * 2 + 0] = q.one();
    CHECK_THROWS_WITH_AS(FDAlgebra(q, 2, sc, {q.one(), q.zero()}),
                         doctest::Contains("unit"), std::invalid_argument);

    // non-associative on a located triple: e1*e1 = e0 but e1*e0 = 0
    std::vector<Scalar> bad(8, q.zero());
    bad[(0 * 2 + 0) * 2 + 0] = q.one();
    bad[(0 * 2 + 1) * 2 + 1] = q.one();
    bad[(1 * 2 + 0) * 2 + 1] = q.one();
    bad[(1 * 2 + 1) * 2 + 0] = q.one();
    bad[(1 * 2 + 1) * 2 + 1] = q.one();  // g*g = 1 + g breaks nothing yet...
    // ...force a genuine failure: g*(g*g) != (g*g)*g by making g*g = 1+g and 1 act oddly
    bad[(0 * 2 + 1) * 2 + 0] = q.one();  // 1*g = 1 + g: also breaks unit first
    CHECK_THROWS_AS(FDAlgebra(q, 2, bad, {q.one(), q.zero()}), std::invalid_argument);
}

TEST_CASE("opposite") {
    Field q = Field::rationals();

    FDAlgebra kk = split_pair(q);
    CHECK(opposite(kk) == kk);

    FDAlgebra ut = upper_triangular2(q);
    FDAlgebra op = opposite(ut);
    CHECK(op != ut);                 // genuinely non-commutative
    CHECK(opposite(op) == ut);       // involution, bit-exact

    FDAlgebra z2 = group_z2(q);
    CHECK(opposite(z2) == z2);
}

TEST_CASE("tensor_algebra") {
    Field q = Field::rationals();
    FDAlgebra k = ground_field(q);
    FDAlgebra kk = split_pair(q);
    FDAlgebra z2 = group_z2(q);

    SUBCASE("unit law: k (x) S has S's structure constants") {
        FDAlgebra t = tensor_algebra(k, kk);
        CHECK(t.dim() == 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t l = 0; l < 2; ++l) CHECK(t.c(i, j, l) == kk.c(i, j, l));
    }

    SUBCASE("(k x k) (x) (k x k)^op has four orthogonal idempotents") {
        FDAlgebra e = tensor_algebra(kk, opposite(kk));
        CHECK(e.dim() == 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Vec prod = e.mul(unit_vec(4, i), unit_vec(4, j));
                CHECK(prod == (i == j ? unit_vec(4, i) : zero_vec(4)));
            }
    }

    SUBCASE("k[Z2] (x) k[Z2]: (g (x) 1)^2 = 1 (x) 1") {
        FDAlgebra t = tensor_algebra(z2, z2);
        CHECK(t.dim() == 4);
        CHECK(t.commutative());
        Vec g1 = unit_vec(4, 2);  // g (x) 1 at lex index 1*2+0
        CHECK(t.mul(g1, g1) == unit_vec(4, 0));
    }
}

TEST_CASE("tensor_algebra associativity via canonical reindexing") {
    Field q = Field::rationals();
    FDAlgebra a = split_pair(q), b = group_z2(q), c = upper_triangular2(q);
    FDAlgebra lhs = tensor_algebra(tensor_algebra(a, b), c);
    FDAlgebra rhs = tensor_algebra(a, tensor_algebra(b, c));
    Matrix re = tensor_algebra_reindex(a, b, c);
    // the lex reindexing is the identity permutation, and it is an algebra iso
    CHECK(lhs == rhs);
    CHECK(rank(re) == re.rows());
    CHECK(check_algebra_map(AlgebraMap{lhs, rhs, re}).all_pass());
}

TEST_CASE("check_algebra_map") {
    Field q = Field::rationals();
    FDAlgebra z2 = group_z2(q);
    FDAlgebra k = ground_field(q);

    SUBCASE("identity map passes") {
        CHECK(check_algebra_map(AlgebraMap{z2, z2, Matrix::identity(q, 2)}).all_pass());
    }

    SUBCASE("character g -> 1 passes") {
        Matrix m = Matrix::from_rows(q, {{Scalar(1), Scalar(1)}});
        CHECK(check_algebra_map(AlgebraMap{z2, k, m}).all_pass());
    }

    SUBCASE("g -> 2 fails at (g,g)") {
        Matrix m = Matrix::from_rows(q, {{Scalar(1), Scalar(2)}});
        Report r = check_algebra_map(AlgebraMap{z2, k, m});
        CHECK(!r.all_pass());
        const CheckResult* c = r.find("preserves-multiplication");
        REQUIRE(c != nullptr);
        CHECK(!c->pass);
        CHECK(c->detail["witness"]["i"] == 1);
        CHECK(c->detail["witness"]["j"] == 1);
    }
}

TEST_CASE("modules over an algebra") {
    Field q = Field::rationals();
    FDAlgebra z2 = group_z2(q);

    AModule reg = regular_module(z2);
    CHECK(reg.dim() == 2);

    // sign module: g acts as -1
    Matrix sign(q, 1, 1);
    sign.at(0, 0) = Scalar(-1);
    AModule sgn(z2, {Matrix::identity(q, 1), sign});
    CHECK(sgn.dim() == 1);

    // g acting as 2 is not a Z2 action
    Matrix two(q, 1, 1);
    two.at(0, 0) = Scalar(2);
    CHECK_THROWS(AModule(z2, {Matrix::identity(q, 1), two}));
}
