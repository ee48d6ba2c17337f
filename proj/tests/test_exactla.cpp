#include <doctest.h>

#include "bgd/subspace.hpp"
#include "helpers.hpp"

using namespace bgd;
using bgd::testing::Rng;

namespace {

// Independent oracle: plain triple loop over the defining sum.
Matrix naive_mul(const Matrix& a, const Matrix& b) {
    const Field& f = a.field();
    Matrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Scalar s = f.zero();
            for (std::size_t l = 0; l < a.cols(); ++l) s = f.add(s, f.mul(a.at(i, l), b.at(l, j)));
            c.at(i, j) = s;
        }
    return c;
}

}  // namespace

TEST_CASE("field arithmetic canonical forms") {
    Field q = Field::rationals();
    CHECK(q.str(q.parse("4/6")) == "2/3");
    CHECK(q.str(q.parse("-12/4")) == "-3");
    CHECK(q.add(Scalar(1, 3), Scalar(1, 6)) == Scalar(1, 2));

    Field f5 = Field::prime(5);
    CHECK(f5.mul(f5.from_long(2), f5.from_long(3)) == f5.from_long(1));
    CHECK(f5.from_long(-1) == f5.from_long(4));
    CHECK(f5.inv(f5.from_long(2)) == f5.from_long(3));
    CHECK_THROWS(Field::prime(6));
    CHECK_THROWS(f5.inv(f5.zero()));
}

TEST_CASE("matrix multiplication") {
    Field q = Field::rationals();
    Rng rng(11);

    Matrix m = rng.matrix(q, 3, 3);
    CHECK(Matrix::identity(q, 3) * m == m);

    Field f5 = Field::prime(5);
    Matrix a(f5, 1, 1), b(f5, 1, 1);
    a.at(0, 0) = f5.from_long(2);
    b.at(0, 0) = f5.from_long(3);
    CHECK((a * b).at(0, 0) == f5.from_long(1));

    for (int t = 0; t < 8; ++t) {
        Matrix x = rng.matrix(q, 4, 4), y = rng.matrix(q, 4, 4);
        CHECK(x * y == naive_mul(x, y));
    }

    Matrix r = rng.matrix(q, 2, 3);
    CHECK_THROWS(r * r);
}

TEST_CASE("matrix product associativity (property)") {
    Rng rng(23);
    for (const Field& f : {Field::rationals(), Field::prime(7)}) {
        for (int t = 0; t < 10; ++t) {
            Matrix a = rng.matrix(f, 3, 4), b = rng.matrix(f, 4, 2), c = rng.matrix(f, 2, 5);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("kernel") {
    Field q = Field::rationals();

    Matrix z(q, 2, 3);
    CHECK(kernel(z) == Subspace::full(q, 3));

    CHECK(kernel(Matrix::identity(q, 4)).dim() == 0);

    Matrix m = Matrix::from_rows(q, {{Scalar(1), Scalar(1)}, {Scalar(2), Scalar(2)}});
    Subspace k = kernel(m);
    // hand elimination: x + y = 0, canonical echelon basis (1, -1)
    CHECK(k.dim() == 1);
    CHECK(k.basis() == Matrix::from_rows(q, {{Scalar(1), Scalar(-1)}}));
}

TEST_CASE("rank-nullity (property)") {
    Rng rng(37);
    for (const Field& f : {Field::rationals(), Field::prime(5)}) {
        for (int t = 0; t < 12; ++t) {
            std::size_t r = 1 + rng.index(5), c = 1 + rng.index(5);
            Matrix m = rng.matrix(f, r, c);
            CHECK(rank(m) + kernel(m).dim() == m.cols());
        }
    }
}

TEST_CASE("quotient canonical maps") {
    Field q = Field::rationals();

    SUBCASE("no relations") {
        auto [proj, section] = quotient(3, Subspace(q, 3));
        CHECK(proj == Matrix::identity(q, 3));
        CHECK(section == Matrix::identity(q, 3));
    }

    SUBCASE("one relation in ambient 2") {
        Subspace rel = Subspace::from_rows(q, 2, {{Scalar(1), Scalar(-1)}});
        auto [proj, section] = quotient(2, rel);
        CHECK(proj.rows() == 1);
        CHECK(proj * section == Matrix::identity(q, 1));
        CHECK(kernel(proj) == rel);
    }

    SUBCASE("full relations") {
        auto [proj, section] = quotient(3, Subspace::full(q, 3));
        CHECK(proj.rows() == 0);
        CHECK(proj.cols() == 3);
        CHECK(section.cols() == 0);
    }
}

TEST_CASE("quotient posts on random relation subspaces (property)") {
    Rng rng(53);
    for (const Field& f : {Field::rationals(), Field::prime(7)}) {
        for (int t = 0; t < 12; ++t) {
            std::size_t n = 2 + rng.index(5);
            std::size_t nrel = rng.index(n + 1);
            std::vector<Vec> rows;
            for (std::size_t i = 0; i < nrel; ++i) rows.push_back(rng.vec(f, n));
            Subspace rel = Subspace::from_rows(f, n, rows);
            auto [proj, section] = quotient(n, rel);
            CHECK(proj * section == Matrix::identity(f, proj.rows()));
            CHECK(kernel(proj) == rel);
            CHECK(proj.rows() + rel.dim() == n);
        }
    }
}

TEST_CASE("determinism: identical inputs give bit-identical outputs") {
    Field q = Field::rationals();
    Rng rng1(71), rng2(71);
    Matrix a1 = rng1.matrix(q, 4, 6), a2 = rng2.matrix(q, 4, 6);
    CHECK(a1 == a2);
    CHECK(kernel(a1).basis() == kernel(a2).basis());
    auto [p1, s1] = quotient(6, kernel(a1));
    auto [p2, s2] = quotient(6, kernel(a2));
    CHECK(p1 == p2);
    CHECK(s1 == s2);
}

TEST_CASE("solve") {
    Field q = Field::rationals();
    Matrix m = Matrix::from_rows(q, {{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}});
    auto x = solve(m, {Scalar(5), Scalar(11)});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == Vec{Scalar(5), Scalar(11)});

    Matrix sing = Matrix::from_rows(q, {{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(1)}});
    CHECK(!solve(sing, {Scalar(0), Scalar(1)}).has_value());
}

TEST_CASE("induced maps on quotients") {
    Field q = Field::rationals();
    // ambient 2, relation (1,-1): quotient is the "sum" coordinate line
    Quot dom(2, Subspace::from_rows(q, 2, {{Scalar(1), Scalar(-1)}}));
    Quot cod(q, 1);
    // g = (1 1) descends (kills the relation); g' = (1 0) does not
    Matrix g = Matrix::from_rows(q, {{Scalar(1), Scalar(1)}});
    Matrix bad = Matrix::from_rows(q, {{Scalar(1), Scalar(0)}});
    CHECK(map_descends(dom, cod, g));
    CHECK(!map_descends(dom, cod, bad));
    Matrix ind = induced_map(dom, cod, g);
    CHECK(ind.rows() == 1);
    CHECK(ind.cols() == 1);
    CHECK_THROWS(induced_map(dom, cod, bad));
}
