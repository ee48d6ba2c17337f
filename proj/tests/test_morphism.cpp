#include <doctest.h>

#include "bgd/bimonad.hpp"
#include "bgd/fixtures.hpp"

using namespace bgd;
namespace fx = bgd::fixtures;

namespace {

struct CharacterSetup {
    BimonadOps src;   // bimonad of the trivial bialgebroid over k
    BimonadOps tgt;   // bimonad of k[Z2]
    LaxMonoidalFunctorPresentation g;
    Matrix phi;

    explicit CharacterSetup(long sign, const Field& q)
        : src(from_bialgebroid(fx::trivial_over_k(q))),
          tgt(from_bialgebroid(fx::grp2(q))),
          g(restriction_functor(fx::ground_field(q), Matrix::identity(q, 1))),
          phi(fx::z2_character_map(q, sign).phi) {}
};

}  // namespace

TEST_CASE("restriction morphism from a bialgebroid map") {
    Field q = Field::rationals();

    SUBCASE("g -> 1 passes both monad squares and both ambi diagrams") {
        CharacterSetup s(1, q);
        REQUIRE(check_bialgebroid_map(fx::grp2(q), fx::trivial_over_k(q), Matrix::identity(q, 1),
                                      s.phi)
                    .all_pass());
        Report sq = check_monad_morphism(s.src, s.tgt, s.g, s.phi, {});
        INFO("failing: ", sq.failing().empty() ? "none" : sq.failing()[0]);
        CHECK(sq.all_pass());
        Report am = check_ambimonoidal(s.src, s.tgt, s.g, s.phi, {});
        INFO("failing: ", am.failing().empty() ? "none" : am.failing()[0]);
        CHECK(am.all_pass());
    }

    SUBCASE("g -> -1 fails the first ambi diagram with witness g") {
        CharacterSetup s(-1, q);
        // still a monad morphism: the map is an algebra map
        CHECK(check_monad_morphism(s.src, s.tgt, s.g, s.phi, {}).all_pass());
        Report am = check_ambimonoidal(s.src, s.tgt, s.g, s.phi, {});
        CHECK(!am.all_pass());
        bool ambi1_failed = false;
        for (const auto& c : am.checks)
            if (!c.pass && c.name.rfind("ambi1", 0) == 0) {
                ambi1_failed = true;
                CHECK(c.detail.contains("witness"));
            }
        CHECK(ambi1_failed);
        // the counit diagram breaks as well: eps_A(phi(g)) = -1 != eps_B(g)
        CHECK(!am.find("ambi2")->pass);
    }

    SUBCASE("unsupported functor presentations are rejected") {
        CharacterSetup s(1, q);
        LaxMonoidalFunctorPresentation bad = s.g;
        bad.kind = static_cast<LaxMonoidalFunctorPresentation::Kind>(42);
        CHECK_THROWS_AS(check_monad_morphism(s.src, s.tgt, bad, s.phi, {}),
                        std::invalid_argument);
        // kernel presentations require the ground field on both sides
        BimonadOps big(from_bialgebroid(fx::trivial_over_kxk(q)));
        LaxMonoidalFunctorPresentation ker = kernel_functor(q, fx::ground_field(q));
        CHECK_THROWS_AS(check_monad_morphism(big, s.tgt, ker, s.phi, {}), std::invalid_argument);
    }
}

TEST_CASE("kernel-bimodule morphism over k agrees with the direct relations") {
    Field q = Field::rationals();
    // G the one-dimensional algebra, phi(b (x) g) = g (x) phi0(b) with phi0
    // the passing character: the generic checkers and the four direct
    // equations must agree
    BimonadOps src(from_bialgebroid(fx::trivial_over_k(q)));
    BimonadOps tgt(from_bialgebroid(fx::grp2(q)));
    FDAlgebra G = fx::ground_field(q);
    LaxMonoidalFunctorPresentation g = kernel_functor(q, G);

    for (long sign : {1L, -1L}) {
        Matrix phi0 = fx::z2_character_map(q, sign).phi;
        // phi : B (x) G -> G (x) A with dG = 1 is numerically phi0
        Matrix phi = phi0;
        Report sq = check_monad_morphism(src, tgt, g, phi, {});
        Report am = check_ambimonoidal(src, tgt, g, phi, {});

        // direct evaluation of the four relations for 1-dimensional G:
        // (1) phi(bb' (x) g) = mult_A (phi (x) id)(b (x) phi(b' (x) g))
        const FDAlgebra& B = fx::grp2(q).A;
        bool rel1 = true, rel2 = true, rel3 = true, rel4 = true;
        for (std::size_t b1 = 0; b1 < 2; ++b1)
            for (std::size_t b2 = 0; b2 < 2; ++b2) {
                Vec lhs = phi.apply(B.mul(unit_vec(2, b1), unit_vec(2, b2)));
                Scalar rhs = q.mul(phi.apply(unit_vec(2, b1))[0], phi.apply(unit_vec(2, b2))[0]);
                if (lhs[0] != rhs) rel1 = false;
            }
        if (phi.apply(B.unit())[0] != q.one()) rel2 = false;
        // (3) comultiplication relation via comul_B(b) = b (x) b on the group basis
        BialgebroidData bb = fx::grp2(q);
        for (std::size_t b = 0; b < 2; ++b) {
            Vec cop = bb.comul.col(b);  // coordinates on the plain tensor square
            Scalar lhs3 = q.zero();
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d)
                    lhs3 = q.add(lhs3, q.mul(cop[c * 2 + d],
                                             q.mul(phi.apply(unit_vec(2, c))[0],
                                                   phi.apply(unit_vec(2, d))[0])));
            Scalar rhs3 = phi.apply(unit_vec(2, b))[0];  // comul_A of a scalar
            if (lhs3 != rhs3) rel3 = false;
        }
        for (std::size_t b = 0; b < 2; ++b)
            if (phi.apply(unit_vec(2, b))[0] != bb.counit.at(0, b)) rel4 = false;

        CHECK(sq.all_pass() == (rel1 && rel2));
        CHECK(am.all_pass() == (rel3 && rel4));
        if (sign == 1) CHECK(am.all_pass());
        if (sign == -1) CHECK(!am.all_pass());
    }
}

TEST_CASE("uniqueness of the generating map on the module catalogue") {
    Field q = Field::rationals();
    auto m = fx::z2_character_map(q, 1);
    std::vector<AModule> catalogue{regular_module(m.target.A)};
    PhiSolution sol = solve_phi_from_actions(m.source, m.target, m.omega, m.phi, catalogue);
    CHECK(sol.solution_dim == 0);
    CHECK(sol.unique_and_matches);
    CHECK(sol.solution == m.phi);

    // identity morphism on the group bialgebra
    BialgebroidData b = fx::grp2(q);
    PhiSolution sol2 = solve_phi_from_actions(b, b, Matrix::identity(q, 1),
                                              Matrix::identity(q, 2),
                                              {regular_module(b.A)});
    CHECK(sol2.solution_dim == 0);
    CHECK(sol2.unique_and_matches);
}
