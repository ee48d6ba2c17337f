#include "bgd/fixtures.hpp"

#include <stdexcept>

namespace bgd::fixtures {

FDAlgebra ground_field(const Field& f) { return FDAlgebra(f, 1, {f.one()}, {f.one()}); }

FDAlgebra split_pair(const Field& f) {
    std::vector<Scalar> sc(8, f.zero());
    sc[(0 * 2 + 0) * 2 + 0] = f.one();
    sc[(1 * 2 + 1) * 2 + 1] = f.one();
    return FDAlgebra(f, 2, sc, {f.one(), f.one()});
}

FDAlgebra group_z2(const Field& f) {
    std::vector<Scalar> sc(8, f.zero());
    sc[(0 * 2 + 0) * 2 + 0] = f.one();
    sc[(0 * 2 + 1) * 2 + 1] = f.one();
    sc[(1 * 2 + 0) * 2 + 1] = f.one();
    sc[(1 * 2 + 1) * 2 + 0] = f.one();
    return FDAlgebra(f, 2, sc, {f.one(), f.zero()});
}

namespace {

BialgebroidData z2_bialgebra(const Field& f, const Scalar& eps_g) {
    FDAlgebra R = ground_field(f);
    FDAlgebra A = group_z2(f);
    Matrix s(f, 2, 1), t(f, 2, 1);
    s.at(0, 0) = f.one();
    t.at(0, 0) = f.one();
    // over R = k the canonical A (x)_R A coordinates are the plain tensor
    // square on the lex basis {1x1, 1xg, gx1, gxg}
    Matrix comul(f, 4, 2);
    comul.at(0, 0) = f.one();  // comul(1) = 1 (x) 1
    comul.at(3, 1) = f.one();  // comul(g) = g (x) g
    Matrix counit(f, 1, 2);
    counit.at(0, 0) = f.one();
    counit.at(0, 1) = f.reduce(eps_g);
    return BialgebroidData{std::move(R), std::move(A), std::move(s), std::move(t),
                           std::move(comul), std::move(counit)};
}

}  // namespace

BialgebroidData grp2(const Field& f) { return z2_bialgebra(f, f.one()); }

BialgebroidData broken_eps(const Field& f) { return z2_bialgebra(f, f.from_long(-1)); }

BialgebroidData trivial_over_k(const Field& f) { return trivial_bialgebroid(ground_field(f)); }
BialgebroidData trivial_over_kxk(const Field& f) { return trivial_bialgebroid(split_pair(f)); }
BialgebroidData trivial_over_kz2(const Field& f) { return trivial_bialgebroid(group_z2(f)); }

MapFixture z2_character_map(const Field& f, long sign) {
    Matrix omega = Matrix::identity(f, 1);
    Matrix phi(f, 1, 2);
    phi.at(0, 0) = f.one();
    phi.at(0, 1) = f.from_long(sign);
    return MapFixture{grp2(f), trivial_over_k(f), std::move(omega), std::move(phi)};
}

BialgebroidData bialgebroid_by_name(const std::string& name, const Field& f) {
    if (name == "grp2") return grp2(f);
    if (name == "broken-eps") return broken_eps(f);
    if (name == "triv-k") return trivial_over_k(f);
    if (name == "triv-kxk") return trivial_over_kxk(f);
    if (name == "triv-kz2") return trivial_over_kz2(f);
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::vector<std::string> bialgebroid_names() {
    return {"grp2", "broken-eps", "triv-k", "triv-kxk", "triv-kz2"};
}

}  // namespace bgd::fixtures
