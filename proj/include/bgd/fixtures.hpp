#pragma once

#include "bgd/bialgebroid.hpp"

#include <string>
#include <vector>

namespace bgd::fixtures {

FDAlgebra ground_field(const Field& f);        // k
FDAlgebra split_pair(const Field& f);          // k x k
FDAlgebra group_z2(const Field& f);            // k[Z2] on basis {1, g}

/// k[Z2] as a bialgebra over k: s = t = unit, comul(g) = g (x) g,
/// counit(g) = 1.
BialgebroidData grp2(const Field& f);

/// grp2 with counit(g) = -1: an algebra-level valid comonoid candidate that
/// fails exactly the counit axiom.
BialgebroidData broken_eps(const Field& f);

BialgebroidData trivial_over_k(const Field& f);
BialgebroidData trivial_over_kxk(const Field& f);
BialgebroidData trivial_over_kz2(const Field& f);

/// Bialgebroid map fixtures phi : k[Z2] -> k over omega = id_k. sign = +1 is
/// a bialgebroid map; sign = -1 is an algebra map that breaks
/// comultiplication compatibility.
struct MapFixture {
    BialgebroidData source;  // B over S, the domain of phi
    BialgebroidData target;  // A over R
    Matrix omega;
    Matrix phi;
};
MapFixture z2_character_map(const Field& f, long sign);

/// Named lookup used by the CLI: grp2, broken-eps, triv-k, triv-kxk,
/// triv-kz2. Throws on unknown names.
BialgebroidData bialgebroid_by_name(const std::string& name, const Field& f);
std::vector<std::string> bialgebroid_names();

}  // namespace bgd::fixtures
