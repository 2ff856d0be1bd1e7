#pragma once

#include "xm/xmod.hpp"

namespace xm::fixtures {

// 0 -> 0 -> Z2, everything trivial.
XModP fix_a();
// 2Z -> Z -> Z2: L ≅ Z with δ(l) = 2l, ∂ = reduction mod 2, 1 ▷ n = -n on E and L,
// lifting {m,n} = n for odd m and 0 otherwise.
XModP fix_b();
// Same complex with the lifting forced to zero; fails axiom 2.
XModP fix_b_zero_lift();
// 1 -> G -> G with ∂ = id, conjugation action, trivial lifting.
XModP fix_c(const GroupP& G, std::string name = "");
// A3 -> S3 -> 1 with δ the inclusion and lifting the commutator.
XModP fix_d();
// 1 -> 1 -> G.
XModP bottom_only(const GroupP& G, std::string name = "");

std::shared_ptr<const TableGroup> S3();
std::shared_ptr<const TableGroup> Z2t();

// The asymmetric pair fixA -> fixB: (0,0,id) and the all-trivial map.
Morph fail_map(const XModP& A, const XModP& B);
Morph fail_target(const XModP& A, const XModP& B);

}  // namespace xm::fixtures
