#pragma once

#include "xm/lax.hpp"

namespace xm {

// Every valid lax cell between two finite 2-crossed modules, over every
// morphism; `space` receives the total number of tuples searched.
std::vector<LaxHomotopy> all_lax_cells(const XModP& A, const XModP& B, int jobs = 0, std::uint64_t* space = nullptr);

// Named check bundles shared by the CLI and the acceptance tests. Each takes
// the run/probe settings from cfg.

Report suite_axioms(const VerifyCfg& cfg);
Report suite_pathspace(const VerifyCfg& cfg);
// Closed forms of the double path space, triangles, disks and tetrahedra of fixD.
Report suite_oracle(const VerifyCfg& cfg);
// ω both ways on `words` random words per composable pair of cells A -> B.
Report suite_omega(const XModP& A, const XModP& B, std::size_t words, const VerifyCfg& cfg);
// Exhaustive lax laws over all cells A -> B, plus a sampled strict cross-check
// of `strict_triples` triples (0 skips it).
Report suite_laws(const XModP& A, const XModP& B, std::size_t strict_triples, const VerifyCfg& cfg);
Report suite_counterexample(const VerifyCfg& cfg);
// Acceptance agreement between the lax and strict sides over the finite
// fixture pairs, and commutation of every lax operation with the correspondence.
Report suite_bijection(const VerifyCfg& cfg);
Report suite_kernel(const VerifyCfg& cfg);
Report suite_homotopy_groups(const VerifyCfg& cfg);
Report suite_identities(const VerifyCfg& cfg);

}  // namespace xm
