#pragma once

#include "xm/homotopy.hpp"

namespace xm {

// Q¹(A) = (L → E ×_{∂,p} F(G) → F(G)) together with proj = (id, q, p).
struct Q1 {
    XModP base;
    XModP total;
    Morph proj;
    std::shared_ptr<const FreeGroup> F;
    std::shared_ptr<const PullbackGroup> EQ;
    Hom p;

    std::size_t gi(const Elem& g) const { return base->G->index_of(g); }
    Elem sym(const Elem& g) const;                  // [g]
    Elem bracket(const Elem& g, const Elem& h) const;  // [g,h] = [gh]⁻¹[g][h]
    Elem gen_e(const Elem& e) const;                // [e] = (e,[∂e])
    Elem gen_gh(const Elem& g, const Elem& h) const;  // (g,h) = (1,[g,h])
};

// Requires a finite bottom group G (its elements index the basis).
Q1 q1(const XModP& A);

// Inclusion relations of the kernel of p and the conjugation relations in E ×_{∂,p} F(G).
Report kernel_relations_check(const Q1& Q, const VerifyCfg& cfg);

// f ∘ proj.
Morph strictify(const Morph& f, const Q1& Q);

// Unpacked lax homotopy over f: A -> A' with A finite. Tables are indexed by
// A's enumeration: s[g], t[e], Pi[g*|G| + h].
struct LaxHomotopy {
    Morph f;
    std::vector<Elem> s, t, Pi;
    std::string name;

    Elem pi(std::size_t g, std::size_t h) const { return Pi[g * s.size() + h]; }
};

LaxHomotopy lax_unit(const Morph& f);
bool same_lax(const LaxHomotopy& a, const LaxHomotopy& b);

// Strict homotopy on Q¹(A) out of f ∘ proj.
Homotopy lax_to_strict(const LaxHomotopy& lh, const Q1& Q);
// Inverse direction; throws GroupError("not-strict-endpoints") unless both
// endpoints factor through proj.
LaxHomotopy strict_to_lax(const Homotopy& h, const Q1& Q);

Report lax_validate(const LaxHomotopy& lh, const VerifyCfg& cfg);
bool lax_holds(const LaxHomotopy& lh);

// Target per the closed formula. The strict-side value of μ₂ is available
// through lax_target_strict; lax_target_report lists both when they differ.
Morph lax_target(const LaxHomotopy& lh);
Morph lax_target_strict(const LaxHomotopy& lh, const Q1& Q);
Report lax_target_report(const LaxHomotopy& lh, const Q1& Q, const VerifyCfg& cfg);

// Strict-side acceptance: (s,t) quadratic on the probes, both endpoints strict,
// and the extension reproduces the prescribed generator values.
bool strict_side_holds(const LaxHomotopy& lh, const Q1& Q, const Probes& p);

LaxHomotopy lax_concat(const LaxHomotopy& a, const LaxHomotopy& b, const Q1& Q);
LaxHomotopy lax_invert(const LaxHomotopy& a, const Q1& Q);

struct LaxTwoFold {
    LaxHomotopy h;
    std::vector<Elem> k;  // indexed by G
};

LaxHomotopy lax_twofold_target(const LaxTwoFold& k, const Q1& Q);
LaxTwoFold lax_vertical(const LaxTwoFold& a, const LaxTwoFold& b, const Q1& Q);
LaxTwoFold lax_whisker_right(const LaxTwoFold& k, const LaxHomotopy& u, const Q1& Q);
LaxTwoFold lax_whisker_left(const LaxHomotopy& u, const LaxTwoFold& k, const Q1& Q);
TwoFold lax_twofold_to_strict(const LaxTwoFold& k, const Q1& Q);

// Composition with strict maps: g ∘ lh and lh ∘ m.
LaxHomotopy lax_compose_left(const Morph& g, const LaxHomotopy& lh);
LaxHomotopy lax_compose_right(const LaxHomotopy& lh, const Morph& m);

// Exhaustive search over (ŝ, t̂, Π) tables for a base f.
struct LaxSearch {
    std::uint64_t space = 0;
    std::vector<LaxHomotopy> found;
    std::vector<std::uint64_t> index;  // tuple indices of found, ascending
};
std::uint64_t lax_space_size(const Morph& f);
LaxHomotopy lax_decode(const Morph& f, std::uint64_t i);
LaxSearch lax_search(const Morph& f, int jobs = 0, std::uint64_t cap = 50'000'000);
// All lax 2-fold homotopies based on lh (k̂ ranges over L'^G).
std::vector<LaxTwoFold> lax_twofold_search(const LaxHomotopy& lh, const Q1& Q, std::uint64_t cap = 1'000'000);

// Every level-wise map table between two finite 2-crossed modules that is a verified morphism.
std::vector<Morph> enumerate_morphisms(const XModP& A, const XModP& B, std::uint64_t cap = 5'000'000);

// Strict/lax bijection over the full search space of f.
struct Bijection {
    std::uint64_t space = 0, lax_accepted = 0, strict_accepted = 0, disagreements = 0;
    std::vector<std::string> witnesses;
};
Bijection lax_strict_bijection(const Morph& f, const Q1& Q, const ProbeCfg& strict_probe, int jobs = 0);

// Lax homotopy equivalence data for f: A -> B with candidate inverse g.
struct LaxEquivalence {
    Morph f, g;
    LaxHomotopy to_gf;  // id_A -> g ∘ f
    LaxHomotopy to_fg;  // id_B -> f ∘ g
};

Report is_lax_equivalence(const LaxEquivalence& eq, const VerifyCfg& cfg);
// Searches both witnesses within the finite table space; a missing witness is
// reported as "not found within bounds".
Report lax_equivalence_search(const Morph& f, const Morph& g, const VerifyCfg& cfg, LaxEquivalence* out = nullptr);

// Two-of-three: given two witnessed equivalences, build the witnesses of the third.
LaxEquivalence compose_equivalences(const LaxEquivalence& e1, const LaxEquivalence& e2);  // e2 ∘ e1
// From equivalences for f and g∘f, one for g.
LaxEquivalence equivalence_right_factor(const LaxEquivalence& ef, const LaxEquivalence& egf, const Morph& g);
// From equivalences for g and g∘f, one for f.
LaxEquivalence equivalence_left_factor(const LaxEquivalence& eg, const LaxEquivalence& egf, const Morph& f);

// 2-groupoid laws over a closed family of lax cells: every cell of each base
// occurring as an endpoint must be present. Operations are tabulated once per
// pair, so associativity and interchange are checked over every composable
// tuple. 2-cells are all k̂ ∈ L'^G over every cell.
struct LaxLawCfg {
    RunCfg run;
    bool twocells = true;
    bool interchange = true;
};
Report lax_laws(const std::vector<LaxHomotopy>& cells, const Q1& Q, const LaxLawCfg& cfg = {});

// The non-symmetric example of the homotopy module, stated with lax data.
LaxHomotopy fail_case_lax();

}  // namespace xm
