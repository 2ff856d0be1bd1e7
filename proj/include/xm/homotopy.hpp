#pragma once

#include <stdexcept>

#include "xm/pathspace.hpp"
#include "xm/xmod.hpp"

namespace xm {

using Fn = std::function<Elem(const Elem&)>;

// Raised when the two independent evaluations of ω (or Θ, Ξ) disagree.
class DualMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A quadratic derivation (s,t) over f: S -> A. When Gr0(S) is free, sb holds
// the basis values and s is their extension along φ.
struct Homotopy {
    Morph f;
    Fn s, t;
    std::vector<Elem> sb;
    std::string name;
};

// A quadratic 2-derivation k over the homotopy h; kb are basis values.
struct TwoFold {
    Homotopy h;
    Fn k;
    std::vector<Elem> kb;
};

// Quantification domains for the source of a homotopy.
struct Probes {
    std::vector<Elem> L, E, G;
    bool complete = false;
};

Probes source_probes(const XMod2& S, const ProbeCfg& cfg);

std::shared_ptr<const FreeGroup> free_base(const XMod2& S);
std::shared_ptr<const FreeGroup> require_free(const XMod2& S);

// The φ-derivation F -> E with the given basis values, via g ↦ (φ(g), s(g)) in G ⋉ E.
Fn extend_derivation(const std::shared_ptr<const FreeGroup>& F, const Hom& phi, const XModP& A,
                     std::vector<Elem> basis);

Homotopy unit_homotopy(const Morph& f);
Homotopy make_homotopy(const Morph& f, std::vector<Elem> sb, Fn t, std::string name = "");
Homotopy make_homotopy(const Morph& f, Fn s, Fn t, std::string name = "");

Morph homotopy_target(const Homotopy& h);
// H = (μ ⊕ tδ, ψ ⊕ s∂ ⊕ t, φ ⊕ s) into the path space of the target.
Morph esc_morphism(const Homotopy& h, const XModP& path_total);

Report is_quadratic_derivation(const Homotopy& h, const VerifyCfg& cfg, bool with_esc = true);
// Fail-fast variant of the defining identities, used by searches.
bool quadratic_holds(const Homotopy& h, const Probes& p);

bool same_morph(const Morph& a, const Morph& b, const Probes& p);
// Equal s (on the basis when free, else on probes) and equal t on probes.
bool same_homotopy(const Homotopy& a, const Homotopy& b, const Probes& p);

// ω^{(s,s')}: primary value read off the homomorphism F -> Gr0(T(A)); when
// checked, every call is compared with the recursive evaluation.
Fn omega(const Homotopy& h1, const Homotopy& h2, bool checked = true);
Fn omega_recursive(const Homotopy& h1, const Homotopy& h2);
// Both evaluations of ω on `words` seeded random words of length ≤ maxlen per pair;
// pairs are (h1, h2) with h2 starting at the target of h1.
Report omega_duality(const std::vector<std::pair<Homotopy, Homotopy>>& pairs, std::size_t words, int maxlen,
                     const RunCfg& run);
// The closed form for ω(b⁻¹b'b''), basis indices.
Elem theta(const Homotopy& h1, const Homotopy& h2, std::size_t b, std::size_t b1, std::size_t b2);

Homotopy concat(const Homotopy& h1, const Homotopy& h2, bool check_base = true);
Homotopy invert(const Homotopy& h);

// 2-derivations.
Fn extend_2derivation(const Homotopy& h, std::vector<Elem> kb);
TwoFold make_twofold(const Homotopy& h, std::vector<Elem> kb);
Elem xi(const Homotopy& h, const Fn& k, const Elem& g, const Elem& h1, const Elem& i);
Homotopy twofold_target(const TwoFold& k);
TwoFold vertical(const TwoFold& k, const TwoFold& k2);
TwoFold invert_twofold(const TwoFold& k);
// k: h ⇒ h', u starting at the common target of h and h'.
TwoFold whisker_right(const TwoFold& k, const Homotopy& u);
// u ending at the common base of k.
TwoFold whisker_left(const Homotopy& u, const TwoFold& k);

// Composition with strict maps.
Homotopy compose_left(const Morph& g, const Homotopy& h);
Homotopy compose_right(const Homotopy& h, const Morph& m);

Report twofold_check(const TwoFold& k, const VerifyCfg& cfg);

// Law suite over a list of homotopies and 2-fold homotopies between maps S -> A.
struct LawCfg {
    VerifyCfg verify;
    std::size_t max_triples = 0;  // 0 = all composable triples
    bool check_interchange = true;
};
Report hom2_laws(const std::vector<Homotopy>& cells, const std::vector<TwoFold>& twocells, const LawCfg& cfg);

// The non-symmetric example: fixA -> fixB.
struct FailCase {
    Report forward;
    Report reverse;
    bool reverse_found = false;
    bool exact_obstruction = false;
};
FailCase fail_case(int bound = 100, const VerifyCfg& cfg = {});

}  // namespace xm
