#pragma once

#include <memory>
#include <string>

#include "xm/group.hpp"
#include "xm/quant.hpp"
#include "xm/report.hpp"

namespace xm {

// L --δ--> E --∂--> G with G-actions on E and L and the Peiffer lifting {,}.
struct XMod2 {
    std::string name;
    GroupP L, E, G;
    Hom delta, bd;
    Action actE, actL;
    std::function<Elem(const Elem&, const Elem&)> lift;

    // Secondary action e ▷′ l = l {δ(l)⁻¹, e}.
    Elem sec(const Elem& e, const Elem& l) const { return L->mul(l, lift(E->inv(delta(l)), e)); }
    // Peiffer commutator ⟨e,f⟩ = (e f e⁻¹)(∂(e) ▷ f⁻¹).
    Elem peiffer(const Elem& e, const Elem& f) const {
        return E->mul(E->conj(e, f), actE(bd(e), E->inv(f)));
    }
    bool finite() const { return L->finite() && E->finite() && G->finite(); }
};
using XModP = std::shared_ptr<const XMod2>;

// Level-wise homomorphisms (μ, ψ, φ) between two 2-crossed modules.
struct Morph {
    XModP src, tgt;
    Hom mu, psi, phi;
    std::string name;
};

struct VerifyCfg {
    ProbeCfg probe;
    RunCfg run;
    // Finite 2-crossed modules with every carrier at most this large are
    // converted to integer tables before checking.
    std::size_t tab_limit = 2500;
};

Elem peiffer_commutator(const Hom& bd, const Action& act, const Elem& x, const Elem& y);

Report verify_precrossed(const Hom& bd, const Action& act, const VerifyCfg& cfg, bool crossed = false);
Report verify_two_crossed(const XMod2& A, const VerifyCfg& cfg);
// (δ, ▷′) is a crossed module and ker δ is central in L.
Report verify_secondary_crossed(const XMod2& A, const VerifyCfg& cfg);
Report lifting_identities(const XMod2& A, const VerifyCfg& cfg);
Report xmod_map_verify(const Morph& f, const VerifyCfg& cfg);

XModP peiffer_lift_from_precrossed(const Hom& bd, const Action& act, std::string name = "");

Morph identity_morph(const XModP& A);
Morph compose(const Morph& g, const Morph& f);
// Level-wise surjectivity on enumerable carriers: (L, E, G).
std::array<bool, 3> levelwise_surjective(const Morph& f);

struct HomotopyGroups {
    GroupP pi1, pi2, pi3;
    std::string d1, d2, d3;
    std::string method;
};

HomotopyGroups homotopy_groups(const XMod2& A);

std::string show_probe(const VerifyCfg& cfg, const XMod2& A);

}  // namespace xm
