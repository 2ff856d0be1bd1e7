#pragma once

// Two interchangeable backends for the axiom suites: integer Cayley tables for
// small finite 2-crossed modules and direct Elem arithmetic for everything else.

#include <vector>

#include "xm/xmod.hpp"

namespace xm::detail {

struct TabX {
    const XMod2* src = nullptr;
    int nL = 0, nE = 0, nG = 0;
    int eL = 0, eE = 0, eG = 0;
    std::vector<Elem> Le, Ee, Ge;
    std::vector<int> mL, mE, mG, iL, iE, iG;
    std::vector<int> dl, bd, aE, aL, lf;
};

TabX tabulate_xmod(const XMod2& A, int jobs);

struct TabOps {
    using T = int;
    const TabX* x;

    T mulL(T a, T b) const { return x->mL[a * x->nL + b]; }
    T mulE(T a, T b) const { return x->mE[a * x->nE + b]; }
    T mulG(T a, T b) const { return x->mG[a * x->nG + b]; }
    T invL(T a) const { return x->iL[a]; }
    T invE(T a) const { return x->iE[a]; }
    T invG(T a) const { return x->iG[a]; }
    T idL() const { return x->eL; }
    T idE() const { return x->eE; }
    T idG() const { return x->eG; }
    T delta(T l) const { return x->dl[l]; }
    T bd(T e) const { return x->bd[e]; }
    T actE(T g, T e) const { return x->aE[g * x->nE + e]; }
    T actL(T g, T l) const { return x->aL[g * x->nL + l]; }
    T lift(T e, T f) const { return x->lf[e * x->nE + f]; }

    std::string showL(T a) const { return x->src->L->show(x->Le[a]); }
    std::string showE(T a) const { return x->src->E->show(x->Ee[a]); }
    std::string showG(T a) const { return x->src->G->show(x->Ge[a]); }
};

struct GenOps {
    using T = Elem;
    const XMod2* x;

    T mulL(const T& a, const T& b) const { return x->L->mul(a, b); }
    T mulE(const T& a, const T& b) const { return x->E->mul(a, b); }
    T mulG(const T& a, const T& b) const { return x->G->mul(a, b); }
    T invL(const T& a) const { return x->L->inv(a); }
    T invE(const T& a) const { return x->E->inv(a); }
    T invG(const T& a) const { return x->G->inv(a); }
    T idL() const { return x->L->id(); }
    T idE() const { return x->E->id(); }
    T idG() const { return x->G->id(); }
    T delta(const T& l) const { return x->delta(l); }
    T bd(const T& e) const { return x->bd(e); }
    T actE(const T& g, const T& e) const { return x->actE(g, e); }
    T actL(const T& g, const T& l) const { return x->actL(g, l); }
    T lift(const T& e, const T& f) const { return x->lift(e, f); }

    std::string showL(const T& a) const { return x->L->show(a); }
    std::string showE(const T& a) const { return x->E->show(a); }
    std::string showG(const T& a) const { return x->G->show(a); }
};

// Derived operations shared by both backends.
template <class O>
typename O::T sec(const O& o, const typename O::T& e, const typename O::T& l) {
    return o.mulL(l, o.lift(o.invE(o.delta(l)), e));
}

template <class O>
typename O::T peif(const O& o, const typename O::T& e, const typename O::T& f) {
    return o.mulE(o.mulE(o.mulE(e, f), o.invE(e)), o.actE(o.bd(e), o.invE(f)));
}

template <class O, class... A>
typename O::T mL(const O& o, const typename O::T& a, const typename O::T& b, const A&... rest) {
    if constexpr (sizeof...(rest) == 0) return o.mulL(a, b);
    else return mL(o, o.mulL(a, b), rest...);
}

template <class O, class... A>
typename O::T mE(const O& o, const typename O::T& a, const typename O::T& b, const A&... rest) {
    if constexpr (sizeof...(rest) == 0) return o.mulE(a, b);
    else return mE(o, o.mulE(a, b), rest...);
}

template <class O, class... A>
typename O::T mG(const O& o, const typename O::T& a, const typename O::T& b, const A&... rest) {
    if constexpr (sizeof...(rest) == 0) return o.mulG(a, b);
    else return mG(o, o.mulG(a, b), rest...);
}

}  // namespace xm::detail
