#include "xm/xmod.hpp"

#include <numeric>
#include <sstream>
#include <unordered_set>

#include "xmod_ops.hpp"

namespace xm {

using detail::GenOps;
using detail::TabOps;
using detail::TabX;

namespace detail {

TabX tabulate_xmod(const XMod2& A, int jobs) {
    TabX x;
    x.src = &A;
    x.Le = A.L->elements();
    x.Ee = A.E->elements();
    x.Ge = A.G->elements();
    x.nL = static_cast<int>(x.Le.size());
    x.nE = static_cast<int>(x.Ee.size());
    x.nG = static_cast<int>(x.Ge.size());
    auto idx = [](const GroupP& g, const Elem& e) { return static_cast<int>(g->index_of(e)); };
    x.eL = idx(A.L, A.L->id());
    x.eE = idx(A.E, A.E->id());
    x.eG = idx(A.G, A.G->id());
    auto table = [&](const GroupP& g, const std::vector<Elem>& el, std::vector<int>& m, std::vector<int>& iv) {
        std::size_t n = el.size();
        m.assign(n * n, 0);
        iv.assign(n, 0);
        parallel_for(n, jobs, [&](std::uint64_t i) {
            for (std::size_t j = 0; j < n; ++j) m[i * n + j] = idx(g, g->mul(el[i], el[j]));
            iv[i] = idx(g, g->inv(el[i]));
        });
    };
    table(A.L, x.Le, x.mL, x.iL);
    table(A.E, x.Ee, x.mE, x.iE);
    table(A.G, x.Ge, x.mG, x.iG);
    x.dl.resize(x.Le.size());
    for (std::size_t i = 0; i < x.Le.size(); ++i) x.dl[i] = idx(A.E, A.delta(x.Le[i]));
    x.bd.resize(x.Ee.size());
    for (std::size_t i = 0; i < x.Ee.size(); ++i) x.bd[i] = idx(A.G, A.bd(x.Ee[i]));
    std::size_t nE = x.Ee.size(), nL = x.Le.size();
    x.aE.assign(x.Ge.size() * nE, 0);
    x.aL.assign(x.Ge.size() * nL, 0);
    parallel_for(x.Ge.size(), jobs, [&](std::uint64_t g) {
        for (std::size_t e = 0; e < nE; ++e) x.aE[g * nE + e] = idx(A.E, A.actE(x.Ge[g], x.Ee[e]));
        for (std::size_t l = 0; l < nL; ++l) x.aL[g * nL + l] = idx(A.L, A.actL(x.Ge[g], x.Le[l]));
    });
    x.lf.assign(nE * nE, 0);
    parallel_for(nE, jobs, [&](std::uint64_t e) {
        for (std::size_t f = 0; f < nE; ++f) x.lf[e * nE + f] = idx(A.L, A.lift(x.Ee[e], x.Ee[f]));
    });
    return x;
}

}  // namespace detail

namespace {

template <class T>
using Dom = std::vector<T>;

template <class T, class... V>
auto doms(const V&... v) {
    return std::array<const std::vector<T>*, sizeof...(V)>{&v...};
}

template <class T, class Mul, class Inv, class Show>
void group_axioms(Report& r, const std::string& p, const Dom<T>& d, const T& one, Mul mul, Inv inv, Show show,
                  const RunCfg& run, bool complete) {
    r.add(forall<T>(
        p + ".assoc", doms<T>(d, d, d), [&](const T& a, const T& b, const T& c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); },
        [&](const T& a, const T& b, const T& c) { return "(" + show(a) + "," + show(b) + "," + show(c) + ")"; }, run,
        complete));
    r.add(forall<T>(
        p + ".unit", doms<T>(d), [&](const T& a) { return mul(one, a) == a && mul(a, one) == a; },
        [&](const T& a) { return show(a); }, run, complete));
    r.add(forall<T>(
        p + ".inverse", doms<T>(d), [&](const T& a) { return mul(a, inv(a)) == one && mul(inv(a), a) == one; },
        [&](const T& a) { return show(a); }, run, complete));
}

template <class T, class Act, class MulX, class MulG, class ShowG, class ShowX>
void action_axioms(Report& r, const std::string& p, const Dom<T>& G, const Dom<T>& X, const T& oneG, Act act,
                   MulX mulx, MulG mulg, ShowG sg, ShowX sx, const RunCfg& run, bool complete) {
    r.add(forall<T>(
        p + ".automorphism", doms<T>(G, X, X),
        [&](const T& g, const T& x, const T& y) { return act(g, mulx(x, y)) == mulx(act(g, x), act(g, y)); },
        [&](const T& g, const T& x, const T& y) { return "g=" + sg(g) + " x=" + sx(x) + " y=" + sx(y); }, run,
        complete));
    r.add(forall<T>(
        p + ".composition", doms<T>(G, G, X),
        [&](const T& g, const T& h, const T& x) { return act(mulg(g, h), x) == act(g, act(h, x)); },
        [&](const T& g, const T& h, const T& x) { return "g=" + sg(g) + " h=" + sg(h) + " x=" + sx(x); }, run,
        complete));
    r.add(forall<T>(
        p + ".unit", doms<T>(X), [&](const T& x) { return act(oneG, x) == x; }, [&](const T& x) { return sx(x); },
        run, complete));
}

template <class O>
void two_crossed_suite(Report& r, const O& o, const Dom<typename O::T>& L, const Dom<typename O::T>& E,
                       const Dom<typename O::T>& G, const RunCfg& run, bool complete) {
    using T = typename O::T;
    using detail::mE;
    using detail::mG;
    using detail::mL;
    auto sL = [&](const T& a) { return o.showL(a); };
    auto sE = [&](const T& a) { return o.showE(a); };
    auto sG = [&](const T& a) { return o.showG(a); };
    auto mulL = [&](const T& a, const T& b) { return o.mulL(a, b); };
    auto mulE = [&](const T& a, const T& b) { return o.mulE(a, b); };
    auto mulG = [&](const T& a, const T& b) { return o.mulG(a, b); };
    group_axioms<T>(r, "group.L", L, o.idL(), mulL, [&](const T& a) { return o.invL(a); }, sL, run, complete);
    group_axioms<T>(r, "group.E", E, o.idE(), mulE, [&](const T& a) { return o.invE(a); }, sE, run, complete);
    group_axioms<T>(r, "group.G", G, o.idG(), mulG, [&](const T& a) { return o.invG(a); }, sG, run, complete);
    auto pE = [&](const T& a, const T& b) { return "e=" + sE(a) + " f=" + sE(b); };
    auto pL = [&](const T& a, const T& b) { return "l=" + sL(a) + " k=" + sL(b); };
    auto pLE = [&](const T& l, const T& e) { return "l=" + sL(l) + " e=" + sE(e); };
    auto tE = [&](const T& a, const T& b, const T& c) { return "e=" + sE(a) + " f=" + sE(b) + " g=" + sE(c); };

    r.add(forall<T>("hom.delta", doms<T>(L, L),
                    [&](const T& a, const T& b) { return o.delta(o.mulL(a, b)) == o.mulE(o.delta(a), o.delta(b)); }, pL,
                    run, complete));
    r.add(forall<T>("hom.partial", doms<T>(E, E),
                    [&](const T& a, const T& b) { return o.bd(o.mulE(a, b)) == o.mulG(o.bd(a), o.bd(b)); }, pE, run,
                    complete));
    action_axioms<T>(r, "action.E", G, E, o.idG(), [&](const T& g, const T& e) { return o.actE(g, e); }, mulE, mulG,
                     sG, sE, run, complete);
    action_axioms<T>(r, "action.L", G, L, o.idG(), [&](const T& g, const T& l) { return o.actL(g, l); }, mulL, mulG,
                     sG, sL, run, complete);

    r.add(forall<T>("complex", doms<T>(L), [&](const T& l) { return o.bd(o.delta(l)) == o.idG(); }, sL, run,
                    complete));
    r.add(forall<T>(
        "delta.equivariant", doms<T>(G, L),
        [&](const T& g, const T& l) { return o.delta(o.actL(g, l)) == o.actE(g, o.delta(l)); },
        [&](const T& g, const T& l) { return "g=" + sG(g) + " l=" + sL(l); }, run, complete));
    r.add(forall<T>(
        "boundary.equivariant", doms<T>(G, E),
        [&](const T& g, const T& e) { return o.bd(o.actE(g, e)) == mG(o, g, o.bd(e), o.invG(g)); },
        [&](const T& g, const T& e) { return "g=" + sG(g) + " e=" + sE(e); }, run, complete));
    r.add(forall<T>(
        "lifting.peiffer", doms<T>(E, E), [&](const T& e, const T& f) { return o.delta(o.lift(e, f)) == detail::peif(o, e, f); },
        pE, run, complete));
    r.add(forall<T>(
        "lifting.on_images", doms<T>(L, L),
        [&](const T& l, const T& k) {
            return mL(o, l, k, o.invL(l), o.invL(k)) == o.lift(o.delta(l), o.delta(k));
        },
        pL, run, complete));
    r.add(forall<T>(
        "lifting.mixed_images", doms<T>(L, E),
        [&](const T& l, const T& e) {
            T dl = o.delta(l);
            return o.mulL(o.lift(dl, e), o.lift(e, dl)) == o.mulL(l, o.actL(o.bd(e), o.invL(l)));
        },
        pLE, run, complete));
    r.add(forall<T>(
        "lifting.product_first_slot", doms<T>(E, E, E),
        [&](const T& e, const T& f, const T& g) {
            return o.lift(o.mulE(e, f), g) ==
                   o.mulL(o.lift(e, mE(o, f, g, o.invE(f))), o.actL(o.bd(e), o.lift(f, g)));
        },
        tE, run, complete));
    r.add(forall<T>(
        "lifting.product_second_slot", doms<T>(E, E, E),
        [&](const T& e, const T& f, const T& g) {
            return o.lift(e, o.mulE(f, g)) ==
                   o.mulL(o.lift(e, f), detail::sec(o, o.actE(o.bd(e), f), o.lift(e, g)));
        },
        tE, run, complete));
    r.add(forall<T>(
        "lifting.equivariant", doms<T>(G, E, E),
        [&](const T& g, const T& e, const T& f) { return o.actL(g, o.lift(e, f)) == o.lift(o.actE(g, e), o.actE(g, f)); },
        [&](const T& g, const T& e, const T& f) { return "g=" + sG(g) + " e=" + sE(e) + " f=" + sE(f); }, run,
        complete));
}

template <class O>
void secondary_suite(Report& r, const O& o, const Dom<typename O::T>& L, const Dom<typename O::T>& E,
                     const RunCfg& run, bool complete, bool enumerable) {
    using T = typename O::T;
    auto sL = [&](const T& a) { return o.showL(a); };
    auto sE = [&](const T& a) { return o.showE(a); };
    auto s = [&](const T& e, const T& l) { return detail::sec(o, e, l); };
    action_axioms<T>(
        r, "secondary.action", E, L, o.idE(), s, [&](const T& a, const T& b) { return o.mulL(a, b); },
        [&](const T& a, const T& b) { return o.mulE(a, b); }, sE, sL, run, complete);
    r.add(forall<T>(
        "secondary.first_peiffer", doms<T>(E, L),
        [&](const T& e, const T& l) { return o.delta(s(e, l)) == detail::mE(o, e, o.delta(l), o.invE(e)); },
        [&](const T& e, const T& l) { return "e=" + sE(e) + " l=" + sL(l); }, run, complete));
    r.add(forall<T>(
        "secondary.second_peiffer", doms<T>(L, L),
        [&](const T& l, const T& k) { return s(o.delta(l), k) == detail::mL(o, l, k, o.invL(l)); },
        [&](const T& l, const T& k) { return "l=" + sL(l) + " k=" + sL(k); }, run, complete));
    if (enumerable) {
        Dom<T> ker;
        for (const auto& l : L)
            if (o.delta(l) == o.idE()) ker.push_back(l);
        r.add(forall<T>(
            "secondary.ker_delta_central", doms<T>(ker, L), [&](const T& z, const T& l) { return o.mulL(z, l) == o.mulL(l, z); },
            [&](const T& z, const T& l) { return "z=" + sL(z) + " l=" + sL(l); }, run, complete));
    }
}

template <class O>
void lifting_identity_checks(Report& r, const O& o, const Dom<typename O::T>& L, const Dom<typename O::T>& E,
                const Dom<typename O::T>& G, const RunCfg& run, bool complete) {
    using T = typename O::T;
    using detail::mE;
    using detail::mL;
    auto sL = [&](const T& a) { return o.showL(a); };
    auto sE = [&](const T& a) { return o.showE(a); };
    auto sG = [&](const T& a) { return o.showG(a); };
    auto S = [&](const T& e, const T& l) { return detail::sec(o, e, l); };
    auto P = [&](const T& e, const T& f) { return detail::peif(o, e, f); };
    auto lf = [&](const T& e, const T& f) { return o.lift(e, f); };
    auto iE = [&](const T& e) { return o.invE(e); };
    auto iL = [&](const T& l) { return o.invL(l); };
    auto cj = [&](const T& e, const T& f) { return mE(o, e, f, o.invE(e)); };
    auto bE = [&](const T& e, const T& x) { return o.actE(o.bd(e), x); };
    auto bL = [&](const T& e, const T& l) { return o.actL(o.bd(e), l); };
    auto tE = [&](const T& a, const T& b, const T& c) { return "e=" + sE(a) + " f=" + sE(b) + " g=" + sE(c); };
    auto pE = [&](const T& a, const T& b) { return "e=" + sE(a) + " f=" + sE(b); };
    auto pEL = [&](const T& e, const T& l) { return "e=" + sE(e) + " l=" + sL(l); };
    const T one = o.idE(), oneL = o.idL();

    r.add(forall<T>("lifting.unit", doms<T>(E), [&](const T& e) { return lf(e, one) == oneL && lf(one, e) == oneL; },
                    sE, run, complete));
    r.add(forall<T>(
        "secondary.equivariant", doms<T>(G, E, L),
        [&](const T& a, const T& e, const T& k) { return o.actL(a, S(e, k)) == S(o.actE(a, e), o.actL(a, k)); },
        [&](const T& a, const T& e, const T& k) { return "a=" + sG(a) + " e=" + sE(e) + " k=" + sL(k); }, run,
        complete));
    r.add(forall<T>(
        "lifting.product_first_slot", doms<T>(E, E, E),
        [&](const T& e, const T& f, const T& g) { return lf(o.mulE(e, f), g) == o.mulL(S(e, lf(f, g)), lf(e, bE(f, g))); },
        tE, run, complete));
    r.add(forall<T>(
        "lifting.product_second_slot", doms<T>(E, E, E),
        [&](const T& e, const T& f, const T& g) { return lf(e, o.mulE(f, g)) == o.mulL(S(cj(e, f), lf(e, g)), lf(e, f)); },
        tE, run, complete));
    r.add(forall<T>(
        "lifting.inverse_first", doms<T>(E, E), [&](const T& e, const T& f) { return iL(lf(e, f)) == bL(e, lf(iE(e), cj(e, f))); },
        pE, run, complete));
    r.add(forall<T>(
        "lifting.inverse_second", doms<T>(E, E), [&](const T& e, const T& f) { return iL(lf(e, f)) == S(cj(e, f), lf(e, iE(f))); },
        pE, run, complete));
    r.add(forall<T>(
        "lifting.inverse_third", doms<T>(E, E), [&](const T& e, const T& f) { return iL(lf(e, f)) == S(bE(e, f), lf(e, iE(f))); },
        pE, run, complete));
    r.add(forall<T>(
        "lifting.inverse_fourth", doms<T>(E, E), [&](const T& e, const T& f) { return iL(lf(e, f)) == S(e, lf(iE(e), bE(e, f))); },
        pE, run, complete));
    r.add(forall<T>(
        "secondary.inverse_chain", doms<T>(E, L),
        [&](const T& e, const T& l) {
            T dl = o.delta(l);
            T a = o.mulL(iL(lf(iE(dl), e)), iL(l));
            T b = iL(S(e, l));
            T c = S(e, iL(l));
            T d = o.mulL(iL(l), lf(dl, e));
            return a == b && b == c && c == d;
        },
        pEL, run, complete));
    r.add(forall<T>(
        "secondary.as_lifting", doms<T>(E, L),
        [&](const T& e, const T& l) { return S(e, l) == o.mulL(iL(lf(o.delta(l), e)), l); }, pEL, run, complete));
    r.add(forall<T>(
        "secondary.boundary_left", doms<T>(E, L),
        [&](const T& e, const T& l) { return bL(e, l) == o.mulL(S(e, l), lf(e, iE(o.delta(l)))); }, pEL, run,
        complete));
    r.add(forall<T>(
        "secondary.boundary_right", doms<T>(E, L),
        [&](const T& e, const T& l) { return bL(e, l) == o.mulL(iL(lf(e, o.delta(l))), S(e, l)); }, pEL, run,
        complete));
    r.add(forall<T>(
        "secondary.on_lifting", doms<T>(E, E, E),
        [&](const T& a, const T& b, const T& c) {
            T lhs = S(a, lf(b, c));
            T m1 = o.mulL(bL(a, lf(b, c)), iL(lf(a, iE(P(b, c)))));
            T w = mE(o, bE(b, c), b, iE(c), iE(b));
            T m2 = o.mulL(lf(bE(a, b), bE(a, c)), iL(lf(a, w)));
            return lhs == m1 && m1 == m2;
        },
        tE, run, complete));
}

template <class O>
bool use_tables(const XMod2& A, const VerifyCfg& cfg) {
    return A.finite() && A.L->order() <= cfg.tab_limit && A.E->order() <= cfg.tab_limit &&
           A.G->order() <= cfg.tab_limit;
}

std::vector<int> iota_dom(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

template <class Fn>
Report run_suite(const XMod2& A, const VerifyCfg& cfg, const std::string& subject, Fn fn) {
    Report r;
    r.subject = subject;
    r.seed = cfg.run.seed;
    r.probe = show_probe(cfg, A);
    if (use_tables<TabOps>(A, cfg)) {
        TabX x = detail::tabulate_xmod(A, cfg.run.jobs);
        TabOps o{&x};
        auto L = iota_dom(x.nL), E = iota_dom(x.nE), G = iota_dom(x.nG);
        fn(r, o, L, E, G, true);
    } else {
        GenOps o{&A};
        auto L = A.L->probes(cfg.probe), E = A.E->probes(cfg.probe), G = A.G->probes(cfg.probe);
        bool complete = A.L->finite() && A.E->finite() && A.G->finite() && L.size() == A.L->order() &&
                        E.size() == A.E->order() && G.size() == A.G->order();
        fn(r, o, L, E, G, complete);
    }
    return r;
}

}  // namespace

std::string show_probe(const VerifyCfg& cfg, const XMod2& A) {
    std::ostringstream os;
    auto one = [&](const GroupP& g) {
        if (g->finite() && g->order() <= cfg.tab_limit) return std::string("all ") + std::to_string(g->order());
        return std::to_string(g->probes(cfg.probe).size()) + " probes";
    };
    os << "L: " << one(A.L) << ", E: " << one(A.E) << ", G: " << one(A.G) << "; tuple cap " << cfg.run.cap
       << ", samples " << cfg.run.samples;
    return os.str();
}

Elem peiffer_commutator(const Hom& bd, const Action& act, const Elem& x, const Elem& y) {
    const auto& E = bd.dom;
    return E->mul(E->conj(x, y), act(bd(x), E->inv(y)));
}

Report verify_two_crossed(const XMod2& A, const VerifyCfg& cfg) {
    return run_suite(A, cfg, "2-crossed module " + A.name, [&](Report& r, const auto& o, const auto& L, const auto& E,
                                                                const auto& G, bool complete) {
        two_crossed_suite(r, o, L, E, G, cfg.run, complete);
    });
}

Report verify_secondary_crossed(const XMod2& A, const VerifyCfg& cfg) {
    return run_suite(A, cfg, "secondary crossed module of " + A.name,
                     [&](Report& r, const auto& o, const auto& L, const auto& E, const auto&, bool complete) {
                         secondary_suite(r, o, L, E, cfg.run, complete, complete);
                     });
}

Report lifting_identities(const XMod2& A, const VerifyCfg& cfg) {
    return run_suite(A, cfg, "lifting identities of " + A.name,
                     [&](Report& r, const auto& o, const auto& L, const auto& E, const auto& G, bool complete) {
                         lifting_identity_checks(r, o, L, E, G, cfg.run, complete);
                     });
}

Report verify_precrossed(const Hom& bd, const Action& act, const VerifyCfg& cfg, bool crossed) {
    Report r;
    const auto& E = bd.dom;
    const auto& G = bd.cod;
    r.subject = std::string(crossed ? "crossed" : "pre-crossed") + " module " + E->name + "->" + G->name;
    r.seed = cfg.run.seed;
    auto Ed = E->probes(cfg.probe), Gd = G->probes(cfg.probe);
    bool complete = E->finite() && G->finite() && Ed.size() == E->order() && Gd.size() == G->order();
    auto sE = [&](const Elem& x) { return E->show(x); };
    auto sG = [&](const Elem& x) { return G->show(x); };
    r.add(forall<Elem>("hom.partial", doms<Elem>(Ed, Ed),
                       [&](const Elem& a, const Elem& b) { return bd(E->mul(a, b)) == G->mul(bd(a), bd(b)); },
                       [&](const Elem& a, const Elem& b) { return sE(a) + "," + sE(b); }, cfg.run, complete));
    action_axioms<Elem>(
        r, "action", Gd, Ed, G->id(), [&](const Elem& g, const Elem& e) { return act(g, e); },
        [&](const Elem& a, const Elem& b) { return E->mul(a, b); }, [&](const Elem& a, const Elem& b) { return G->mul(a, b); },
        sG, sE, cfg.run, complete);
    r.add(forall<Elem>("first_peiffer", doms<Elem>(Gd, Ed),
                       [&](const Elem& g, const Elem& e) { return bd(act(g, e)) == G->conj(g, bd(e)); },
                       [&](const Elem& g, const Elem& e) { return "g=" + sG(g) + " e=" + sE(e); }, cfg.run, complete));
    r.add(forall<Elem>("peiffer_commutator_in_kernel", doms<Elem>(Ed, Ed),
                       [&](const Elem& a, const Elem& b) { return G->is_id(bd(peiffer_commutator(bd, act, a, b))); },
                       [&](const Elem& a, const Elem& b) { return sE(a) + "," + sE(b); }, cfg.run, complete));
    if (crossed) {
        r.add(forall<Elem>("second_peiffer", doms<Elem>(Ed, Ed),
                           [&](const Elem& a, const Elem& b) { return act(bd(a), b) == E->conj(a, b); },
                           [&](const Elem& a, const Elem& b) { return sE(a) + "," + sE(b); }, cfg.run, complete));
        if (E->finite()) {
            auto ker = kernel(bd);
            r.add(forall<Elem>("ker_central", doms<Elem>(ker, Ed),
                               [&](const Elem& z, const Elem& e) { return E->mul(z, e) == E->mul(e, z); },
                               [&](const Elem& z, const Elem& e) { return sE(z) + "," + sE(e); }, cfg.run, complete));
        }
    }
    return r;
}

Report xmod_map_verify(const Morph& f, const VerifyCfg& cfg) {
    Report r;
    const XMod2& A = *f.src;
    const XMod2& B = *f.tgt;
    r.subject = "morphism " + (f.name.empty() ? A.name + "->" + B.name : f.name);
    r.seed = cfg.run.seed;
    r.probe = show_probe(cfg, A);
    auto L = A.L->probes(cfg.probe), E = A.E->probes(cfg.probe), G = A.G->probes(cfg.probe);
    bool complete = A.finite() && L.size() == A.L->order() && E.size() == A.E->order() && G.size() == A.G->order();
    auto sL = [&](const Elem& x) { return A.L->show(x); };
    auto sE = [&](const Elem& x) { return A.E->show(x); };
    auto sG = [&](const Elem& x) { return A.G->show(x); };
    const auto& run = cfg.run;
    r.add(forall<Elem>("hom.mu", doms<Elem>(L, L),
                       [&](const Elem& a, const Elem& b) { return f.mu(A.L->mul(a, b)) == B.L->mul(f.mu(a), f.mu(b)); },
                       [&](const Elem& a, const Elem& b) { return sL(a) + "," + sL(b); }, run, complete));
    r.add(forall<Elem>("hom.psi", doms<Elem>(E, E),
                       [&](const Elem& a, const Elem& b) { return f.psi(A.E->mul(a, b)) == B.E->mul(f.psi(a), f.psi(b)); },
                       [&](const Elem& a, const Elem& b) { return sE(a) + "," + sE(b); }, run, complete));
    r.add(forall<Elem>("hom.phi", doms<Elem>(G, G),
                       [&](const Elem& a, const Elem& b) { return f.phi(A.G->mul(a, b)) == B.G->mul(f.phi(a), f.phi(b)); },
                       [&](const Elem& a, const Elem& b) { return sG(a) + "," + sG(b); }, run, complete));
    r.add(forall<Elem>("chain.delta", doms<Elem>(L), [&](const Elem& l) { return f.psi(A.delta(l)) == B.delta(f.mu(l)); },
                       sL, run, complete));
    r.add(forall<Elem>("chain.partial", doms<Elem>(E), [&](const Elem& e) { return f.phi(A.bd(e)) == B.bd(f.psi(e)); },
                       sE, run, complete));
    r.add(forall<Elem>("lifting", doms<Elem>(E, E),
                       [&](const Elem& e, const Elem& g) { return f.mu(A.lift(e, g)) == B.lift(f.psi(e), f.psi(g)); },
                       [&](const Elem& a, const Elem& b) { return sE(a) + "," + sE(b); }, run, complete));
    r.add(forall<Elem>("action.L", doms<Elem>(G, L),
                       [&](const Elem& g, const Elem& k) { return f.mu(A.actL(g, k)) == B.actL(f.phi(g), f.mu(k)); },
                       [&](const Elem& g, const Elem& k) { return sG(g) + "," + sL(k); }, run, complete));
    r.add(forall<Elem>("action.E", doms<Elem>(G, E),
                       [&](const Elem& g, const Elem& e) { return f.psi(A.actE(g, e)) == B.actE(f.phi(g), f.psi(e)); },
                       [&](const Elem& g, const Elem& e) { return sG(g) + "," + sE(e); }, run, complete));
    return r;
}

XModP peiffer_lift_from_precrossed(const Hom& bd, const Action& act, std::string name) {
    const GroupP& E = bd.dom;
    const GroupP& G = bd.cod;
    if (!E->finite()) throw GroupError(E->name + ": Peiffer lifting construction needs an enumerable E");
    std::vector<Elem> gens;
    std::unordered_set<Elem, ElemHash> seen;
    auto el = E->elements();
    for (const auto& a : el)
        for (const auto& b : el) {
            Elem p = peiffer_commutator(bd, act, a, b);
            if (!E->is_id(p) && seen.insert(p).second) gens.push_back(p);
        }
    auto L = std::make_shared<SubsetGroup>(E, closure(E, gens), "<<E,E>>");
    auto A = std::make_shared<XMod2>();
    A->name = name.empty() ? "peiffer(" + E->name + "->" + G->name + ")" : std::move(name);
    A->L = L;
    A->E = E;
    A->G = G;
    A->delta = Hom{L, E, [](const Elem& x) { return x; }, {}, "incl"};
    A->bd = bd;
    A->actE = act;
    A->actL = Action{G, L, act.f, act.label};
    A->lift = [bd, act](const Elem& a, const Elem& b) { return peiffer_commutator(bd, act, a, b); };
    return A;
}

Morph identity_morph(const XModP& A) {
    return Morph{A, A, identity_hom(A->L), identity_hom(A->E), identity_hom(A->G), "id_" + A->name};
}

Morph compose(const Morph& g, const Morph& f) {
    return Morph{f.src, g.tgt, compose(g.mu, f.mu), compose(g.psi, f.psi), compose(g.phi, f.phi),
                 g.name + "∘" + f.name};
}

std::array<bool, 3> levelwise_surjective(const Morph& f) {
    auto surj = [](const Hom& h) {
        if (!h.dom->finite() || !h.cod->finite()) throw GroupError("surjectivity needs enumerable carriers");
        return image(h).size() == h.cod->order();
    };
    return {surj(f.mu), surj(f.psi), surj(f.phi)};
}

// ---------------------------------------------------------------- homotopy groups

namespace {

// Subgroup aC of a cyclic-or-integer carrier C, where a = 0 means trivial in Z.
struct CycSub {
    std::int64_t gen;
};

std::int64_t modulus_of(const GroupP& g) {
    if (auto c = std::dynamic_pointer_cast<const CyclicGroup>(g)) return c->modulus();
    if (std::dynamic_pointer_cast<const IntegerGroup>(g)) return 0;
    return -1;
}

std::int64_t gcd0(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

CycSub lin_kernel(const Hom& h) {
    std::int64_t m1 = modulus_of(h.dom), m2 = modulus_of(h.cod);
    if (h.lin.kind == Hom::Linear::Zero || h.lin.k == 0) return {m1 == 0 ? 1 : 1};
    std::int64_t d;
    if (m2 == 0) d = 0;  // kx = 0 in Z forces x = 0
    else d = m2 / gcd0(h.lin.k, m2);
    if (m1 > 0) d = gcd0(d, m1);
    return {d};
}

CycSub lin_image(const Hom& h) {
    std::int64_t m2 = modulus_of(h.cod);
    std::int64_t k = h.lin.kind == Hom::Linear::Zero ? 0 : h.lin.k;
    if (m2 == 0) return {k < 0 ? -k : k};
    return {gcd0(k, m2) == 0 ? m2 : gcd0(k, m2)};
}

// The group aC/bC for b ∈ aC.
GroupP cyc_quotient(std::int64_t m, CycSub a, CycSub b) {
    if (m == 0) {
        if (a.gen == 0) return std::make_shared<CyclicGroup>(1);
        if (b.gen == 0) return std::make_shared<IntegerGroup>();
        return std::make_shared<CyclicGroup>(b.gen / a.gen);
    }
    return std::make_shared<CyclicGroup>(b.gen / a.gen);
}

GroupP cyc_subgroup(std::int64_t m, CycSub a) {
    if (m == 0) {
        if (a.gen == 0) return std::make_shared<CyclicGroup>(1);
        return std::make_shared<IntegerGroup>();
    }
    return std::make_shared<CyclicGroup>(m / a.gen);
}

}  // namespace

HomotopyGroups homotopy_groups(const XMod2& A) {
    HomotopyGroups out;
    if (A.finite()) {
        out.method = "enumeration";
        auto imbd = image(A.bd);
        if (!is_normal(A.G, imbd)) throw GroupError(A.name + ": image of the boundary is not normal");
        out.pi1 = quotient(A.G, imbd, "pi1");
        auto kerbd = kernel(A.bd);
        auto K = std::make_shared<SubsetGroup>(A.E, kerbd, "ker∂");
        auto imd = image(A.delta);
        for (const auto& x : imd)
            if (!K->contains(x)) throw GroupError(A.name + ": image of delta not inside ker of boundary");
        if (!is_normal(K, imd)) throw GroupError(A.name + ": image of delta is not normal in ker of boundary");
        out.pi2 = quotient(K, imd, "pi2");
        out.pi3 = std::make_shared<SubsetGroup>(A.L, kernel(A.delta), "pi3");
    } else {
        std::int64_t mL = modulus_of(A.L), mE = modulus_of(A.E), mG = modulus_of(A.G);
        if (mL < 0 || mE < 0 || mG < 0 || A.delta.lin.kind == Hom::Linear::None ||
            A.bd.lin.kind == Hom::Linear::None)
            throw GroupError(A.name + ": homotopy groups not computable for these carriers");
        out.method = "linear arithmetic";
        out.pi1 = cyc_quotient(mG, {1}, lin_image(A.bd));
        out.pi2 = cyc_quotient(mE, lin_kernel(A.bd), lin_image(A.delta));
        out.pi3 = cyc_subgroup(mL, lin_kernel(A.delta));
    }
    out.d1 = describe(out.pi1);
    out.d2 = describe(out.pi2);
    out.d3 = describe(out.pi3);
    return out;
}

}  // namespace xm
