#include "xm/pathspace.hpp"

#include <unordered_set>

namespace xm {

namespace {

// Shorthand over one 2-crossed module.
struct Fx {
    const XMod2& A;

    Elem mE(const Elem& a, const Elem& b) const { return A.E->mul(a, b); }
    template <class... R>
    Elem mE(const Elem& a, const Elem& b, const R&... r) const { return mE(mE(a, b), r...); }
    Elem mL(const Elem& a, const Elem& b) const { return A.L->mul(a, b); }
    template <class... R>
    Elem mL(const Elem& a, const Elem& b, const R&... r) const { return mL(mL(a, b), r...); }
    Elem mG(const Elem& a, const Elem& b) const { return A.G->mul(a, b); }
    Elem iE(const Elem& a) const { return A.E->inv(a); }
    Elem iL(const Elem& a) const { return A.L->inv(a); }
    Elem iG(const Elem& a) const { return A.G->inv(a); }
    Elem oE() const { return A.E->id(); }
    Elem oL() const { return A.L->id(); }
    Elem oG() const { return A.G->id(); }
    Elem gE(const Elem& g, const Elem& e) const { return A.actE(g, e); }
    Elem gL(const Elem& g, const Elem& l) const { return A.actL(g, l); }
    Elem d(const Elem& l) const { return A.delta(l); }
    Elem b(const Elem& e) const { return A.bd(e); }
    Elem lf(const Elem& e, const Elem& f) const { return A.lift(e, f); }
    Elem sec(const Elem& e, const Elem& l) const { return A.sec(e, l); }
    // a e δ(k), the far end of a path (a,e,k).
    Elem end1(const Elem& X) const { return mE(X[0], X[1][0], d(X[1][1])); }
};

// Gr1 multiplication written out coordinatewise.
Elem ep_mul(const XMod2& A, const Elem& X, const Elem& Y) {
    Fx o{A};
    const Elem &a = X[0], &e = X[1][0], &k = X[1][1];
    const Elem &a2 = Y[0], &e2 = Y[1][0], &k2 = Y[1][1];
    Elem ai = o.iE(a2);
    Elem ee = o.mE(o.gE(o.b(ai), e), e2);
    Elem kk = o.mL(o.sec(o.iE(e2), o.mL(o.iL(o.lf(ai, o.iE(e))), o.sec(ai, k))), k2);
    return T3(o.mE(a, a2), ee, kk);
}

Hom retarget(Hom h, GroupP dom, GroupP cod) {
    h.dom = std::move(dom);
    h.cod = std::move(cod);
    return h;
}

XModP restrict_xmod(const XMod2& B, GroupP L, GroupP E, GroupP G, std::string name) {
    auto R = std::make_shared<XMod2>(B);
    R->name = std::move(name);
    R->L = L;
    R->E = E;
    R->G = G;
    R->delta = retarget(B.delta, L, E);
    R->bd = retarget(B.bd, E, G);
    R->actE.actor = G;
    R->actE.target = E;
    R->actL.actor = G;
    R->actL.target = L;
    return R;
}

Morph restrict_morph(const Morph& f, const XModP& src, const XModP& tgt, std::string name) {
    return Morph{src, tgt, retarget(f.mu, src->L, tgt->L), retarget(f.psi, src->E, tgt->E),
                 retarget(f.phi, src->G, tgt->G), std::move(name)};
}

template <class... V>
auto doms(const V&... v) {
    return std::array<const std::vector<Elem>*, sizeof...(V)>{&v...};
}

bool complete_probes(const GroupP& g, const std::vector<Elem>& p) { return g->finite() && p.size() == g->order(); }

void require_finite(const XMod2& A, const char* what) {
    if (!A.finite()) throw GroupError(std::string(what) + " needs a finite 2-crossed module, got " + A.name);
}

std::vector<Elem> to_vec(const GroupP& g) { return g->elements(); }

Check set_equal(std::string id, const std::vector<Elem>& a, const std::vector<Elem>& b, const GroupP& show) {
    std::unordered_set<Elem, ElemHash> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    Check c;
    c.id = std::move(id);
    c.tested = sa.size() + sb.size();
    for (const auto& x : sa)
        if (!sb.count(x)) {
            ++c.failures;
            if (c.witnesses.size() < 3) c.witnesses.push_back("only left: " + show->show(x));
        }
    for (const auto& x : sb)
        if (!sa.count(x)) {
            ++c.failures;
            if (c.witnesses.size() < 3) c.witnesses.push_back("only right: " + show->show(x));
        }
    c.pass = c.failures == 0;
    c.note = std::to_string(sa.size()) + " vs " + std::to_string(sb.size()) + " elements";
    return c;
}

}  // namespace

Elem derived_action(const XMod2& A, const Elem& b, const Elem& ek) {
    Fx o{A};
    const Elem &e = ek[0], &k = ek[1];
    return T2(o.gE(o.b(b), e), o.mL(o.iL(o.lf(b, o.iE(e))), o.sec(b, k)));
}

Elem first_lifted_action(const XMod2& A, const Elem& gx, const Elem& aek) {
    Fx o{A};
    const Elem &g = gx[0], &x = gx[1];
    const Elem &a = aek[0], &e = aek[1][0], &k = aek[1][1];
    Elem ai = o.iE(a), xi = o.iE(x), ei = o.iE(e);
    Elem e1 = o.mE(o.gE(o.b(ai), x), e, xi);
    Elem k1 = o.mL(o.sec(o.mE(x, ei), o.iL(o.lf(ai, xi))), o.lf(x, o.mE(ei, ai)), o.gL(o.b(x), k));
    return T3(o.gE(g, a), o.gE(g, e1), o.gL(g, k1));
}

Elem second_lifted_action(const XMod2& A, const Elem& gx, const Elem& kl) {
    Fx o{A};
    const Elem &g = gx[0], &x = gx[1];
    const Elem &k = kl[0], &l = kl[1];
    Elem l1 = o.mL(o.iL(k), o.gL(o.b(x), o.mL(k, l)));
    return T2(o.gL(g, k), o.gL(g, l1));
}

Elem path_lifting(const XMod2& A, const Elem& X, const Elem& Y) {
    Fx o{A};
    Elem l1 = o.lf(X[0], Y[0]);
    return T2(l1, o.mL(o.iL(l1), o.lf(o.end1(X), o.end1(Y))));
}

PathSpace path_space(const XModP& Ap) {
    const XMod2& A = *Ap;
    PathSpace P;
    P.base = Ap;
    auto Lp = std::make_shared<Semidirect>(A.L, A.L, conjugation_action(A.L), "L'(" + A.name + ")");
    auto EL = std::make_shared<Semidirect>(
        A.E, A.L, Action{A.E, A.L, [Ap](const Elem& e, const Elem& l) { return Ap->sec(e, l); }, "sec"},
        "E⋉L(" + A.name + ")");
    auto Ep = std::make_shared<Semidirect>(
        A.E, EL, Action{A.E, EL, [Ap](const Elem& b, const Elem& ek) { return derived_action(*Ap, b, ek); }, "derived"},
        "E'(" + A.name + ")");
    auto Gp = std::make_shared<Semidirect>(A.G, A.E, A.actE, "G'(" + A.name + ")");

    auto T = std::make_shared<XMod2>();
    T->name = "P*(" + A.name + ")";
    T->L = Lp;
    T->E = Ep;
    T->G = Gp;
    T->delta = Hom{Lp, Ep, [Ap](const Elem& kl) { return T3(Ap->delta(kl[0]), Ap->E->id(), kl[1]); }, {}, "δ'"};
    T->bd = Hom{Ep, Gp, [Ap](const Elem& X) { return T2(Ap->bd(X[0]), X[1][0]); }, {}, "∂'"};
    T->actE = Action{Gp, Ep, [Ap](const Elem& g, const Elem& X) { return first_lifted_action(*Ap, g, X); }, "lifted1"};
    T->actL = Action{Gp, Lp, [Ap](const Elem& g, const Elem& Y) { return second_lifted_action(*Ap, g, Y); }, "lifted2"};
    T->lift = [Ap](const Elem& X, const Elem& Y) { return path_lifting(*Ap, X, Y); };
    P.total = T;

    P.pr0 = Morph{T, Ap, Hom{Lp, A.L, [](const Elem& x) { return x[0]; }, {}, "pr0"},
                  Hom{Ep, A.E, [](const Elem& x) { return x[0]; }, {}, "pr0"},
                  Hom{Gp, A.G, [](const Elem& x) { return x[0]; }, {}, "pr0"}, "Pr0"};
    P.pr1 = Morph{T, Ap, Hom{Lp, A.L, [Ap](const Elem& x) { return Ap->L->mul(x[0], x[1]); }, {}, "pr1"},
                  Hom{Ep, A.E, [Ap](const Elem& x) { return Fx{*Ap}.end1(x); }, {}, "pr1"},
                  Hom{Gp, A.G, [Ap](const Elem& x) { return Ap->G->mul(x[0], Ap->bd(x[1])); }, {}, "pr1"}, "Pr1"};
    P.incl = Morph{Ap, T, Hom{A.L, Lp, [Ap](const Elem& k) { return T2(k, Ap->L->id()); }, {}, "incl"},
                   Hom{A.E, Ep, [Ap](const Elem& e) { return T3(e, Ap->E->id(), Ap->L->id()); }, {}, "incl"},
                   Hom{A.G, Gp, [Ap](const Elem& g) { return T2(g, Ap->E->id()); }, {}, "incl"}, "incl"};
    return P;
}

Morph path_space_map(const Morph& f, const XModP& Ps, const XModP& Pt) {
    Hom mu = f.mu, psi = f.psi, phi = f.phi;
    return Morph{Ps, Pt, Hom{Ps->L, Pt->L, [mu](const Elem& x) { return T2(mu(x[0]), mu(x[1])); }, {}, "P*mu"},
                 Hom{Ps->E, Pt->E, [mu, psi](const Elem& x) { return T3(psi(x[0]), psi(x[1][0]), mu(x[1][1])); }, {},
                     "P*psi"},
                 Hom{Ps->G, Pt->G, [psi, phi](const Elem& x) { return T2(phi(x[0]), psi(x[1])); }, {}, "P*phi"},
                 "P*(" + f.name + ")"};
}

Morph path_space_map(const Morph& f) {
    return path_space_map(f, path_space(f.src).total, path_space(f.tgt).total);
}

Report lifted_action_cases(const XMod2& A, const VerifyCfg& cfg) {
    Report r;
    r.subject = "lifted actions on " + A.name;
    r.seed = cfg.run.seed;
    r.probe = show_probe(cfg, A);
    Fx o{A};
    auto L = A.L->probes(cfg.probe), E = A.E->probes(cfg.probe), G = A.G->probes(cfg.probe);
    bool cl = complete_probes(A.L, L), ce = complete_probes(A.E, E), cg = complete_probes(A.G, G);
    auto sL = [&](const Elem& x) { return A.L->show(x); };
    auto sE = [&](const Elem& x) { return A.E->show(x); };
    auto sG = [&](const Elem& x) { return A.G->show(x); };
    const auto& run = cfg.run;
    const Elem eE = o.oE(), eL = o.oL(), eG = o.oG();

    r.add(forall<Elem>(
        "lifted1.bottom_only", doms(G, E, E, L),
        [&](const Elem& g, const Elem& a, const Elem& e, const Elem& k) {
            return first_lifted_action(A, T2(g, eE), T3(a, e, k)) == T3(o.gE(g, a), o.gE(g, e), o.gL(g, k));
        },
        [&](const Elem& g, const Elem& a, const Elem& e, const Elem& k) {
            return sG(g) + ";" + sE(a) + "," + sE(e) + "," + sL(k);
        },
        run, cg && ce && cl));
    r.add(forall<Elem>(
        "lifted1.on_delta_column", doms(E, L, L),
        [&](const Elem& x, const Elem& k, const Elem& l) {
            return first_lifted_action(A, T2(eG, x), T3(o.d(k), eE, l)) ==
                   T3(o.d(k), eE, o.mL(o.iL(k), o.gL(o.b(x), o.mL(k, l))));
        },
        [&](const Elem& x, const Elem& k, const Elem& l) { return sE(x) + ";" + sL(k) + "," + sL(l); }, run, ce && cl));
    r.add(forall<Elem>(
        "lifted1.on_middle", doms(E, E, L),
        [&](const Elem& x, const Elem& e, const Elem& k) {
            return first_lifted_action(A, T2(eG, x), T3(eE, e, k)) ==
                   T3(eE, o.mE(x, e, o.iE(x)), o.mL(o.lf(x, o.iE(e)), o.gL(o.b(x), k)));
        },
        [&](const Elem& x, const Elem& e, const Elem& k) { return sE(x) + ";" + sE(e) + "," + sL(k); }, run, ce && cl));
    r.add(forall<Elem>(
        "lifted1.on_degenerate", doms(E, L),
        [&](const Elem& x, const Elem& k) {
            return first_lifted_action(A, T2(eG, x), T3(eE, o.d(k), o.iL(k))) ==
                   T3(eE, o.mE(x, o.d(k), o.iE(x)), o.sec(x, o.iL(k)));
        },
        [&](const Elem& x, const Elem& k) { return sE(x) + ";" + sL(k); }, run, ce && cl));
    r.add(forall<Elem>(
        "lifted1.mixed", doms(G, E, E, L),
        [&](const Elem& g, const Elem& x, const Elem& e, const Elem& k) {
            return first_lifted_action(A, T2(g, x), T3(eE, e, k)) ==
                   T3(eE, o.gE(g, o.mE(x, e, o.iE(x))), o.gL(g, o.mL(o.lf(x, o.iE(e)), o.gL(o.b(x), k))));
        },
        [&](const Elem& g, const Elem& x, const Elem& e, const Elem& k) {
            return sG(g) + "," + sE(x) + ";" + sE(e) + "," + sL(k);
        },
        run, cg && ce && cl));
    r.add(forall<Elem>(
        "lifted1.mixed_degenerate", doms(G, E, L),
        [&](const Elem& g, const Elem& x, const Elem& k) {
            return first_lifted_action(A, T2(g, x), T3(eE, o.d(k), o.iL(k))) ==
                   T3(eE, o.gE(g, o.d(o.sec(x, k))), o.gL(g, o.sec(x, o.iL(k))));
        },
        [&](const Elem& g, const Elem& x, const Elem& k) { return sG(g) + "," + sE(x) + ";" + sL(k); }, run,
        cg && ce && cl));
    r.add(forall<Elem>(
        "lifted1.on_first_coordinate", doms(E, E),
        [&](const Elem& x, const Elem& a) {
            Elem ai = o.iE(a), xi = o.iE(x);
            return first_lifted_action(A, T2(eG, x), T3(a, eE, eL)) ==
                   T3(a, o.mE(o.gE(o.b(ai), x), xi), o.mL(o.sec(x, o.iL(o.lf(ai, xi))), o.lf(x, ai)));
        },
        [&](const Elem& x, const Elem& a) { return sE(x) + ";" + sE(a); }, run, ce));
    r.add(forall<Elem>(
        "lifted1.delta_on_first_coordinate", doms(L, E),
        [&](const Elem& k, const Elem& a) {
            Elem dk = o.d(k);
            return first_lifted_action(A, T2(eG, dk), T3(a, eE, eL)) ==
                   T3(a, o.mE(o.gE(o.b(o.iE(a)), dk), o.iE(dk)), o.mL(k, o.gL(o.b(a), o.iL(k))));
        },
        [&](const Elem& k, const Elem& a) { return sL(k) + ";" + sE(a); }, run, cl && ce));

    // Elements whose lifting with everything is trivial.
    std::vector<Elem> central;
    for (const auto& x : E) {
        bool ok = true;
        for (const auto& y : E)
            if (!A.L->is_id(o.lf(x, y)) || !A.L->is_id(o.lf(y, x))) {
                ok = false;
                break;
            }
        if (ok) central.push_back(x);
    }
    auto ker = forall<Elem>(
        "lifted1.lifting_trivial", doms(central, E, E, L),
        [&](const Elem& x, const Elem& a, const Elem& e, const Elem& k) {
            return first_lifted_action(A, T2(eG, x), T3(a, e, k)) ==
                   T3(a, o.mE(o.gE(o.b(o.iE(a)), x), e, o.iE(x)), o.gL(o.b(x), k));
        },
        [&](const Elem& x, const Elem& a, const Elem& e, const Elem& k) {
            return sE(x) + ";" + sE(a) + "," + sE(e) + "," + sL(k);
        },
        run, ce && cl);
    ker.note = std::to_string(central.size()) + " lifting-trivial elements";
    r.add(ker);
    r.add(forall<Elem>(
        "derived.on_degenerate", doms(E, L),
        [&](const Elem& b, const Elem& k) {
            Elem bk = o.gL(o.b(b), k);
            return derived_action(A, b, T2(o.d(k), o.iL(k))) == T2(o.d(bk), o.iL(bk));
        },
        [&](const Elem& b, const Elem& k) { return sE(b) + ";" + sL(k); }, run, ce && cl));
    return r;
}

Report path_space_report(const PathSpace& P, const VerifyCfg& cfg) {
    const XMod2& A = *P.base;
    const XMod2& T = *P.total;
    Report r;
    r.subject = T.name;
    r.seed = cfg.run.seed;
    r.probe = show_probe(cfg, A);
    r.absorb(verify_two_crossed(T, cfg), "axioms.");
    r.absorb(xmod_map_verify(P.pr0, cfg), "pr0.");
    r.absorb(xmod_map_verify(P.pr1, cfg), "pr1.");
    r.absorb(xmod_map_verify(P.incl, cfg), "incl.");

    const auto& run = cfg.run;
    auto L = A.L->probes(cfg.probe), E = A.E->probes(cfg.probe), G = A.G->probes(cfg.probe);
    bool cl = complete_probes(A.L, L), ce = complete_probes(A.E, E), cg = complete_probes(A.G, G);
    for (const Morph* pr : {&P.pr0, &P.pr1}) {
        const Morph& p = *pr;
        std::string nm = pr == &P.pr0 ? "pr0" : "pr1";
        r.add(forall<Elem>(
            nm + "_incl.L", doms(L), [&](const Elem& k) { return p.mu(P.incl.mu(k)) == k; },
            [&](const Elem& k) { return A.L->show(k); }, run, cl));
        r.add(forall<Elem>(
            nm + "_incl.E", doms(E), [&](const Elem& e) { return p.psi(P.incl.psi(e)) == e; },
            [&](const Elem& e) { return A.E->show(e); }, run, ce));
        r.add(forall<Elem>(
            nm + "_incl.G", doms(G), [&](const Elem& g) { return p.phi(P.incl.phi(g)) == g; },
            [&](const Elem& g) { return A.G->show(g); }, run, cg));
    }

    if (T.finite()) {
        // (p,p'): L⋉L -> L×L and (q,q'): E⋉(E⋉L) -> E×E.
        std::unordered_set<Elem, ElemHash> pl, qe;
        for (const auto& Y : to_vec(T.L)) pl.insert(T2(P.pr0.mu(Y), P.pr1.mu(Y)));
        for (const auto& X : to_vec(T.E)) qe.insert(T2(P.pr0.psi(X), P.pr1.psi(X)));
        std::size_t nl = A.L->order() * A.L->order(), ne = A.E->order() * A.E->order();
        r.add(make_check("surjective.pp", pl.size() == nl, "",
                         std::to_string(pl.size()) + " of " + std::to_string(nl) + " pairs hit"));
        r.add(make_check("surjective.qq", qe.size() == ne, "",
                         std::to_string(qe.size()) + " of " + std::to_string(ne) + " pairs hit"));
        auto s0 = levelwise_surjective(P.pr0), s1 = levelwise_surjective(P.pr1);
        r.add(make_check("surjective.pr0", s0[0] && s0[1] && s0[2]));
        r.add(make_check("surjective.pr1", s1[0] && s1[1] && s1[2]));
    }

    auto Ep = T.E->probes(cfg.probe);
    bool cep = complete_probes(T.E, Ep);
    auto sX = [&](const Elem& x) { return T.E->show(x); };
    r.add(forall<Elem>(
        "group_law", doms(Ep, Ep), [&](const Elem& X, const Elem& Y) { return T.E->mul(X, Y) == ep_mul(A, X, Y); },
        [&](const Elem& X, const Elem& Y) { return sX(X) + "," + sX(Y); }, run, cep));
    r.add(forall<Elem>(
        "peiffer_pairing", doms(Ep, Ep),
        [&](const Elem& X, const Elem& Y) {
            return T.peiffer(X, Y) == T3(A.peiffer(X[0], Y[0]), A.E->id(), T.lift(X, Y)[1]);
        },
        [&](const Elem& X, const Elem& Y) { return sX(X) + "," + sX(Y); }, run, cep));
    r.add(forall<Elem>(
        "lifting_degenerate", doms(Ep, L),
        [&](const Elem& X, const Elem& l) {
            Elem D = T3(A.E->id(), A.delta(l), A.L->inv(l));
            return T.L->is_id(T.lift(X, D)) && T.L->is_id(T.lift(D, X));
        },
        [&](const Elem& X, const Elem& l) { return sX(X) + ";" + A.L->show(l); }, run, cep && cl));
    return r;
}

DoublePath double_path_space(const XModP& A) {
    DoublePath D;
    D.inner = path_space(A);
    D.outer = path_space(D.inner.total);
    const auto& O = D.outer.total;
    const auto& I = D.inner.total;
    D.d[0] = path_space_map(D.inner.pr1, O, I);
    D.d[0].name = "d0";
    D.d[1] = D.outer.pr1;
    D.d[1].name = "d1";
    D.d[2] = D.outer.pr0;
    D.d[2].name = "d2";
    D.d[3] = path_space_map(D.inner.pr0, O, I);
    D.d[3].name = "d3";
    return D;
}

Elem explicit_face(const XMod2& A, int face, int level, const Elem& x) {
    Fx o{A};
    if (level == 2) {
        const Elem &k = x[0][0], &l = x[0][1], &k2 = x[1][0], &l2 = x[1][1];
        switch (face) {
            case 0: return T2(o.mL(k, l), o.mL(k2, l2));
            case 1: return T2(o.mL(k, k2), o.mL(o.iL(k2), l, k2, l2));
            case 2: return T2(k, l);
            default: return T2(k, k2);
        }
    }
    if (level == 1) {
        const Elem &X = x[0], &Y = x[1][0];
        const Elem &l = x[1][1][0], &l2 = x[1][1][1];
        switch (face) {
            case 0: return T3(o.end1(X), o.end1(Y), o.mL(l, l2));
            case 1: return ep_mul(A, ep_mul(A, X, Y), T3(o.d(l), o.oE(), l2));
            case 2: return X;
            default: return T3(X[0], Y[0], l);
        }
    }
    const Elem &g = x[0][0], &xx = x[0][1];
    const Elem& X = x[1];
    switch (face) {
        case 0: return T2(o.mG(g, o.b(xx)), o.end1(X));
        case 1: return T2(o.mG(g, o.b(X[0])), o.mE(o.gE(o.b(o.iE(X[0])), xx), X[1][0]));
        case 2: return T2(g, xx);
        default: return T2(g, X[0]);
    }
}

Report double_faces_report(const DoublePath& D, const VerifyCfg& cfg, bool check_morphisms) {
    const XMod2& A = *D.inner.base;
    const XMod2& O = *D.outer.total;
    Report r;
    r.subject = "faces of " + O.name;
    r.seed = cfg.run.seed;
    r.probe = show_probe(cfg, A);
    auto L = O.L->probes(cfg.probe), E = O.E->probes(cfg.probe), G = O.G->probes(cfg.probe);
    bool cl = complete_probes(O.L, L), ce = complete_probes(O.E, E), cg = complete_probes(O.G, G);
    for (int i = 0; i < 4; ++i) {
        const Morph& f = D.d[i];
        std::string p = "d" + std::to_string(i);
        r.add(forall<Elem>(
            p + ".G", doms(G), [&](const Elem& x) { return f.phi(x) == explicit_face(A, i, 0, x); },
            [&](const Elem& x) { return O.G->show(x); }, cfg.run, cg));
        r.add(forall<Elem>(
            p + ".E", doms(E), [&](const Elem& x) { return f.psi(x) == explicit_face(A, i, 1, x); },
            [&](const Elem& x) { return O.E->show(x); }, cfg.run, ce));
        r.add(forall<Elem>(
            p + ".L", doms(L), [&](const Elem& x) { return f.mu(x) == explicit_face(A, i, 2, x); },
            [&](const Elem& x) { return O.L->show(x); }, cfg.run, cl));
        if (check_morphisms) r.absorb(xmod_map_verify(f, cfg), p + ".");
    }
    return r;
}

// ---------------------------------------------------------------- triangle

bool in_triangle0(const XMod2& A, const Elem& X) { return A.E->is_id(X[1][0]); }
bool in_triangle1(const XMod2& A, const Elem& X) { return A.E->is_id(X[1][0][0]) && A.L->is_id(X[1][1][0]); }
bool in_triangle2(const XMod2& A, const Elem& X) { return A.L->is_id(X[1][0]); }

Elem triangle_beta(const XMod2& A, const Elem& X) {
    const Elem& F = X[1][0];
    return T2(T2(A.bd(X[0][0]), X[0][1][0]), T3(A.E->id(), F[1][0], F[1][1]));
}

Elem tri1(const XMod2& A, const Elem& a, const Elem& e, const Elem& k, const Elem& f, const Elem& l, const Elem& m) {
    return T2(T3(a, e, k), T2(T3(A.E->id(), f, l), T2(A.L->id(), m)));
}

Elem tri0(const XMod2& A, const Elem& g, const Elem& x, const Elem& z, const Elem& w) {
    return T2(T2(g, x), T3(A.E->id(), z, w));
}

Elem triangle_product_explicit(const XMod2& A, const Elem& X, const Elem& Y) {
    Fx o{A};
    const Elem &P = X[0], &P2 = Y[0];
    const Elem &f = X[1][0][1][0], &l = X[1][0][1][1], &m = X[1][1][1];
    const Elem &f2 = Y[1][0][1][0], &l2 = Y[1][0][1][1], &m2 = Y[1][1][1];
    const Elem &a2 = P2[0], &e2 = P2[1][0];
    Elem first = ep_mul(A, P, P2);
    // (∂a',e')⁻¹ = (∂a'⁻¹, ∂a' ▷ e'⁻¹) acting on (1,f,l) by the lifted action, case m5.
    Elem gi = o.iG(o.b(a2));
    Elem xi = o.gE(o.b(a2), o.iE(e2));
    Elem fz = o.gE(gi, o.mE(xi, f, o.iE(xi)));
    Elem lz = o.gL(gi, o.mL(o.lf(xi, o.iE(f)), o.gL(o.b(xi), l)));
    Elem second = T3(o.oE(), o.mE(fz, f2), o.mL(o.sec(o.iE(f2), lz), l2));
    Elem u = o.iE(o.mE(f2, o.d(l2)));
    Elem v = o.iE(o.end1(P2));
    Elem third = o.mL(o.sec(u, o.iL(o.lf(v, o.iE(o.mE(f, o.d(l)))))), o.sec(u, o.sec(v, m)), m2);
    return T2(first, T2(second, T2(o.oL(), third)));
}

Elem triangle_action_explicit(const XMod2& A, const Elem& Pg, const Elem& X) {
    Fx o{A};
    const Elem &z = Pg[1][1][0], &w = Pg[1][1][1];
    const Elem& P = X[0];
    const Elem &a = P[0], &e = P[1][0];
    const Elem &f = X[1][0][1][0], &l = X[1][0][1][1], &m = X[1][1][1];
    // (∂a,e)⁻¹ • (1,z,w), then the two (1,·,·) products.
    Elem gi = o.iG(o.b(a));
    Elem xi = o.gE(o.b(a), o.iE(e));
    Elem zz = o.gE(gi, o.mE(xi, z, o.iE(xi)));
    Elem wz = o.gL(gi, o.mL(o.lf(xi, o.iE(z)), o.gL(o.b(xi), w)));
    auto one_mul = [&](const Elem& f1, const Elem& l1, const Elem& f2, const Elem& l2) {
        return std::pair<Elem, Elem>{o.mE(f1, f2), o.mL(o.sec(o.iE(f2), l1), l2)};
    };
    auto [f1, l1] = one_mul(zz, wz, f, l);
    // (1,z,w)⁻¹ = (1, z⁻¹, z ▷′ w⁻¹)
    auto [f3, l3] = one_mul(f1, l1, o.iE(z), o.sec(z, o.iL(w)));
    Elem c = o.mE(z, o.d(o.mL(w, o.iL(l))), o.iE(f));
    Elem third = o.mL(o.sec(c, o.iL(o.lf(o.iE(o.end1(P)), o.mE(o.iE(o.d(w)), o.iE(z))))),
                      o.lf(o.mE(z, o.d(w)), o.iE(o.mE(o.end1(P), f, o.d(l)))), o.gL(o.b(z), m));
    Elem inner = T2(P, T2(T3(o.oE(), f3, l3), T2(o.oL(), third)));
    return inner;
}

Triangle triangle_space(const XModP& Ap) {
    const XMod2& A = *Ap;
    require_finite(A, "triangle space");
    Triangle T;
    T.dp = double_path_space(Ap);
    const XMod2& O = *T.dp.outer.total;
    auto Gl = to_vec(A.G), El = to_vec(A.E), Ll = to_vec(A.L);
    std::vector<Elem> g0, g1, g2;
    for (const auto& g : Gl)
        for (const auto& x : El)
            for (const auto& z : El)
                for (const auto& w : Ll) g0.push_back(tri0(A, g, x, z, w));
    for (const auto& a : El)
        for (const auto& e : El)
            for (const auto& k : Ll)
                for (const auto& f : El)
                    for (const auto& l : Ll)
                        for (const auto& m : Ll) g1.push_back(tri1(A, a, e, k, f, l, m));
    for (const auto& k : Ll)
        for (const auto& l : Ll)
            for (const auto& l2 : Ll) g2.push_back(T2(T2(k, l), T2(A.L->id(), l2)));
    auto nm = "T(" + A.name + ")";
    auto G0 = std::make_shared<SubsetGroup>(O.G, std::move(g0), "Gr0" + nm);
    auto G1 = std::make_shared<SubsetGroup>(O.E, std::move(g1), "Gr1" + nm);
    auto G2 = std::make_shared<SubsetGroup>(O.L, std::move(g2), "Gr2" + nm);
    T.total = restrict_xmod(O, G2, G1, G0, nm);
    for (int i = 0; i < 4; ++i)
        T.d[i] = restrict_morph(T.dp.d[i], T.total, T.dp.inner.total, "T.d" + std::to_string(i));
    return T;
}

Report triangle_report(const Triangle& T, const VerifyCfg& cfg) {
    const XMod2& A = *T.dp.inner.base;
    const XMod2& O = *T.dp.outer.total;
    const XMod2& S = *T.total;
    Fx o{A};
    Report r;
    r.subject = S.name;
    r.seed = cfg.run.seed;
    r.probe = show_probe(cfg, A);
    auto G0 = to_vec(S.G), G1 = to_vec(S.E), G2 = to_vec(S.L);
    r.add(make_check("closed.Gr0", is_subgroup(O.G, G0), "", std::to_string(G0.size()) + " elements"));
    r.add(make_check("closed.Gr1", is_subgroup(O.E, G1), "", std::to_string(G1.size()) + " elements"));
    r.add(make_check("closed.Gr2", is_subgroup(O.L, G2), "", std::to_string(G2.size()) + " elements"));

    auto P0 = S.G->probes(cfg.probe), P1 = S.E->probes(cfg.probe), P2 = S.L->probes(cfg.probe);
    bool c0 = complete_probes(S.G, P0), c1 = complete_probes(S.E, P1), c2 = complete_probes(S.L, P2);
    auto s0 = [&](const Elem& x) { return O.G->show(x); };
    auto s1 = [&](const Elem& x) { return O.E->show(x); };
    auto s2 = [&](const Elem& x) { return O.L->show(x); };
    const auto& run = cfg.run;
    r.add(forall<Elem>(
        "closed.actE", doms(P0, P1), [&](const Elem& p, const Elem& x) { return in_triangle1(A, O.actE(p, x)); },
        [&](const Elem& p, const Elem& x) { return s0(p) + ";" + s1(x); }, run, c0 && c1));
    r.add(forall<Elem>(
        "closed.actL", doms(P0, P2), [&](const Elem& p, const Elem& y) { return in_triangle2(A, O.actL(p, y)); },
        [&](const Elem& p, const Elem& y) { return s0(p) + ";" + s2(y); }, run, c0 && c2));
    r.add(forall<Elem>(
        "closed.lift", doms(P1, P1), [&](const Elem& x, const Elem& y) { return in_triangle2(A, O.lift(x, y)); },
        [&](const Elem& x, const Elem& y) { return s1(x) + ";" + s1(y); }, run, c1));
    r.add(forall<Elem>(
        "closed.delta", doms(P2), [&](const Elem& y) { return in_triangle1(A, O.delta(y)); }, s2, run, c2));
    r.add(forall<Elem>(
        "triangle.boundary", doms(P1), [&](const Elem& x) { return O.bd(x) == triangle_beta(A, x) && in_triangle0(A, O.bd(x)); },
        s1, run, c1));

    // Closed forms of the faces on the triangle carriers.
    auto face0 = [&](int i, const Elem& X) {
        const Elem &g = X[0][0], &x = X[0][1], &z = X[1][1][0], &w = X[1][1][1];
        switch (i) {
            case 0: return T2(o.mG(g, o.b(x)), o.mE(z, o.d(w)));
            case 1: return T2(g, o.mE(x, z));
            case 2: return T2(g, x);
            default: return T2(g, o.oE());
        }
    };
    auto face1 = [&](int i, const Elem& X) {
        const Elem &a = X[0][0], &e = X[0][1][0], &k = X[0][1][1];
        const Elem &f = X[1][0][1][0], &l = X[1][0][1][1], &m = X[1][1][1];
        switch (i) {
            case 0: return T3(o.mE(a, e, o.d(k)), o.mE(f, o.d(l)), m);
            case 1: return T3(a, o.mE(e, f), o.mL(o.sec(o.iE(f), k), l, m));
            case 2: return T3(a, e, k);
            default: return T3(a, o.oE(), o.oL());
        }
    };
    auto face2 = [&](int i, const Elem& X) {
        const Elem &k = X[0][0], &l = X[0][1], &l2 = X[1][1];
        switch (i) {
            case 0: return T2(o.mL(k, l), l2);
            case 1: return T2(k, o.mL(l, l2));
            case 2: return T2(k, l);
            default: return T2(k, o.oL());
        }
    };
    for (int i = 0; i < 4; ++i) {
        std::string p = "face.d" + std::to_string(i);
        const Morph& f = T.d[i];
        r.add(forall<Elem>(
            p + ".Gr0", doms(P0), [&](const Elem& x) { return f.phi(x) == face0(i, x); }, s0, run, c0));
        r.add(forall<Elem>(
            p + ".Gr1", doms(P1), [&](const Elem& x) { return f.psi(x) == face1(i, x); }, s1, run, c1));
        r.add(forall<Elem>(
            p + ".Gr2", doms(P2), [&](const Elem& x) { return f.mu(x) == face2(i, x); }, s2, run, c2));
        r.absorb(xmod_map_verify(f, cfg), "d" + std::to_string(i) + ".");
    }

    RunCfg light = run;
    light.cap = std::min<std::uint64_t>(light.cap, 2'000'000);
    light.samples = std::min<std::uint64_t>(light.samples, 20'000);
    r.add(forall<Elem>(
        "triangle.product", doms(P1, P1), [&](const Elem& x, const Elem& y) { return O.E->mul(x, y) == triangle_product_explicit(A, x, y); },
        [&](const Elem& x, const Elem& y) { return s1(x) + " * " + s1(y); }, light, c1));
    r.add(forall<Elem>(
        "triangle.action", doms(P0, P1),
        [&](const Elem& p, const Elem& x) {
            Elem gx = T2(p[0], T3(o.oE(), o.oE(), o.oL()));
            return O.actE(p, x) == O.actE(gx, triangle_action_explicit(A, p, x));
        },
        [&](const Elem& p, const Elem& x) { return s0(p) + " . " + s1(x); }, light, c0 && c1));
    return r;
}

Report triangle_pullback_report(const Triangle& T, const VerifyCfg& cfg) {
    const XMod2& A = *T.dp.inner.base;
    const XMod2& I = *T.dp.inner.total;
    const XMod2& S = *T.total;
    Fx o{A};
    Report r;
    r.subject = "Gr1 of " + S.name + " as a pullback";
    r.seed = cfg.run.seed;
    // X ↦ (β'(X), ((a,e,k), (aeδk, e'δk', l'))).
    auto bij = [&](const Elem& X) {
        const Elem& P = X[0];
        const Elem &f = X[1][0][1][0], &l = X[1][0][1][1], &m = X[1][1][1];
        return T3(triangle_beta(A, X), P, T3(o.end1(P), o.mE(f, o.d(l)), m));
    };
    auto G1 = to_vec(S.E);
    std::unordered_set<Elem, ElemHash> img;
    for (const auto& X : G1) img.insert(bij(X));
    r.add(make_check("injective", img.size() == G1.size(), "", std::to_string(img.size()) + " images"));

    // The pullback: (P, Q1, Q2) with d2(P) = β(Q1), d0(P) = β(Q2), Q2 starting where Q1 ends.
    auto G0 = to_vec(S.G);
    auto Ep = to_vec(I.E);
    std::unordered_map<Elem, std::vector<Elem>, ElemHash> by_start;
    for (const auto& Q : Ep) by_start[Q[0]].push_back(Q);
    std::unordered_map<Elem, std::vector<Elem>, ElemHash> by_bd;
    for (const auto& Q : Ep) by_bd[I.bd(Q)].push_back(Q);
    std::unordered_set<Elem, ElemHash> pull;
    for (const auto& P : G0) {
        Elem b1 = T.d[2].phi(P), b2 = T.d[0].phi(P);
        auto it = by_bd.find(b1);
        if (it == by_bd.end()) continue;
        for (const auto& Q1 : it->second) {
            auto jt = by_start.find(o.end1(Q1));
            if (jt == by_start.end()) continue;
            for (const auto& Q2 : jt->second)
                if (I.bd(Q2) == b2) pull.insert(T3(P, Q1, Q2));
        }
    }
    std::vector<Elem> iv(img.begin(), img.end()), pv(pull.begin(), pull.end());
    auto c = set_equal("bijective", iv, pv, I.E);
    c.note = std::to_string(img.size()) + " images, pullback has " + std::to_string(pull.size());
    r.add(c);

    RunCfg light = cfg.run;
    light.samples = std::min<std::uint64_t>(light.samples, 20'000);
    light.cap = std::min<std::uint64_t>(light.cap, 2'000'000);
    auto P1 = S.E->probes(cfg.probe);
    r.add(forall<Elem>(
        "hom", doms(P1, P1),
        [&](const Elem& x, const Elem& y) {
            Elem a = bij(x), b = bij(y), ab = bij(S.E->mul(x, y));
            const XMod2& O = *T.dp.outer.total;
            return ab[0] == O.G->mul(a[0], b[0]) && ab[1][0] == I.E->mul(a[1][0], b[1][0]) &&
                   ab[1][1] == I.E->mul(a[1][1], b[1][1]);
        },
        [&](const Elem& x, const Elem& y) { return S.E->show(x) + "," + S.E->show(y); }, light,
        complete_probes(S.E, P1)));
    return r;
}

// ---------------------------------------------------------------- disk

Disk disk_space(const XModP& Ap) {
    const XMod2& A = *Ap;
    Disk D;
    D.dp = double_path_space(Ap);
    const XModP& I = D.dp.inner.total;
    const XModP& O = D.dp.outer.total;
    auto nm = "D(" + A.name + ")";
    auto Gp = I->G;  // G ⋉ E
    auto Ep = I->E;  // E ⋉ (E ⋉ L)
    auto G0 = std::make_shared<Semidirect>(
        Gp, A.L,
        Action{Gp, A.L, [Ap](const Elem& ge, const Elem& k) { return Ap->actL(ge[0], Ap->sec(ge[1], k)); }, "(g,e)•"},
        "Gr0" + nm);
    auto G1 = std::make_shared<Semidirect>(
        Ep, A.L,
        Action{Ep, A.L, [Ap](const Elem& X, const Elem& l) { return Ap->actL(Ap->bd(X[0]), Ap->sec(X[1][0], l)); },
               "(a,e,k)*"},
        "Gr1" + nm);
    auto G2 = I->L;

    auto X = std::make_shared<XMod2>();
    X->name = nm;
    X->L = G2;
    X->E = G1;
    X->G = G0;
    X->delta = Hom{G2, G1, [Ap](const Elem& kl) { return T2(T3(Ap->delta(kl[0]), Ap->E->id(), kl[1]), Ap->L->id()); },
                   {}, "α²"};
    X->bd = Hom{G1, G0, [Ap](const Elem& Y) { return T2(T2(Ap->bd(Y[0][0]), Y[0][1][0]), Y[1]); }, {}, "β²"};
    X->actE = Action{G0, G1,
                     [Ap](const Elem& P, const Elem& Y) {
                         Fx o{*Ap};
                         const Elem &ge = P[0], &k = P[1];
                         const Elem &a = Y[0][0], &e = Y[0][1][0], &l = Y[0][1][1], &l2 = Y[1];
                         // k □ (a,e,l,l'), then (g,e) □ ·.
                         Elem l3 = o.mL(o.sec(o.iE(e), o.gL(o.b(o.iE(a)), k)), l2, o.iL(k));
                         return T2(first_lifted_action(*Ap, ge, T3(a, e, l)), o.gL(ge[0], o.sec(ge[1], l3)));
                     },
                     "□"};
    X->actL = Action{G0, G2, [Ap](const Elem& P, const Elem& Y) { return second_lifted_action(*Ap, P[0], Y); }, "□"};
    X->lift = [Ap](const Elem& Y, const Elem& Z) { return path_lifting(*Ap, Y[0], Z[0]); };
    D.explicit_total = X;

    D.embed = Morph{
        X, O,
        Hom{G2, O->L, [Ap](const Elem& kl) { return T2(kl, T2(Ap->L->id(), Ap->L->id())); }, {}, "embed"},
        Hom{G1, O->E,
            [Ap](const Elem& Y) {
                const Elem& l = Y[1];
                return T3(Y[0], T3(Ap->E->id(), Ap->delta(l), Ap->L->inv(l)), T2(Ap->L->id(), Ap->L->id()));
            },
            {}, "embed"},
        Hom{G0, O->G,
            [Ap](const Elem& P) {
                const Elem& k = P[1];
                return T2(P[0], T3(Ap->E->id(), Ap->delta(k), Ap->L->inv(k)));
            },
            {}, "embed"},
        "embed"};

    D.d2 = Morph{X, I, Hom{G2, I->L, [](const Elem& kl) { return kl; }, {}, "d2"},
                 Hom{G1, I->E, [](const Elem& Y) { return Y[0]; }, {}, "d2"},
                 Hom{G0, I->G, [](const Elem& P) { return P[0]; }, {}, "d2"}, "D.d2"};
    D.d1 = Morph{X, I, Hom{G2, I->L, [](const Elem& kl) { return kl; }, {}, "d1"},
                 Hom{G1, I->E,
                     [Ap](const Elem& Y) {
                         const Elem &a = Y[0][0], &e = Y[0][1][0], &k = Y[0][1][1], &l = Y[1];
                         return T3(a, Ap->E->mul(e, Ap->delta(l)), Ap->L->mul(Ap->L->inv(l), k));
                     },
                     {}, "d1"},
                 Hom{G0, I->G,
                     [Ap](const Elem& P) {
                         return T2(P[0][0], Ap->E->mul(P[0][1], Ap->delta(P[1])));
                     },
                     {}, "d1"},
                 "D.d1"};

    if (A.finite()) {
        // Triangle elements whose d0 face is degenerate, i.e. lies in incl(A).
        auto T = triangle_space(Ap);
        const XMod2& S = *T.total;
        std::vector<Elem> h0, h1, h2;
        for (const auto& x : to_vec(S.G)) {
            Elem y = T.d[0].phi(x);
            if (A.E->is_id(y[1])) h0.push_back(x);
        }
        for (const auto& x : to_vec(S.E)) {
            Elem y = T.d[0].psi(x);
            if (A.E->is_id(y[1][0]) && A.L->is_id(y[1][1])) h1.push_back(x);
        }
        for (const auto& x : to_vec(S.L)) {
            Elem y = T.d[0].mu(x);
            if (A.L->is_id(y[1])) h2.push_back(x);
        }
        auto H0 = std::make_shared<SubsetGroup>(O->G, std::move(h0), "Gr0 inherited" + nm);
        auto H1 = std::make_shared<SubsetGroup>(O->E, std::move(h1), "Gr1 inherited" + nm);
        auto H2 = std::make_shared<SubsetGroup>(O->L, std::move(h2), "Gr2 inherited" + nm);
        D.inherited = restrict_xmod(*O, H2, H1, H0, "inherited " + nm);
    }
    return D;
}

Report disk_report(const Disk& D, const VerifyCfg& cfg) {
    const XMod2& A = *D.dp.inner.base;
    const XMod2& X = *D.explicit_total;
    const XMod2& O = *D.dp.outer.total;
    Report r;
    r.subject = X.name;
    r.seed = cfg.run.seed;
    r.probe = show_probe(cfg, A);
    r.absorb(verify_two_crossed(X, cfg), "explicit.");
    r.absorb(xmod_map_verify(D.embed, cfg), "embed.");
    r.absorb(xmod_map_verify(D.d1, cfg), "d1.");
    r.absorb(xmod_map_verify(D.d2, cfg), "d2.");

    auto G = X.G->probes(cfg.probe), E = X.E->probes(cfg.probe), L = X.L->probes(cfg.probe);
    bool cg = complete_probes(X.G, G), ce = complete_probes(X.E, E), cl = complete_probes(X.L, L);
    const auto& run = cfg.run;
    const Morph &p0 = D.dp.outer.pr0, &p1 = D.dp.outer.pr1;
    auto sG = [&](const Elem& x) { return X.G->show(x); };
    auto sE = [&](const Elem& x) { return X.E->show(x); };
    auto sL = [&](const Elem& x) { return X.L->show(x); };
    r.add(forall<Elem>(
        "d2_is_pr0.G", doms(G), [&](const Elem& x) { return D.d2.phi(x) == p0.phi(D.embed.phi(x)); }, sG, run, cg));
    r.add(forall<Elem>(
        "d2_is_pr0.E", doms(E), [&](const Elem& x) { return D.d2.psi(x) == p0.psi(D.embed.psi(x)); }, sE, run, ce));
    r.add(forall<Elem>(
        "d2_is_pr0.L", doms(L), [&](const Elem& x) { return D.d2.mu(x) == p0.mu(D.embed.mu(x)); }, sL, run, cl));
    r.add(forall<Elem>(
        "d1_is_pr1.G", doms(G), [&](const Elem& x) { return D.d1.phi(x) == p1.phi(D.embed.phi(x)); }, sG, run, cg));
    r.add(forall<Elem>(
        "d1_is_pr1.E", doms(E), [&](const Elem& x) { return D.d1.psi(x) == p1.psi(D.embed.psi(x)); }, sE, run, ce));
    r.add(forall<Elem>(
        "d1_is_pr1.L", doms(L), [&](const Elem& x) { return D.d1.mu(x) == p1.mu(D.embed.mu(x)); }, sL, run, cl));

    if (D.inherited && X.finite()) {
        const XMod2& H = *D.inherited;
        auto img = [](const std::vector<Elem>& v, const Hom& h) {
            std::vector<Elem> out;
            out.reserve(v.size());
            for (const auto& x : v) out.push_back(h(x));
            return out;
        };
        auto g0 = to_vec(X.G), g1 = to_vec(X.E), g2 = to_vec(X.L);
        auto i0 = img(g0, D.embed.phi), i1 = img(g1, D.embed.psi), i2 = img(g2, D.embed.mu);
        auto distinct = [](const std::vector<Elem>& v) {
            return std::unordered_set<Elem, ElemHash>(v.begin(), v.end()).size() == v.size();
        };
        r.add(make_check("embed.injective", distinct(i0) && distinct(i1) && distinct(i2)));
        r.add(set_equal("inherited.Gr0", i0, to_vec(H.G), O.G));
        r.add(set_equal("inherited.Gr1", i1, to_vec(H.E), O.E));
        r.add(set_equal("inherited.Gr2", i2, to_vec(H.L), O.L));
    }
    return r;
}

// ---------------------------------------------------------------- tetra

Tetra tetra_group(const XModP& Ap) {
    const XMod2& A = *Ap;
    require_finite(A, "tetrahedron group");
    Tetra T;
    T.tri = triangle_space(Ap);
    const XModP& S = T.tri.total;
    const XModP& O = T.tri.dp.outer.total;
    T.P0 = std::make_shared<Semidirect>(S->G, S->E, Action{S->G, S->E, O->actE.f, "□"}, "Gr0 P*(" + S->name + ")");
    auto El = to_vec(A.E), Ll = to_vec(A.L);
    for (const auto& X : to_vec(S->G))
        for (const auto& f : El)
            for (const auto& l : Ll)
                for (const auto& m : Ll)
                    T.elems.push_back(T2(X, tri1(A, A.E->id(), A.E->id(), A.L->id(), f, l, m)));
    GroupP P0 = T.P0;
    auto OG = O->G;
    Morph d1 = T.tri.d[1], d0 = T.tri.d[0];
    T.faces[0] = Hom{P0, OG, [](const Elem& x) { return x[0]; }, {}, "Pr0"};
    T.faces[1] = Hom{P0, OG, [O](const Elem& x) { return O->G->mul(x[0], O->bd(x[1])); }, {}, "Pr1"};
    T.faces[2] = Hom{P0, OG, [d1](const Elem& x) { return T2(d1.phi(x[0]), d1.psi(x[1])); }, {}, "P*(d1)"};
    T.faces[3] = Hom{P0, OG, [d0](const Elem& x) { return T2(d0.phi(x[0]), d0.psi(x[1])); }, {}, "P*(d0)"};
    return T;
}

Elem tetra_face_explicit(const XMod2& A, int face, const Elem& X) {
    Fx o{A};
    const Elem &g = X[0][0][0], &x = X[0][0][1], &z = X[0][1][1][0], &w = X[0][1][1][1];
    const Elem &f = X[1][1][0][1][0], &l = X[1][1][0][1][1], &m = X[1][1][1][1];
    switch (face) {
        case 0: return tri0(A, g, x, z, w);
        case 2: return tri0(A, g, o.mE(x, z), f, o.mL(l, m));
        case 3: return tri0(A, o.mG(g, o.b(x)), o.mE(z, o.d(w)), o.mE(f, o.d(l)), m);
        default: return tri0(A, g, x, o.mE(z, f), o.mL(o.sec(o.iE(f), w), l));
    }
}

Report tetra_report(const Tetra& T, const VerifyCfg& cfg) {
    const XMod2& A = *T.tri.dp.inner.base;
    const XMod2& O = *T.tri.dp.outer.total;
    Report r;
    r.subject = "tetrahedra over " + A.name;
    r.seed = cfg.run.seed;
    r.probe = show_probe(cfg, A);
    r.add(make_check("closed", is_subgroup(T.P0, T.elems), "", std::to_string(T.elems.size()) + " elements"));
    static const char* names[4] = {"pr0", "pr1", "path_d1", "path_d0"};
    auto show = [&](const Elem& x) { return T.P0->show(x); };
    for (int i = 0; i < 4; ++i) {
        std::string id = std::string("face.") + names[i];
        r.add(forall<Elem>(
            id, doms(T.elems), [&](const Elem& x) { return T.faces[i](x) == tetra_face_explicit(A, i, x); }, show,
            cfg.run));
    }
    RunCfg light = cfg.run;
    light.samples = std::min<std::uint64_t>(light.samples, 20'000);
    light.cap = std::min<std::uint64_t>(light.cap, 2'000'000);
    for (int i = 0; i < 4; ++i) {
        std::string id = std::string("hom.face.") + names[i];
        r.add(forall<Elem>(
            id, doms(T.elems, T.elems),
            [&](const Elem& x, const Elem& y) {
                return T.faces[i](T.P0->mul(x, y)) == O.G->mul(T.faces[i](x), T.faces[i](y));
            },
            [&](const Elem& x, const Elem& y) { return show(x) + " * " + show(y); }, light));
    }
    return r;
}

}  // namespace xm
