#include "xm/lax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <unordered_set>

#include "xm/fixtures.hpp"

namespace xm {

namespace {

template <class... V>
auto doms(const V&... v) {
    return std::array<const std::vector<Elem>*, sizeof...(V)>{&v...};
}

std::vector<Elem> elements(const GroupP& G) {
    std::vector<Elem> v;
    for (std::size_t i = 0; i < G->order(); ++i) v.push_back(G->at(i));
    return v;
}

void require_finite(const XMod2& A, const char* what) {
    if (!A.finite()) throw GroupError(std::string(what) + ": " + A.name + " is not finite");
}

// Exhaustive equality of two morphisms out of a finite 2-crossed module.
bool morph_eq(const Morph& a, const Morph& b) {
    const XMod2& S = *a.src;
    for (std::size_t i = 0; i < S.L->order(); ++i)
        if (a.mu(S.L->at(i)) != b.mu(S.L->at(i))) return false;
    for (std::size_t i = 0; i < S.E->order(); ++i)
        if (a.psi(S.E->at(i)) != b.psi(S.E->at(i))) return false;
    for (std::size_t i = 0; i < S.G->order(); ++i)
        if (a.phi(S.G->at(i)) != b.phi(S.G->at(i))) return false;
    return true;
}

Morph table_morph(const XModP& A, const XModP& B, const Hom& mu, const Hom& psi, const Hom& phi, std::string name) {
    // Tabulate so composites stay cheap.
    auto tab = [](const Hom& h) {
        std::vector<Elem> im;
        for (std::size_t i = 0; i < h.dom->order(); ++i) im.push_back(h(h.dom->at(i)));
        return table_hom(h.dom, h.cod, std::move(im), h.label);
    };
    return Morph{A, B, tab(mu), tab(psi), tab(phi), std::move(name)};
}

}  // namespace

// ------------------------------------------------------------------ Q¹

Elem Q1::sym(const Elem& g) const { return F->gen(gi(g)); }

Elem Q1::bracket(const Elem& g, const Elem& h) const {
    return F->mul(F->inv(sym(base->G->mul(g, h))), F->mul(sym(g), sym(h)));
}

Elem Q1::gen_e(const Elem& e) const { return T2(e, sym(base->bd(e))); }

Elem Q1::gen_gh(const Elem& g, const Elem& h) const { return T2(base->E->id(), bracket(g, h)); }

Q1 q1(const XModP& A) {
    if (!A->G->finite()) throw GroupError("q1: bottom group of " + A->name + " is not finite");
    Q1 Q;
    Q.base = A;
    std::vector<std::string> names;
    std::vector<Elem> gs = elements(A->G);
    for (const auto& g : gs) names.push_back(A->G->show(g));
    Q.F = std::make_shared<FreeGroup>(names, "F(" + A->G->name + ")");
    Q.p = hom_extend_free(Q.F, A->G, gs, "p");
    auto F = Q.F;
    Hom p = Q.p;
    GroupP E = A->E;

    // Probes: generators [e] and (g,h), their conjugates by [i]^{±1}, short
    // products, and fibres over word probes of F.
    auto probe = [A, F, p, gs](const ProbeCfg& cfg) {
        std::vector<Elem> out;
        std::unordered_set<Elem, ElemHash> seen;
        auto push = [&](Elem x) {
            if (seen.insert(x).second) out.push_back(std::move(x));
        };
        auto sym = [&](const Elem& g) { return F->gen(A->G->index_of(g)); };
        auto act = [&](const Elem& u, const Elem& x) { return T2(A->actE(p(u), x[0]), F->conj(u, x[1])); };
        auto mul = [&](const Elem& x, const Elem& y) { return T2(A->E->mul(x[0], y[0]), F->mul(x[1], y[1])); };
        std::vector<Elem> es = A->E->probes(cfg);
        std::vector<Elem> gens;
        push(T2(A->E->id(), F->id()));
        for (const auto& e : es) gens.push_back(T2(e, sym(A->bd(e))));
        for (const auto& g : gs)
            for (const auto& h : gs) {
                Elem b = F->mul(F->inv(sym(A->G->mul(g, h))), F->mul(sym(g), sym(h)));
                gens.push_back(T2(A->E->id(), b));
            }
        for (const auto& x : gens) push(x);
        std::size_t nconj = std::min<std::size_t>(gs.size(), 4);
        for (std::size_t i = 0; i < nconj; ++i)
            for (const auto& x : gens) {
                push(act(F->gen(i), x));
                push(act(F->inv(F->gen(i)), x));
            }
        std::size_t npair = std::min<std::size_t>(gens.size(), 12);
        for (std::size_t i = 0; i < npair; ++i)
            for (std::size_t j = 0; j < npair; ++j) push(mul(gens[i], gens[j]));
        ProbeCfg wc = cfg;
        wc.word_depth = std::min(cfg.word_depth, 2);
        wc.word_samples = std::min(cfg.word_samples, 60);
        for (const auto& u : F->probes(wc)) {
            int taken = 0;
            for (const auto& e : es)
                if (A->bd(e) == p(u) && taken < 2) {
                    push(T2(e, u));
                    ++taken;
                }
        }
        return out;
    };
    Q.EQ = std::make_shared<PullbackGroup>(A->bd, p, A->E->name + "×F", probe);
    auto EQ = Q.EQ;

    auto T = std::make_shared<XMod2>();
    T->name = "Q1(" + A->name + ")";
    T->L = A->L;
    T->E = EQ;
    T->G = F;
    T->delta = Hom{A->L, EQ, [A, F](const Elem& k) { return T2(A->delta(k), F->id()); }, {}, "δ"};
    T->bd = Hom{EQ, F, [](const Elem& x) { return x[1]; }, {}, "∂"};
    T->actE = Action{F, EQ, [A, F, p](const Elem& u, const Elem& x) {
                         return T2(A->actE(p(u), x[0]), F->conj(u, x[1]));
                     }, "▷"};
    T->actL = Action{F, A->L, [A, p](const Elem& u, const Elem& k) { return A->actL(p(u), k); }, "▷"};
    T->lift = [A](const Elem& x, const Elem& y) { return A->lift(x[0], y[0]); };
    Q.total = T;
    Q.proj = Morph{T, A, identity_hom(A->L), Hom{EQ, A->E, [](const Elem& x) { return x[0]; }, {}, "q"}, p, "proj"};
    return Q;
}

Report kernel_relations_check(const Q1& Q, const VerifyCfg& cfg) {
    const XMod2& A = *Q.base;
    const auto& F = Q.F;
    const auto& EQ = Q.EQ;
    const XMod2& T = *Q.total;
    Report r;
    r.subject = "kernel relations " + Q.total->name;
    r.seed = cfg.run.seed;
    r.probe = show_probe(cfg, A);
    std::vector<Elem> gs = elements(A.G);
    std::vector<Elem> es = A.E->probes(cfg.probe);
    bool es_complete = A.E->finite() && es.size() == A.E->order();
    auto G = A.G;
    auto sg = [&](const Elem& x) { return G->show(x); };
    auto s3 = [&](const Elem& a, const Elem& b, const Elem& c) { return sg(a) + "," + sg(b) + "," + sg(c); };
    auto s1 = [&](const Elem& a) { return sg(a); };
    auto br = [&](const Elem& g, const Elem& h) { return Q.bracket(g, h); };
    auto sym = [&](const Elem& g) { return Q.sym(g); };
    auto fm = [&](const Elem& a, const Elem& b) { return F->mul(a, b); };
    auto em = [&](const Elem& a, const Elem& b) { return EQ->mul(a, b); };
    auto gh = [&](const Elem& g, const Elem& h) { return Q.gen_gh(g, h); };
    Elem one = G->id();

    r.add(forall<Elem>("bracket.cocycle", doms(gs, gs, gs),
                       [&](const Elem& g, const Elem& h, const Elem& i) {
                           Elem lhs = fm(fm(br(G->mul(g, h), i), F->inv(sym(i))), fm(br(g, h), sym(i)));
                           return lhs == fm(br(g, G->mul(h, i)), br(h, i));
                       },
                       s3, cfg.run));
    r.add(forall<Elem>("bracket.product", doms(gs, gs),
                       [&](const Elem& g, const Elem& h) {
                           return fm(fm(sym(g), sym(h)), F->inv(br(g, h))) == sym(G->mul(g, h));
                       },
                       [&](const Elem& a, const Elem& b) { return sg(a) + "," + sg(b); }, cfg.run));
    r.add(make_check("bracket.unit", sym(one) == br(one, one), F->show(sym(one)) + " vs " + F->show(br(one, one))));
    r.add(make_check("bracket.unit_nonempty", !F->is_id(sym(one)), "[1] reduced to the empty word"));
    r.add(forall<Elem>("bracket.inverse", doms(gs),
                       [&](const Elem& g) {
                           Elem rhs = fm(fm(F->inv(sym(g)), sym(one)), br(g, G->inv(g)));
                           return sym(G->inv(g)) == rhs;
                       },
                       s1, cfg.run));
    r.add(forall<Elem>("bracket.in_kernel", doms(gs, gs), [&](const Elem& g, const Elem& h) { return G->is_id(Q.p(br(g, h))); },
                       [&](const Elem& a, const Elem& b) { return sg(a) + "," + sg(b); }, cfg.run));

    auto se = [&](const Elem& a, const Elem& b) { return A.E->show(a) + "," + A.E->show(b); };
    r.add(forall<Elem>("conjugation.product", doms(es, es),
                       [&](const Elem& e, const Elem& f) {
                           return em(Q.gen_e(e), Q.gen_e(f)) == em(Q.gen_e(A.E->mul(e, f)), gh(A.bd(e), A.bd(f)));
                       },
                       se, cfg.run, es_complete));
    r.add(forall<Elem>("conjugation.action", doms(gs, es),
                       [&](const Elem& g, const Elem& e) {
                           Elem lhs = T.actE(sym(g), Q.gen_e(e));
                           Elem gi = G->inv(g), de = A.bd(e);
                           Elem rhs = Q.gen_e(A.actE(g, e));
                           rhs = em(rhs, gh(g, G->mul(de, gi)));
                           rhs = em(rhs, gh(de, gi));
                           rhs = em(rhs, EQ->inv(gh(g, gi)));
                           rhs = em(rhs, EQ->inv(gh(one, one)));
                           return lhs == rhs;
                       },
                       [&](const Elem& g, const Elem& e) { return sg(g) + "," + A.E->show(e); }, cfg.run, es_complete));
    r.add(forall<Elem>("conjugation.cocycle", doms(gs, gs, gs),
                       [&](const Elem& g, const Elem& h, const Elem& i) {
                           Elem lhs = em(gh(G->mul(g, h), i), T.actE(F->inv(sym(i)), gh(g, h)));
                           return lhs == em(gh(g, G->mul(h, i)), gh(h, i));
                       },
                       s3, cfg.run));
    std::vector<Elem> ls{F->id()};
    for (const auto& g : gs) ls.push_back(sym(g));
    r.add(forall<Elem>("conjugation.kernel", doms(gs, gs, gs, gs, ls),
                       [&](const Elem& g, const Elem& h, const Elem& g2, const Elem& h2, const Elem& l) {
                           Elem lhs = T.actE(fm(br(g, h), l), gh(g2, h2));
                           Elem rhs = em(em(gh(g, h), T.actE(l, gh(g2, h2))), EQ->inv(gh(g, h)));
                           return lhs == rhs;
                       },
                       [&](const Elem& g, const Elem& h, const Elem& g2, const Elem& h2, const Elem& l) {
                           return sg(g) + "," + sg(h) + "," + sg(g2) + "," + sg(h2) + "," + F->show(l);
                       },
                       cfg.run, false));
    return r;
}

Morph strictify(const Morph& f, const Q1& Q) {
    Morph m = compose(f, Q.proj);
    m.name = f.name + "∘proj";
    return m;
}

// ------------------------------------------------------------------ lax data

LaxHomotopy lax_unit(const Morph& f) {
    require_finite(*f.src, "lax_unit");
    const auto& A = *f.src;
    const auto& B = *f.tgt;
    LaxHomotopy h;
    h.f = f;
    h.s.assign(A.G->order(), B.E->id());
    h.t.assign(A.E->order(), B.L->id());
    h.Pi.assign(A.G->order() * A.G->order(), B.L->id());
    h.name = "1_" + f.name;
    return h;
}

bool same_lax(const LaxHomotopy& a, const LaxHomotopy& b) {
    return a.s == b.s && a.t == b.t && a.Pi == b.Pi && morph_eq(a.f, b.f);
}

namespace {

std::mutex& ps_mutex() {
    static std::mutex m;
    return m;
}

// path_space(A) is cheap to build but used per conversion; keep one per target.
XModP gr_path_total(const XModP& A) {
    static std::vector<std::pair<XModP, XModP>> cache;
    std::lock_guard<std::mutex> g(ps_mutex());
    for (const auto& [k, v] : cache)
        if (k == A) return v;
    XModP P = path_space(A).total;
    cache.emplace_back(A, P);
    return P;
}

}  // namespace

Homotopy lax_to_strict(const LaxHomotopy& lh, const Q1& Q) {
    const XModP A = Q.base;
    const XModP B = lh.f.tgt;
    auto F = Q.F;
    const std::size_t n = A->G->order();
    Morph fs = strictify(lh.f, Q);
    Homotopy h;
    h.f = fs;
    h.sb = lh.s;
    h.s = extend_derivation(F, fs.phi, B, lh.s);
    h.name = lh.name.empty() ? "strict" : lh.name;

    // t via the path-space evaluation H: Gr1(Q¹A) -> Gr1(P*B), H(x) = (ψ(x), s(∂x), t(x)).
    XModP P = gr_path_total(B);
    GroupP G1 = P->E;
    Fn s = h.s;
    Hom phi = fs.phi, psi1 = lh.f.psi;
    auto i1 = [=](const Elem& u) { return T2(phi(u), s(u)); };
    std::vector<Elem> gs = elements(A->G);
    // Hgen[a*n+g] = H((a,g)); Cpos / Cneg as in the prefix decomposition.
    std::vector<Elem> Cpos(n * n), Cneg(n * n);
    std::vector<Elem> Hgen(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t g = 0; g < n; ++g)
            Hgen[a * n + g] = T3(B->E->id(), s(Q.bracket(gs[a], gs[g])), lh.pi(a, g));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t g = 0; g < n; ++g) {
            std::size_t ag = A->G->index_of(A->G->mul(gs[a], gs[g]));
            Cpos[a * n + g] = first_lifted_action(*B, i1(F->gen(ag)), Hgen[a * n + g]);
            std::size_t c = A->G->index_of(A->G->mul(gs[a], A->G->inv(gs[g])));
            Cneg[a * n + g] = G1->inv(first_lifted_action(*B, i1(F->gen(a)), Hgen[c * n + g]));
        }
    std::size_t one = A->G->index_of(A->G->id());
    Elem i1_one_inv = i1(F->inv(F->gen(one)));
    std::vector<Elem> He;
    for (std::size_t e = 0; e < A->E->order(); ++e) {
        Elem x = A->E->at(e);
        He.push_back(T3(psi1(x), lh.s[A->G->index_of(A->bd(x))], lh.t[e]));
    }
    auto GA = A->G;
    auto EA = A->E;
    h.t = [=](const Elem& x) {
        const Elem& e = x[0];
        Elem w = F->mul(F->inv(F->gen(GA->index_of(A->bd(e)))), x[1]);
        Elem Z = G1->id();
        std::size_t a = one;
        for (auto l : w.w) {
            std::size_t g = static_cast<std::size_t>(std::abs(l) - 1);
            if (l > 0) {
                Z = G1->mul(Z, Cpos[a * n + g]);
                a = GA->index_of(GA->mul(gs[a], gs[g]));
            } else {
                Z = G1->mul(Z, Cneg[a * n + g]);
                a = GA->index_of(GA->mul(gs[a], GA->inv(gs[g])));
            }
        }
        if (a != one) throw GroupError("lax_to_strict: element outside the pullback");
        Elem Hw = first_lifted_action(*B, i1_one_inv, Z);
        return G1->mul(He[EA->index_of(e)], Hw)[1][1];
    };
    return h;
}

LaxHomotopy strict_to_lax(const Homotopy& h, const Q1& Q) {
    const XModP A = Q.base;
    const XModP B = h.f.tgt;
    Morph base{A, B, h.f.mu,
               Hom{A->E, B->E, [psi = h.f.psi, Q](const Elem& e) { return psi(Q.gen_e(e)); }, {}, "ψ"},
               Hom{A->G, B->G, [phi = h.f.phi, Q](const Elem& g) { return phi(Q.sym(g)); }, {}, "φ"}, h.f.name};
    base = table_morph(A, B, base.mu, base.psi, base.phi, h.f.name);
    ProbeCfg pc;
    pc.word_depth = 3;
    pc.word_samples = 40;
    Probes p = source_probes(*Q.total, pc);
    auto strict_ends = [&](const Morph& m) {
        Morph s = strictify(table_morph(A, B, m.mu,
                                        Hom{A->E, B->E, [&](const Elem& e) { return m.psi(Q.gen_e(e)); }, {}, ""},
                                        Hom{A->G, B->G, [&](const Elem& g) { return m.phi(Q.sym(g)); }, {}, ""}, ""),
                            Q);
        return same_morph(s, m, p);
    };
    if (!strict_ends(h.f) || !strict_ends(homotopy_target(h))) throw GroupError("not-strict-endpoints");
    LaxHomotopy lh;
    lh.f = base;
    std::vector<Elem> gs = elements(A->G);
    for (const auto& g : gs) lh.s.push_back(h.s(Q.sym(g)));
    for (std::size_t i = 0; i < A->E->order(); ++i) lh.t.push_back(h.t(Q.gen_e(A->E->at(i))));
    for (const auto& g : gs)
        for (const auto& x : gs) lh.Pi.push_back(h.t(Q.gen_gh(g, x)));
    lh.name = h.name;
    return lh;
}

// ------------------------------------------------------------------ validation

namespace {

struct LaxEqs {
    const LaxHomotopy& h;
    const XMod2& S;
    const XMod2& B;
    std::size_t n;

    std::size_t gi(const Elem& g) const { return S.G->index_of(g); }
    std::size_t ei(const Elem& e) const { return S.E->index_of(e); }
    const Elem& s(const Elem& g) const { return h.s[gi(g)]; }
    const Elem& t(const Elem& e) const { return h.t[ei(e)]; }
    const Elem& P(const Elem& g, const Elem& x) const { return h.Pi[gi(g) * n + gi(x)]; }
    Elem phi(const Elem& g) const { return h.f.phi(g); }
    Elem psi(const Elem& e) const { return h.f.psi(e); }
    Elem mE(const Elem& a, const Elem& b) const { return B.E->mul(a, b); }
    Elem mL(const Elem& a, const Elem& b) const { return B.L->mul(a, b); }
    Elem iE(const Elem& a) const { return B.E->inv(a); }
    Elem iL(const Elem& a) const { return B.L->inv(a); }

    bool boundary(const Elem& g, const Elem& x) const {
        Elem r = mE(B.actE(B.G->inv(phi(x)), s(g)), s(x));
        return B.bd(s(S.G->mul(g, x))) == B.bd(r);
    }
    bool product(const Elem& g, const Elem& x) const {
        Elem r = mE(mE(B.actE(B.G->inv(phi(x)), s(g)), s(x)), B.delta(P(g, x)));
        return s(S.G->mul(g, x)) == r;
    }
    bool t_product(const Elem& a, const Elem& b) const {
        Elem da = S.bd(a), db = S.bd(b);
        Elem lhs = mL(P(da, db), t(S.E->mul(a, b)));
        Elem pbi = iE(psi(b));
        Elem inner = mL(iL(B.lift(pbi, iE(s(da)))), B.sec(pbi, t(a)));
        return lhs == mL(B.sec(iE(s(db)), inner), t(b));
    }
    bool t_equivariance(const Elem& g, const Elem& a) const {
        Elem ph = phi(g), sg = s(g), da = S.bd(a), sda = s(da), psa = psi(a);
        Elem x1 = B.actL(ph, B.sec(mE(sg, iE(sda)), iL(B.lift(iE(psa), iE(sg)))));
        Elem x2 = B.actL(ph, B.lift(sg, mE(iE(sda), iE(psa))));
        Elem x3 = B.actL(B.G->mul(ph, B.bd(sg)), t(a));
        Elem lhs = mL(mL(x1, x2), x3);
        Elem one = S.G->id(), gi = S.G->inv(g);
        Elem rhs = mL(iL(P(one, one)), iL(P(g, gi)));
        rhs = mL(mL(rhs, P(da, gi)), P(g, S.G->mul(da, gi)));
        return lhs == mL(rhs, t(S.actE(g, a)));
    }
    bool cocycle(const Elem& g, const Elem& x, const Elem& i) const {
        Elem lhs = mL(B.sec(s(i), B.actL(B.G->inv(phi(i)), P(g, x))), P(S.G->mul(g, x), i));
        return lhs == mL(P(x, i), P(g, S.G->mul(x, i)));
    }
};

}  // namespace

Report lax_validate(const LaxHomotopy& lh, const VerifyCfg& cfg) {
    const XMod2& S = *lh.f.src;
    require_finite(S, "lax_validate");
    Report r;
    r.subject = "lax homotopy " + (lh.name.empty() ? lh.f.name : lh.name);
    r.seed = cfg.run.seed;
    r.probe = show_probe(cfg, S);
    LaxEqs q{lh, S, *lh.f.tgt, S.G->order()};
    std::vector<Elem> gs = elements(S.G), es = elements(S.E);
    auto sg = [&](const Elem& x) { return S.G->show(x); };
    auto se = [&](const Elem& x) { return S.E->show(x); };
    auto gg = [&](const Elem& a, const Elem& b) { return sg(a) + "," + sg(b); };
    r.add(forall<Elem>("lax.boundary", doms(gs, gs), [&](const Elem& a, const Elem& b) { return q.boundary(a, b); }, gg,
                       cfg.run));
    r.add(forall<Elem>("lax.product", doms(gs, gs), [&](const Elem& a, const Elem& b) { return q.product(a, b); }, gg,
                       cfg.run));
    r.add(forall<Elem>("lax.t.product", doms(es, es), [&](const Elem& a, const Elem& b) { return q.t_product(a, b); },
                       [&](const Elem& a, const Elem& b) { return se(a) + "," + se(b); }, cfg.run));
    r.add(forall<Elem>("lax.t.equivariance", doms(gs, es),
                       [&](const Elem& g, const Elem& a) { return q.t_equivariance(g, a); },
                       [&](const Elem& g, const Elem& a) { return sg(g) + "," + se(a); }, cfg.run));
    r.add(forall<Elem>("lax.cocycle", doms(gs, gs, gs),
                       [&](const Elem& a, const Elem& b, const Elem& c) { return q.cocycle(a, b, c); },
                       [&](const Elem& a, const Elem& b, const Elem& c) { return sg(a) + "," + sg(b) + "," + sg(c); },
                       cfg.run));
    if (r.passed()) r.absorb(xmod_map_verify(lax_target(lh), cfg), "target.");
    return r;
}

bool lax_holds(const LaxHomotopy& lh) {
    const XMod2& S = *lh.f.src;
    LaxEqs q{lh, S, *lh.f.tgt, S.G->order()};
    const std::size_t n = S.G->order(), m = S.E->order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (!q.boundary(S.G->at(a), S.G->at(b)) || !q.product(S.G->at(a), S.G->at(b))) return false;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (!q.cocycle(S.G->at(a), S.G->at(b), S.G->at(c))) return false;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (!q.t_product(S.E->at(a), S.E->at(b))) return false;
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t a = 0; a < m; ++a)
            if (!q.t_equivariance(S.G->at(g), S.E->at(a))) return false;
    return true;
}

Morph lax_target(const LaxHomotopy& lh) {
    const XModP A = lh.f.src, B = lh.f.tgt;
    const std::size_t n = A->G->order();
    LaxHomotopy d = lh;
    std::size_t one = A->G->index_of(A->G->id());
    Elem p11i = B->L->inv(lh.Pi[one * n + one]);
    Hom mu{A->L, B->L, [d, A, B, p11i](const Elem& l) {
               return B->L->mul(B->L->mul(d.f.mu(l), p11i), d.t[A->E->index_of(A->delta(l))]);
           }, {}, "μ₂"};
    Hom psi{A->E, B->E, [d, A, B](const Elem& e) {
                Elem x = B->E->mul(d.f.psi(e), d.s[A->G->index_of(A->bd(e))]);
                return B->E->mul(x, B->delta(d.t[A->E->index_of(e)]));
            }, {}, "ψ₂"};
    Hom phi{A->G, B->G, [d, A, B](const Elem& g) { return B->G->mul(d.f.phi(g), B->bd(d.s[A->G->index_of(g)])); }, {},
            "φ₂"};
    return table_morph(A, B, mu, psi, phi, lh.f.name + "₂");
}

Morph lax_target_strict(const LaxHomotopy& lh, const Q1& Q) {
    Homotopy h = lax_to_strict(lh, Q);
    Morph t = homotopy_target(h);
    const XModP A = Q.base, B = lh.f.tgt;
    return table_morph(A, B, t.mu, Hom{A->E, B->E, [&](const Elem& e) { return t.psi(Q.gen_e(e)); }, {}, "ψ₂"},
                       Hom{A->G, B->G, [&](const Elem& g) { return t.phi(Q.sym(g)); }, {}, "φ₂"}, lh.f.name + "₂");
}

Report lax_target_report(const LaxHomotopy& lh, const Q1& Q, const VerifyCfg& cfg) {
    Report r;
    r.subject = "lax target of " + (lh.name.empty() ? lh.f.name : lh.name);
    r.seed = cfg.run.seed;
    Morph a = lax_target(lh);
    Morph b = lax_target_strict(lh, Q);
    r.absorb(xmod_map_verify(a, cfg), "target.");
    const XMod2& S = *lh.f.src;
    const XMod2& B = *lh.f.tgt;
    auto cmp = [&](const char* id, const GroupP& D, const GroupP& C, const Hom& x, const Hom& y) {
        Check c;
        c.id = id;
        for (std::size_t i = 0; i < D->order(); ++i) {
            ++c.tested;
            Elem u = x(D->at(i)), v = y(D->at(i));
            if (u != v) {
                ++c.failures;
                if (c.witnesses.size() < 3)
                    c.witnesses.push_back(D->show(D->at(i)) + ": formula " + C->show(u) + ", strict side " + C->show(v));
            }
        }
        c.pass = c.failures == 0;
        r.add(c);
    };
    cmp("target.mu.strict_agreement", S.L, B.L, a.mu, b.mu);
    cmp("target.psi.strict_agreement", S.E, B.E, a.psi, b.psi);
    cmp("target.phi.strict_agreement", S.G, B.G, a.phi, b.phi);
    return r;
}

bool strict_side_holds(const LaxHomotopy& lh, const Q1& Q, const Probes& p) {
    Homotopy h = lax_to_strict(lh, Q);
    const XMod2& A = *Q.base;
    const XMod2& B = *lh.f.tgt;
    // Endpoints strict: φ' kills [g,h] and ψ' kills (1,[g,h]).
    for (std::size_t g = 0; g < A.G->order(); ++g)
        for (std::size_t x = 0; x < A.G->order(); ++x) {
            Elem br = Q.bracket(A.G->at(g), A.G->at(x));
            if (!B.G->is_id(B.G->mul(h.f.phi(br), B.bd(h.s(br))))) return false;
            Elem e = Q.gen_gh(A.G->at(g), A.G->at(x));
            Elem ps = B.E->mul(B.E->mul(h.f.psi(e), h.s(br)), B.delta(h.t(e)));
            if (!B.E->is_id(ps)) return false;
        }
    // The generator values must be the prescribed ones; otherwise the
    // extension describes some other derivation.
    for (std::size_t g = 0; g < A.G->order(); ++g)
        for (std::size_t x = 0; x < A.G->order(); ++x)
            if (h.t(Q.gen_gh(A.G->at(g), A.G->at(x))) != lh.pi(g, x)) return false;
    for (std::size_t e = 0; e < A.E->order(); ++e)
        if (h.t(Q.gen_e(A.E->at(e))) != lh.t[e]) return false;
    return quadratic_holds(h, p);
}

// ------------------------------------------------------------------ operations

namespace {

void require_lax_base(const Morph& expected, const Morph& got, const char* what) {
    if (!morph_eq(expected, got)) throw GroupError(std::string(what) + ": endpoint-mismatch");
}

// Θ([gh],[g],[h]) for every pair, cross-checked with ω on the word [gh]⁻¹[g][h].
std::vector<Elem> theta_table(const Homotopy& h1, const Homotopy& h2, const Q1& Q) {
    const XMod2& A = *Q.base;
    const std::size_t n = A.G->order();
    Fn om = omega(h1, h2);
    std::vector<Elem> out(n * n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t x = 0; x < n; ++x) {
            std::size_t gx = A.G->index_of(A.G->mul(A.G->at(g), A.G->at(x)));
            Elem th = theta(h1, h2, gx, g, x);
            Elem w = om(Q.bracket(A.G->at(g), A.G->at(x)));
            if (th != w)
                throw DualMismatch("theta " + h1.f.tgt->L->show(th) + " vs omega " + h1.f.tgt->L->show(w));
            out[g * n + x] = th;
        }
    return out;
}

}  // namespace

LaxHomotopy lax_concat(const LaxHomotopy& a, const LaxHomotopy& b, const Q1& Q) {
    require_lax_base(lax_target(a), b.f, "lax_concat");
    const XMod2& A = *Q.base;
    const XMod2& B = *a.f.tgt;
    Homotopy h1 = lax_to_strict(a, Q), h2 = lax_to_strict(b, Q);
    std::vector<Elem> th = theta_table(h1, h2, Q);
    LaxHomotopy r;
    r.f = a.f;
    r.name = a.name + "⊗" + b.name;
    for (std::size_t g = 0; g < a.s.size(); ++g) r.s.push_back(B.E->mul(a.s[g], b.s[g]));
    for (std::size_t e = 0; e < a.t.size(); ++e) {
        std::size_t de = A.G->index_of(A.bd(A.E->at(e)));
        r.t.push_back(B.L->mul(B.sec(B.E->inv(b.s[de]), a.t[e]), b.t[e]));
    }
    for (std::size_t i = 0; i < a.Pi.size(); ++i) r.Pi.push_back(B.L->mul(B.L->mul(th[i], b.Pi[i]), a.Pi[i]));
    return r;
}

LaxHomotopy lax_invert(const LaxHomotopy& a, const Q1& Q) {
    const XMod2& A = *Q.base;
    const XMod2& B = *a.f.tgt;
    LaxHomotopy r;
    r.f = lax_target(a);
    r.name = "inv(" + a.name + ")";
    for (const auto& x : a.s) r.s.push_back(B.E->inv(x));
    for (std::size_t e = 0; e < a.t.size(); ++e) {
        std::size_t de = A.G->index_of(A.bd(A.E->at(e)));
        r.t.push_back(B.sec(a.s[de], B.L->inv(a.t[e])));
    }
    Homotopy h1 = lax_to_strict(a, Q);
    Homotopy hb = lax_to_strict(LaxHomotopy{r.f, r.s, r.t, std::vector<Elem>(a.Pi.size(), B.L->id()), ""}, Q);
    std::vector<Elem> th = theta_table(h1, hb, Q);
    for (std::size_t i = 0; i < a.Pi.size(); ++i) r.Pi.push_back(B.L->mul(B.L->inv(th[i]), B.L->inv(a.Pi[i])));
    return r;
}

TwoFold lax_twofold_to_strict(const LaxTwoFold& k, const Q1& Q) { return make_twofold(lax_to_strict(k.h, Q), k.k); }

LaxHomotopy lax_twofold_target(const LaxTwoFold& k, const Q1& Q) {
    const XMod2& A = *Q.base;
    const XMod2& B = *k.h.f.tgt;
    const std::size_t n = A.G->order();
    TwoFold sk = lax_twofold_to_strict(k, Q);
    LaxHomotopy r;
    r.f = k.h.f;
    r.name = k.h.name + "'";
    for (std::size_t g = 0; g < n; ++g) r.s.push_back(B.E->mul(k.h.s[g], B.delta(k.k[g])));
    for (std::size_t e = 0; e < k.h.t.size(); ++e) {
        std::size_t de = A.G->index_of(A.bd(A.E->at(e)));
        r.t.push_back(B.L->mul(B.L->inv(k.k[de]), k.h.t[e]));
    }
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t x = 0; x < n; ++x) {
            Elem gx = A.G->mul(A.G->at(g), A.G->at(x));
            Elem v = xi(sk.h, sk.k, Q.sym(gx), Q.sym(A.G->at(g)), Q.sym(A.G->at(x)));
            Elem w = sk.k(Q.bracket(A.G->at(g), A.G->at(x)));
            if (v != w) throw DualMismatch("xi " + B.L->show(v) + " vs word evaluation " + B.L->show(w));
            r.Pi.push_back(B.L->mul(B.L->inv(v), k.h.pi(g, x)));
        }
    return r;
}

LaxTwoFold lax_vertical(const LaxTwoFold& a, const LaxTwoFold& b, const Q1& Q) {
    if (!same_lax(lax_twofold_target(a, Q), b.h)) throw GroupError("lax_vertical: endpoint-mismatch");
    const XMod2& B = *a.h.f.tgt;
    LaxTwoFold r{a.h, {}};
    for (std::size_t g = 0; g < a.k.size(); ++g) r.k.push_back(B.L->mul(a.k[g], b.k[g]));
    return r;
}

LaxTwoFold lax_whisker_right(const LaxTwoFold& k, const LaxHomotopy& u, const Q1& Q) {
    const XMod2& B = *k.h.f.tgt;
    LaxTwoFold r{lax_concat(k.h, u, Q), {}};
    for (std::size_t g = 0; g < k.k.size(); ++g) r.k.push_back(B.sec(B.E->inv(u.s[g]), k.k[g]));
    return r;
}

LaxTwoFold lax_whisker_left(const LaxHomotopy& u, const LaxTwoFold& k, const Q1& Q) {
    return LaxTwoFold{lax_concat(u, k.h, Q), k.k};
}

LaxHomotopy lax_compose_left(const Morph& g, const LaxHomotopy& lh) {
    if (g.src != lh.f.tgt) throw GroupError("lax_compose_left: composability-mismatch");
    LaxHomotopy r;
    r.f = table_morph(lh.f.src, g.tgt, compose(g.mu, lh.f.mu), compose(g.psi, lh.f.psi), compose(g.phi, lh.f.phi),
                      g.name + "∘" + lh.f.name);
    for (const auto& x : lh.s) r.s.push_back(g.psi(x));
    for (const auto& x : lh.t) r.t.push_back(g.mu(x));
    for (const auto& x : lh.Pi) r.Pi.push_back(g.mu(x));
    r.name = g.name + "∘" + lh.name;
    return r;
}

LaxHomotopy lax_compose_right(const LaxHomotopy& lh, const Morph& m) {
    if (m.tgt != lh.f.src) throw GroupError("lax_compose_right: composability-mismatch");
    const XMod2& S = *m.src;
    const XMod2& A = *lh.f.src;
    require_finite(S, "lax_compose_right");
    const std::size_t n = A.G->order();
    LaxHomotopy r;
    r.f = table_morph(m.src, lh.f.tgt, compose(lh.f.mu, m.mu), compose(lh.f.psi, m.psi), compose(lh.f.phi, m.phi),
                      lh.f.name + "∘" + m.name);
    std::vector<std::size_t> gmap;
    for (std::size_t g = 0; g < S.G->order(); ++g) gmap.push_back(A.G->index_of(m.phi(S.G->at(g))));
    for (auto g : gmap) r.s.push_back(lh.s[g]);
    for (std::size_t e = 0; e < S.E->order(); ++e) r.t.push_back(lh.t[A.E->index_of(m.psi(S.E->at(e)))]);
    for (auto g : gmap)
        for (auto x : gmap) r.Pi.push_back(lh.Pi[g * n + x]);
    r.name = lh.name + "∘" + m.name;
    return r;
}

// ------------------------------------------------------------------ search

std::uint64_t lax_space_size(const Morph& f) {
    const XMod2& A = *f.src;
    const XMod2& B = *f.tgt;
    require_finite(A, "lax_space_size");
    require_finite(B, "lax_space_size");
    long double sz = std::pow(static_cast<long double>(B.E->order()), A.G->order()) *
                     std::pow(static_cast<long double>(B.L->order()), A.E->order() + A.G->order() * A.G->order());
    if (sz > 1e18L) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(sz + 0.5L);
}

LaxHomotopy lax_decode(const Morph& f, std::uint64_t i) {
    const XMod2& A = *f.src;
    const XMod2& B = *f.tgt;
    const std::size_t n = A.G->order(), m = A.E->order();
    const std::uint64_t nE = B.E->order(), nL = B.L->order();
    LaxHomotopy h;
    h.f = f;
    h.Pi.resize(n * n);
    h.t.resize(m);
    h.s.resize(n);
    // Π least significant, then t̂, then ŝ.
    for (std::size_t k = n * n; k-- > 0;) {
        h.Pi[k] = B.L->at(i % nL);
        i /= nL;
    }
    for (std::size_t k = m; k-- > 0;) {
        h.t[k] = B.L->at(i % nL);
        i /= nL;
    }
    for (std::size_t k = n; k-- > 0;) {
        h.s[k] = B.E->at(i % nE);
        i /= nE;
    }
    return h;
}

LaxSearch lax_search(const Morph& f, int jobs, std::uint64_t cap) {
    const XMod2& A = *f.src;
    const XMod2& B = *f.tgt;
    LaxSearch out;
    out.space = lax_space_size(f);
    if (out.space > cap) throw GroupError("lax_search: space of " + std::to_string(out.space) + " tuples exceeds cap");
    const std::size_t n = A.G->order(), m = A.E->order();
    std::uint64_t nT = 1, nP = 1;
    for (std::size_t k = 0; k < m; ++k) nT *= B.L->order();
    for (std::size_t k = 0; k < n * n; ++k) nP *= B.L->order();
    const std::uint64_t nS = out.space / (nT * nP);
    // Outer loop over (ŝ, Π): the G-only equations prune before t̂ is enumerated.
    std::vector<std::vector<std::uint64_t>> hits(nS * nP);
    parallel_for(nS * nP, jobs, [&](std::uint64_t j) {
        std::uint64_t si = j / nP, pi = j % nP;
        LaxHomotopy h = lax_decode(f, si * nT * nP + pi);
        LaxEqs q{h, A, B, n};
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (!q.boundary(A.G->at(a), A.G->at(b)) || !q.product(A.G->at(a), A.G->at(b))) return;
                for (std::size_t c = 0; c < n; ++c)
                    if (!q.cocycle(A.G->at(a), A.G->at(b), A.G->at(c))) return;
            }
        for (std::uint64_t ti = 0; ti < nT; ++ti) {
            std::uint64_t idx = (si * nT + ti) * nP + pi;
            LaxHomotopy x = lax_decode(f, idx);
            if (lax_holds(x)) hits[j].push_back(idx);
        }
    });
    for (const auto& v : hits) out.index.insert(out.index.end(), v.begin(), v.end());
    std::sort(out.index.begin(), out.index.end());
    for (auto i : out.index) {
        LaxHomotopy h = lax_decode(f, i);
        h.name = f.name + "#" + std::to_string(i);
        out.found.push_back(std::move(h));
    }
    return out;
}

std::vector<LaxTwoFold> lax_twofold_search(const LaxHomotopy& lh, const Q1& Q, std::uint64_t cap) {
    const XMod2& A = *Q.base;
    const XMod2& B = *lh.f.tgt;
    const std::size_t n = A.G->order();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < n; ++k) {
        total *= B.L->order();
        if (total > cap) throw GroupError("lax_twofold_search: space exceeds cap");
    }
    std::vector<LaxTwoFold> out;
    for (std::uint64_t i = 0; i < total; ++i) {
        LaxTwoFold k{lh, std::vector<Elem>(n)};
        std::uint64_t x = i;
        for (std::size_t g = n; g-- > 0;) {
            k.k[g] = B.L->at(x % B.L->order());
            x /= B.L->order();
        }
        out.push_back(std::move(k));
    }
    return out;
}

namespace {

// All homomorphisms between finite groups as image tables, by brute force.
std::vector<std::vector<Elem>> all_homs(const GroupP& D, const GroupP& C, std::uint64_t cap) {
    const std::size_t n = D->order(), m = C->order();
    long double sz = std::pow(static_cast<long double>(m), n);
    if (sz > static_cast<long double>(cap)) throw GroupError("enumerate_morphisms: table space exceeds cap");
    std::vector<std::vector<Elem>> out;
    std::vector<std::size_t> dig(n, 0);
    std::vector<Elem> dom = elements(D);
    std::vector<std::size_t> prod(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) prod[a * n + b] = D->index_of(D->mul(dom[a], dom[b]));
    auto total = static_cast<std::uint64_t>(sz + 0.5L);
    for (std::uint64_t i = 0; i < total; ++i) {
        std::uint64_t x = i;
        std::vector<Elem> im(n);
        for (std::size_t k = n; k-- > 0;) {
            im[k] = C->at(x % m);
            x /= m;
        }
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < n && ok; ++b)
                if (C->mul(im[a], im[b]) != im[prod[a * n + b]]) ok = false;
        if (ok) out.push_back(std::move(im));
    }
    return out;
}

}  // namespace

std::vector<Morph> enumerate_morphisms(const XModP& A, const XModP& B, std::uint64_t cap) {
    require_finite(*A, "enumerate_morphisms");
    require_finite(*B, "enumerate_morphisms");
    auto Ls = elements(A->L), Es = elements(A->E), Gs = elements(A->G);
    std::vector<Morph> out;
    auto phis = all_homs(A->G, B->G, cap);
    auto psis = all_homs(A->E, B->E, cap);
    auto mus = all_homs(A->L, B->L, cap);
    for (const auto& ph : phis) {
        auto phi = [&](const Elem& g) { return ph[A->G->index_of(g)]; };
        for (const auto& ps : psis) {
            auto psi = [&](const Elem& e) { return ps[A->E->index_of(e)]; };
            bool ok = true;
            for (const auto& e : Es) {
                if (B->bd(psi(e)) != phi(A->bd(e))) ok = false;
                for (const auto& g : Gs)
                    if (ok && psi(A->actE(g, e)) != B->actE(phi(g), psi(e))) ok = false;
                if (!ok) break;
            }
            if (!ok) continue;
            for (const auto& mt : mus) {
                auto mu = [&](const Elem& l) { return mt[A->L->index_of(l)]; };
                bool good = true;
                for (const auto& l : Ls) {
                    if (B->delta(mu(l)) != psi(A->delta(l))) good = false;
                    for (const auto& g : Gs)
                        if (good && mu(A->actL(g, l)) != B->actL(phi(g), mu(l))) good = false;
                    if (!good) break;
                }
                for (std::size_t a = 0; a < Es.size() && good; ++a)
                    for (std::size_t b = 0; b < Es.size() && good; ++b)
                        if (mu(A->lift(Es[a], Es[b])) != B->lift(psi(Es[a]), psi(Es[b]))) good = false;
                if (!good) continue;
                std::string name = "m" + std::to_string(out.size());
                out.push_back(Morph{A, B, table_hom(A->L, B->L, mt, "μ"), table_hom(A->E, B->E, ps, "ψ"),
                                    table_hom(A->G, B->G, ph, "φ"), name});
            }
        }
    }
    return out;
}

Bijection lax_strict_bijection(const Morph& f, const Q1& Q, const ProbeCfg& strict_probe, int jobs) {
    Bijection b;
    b.space = lax_space_size(f);
    Probes p = source_probes(*Q.total, strict_probe);
    std::vector<char> lax(b.space), strict(b.space);
    parallel_for(b.space, jobs, [&](std::uint64_t i) {
        LaxHomotopy h = lax_decode(f, i);
        lax[i] = lax_holds(h);
        strict[i] = strict_side_holds(h, Q, p);
    });
    for (std::uint64_t i = 0; i < b.space; ++i) {
        b.lax_accepted += lax[i];
        b.strict_accepted += strict[i];
        if (lax[i] != strict[i]) {
            ++b.disagreements;
            if (b.witnesses.size() < 3)
                b.witnesses.push_back("tuple " + std::to_string(i) + (lax[i] ? ": lax only" : ": strict only"));
        }
    }
    return b;
}

// ------------------------------------------------------------------ equivalences

Report is_lax_equivalence(const LaxEquivalence& eq, const VerifyCfg& cfg) {
    Report r;
    r.subject = "lax homotopy equivalence " + eq.f.name + " / " + eq.g.name;
    r.seed = cfg.run.seed;
    auto side = [&](const char* id, const LaxHomotopy& h, const XModP& X, const Morph& comp) {
        Report v = lax_validate(h, cfg);
        r.absorb(v, std::string(id) + ".");
        r.add(make_check(std::string(id) + ".source", morph_eq(h.f, identity_morph(X)), h.f.name));
        r.add(make_check(std::string(id) + ".target", v.passed() && morph_eq(lax_target(h), comp), h.name));
    };
    side("gf", eq.to_gf, eq.f.src, compose(eq.g, eq.f));
    side("fg", eq.to_fg, eq.f.tgt, compose(eq.f, eq.g));
    return r;
}

Report lax_equivalence_search(const Morph& f, const Morph& g, const VerifyCfg& cfg, LaxEquivalence* out) {
    Report r;
    r.subject = "lax equivalence search " + f.name + " / " + g.name;
    r.seed = cfg.run.seed;
    auto find = [&](const XModP& X, const Morph& comp, LaxHomotopy* w) {
        LaxSearch s = lax_search(identity_morph(X), cfg.run.jobs);
        for (const auto& h : s.found)
            if (morph_eq(lax_target(h), comp)) {
                *w = h;
                return std::make_pair(true, s.space);
            }
        return std::make_pair(false, s.space);
    };
    LaxEquivalence eq{f, g, {}, {}};
    auto [a, na] = find(f.src, compose(g, f), &eq.to_gf);
    auto [b, nb] = find(f.tgt, compose(f, g), &eq.to_fg);
    auto note = [](bool found, std::uint64_t n) {
        return found ? "found among " + std::to_string(n) + " tuples"
                     : "not found within bounds (" + std::to_string(n) + " tuples)";
    };
    Check ca = make_check("gf.witness", a, "", note(a, na));
    Check cb = make_check("fg.witness", b, "", note(b, nb));
    ca.exhaustive = cb.exhaustive = false;
    r.add(ca);
    r.add(cb);
    if (a && b) r.absorb(is_lax_equivalence(eq, cfg), "");
    if (out) *out = eq;
    return r;
}

namespace {

LaxHomotopy relabel(LaxHomotopy h, std::string name) {
    h.name = std::move(name);
    return h;
}

}  // namespace

LaxEquivalence compose_equivalences(const LaxEquivalence& e1, const LaxEquivalence& e2) {
    // e1: f: A -> B, g: B -> A; e2: f': B -> C, g': C -> B.
    Morph F = compose(e2.f, e1.f), G = compose(e1.g, e2.g);
    Q1 QA = q1(e1.f.src), QC = q1(e2.f.tgt);
    // id_A -> g f, then g (id_B -> g' f') f.
    LaxHomotopy a2 = lax_compose_right(lax_compose_left(e1.g, e2.to_gf), e1.f);
    LaxHomotopy gf = lax_concat(e1.to_gf, a2, QA);
    // id_C -> f' g', then f' (id_B -> f g) g'.
    LaxHomotopy c2 = lax_compose_right(lax_compose_left(e2.f, e1.to_fg), e2.g);
    LaxHomotopy fg = lax_concat(e2.to_fg, c2, QC);
    F.name = e2.f.name + "∘" + e1.f.name;
    G.name = e1.g.name + "∘" + e2.g.name;
    return LaxEquivalence{F, G, relabel(gf, "gf"), relabel(fg, "fg")};
}

LaxEquivalence equivalence_right_factor(const LaxEquivalence& ef, const LaxEquivalence& egf, const Morph& g) {
    // f: A -> B with inverse f̄; g f: A -> C with inverse h̄. Inverse of g is f h̄.
    Morph inv = compose(ef.f, egf.g);
    Q1 QB = q1(ef.f.tgt);
    // id_C -> g (f h̄): the g∘f witness as is.
    LaxHomotopy fg = egf.to_fg;
    // id_B -> f f̄ -> f h̄ g f f̄ -> f h̄ g.
    LaxHomotopy step2 = lax_compose_right(lax_compose_left(ef.f, egf.to_gf), ef.g);
    LaxHomotopy back = lax_compose_left(compose(inv, g), lax_invert(ef.to_fg, QB));
    LaxHomotopy gf = lax_concat(lax_concat(ef.to_fg, step2, QB), back, QB);
    return LaxEquivalence{g, inv, relabel(gf, "gf"), relabel(fg, "fg")};
}

LaxEquivalence equivalence_left_factor(const LaxEquivalence& eg, const LaxEquivalence& egf, const Morph& f) {
    // g: B -> C with inverse ḡ; g f: A -> C with inverse h̄. Inverse of f is h̄ g.
    Morph inv = compose(egf.g, eg.f);
    Q1 QB = q1(eg.f.src);
    LaxHomotopy gf = egf.to_gf;
    // id_B -> ḡ g -> ḡ g f h̄ g -> f h̄ g.
    LaxHomotopy step2 = lax_compose_right(lax_compose_left(eg.g, egf.to_fg), eg.f);
    LaxHomotopy back = lax_compose_right(lax_invert(eg.to_gf, QB), compose(f, inv));
    LaxHomotopy fg = lax_concat(lax_concat(eg.to_gf, step2, QB), back, QB);
    return LaxEquivalence{f, inv, relabel(gf, "gf"), relabel(fg, "fg")};
}

// ------------------------------------------------------------------ laws

namespace {

std::vector<Elem> morph_table(const Morph& m) {
    const XMod2& S = *m.src;
    std::vector<Elem> k;
    for (std::size_t i = 0; i < S.L->order(); ++i) k.push_back(m.mu(S.L->at(i)));
    for (std::size_t i = 0; i < S.E->order(); ++i) k.push_back(m.psi(S.E->at(i)));
    for (std::size_t i = 0; i < S.G->order(); ++i) k.push_back(m.phi(S.G->at(i)));
    return k;
}

constexpr std::int64_t kNone = -1;

}  // namespace

Report lax_laws(const std::vector<LaxHomotopy>& cells, const Q1& Q, const LaxLawCfg& cfg) {
    Report r;
    r.subject = "lax 2-groupoid laws";
    r.seed = cfg.run.seed;
    if (cells.empty()) {
        r.add(make_check("cells", true, "", "no cells"));
        return r;
    }
    const XMod2& A = *Q.base;
    const XMod2& B = *cells.front().f.tgt;
    require_finite(A, "lax_laws");
    require_finite(B, "lax_laws");
    const std::size_t N = cells.size(), n = A.G->order(), nL = B.L->order();
    r.probe = "exhaustive over " + std::to_string(N) + " cells";
    int jobs = cfg.run.jobs;
    auto nm = [&](std::int64_t i) { return i < 0 ? std::string("<none>") : cells[static_cast<std::size_t>(i)].name; };

    // Bases and cell lookup.
    std::map<std::vector<Elem>, std::size_t> base_id;
    auto base_of = [&](const Morph& m, bool insert) -> std::int64_t {
        auto key = morph_table(m);
        auto it = base_id.find(key);
        if (it != base_id.end()) return static_cast<std::int64_t>(it->second);
        if (!insert) return kNone;
        std::size_t id = base_id.size();
        base_id.emplace(std::move(key), id);
        return static_cast<std::int64_t>(id);
    };
    std::vector<std::int64_t> base(N), tgt(N);
    for (std::size_t i = 0; i < N; ++i) base[i] = base_of(cells[i].f, true);
    for (std::size_t i = 0; i < N; ++i) tgt[i] = base_of(lax_target(cells[i]), false);
    auto cell_key = [&](std::int64_t b, const LaxHomotopy& h) {
        std::vector<Elem> k;
        Elem e;
        e.v = b;
        k.push_back(e);
        k.insert(k.end(), h.s.begin(), h.s.end());
        k.insert(k.end(), h.t.begin(), h.t.end());
        k.insert(k.end(), h.Pi.begin(), h.Pi.end());
        return k;
    };
    std::map<std::vector<Elem>, std::size_t> cell_id;
    for (std::size_t i = 0; i < N; ++i) cell_id.emplace(cell_key(base[i], cells[i]), i);
    auto find_cell = [&](const LaxHomotopy& h) -> std::int64_t {
        std::int64_t b = base_of(h.f, false);
        if (b == kNone) return kNone;
        auto it = cell_id.find(cell_key(b, h));
        return it == cell_id.end() ? kNone : static_cast<std::int64_t>(it->second);
    };
    std::vector<std::vector<std::size_t>> by_base(base_id.size()), by_tgt(base_id.size());
    for (std::size_t i = 0; i < N; ++i) {
        by_base[static_cast<std::size_t>(base[i])].push_back(i);
        if (tgt[i] != kNone) by_tgt[static_cast<std::size_t>(tgt[i])].push_back(i);
    }
    auto after = [&](std::size_t i) -> const std::vector<std::size_t>& {
        static const std::vector<std::size_t> none;
        return tgt[i] == kNone ? none : by_base[static_cast<std::size_t>(tgt[i])];
    };

    Tally valid("cells.valid"), closed_t("target.closed");
    for (std::size_t i = 0; i < N; ++i) {
        guarded(valid, nm(i), [&] { return lax_holds(cells[i]); });
        closed_t.add(tgt[i] != kNone, nm(i));
    }
    r.add(valid.check());
    r.add(closed_t.check());

    // Units per base.
    std::vector<std::int64_t> unit(base_id.size(), kNone);
    Tally upresent("units.present");
    for (std::size_t b = 0; b < by_base.size(); ++b) {
        unit[b] = find_cell(lax_unit(cells[by_base[b].front()].f));
        upresent.add(unit[b] != kNone, nm(by_base[b].front()));
    }
    r.add(upresent.check());

    // Concatenation table.
    std::vector<std::int64_t> C(N * N, kNone);
    std::vector<char> composable(N * N, 0);
    for (std::size_t i = 0; i < N; ++i)
        for (auto j : after(i)) composable[i * N + j] = 1;
    Tally closed_c("concat.closed");
    parallel_for(N, jobs, [&](std::uint64_t i) {
        for (auto j : after(i))
            guarded(closed_c, nm(i) + " ⊗ " + nm(j), [&] {
                C[i * N + j] = find_cell(lax_concat(cells[i], cells[j], Q));
                return C[i * N + j] != kNone;
            });
    });
    r.add(closed_c.check());
    auto cat = [&](std::int64_t i, std::int64_t j) -> std::int64_t {
        if (i < 0 || j < 0) return kNone;
        auto k = static_cast<std::size_t>(i) * N + static_cast<std::size_t>(j);
        return composable[k] ? C[k] : kNone;
    };

    Tally units("units"), inverses("inverses");
    std::vector<std::int64_t> inv(N, kNone);
    parallel_for(N, jobs, [&](std::uint64_t i) {
        auto si = static_cast<std::int64_t>(i);
        std::int64_t u0 = unit[static_cast<std::size_t>(base[i])];
        std::int64_t u1 = tgt[i] == kNone ? kNone : unit[static_cast<std::size_t>(tgt[i])];
        units.add(u0 != kNone && u1 != kNone && cat(u0, si) == si && cat(si, u1) == si, nm(si));
        guarded(inverses, nm(si), [&] {
            inv[i] = find_cell(lax_invert(cells[i], Q));
            return inv[i] != kNone && cat(si, inv[i]) == u0 && cat(inv[i], si) == u1;
        });
    });
    r.add(units.check());
    r.add(inverses.check());

    Tally assoc("associativity");
    parallel_for(N, jobs, [&](std::uint64_t i) {
        auto si = static_cast<std::int64_t>(i);
        for (auto j : after(i))
            for (auto k : after(j)) {
                auto sj = static_cast<std::int64_t>(j), sk = static_cast<std::int64_t>(k);
                std::int64_t lhs = cat(cat(si, sj), sk), rhs = cat(si, cat(sj, sk));
                assoc.add(lhs != kNone && lhs == rhs, nm(si) + " | " + nm(sj) + " | " + nm(sk));
            }
    });
    r.add(assoc.check());

    if (!cfg.twocells) return r;

    // 2-cells: (cell, code) with code the base-|L'| digits of k̂ over G.
    std::size_t K = 1;
    for (std::size_t g = 0; g < n; ++g) {
        if (K > 1'000'000 / nL) throw GroupError("lax_laws: 2-cell space exceeds cap");
        K *= nL;
    }
    auto decode = [&](std::size_t c) {
        std::vector<Elem> k(n);
        for (std::size_t g = n; g-- > 0;) {
            k[g] = B.L->at(c % nL);
            c /= nL;
        }
        return k;
    };
    auto encode = [&](const std::vector<Elem>& k) {
        std::size_t c = 0;
        for (const auto& x : k) c = c * nL + B.L->index_of(x);
        return c;
    };
    std::vector<std::size_t> Lmul(nL * nL), Linv(nL);
    for (std::size_t a = 0; a < nL; ++a) {
        Linv[a] = B.L->index_of(B.L->inv(B.L->at(a)));
        for (std::size_t b = 0; b < nL; ++b) Lmul[a * nL + b] = B.L->index_of(B.L->mul(B.L->at(a), B.L->at(b)));
    }
    auto kmul = [&](std::size_t a, std::size_t b) {
        std::size_t c = 0, p = 1;
        for (std::size_t g = 0; g < n; ++g, a /= nL, b /= nL, p *= nL) c += p * Lmul[(a % nL) * nL + b % nL];
        return c;
    };
    auto kinv = [&](std::size_t a) {
        std::size_t c = 0, p = 1;
        for (std::size_t g = 0; g < n; ++g, a /= nL, p *= nL) c += p * Linv[a % nL];
        return c;
    };
    // Right whiskering acts on k̂ by ŝ_u: k̂(g) ↦ ŝ_u(g)⁻¹ ▷′ k̂(g).
    std::vector<std::size_t> SR(N * K);
    parallel_for(N, jobs, [&](std::uint64_t u) {
        for (std::size_t c = 0; c < K; ++c) {
            auto k = decode(c);
            for (std::size_t g = 0; g < n; ++g) k[g] = B.sec(B.E->inv(cells[u].s[g]), k[g]);
            SR[u * K + c] = encode(k);
        }
    });
    // Cross-check the tabulated action against lax_whisker_right on one 2-cell per pair.
    Tally wr_op("whisker.right.op"), wl_op("whisker.left.op");
    parallel_for(N, jobs, [&](std::uint64_t i) {
        LaxTwoFold k{cells[i], decode((i * 7919) % K)};
        for (auto u : after(i)) {
            guarded(wr_op, nm(i) + " ⊗ " + nm(u), [&] {
                LaxTwoFold w = lax_whisker_right(k, cells[u], Q);
                return find_cell(w.h) == cat(i, u) && encode(w.k) == SR[u * K + (i * 7919) % K];
            });
        }
        for (auto u : by_tgt[static_cast<std::size_t>(base[i])]) {
            guarded(wl_op, nm(u) + " ⊗ " + nm(i), [&] {
                LaxTwoFold w = lax_whisker_left(cells[u], k, Q);
                return find_cell(w.h) == cat(u, i) && w.k == k.k;
            });
        }
    });
    r.add(wr_op.check());
    r.add(wl_op.check());

    std::vector<std::int64_t> KT(N * K, kNone);
    Tally kclosed("twofold.closed"), kvalid("twofold.valid");
    parallel_for(N, jobs, [&](std::uint64_t i) {
        for (std::size_t c = 0; c < K; ++c) {
            std::string w = nm(i) + " k#" + std::to_string(c);
            guarded(kclosed, w, [&] {
                KT[i * K + c] = find_cell(lax_twofold_target(LaxTwoFold{cells[i], decode(c)}, Q));
                return KT[i * K + c] != kNone;
            });
            std::int64_t t = KT[i * K + c];
            kvalid.add(t != kNone && base[static_cast<std::size_t>(t)] == base[i] &&
                           tgt[static_cast<std::size_t>(t)] == tgt[i],
                       w);
        }
    });
    r.add(kclosed.check());
    r.add(kvalid.check());
    auto kt = [&](std::int64_t i, std::size_t c) -> std::int64_t {
        return i < 0 ? kNone : KT[static_cast<std::size_t>(i) * K + c];
    };

    Tally vert("vertical.target"), vinv("vertical.inverse");
    parallel_for(N, jobs, [&](std::uint64_t i) {
        auto si = static_cast<std::int64_t>(i);
        for (std::size_t c = 0; c < K; ++c) {
            std::string w = nm(si) + " k#" + std::to_string(c);
            vinv.add(kt(kt(si, c), kinv(c)) == si, w);
            for (std::size_t c2 = 0; c2 < K; ++c2) vert.add(kt(si, kmul(c, c2)) == kt(kt(si, c), c2), w + " ⋄ #" + std::to_string(c2));
        }
    });
    r.add(vinv.check());
    r.add(vert.check());

    Tally wr("whisker.right.target"), wrf("whisker.right.functorial"), wra("whisker.right.assoc");
    Tally wl("whisker.left.target"), wlf("whisker.left.functorial"), wla("whisker.left.assoc");
    Tally comm("whisker.commute"), inter("interchange");
    parallel_for(N, jobs, [&](std::uint64_t i) {
        auto si = static_cast<std::int64_t>(i);
        for (std::size_t c = 0; c < K; ++c) {
            std::int64_t h2 = kt(si, c);
            std::string w0 = nm(si) + " k#" + std::to_string(c);
            for (auto u : after(i)) {
                auto su = static_cast<std::int64_t>(u);
                std::string w = w0 + " ⊗ " + nm(su);
                std::int64_t hu = cat(si, su);
                std::size_t cu = SR[u * K + c];
                wr.add(hu != kNone && kt(hu, cu) == cat(h2, su), w);
                for (std::size_t c2 = 0; c2 < K; ++c2)
                    wrf.add(SR[u * K + kmul(c, c2)] == kmul(cu, SR[u * K + c2]) && kt(hu, cu) == cat(h2, su), w);
                for (auto v : after(u)) {
                    auto sv = static_cast<std::int64_t>(v);
                    std::int64_t uv = cat(su, sv);
                    bool ok = uv != kNone && cat(si, uv) == cat(hu, sv) &&
                              SR[static_cast<std::size_t>(uv) * K + c] == SR[v * K + cu];
                    wra.add(ok, w + " ⊗ " + nm(sv));
                }
                // Interchange with every 2-cell k₂: u ⇒ u₂.
                if (cfg.interchange)
                    for (std::size_t c2 = 0; c2 < K; ++c2) {
                        std::int64_t u2 = kt(su, c2);
                        std::int64_t lbase = hu, rbase = hu;
                        bool ok = u2 != kNone && kt(hu, cu) == cat(h2, su) && kt(hu, c2) == cat(si, u2);
                        std::size_t lc = 0, rc = 0;
                        if (ok) {
                            lc = kmul(cu, c2);
                            rc = kmul(c2, SR[static_cast<std::size_t>(u2) * K + c]);
                        }
                        inter.add(ok && lbase == rbase && lc == rc && kt(lbase, lc) == kt(rbase, rc),
                                  w + " | k#" + std::to_string(c2));
                    }
            }
            for (auto u : by_tgt[static_cast<std::size_t>(base[i])]) {
                auto su = static_cast<std::int64_t>(u);
                std::string w = nm(su) + " ⊗ " + w0;
                std::int64_t uh = cat(su, si);
                wl.add(uh != kNone && kt(uh, c) == cat(su, h2), w);
                for (std::size_t c2 = 0; c2 < K; ++c2)
                    wlf.add(kt(uh, kmul(c, c2)) == kt(kt(uh, c), c2) && kt(uh, c) == cat(su, h2), w);
                for (auto v : by_tgt[static_cast<std::size_t>(base[u])]) {
                    auto sv = static_cast<std::int64_t>(v);
                    std::int64_t vu = cat(sv, su);
                    wla.add(vu != kNone && cat(vu, si) == cat(sv, uh), nm(sv) + " ⊗ " + w);
                }
                for (auto v : after(i)) {
                    auto sv = static_cast<std::int64_t>(v);
                    std::int64_t hv = cat(si, sv);
                    comm.add(uh != kNone && hv != kNone && cat(uh, sv) == cat(su, hv), w + " ⊗ " + nm(sv));
                }
            }
        }
    });
    r.add(wr.check());
    r.add(wrf.check());
    r.add(wra.check());
    r.add(wl.check());
    r.add(wlf.check());
    r.add(wla.check());
    r.add(comm.check());
    if (cfg.interchange) r.add(inter.check());
    return r;
}

LaxHomotopy fail_case_lax() {
    auto A = fixtures::fix_a();
    auto B = fixtures::fix_b();
    Morph f = fixtures::fail_map(A, B);
    LaxHomotopy h = lax_unit(f);
    for (std::size_t g = 0; g < A->G->order(); ++g) h.s[g] = Elem(A->G->at(g).v);
    h.name = "(s,t,Π)";
    return h;
}

}  // namespace xm
