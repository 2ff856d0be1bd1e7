#include "xm/homotopy.hpp"

#include <map>
#include <mutex>

#include "xm/fixtures.hpp"

namespace xm {

namespace {

// Target-side shorthand: ▷ on E and L, ▷′, {,} and δ of one 2-crossed module.
struct Ops {
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
    Elem gE(const Elem& g, const Elem& e) const { return A.actE(g, e); }
    Elem gL(const Elem& g, const Elem& l) const { return A.actL(g, l); }
    Elem d(const Elem& l) const { return A.delta(l); }
    Elem b(const Elem& e) const { return A.bd(e); }
    Elem lf(const Elem& e, const Elem& f) const { return A.lift(e, f); }
    Elem sec(const Elem& e, const Elem& l) const { return A.sec(e, l); }
};

template <class... V>
auto doms(const V&... v) {
    return std::array<const std::vector<Elem>*, sizeof...(V)>{&v...};
}

Elem letter_word(std::int32_t l) { return Elem::word({l}); }

// Words evaluated letter by letter in a group, from per-letter images.
struct WordEval {
    GroupP H;
    std::vector<Elem> pos, neg;

    Elem operator()(const Elem& w) const {
        Elem x = H->id();
        for (auto l : w.w) x = H->mul(x, l > 0 ? pos[static_cast<std::size_t>(l - 1)] : neg[static_cast<std::size_t>(-l - 1)]);
        return x;
    }
};

WordEval word_eval(GroupP H, std::vector<Elem> pos) {
    WordEval e{std::move(H), std::move(pos), {}};
    for (const auto& x : e.pos) e.neg.push_back(e.H->inv(x));
    return e;
}

ProbeCfg light_probe() {
    ProbeCfg p;
    p.word_depth = 2;
    p.word_samples = 0;
    p.int_radius = 3;
    p.enum_limit = 200;
    p.big_samples = 40;
    return p;
}

void require_base(const Morph& expected, const Morph& got, const char* what) {
    Probes p = source_probes(*expected.src, light_probe());
    if (!same_morph(expected, got, p)) throw GroupError(std::string(what) + ": base-mismatch");
}

}  // namespace

Probes source_probes(const XMod2& S, const ProbeCfg& cfg) {
    Probes p;
    p.L = S.L->probes(cfg);
    p.E = S.E->probes(cfg);
    p.G = S.G->probes(cfg);
    p.complete = S.finite() && p.L.size() == S.L->order() && p.E.size() == S.E->order() &&
                 p.G.size() == S.G->order();
    return p;
}

std::shared_ptr<const FreeGroup> free_base(const XMod2& S) { return std::dynamic_pointer_cast<const FreeGroup>(S.G); }

std::shared_ptr<const FreeGroup> require_free(const XMod2& S) {
    auto F = free_base(S);
    if (!F) throw GroupError("source-not-free: " + S.name + " has no free bottom group");
    return F;
}

Fn extend_derivation(const std::shared_ptr<const FreeGroup>& F, const Hom& phi, const XModP& A,
                     std::vector<Elem> basis) {
    if (basis.size() != F->rank()) throw GroupError("extend_derivation: basis table has the wrong size");
    auto H = std::make_shared<Semidirect>(A->G, A->E, A->actE);
    std::vector<Elem> pos;
    for (std::size_t i = 0; i < F->rank(); ++i) pos.push_back(T2(phi(F->gen(i)), basis[i]));
    auto ev = word_eval(H, std::move(pos));
    return [ev](const Elem& w) { return ev(w)[1]; };
}

Homotopy unit_homotopy(const Morph& f) {
    Homotopy h;
    h.f = f;
    auto A = f.tgt;
    h.s = [A](const Elem&) { return A->E->id(); };
    h.t = [A](const Elem&) { return A->L->id(); };
    if (auto F = free_base(*f.src)) h.sb.assign(F->rank(), A->E->id());
    h.name = "1_" + f.name;
    return h;
}

Homotopy make_homotopy(const Morph& f, std::vector<Elem> sb, Fn t, std::string name) {
    auto F = require_free(*f.src);
    Homotopy h;
    h.f = f;
    h.s = extend_derivation(F, f.phi, f.tgt, sb);
    h.sb = std::move(sb);
    h.t = std::move(t);
    h.name = std::move(name);
    return h;
}

Homotopy make_homotopy(const Morph& f, Fn s, Fn t, std::string name) {
    Homotopy h;
    h.f = f;
    h.s = std::move(s);
    h.t = std::move(t);
    if (auto F = free_base(*f.src))
        for (std::size_t i = 0; i < F->rank(); ++i) h.sb.push_back(h.s(F->gen(i)));
    h.name = std::move(name);
    return h;
}

Morph homotopy_target(const Homotopy& h) {
    auto S = h.f.src;
    auto A = h.f.tgt;
    Hom mu = h.f.mu, psi = h.f.psi, phi = h.f.phi;
    Fn s = h.s, t = h.t;
    return Morph{S, A,
                 Hom{S->L, A->L, [=](const Elem& l) { return A->L->mul(mu(l), t(S->delta(l))); }, {}, "mu'"},
                 Hom{S->E, A->E,
                     [=](const Elem& a) { return A->E->mul(A->E->mul(psi(a), s(S->bd(a))), A->delta(t(a))); }, {},
                     "psi'"},
                 Hom{S->G, A->G, [=](const Elem& g) { return A->G->mul(phi(g), A->bd(s(g))); }, {}, "phi'"},
                 h.f.name + "'"};
}

Morph esc_morphism(const Homotopy& h, const XModP& P) {
    auto S = h.f.src;
    Hom mu = h.f.mu, psi = h.f.psi, phi = h.f.phi;
    Fn s = h.s, t = h.t;
    return Morph{S, P, Hom{S->L, P->L, [=](const Elem& l) { return T2(mu(l), t(S->delta(l))); }, {}, "i3"},
                 Hom{S->E, P->E, [=](const Elem& a) { return T3(psi(a), s(S->bd(a)), t(a)); }, {}, "i2"},
                 Hom{S->G, P->G, [=](const Elem& g) { return T2(phi(g), s(g)); }, {}, "i1"}, "H(" + h.name + ")"};
}

namespace {

// The defining identities, shared by the report and the fail-fast check.
struct QuadEqs {
    const Homotopy& h;
    const XMod2& S;
    Ops o;

    bool derivation(const Elem& g, const Elem& k) const {
        Elem lhs = h.s(S.G->mul(g, k));
        return lhs == o.mE(o.gE(o.iG(h.f.phi(k)), h.s(g)), h.s(k));
    }
    bool product(const Elem& a, const Elem& b) const {
        Elem psb = h.f.psi(b), sda = h.s(S.bd(a)), sdb = h.s(S.bd(b));
        Elem x = o.mL(o.lf(psb, o.gE(h.f.phi(S.G->inv(S.bd(b))), o.iE(sda))), h.t(a));
        Elem rhs = o.mL(o.sec(o.iE(o.mE(psb, sdb)), x), h.t(b));
        return h.t(S.E->mul(a, b)) == rhs;
    }
    bool product_alt(const Elem& a, const Elem& b) const {
        Elem psbi = o.iE(h.f.psi(b)), sda = h.s(S.bd(a)), sdb = h.s(S.bd(b));
        Elem x = o.mL(o.iL(o.lf(psbi, o.iE(sda))), o.sec(psbi, h.t(a)));
        Elem rhs = o.mL(o.sec(o.iE(sdb), x), h.t(b));
        return h.t(S.E->mul(a, b)) == rhs;
    }
    bool equivariance(const Elem& g, const Elem& a) const {
        Elem ph = h.f.phi(g), sg = h.s(g), sda = h.s(S.bd(a)), psa = h.f.psi(a);
        Elem x1 = o.gL(ph, o.sec(o.mE(sg, o.iE(sda)), o.iL(o.lf(o.iE(psa), o.iE(sg)))));
        Elem x2 = o.gL(ph, o.lf(sg, o.mE(o.iE(sda), o.iE(psa))));
        Elem x3 = o.gL(o.mG(ph, o.b(sg)), h.t(a));
        return h.t(S.actE(g, a)) == o.mL(x1, x2, x3);
    }
    bool peiffer(const Elem& a, const Elem& b) const {
        Elem pa = h.f.psi(a), pb = h.f.psi(b);
        Elem ea = o.mE(pa, h.s(S.bd(a)), o.d(h.t(a)));
        Elem eb = o.mE(pb, h.s(S.bd(b)), o.d(h.t(b)));
        return h.t(S.peiffer(a, b)) == o.mL(o.iL(o.lf(pa, pb)), o.lf(ea, eb));
    }
};

}  // namespace

Report is_quadratic_derivation(const Homotopy& h, const VerifyCfg& cfg, bool with_esc) {
    const XMod2& S = *h.f.src;
    const XMod2& A = *h.f.tgt;
    Report r;
    r.subject = "quadratic derivation " + (h.name.empty() ? h.f.name : h.name);
    r.seed = cfg.run.seed;
    r.probe = show_probe(cfg, S);
    Probes p = source_probes(S, cfg.probe);
    QuadEqs q{h, S, Ops{A}};
    auto sG = [&](const Elem& x) { return S.G->show(x); };
    auto sE = [&](const Elem& x) { return S.E->show(x); };
    auto sGG = [&](const Elem& a, const Elem& b) { return sG(a) + "," + sG(b); };
    auto sEE = [&](const Elem& a, const Elem& b) { return sE(a) + "," + sE(b); };
    auto sGE = [&](const Elem& a, const Elem& b) { return sG(a) + "," + sE(b); };
    const auto& run = cfg.run;
    r.add(forall<Elem>("derivation", doms(p.G, p.G), [&](const Elem& a, const Elem& b) { return q.derivation(a, b); },
                       sGG, run, p.complete));
    r.add(forall<Elem>("t.product", doms(p.E, p.E), [&](const Elem& a, const Elem& b) { return q.product(a, b); }, sEE,
                       run, p.complete));
    r.add(forall<Elem>("t.product_alt", doms(p.E, p.E),
                       [&](const Elem& a, const Elem& b) { return q.product_alt(a, b); }, sEE, run, p.complete));
    r.add(forall<Elem>("t.equivariance", doms(p.G, p.E),
                       [&](const Elem& g, const Elem& a) { return q.equivariance(g, a); }, sGE, run, p.complete));
    r.add(forall<Elem>("t.peiffer", doms(p.E, p.E), [&](const Elem& a, const Elem& b) { return q.peiffer(a, b); }, sEE,
                       run, p.complete));
    if (auto F = free_base(S)) {
        Check c;
        c.id = "basis";
        for (std::size_t i = 0; i < F->rank(); ++i) {
            ++c.tested;
            if (i >= h.sb.size() || h.s(F->gen(i)) != h.sb[i]) {
                ++c.failures;
                c.witnesses.push_back(F->basis()[i]);
            }
        }
        c.pass = c.failures == 0;
        r.add(c);
    }
    r.absorb(xmod_map_verify(homotopy_target(h), cfg), "target.");
    if (with_esc) r.absorb(xmod_map_verify(esc_morphism(h, path_space(h.f.tgt).total), cfg), "esc.");
    return r;
}

bool quadratic_holds(const Homotopy& h, const Probes& p) {
    const XMod2& S = *h.f.src;
    QuadEqs q{h, S, Ops{*h.f.tgt}};
    for (const auto& a : p.G)
        for (const auto& b : p.G)
            if (!q.derivation(a, b)) return false;
    for (const auto& a : p.E)
        for (const auto& b : p.E)
            if (!q.product(a, b)) return false;
    for (const auto& g : p.G)
        for (const auto& a : p.E)
            if (!q.equivariance(g, a)) return false;
    for (const auto& a : p.E)
        for (const auto& b : p.E)
            if (!q.peiffer(a, b)) return false;
    return true;
}

bool same_morph(const Morph& a, const Morph& b, const Probes& p) {
    for (const auto& x : p.L)
        if (a.mu(x) != b.mu(x)) return false;
    for (const auto& x : p.E)
        if (a.psi(x) != b.psi(x)) return false;
    for (const auto& x : p.G)
        if (a.phi(x) != b.phi(x)) return false;
    return true;
}

bool same_homotopy(const Homotopy& a, const Homotopy& b, const Probes& p) {
    if (!a.sb.empty() && !b.sb.empty()) {
        if (a.sb != b.sb) return false;
    } else {
        for (const auto& g : p.G)
            if (a.s(g) != b.s(g)) return false;
    }
    for (const auto& e : p.E)
        if (a.t(e) != b.t(e)) return false;
    return true;
}

// ------------------------------------------------------------------ ω

Fn omega_recursive(const Homotopy& h1, const Homotopy& h2) {
    auto A = h1.f.tgt;
    Hom phi = h1.f.phi, phi2 = h2.f.phi;
    Fn s = h1.s, s2 = h2.s;
    // ω(g⁻¹) from ω(g).
    auto inv_rule = [=](const Elem& g, const Elem& wg) {
        Ops o{*A};
        Elem x = o.gL(phi(g), o.lf(s(g), o.mE(s2(g), o.iE(o.d(wg)))));
        return o.mL(x, o.gL(phi2(g), o.sec(s2(g), o.iL(wg))));
    };
    return [=](const Elem& w) {
        Ops o{*A};
        Elem wg = o.oL();
        std::vector<std::int32_t> prefix;
        for (auto l : w.w) {
            Elem g = Elem::word(prefix);
            Elem hh = letter_word(l);
            Elem wh = l > 0 ? o.oL() : inv_rule(letter_word(-l), o.oL());
            Elem ph = phi(hh);
            Elem inner = o.gL(o.iG(ph), o.lf(o.gE(ph, o.iE(s(hh))), o.mE(o.d(wg), o.iE(s2(g)))));
            inner = o.mL(inner, o.gL(o.iG(phi2(hh)), wg));
            wg = o.mL(wh, o.sec(o.iE(s2(hh)), inner));
            prefix.push_back(l);
        }
        return wg;
    };
}

Fn omega(const Homotopy& h1, const Homotopy& h2, bool checked) {
    auto F = require_free(*h1.f.src);
    auto A = h1.f.tgt;
    if (h1.sb.size() != F->rank() || h2.sb.size() != F->rank()) throw GroupError("omega: basis tables missing");
    auto dp = double_path_space(A);
    GroupP G2 = dp.outer.total->G;
    std::vector<Elem> pos;
    for (std::size_t i = 0; i < F->rank(); ++i) pos.push_back(tri0(*A, h1.f.phi(F->gen(i)), h1.sb[i], h2.sb[i], A->L->id()));
    auto ev = word_eval(G2, std::move(pos));
    if (!checked) return [ev](const Elem& w) { return ev(w)[1][1][1]; };
    Fn rec = omega_recursive(h1, h2);
    Hom phi = h1.f.phi;
    Fn s = h1.s, s2 = h2.s;
    return [=](const Elem& w) {
        Elem X = ev(w);
        const Elem& om = X[1][1][1];
        Ops o{*A};
        bool frame = X[0][0] == phi(w) && X[0][1] == s(w) && A->E->is_id(X[1][0]) &&
                     X[1][1][0] == o.mE(s2(w), o.iE(o.d(om)));
        if (!frame) throw DualMismatch("omega: triangle coordinates inconsistent at " + F->show(w));
        Elem r = rec(w);
        if (r != om)
            throw DualMismatch("omega: homomorphic " + A->L->show(om) + " vs recursive " + A->L->show(r) + " at " +
                               F->show(w));
        return om;
    };
}

Report omega_duality(const std::vector<std::pair<Homotopy, Homotopy>>& pairs, std::size_t words, int maxlen,
                     const RunCfg& run) {
    Report r;
    r.subject = "omega: homomorphic vs recursive";
    r.seed = run.seed;
    r.probe = std::to_string(words) + " words of length <= " + std::to_string(maxlen) + " per pair, " +
              std::to_string(pairs.size()) + " pairs";
    Tally agree("omega.dual"), frame("omega.frame");
    parallel_for(pairs.size(), run.jobs, [&](std::uint64_t i) {
        const auto& [h1, h2] = pairs[i];
        auto F = require_free(*h1.f.src);
        Fn hom = omega(h1, h2, false), rec = omega_recursive(h1, h2), checked = omega(h1, h2, true);
        Rng rng(splitmix64(run.seed ^ i));
        std::string nm = h1.name + " , " + h2.name;
        for (std::size_t n = 0; n < words; ++n) {
            Elem w = F->random_word(rng, maxlen);
            agree.add(hom(w) == rec(w), nm + " @ " + F->show(w));
            guarded(frame, nm + " @ " + F->show(w), [&] {
                checked(w);
                return true;
            });
        }
    });
    for (Check c : {agree.check(), frame.check()}) {
        c.exhaustive = false;
        r.add(c);
    }
    return r;
}

Elem theta(const Homotopy& h1, const Homotopy& h2, std::size_t b, std::size_t b1, std::size_t b2) {
    auto F = require_free(*h1.f.src);
    const XMod2& A = *h1.f.tgt;
    Ops o{A};
    const auto& s = h1.sb;
    const auto& s2 = h2.sb;
    auto phi = [&](const Elem& w) { return h1.f.phi(w); };
    auto phi2 = [&](const Elem& w) { return h2.f.phi(w); };
    Elem g = F->gen(b), g1 = F->gen(b1), g2 = F->gen(b2);
    Elem g12 = F->mul(g1, g2);
    Elem t1 = o.sec(o.iE(s2[b2]), o.lf(o.iE(s[b2]), o.gE(o.iG(phi(g2)), o.iE(s2[b1]))));
    Elem u = o.iE(o.mE(o.gE(o.iG(phi2(g2)), s2[b1]), s2[b2]));
    Elem v1 = o.lf(o.iE(o.mE(o.gE(o.iG(phi(g2)), s[b1]), s[b2])),
                   o.gE(o.mG(o.iG(phi(g12)), phi(g)), o.mE(s[b], s2[b], o.iE(s[b]))));
    Elem v2 = o.gL(o.mG(o.iG(phi2(g12)), phi(g)), o.lf(s[b], s2[b]));
    return o.mL(t1, o.sec(u, o.mL(v1, v2)));
}

Homotopy concat(const Homotopy& h1, const Homotopy& h2, bool check_base) {
    auto F = require_free(*h1.f.src);
    if (check_base) require_base(homotopy_target(h1), h2.f, "concat");
    const auto A = h1.f.tgt;
    std::vector<Elem> sb;
    for (std::size_t i = 0; i < F->rank(); ++i) sb.push_back(A->E->mul(h1.sb[i], h2.sb[i]));
    Fn om = omega(h1, h2);
    auto S = h1.f.src;
    Fn t1 = h1.t, t2 = h2.t, s2 = h2.s;
    Fn t = [=](const Elem& e) {
        Elem g = S->bd(e);
        return A->L->mul(A->L->mul(om(g), A->sec(A->E->inv(s2(g)), t1(e))), t2(e));
    };
    return make_homotopy(h1.f, std::move(sb), std::move(t), h1.name + "⊗" + h2.name);
}

Homotopy invert(const Homotopy& h) {
    auto F = require_free(*h.f.src);
    const auto A = h.f.tgt;
    auto S = h.f.src;
    Morph f2 = homotopy_target(h);
    std::vector<Elem> sb;
    for (const auto& x : h.sb) sb.push_back(A->E->inv(x));
    Homotopy hb;
    hb.f = f2;
    hb.s = extend_derivation(F, f2.phi, A, sb);
    hb.sb = std::move(sb);
    hb.name = "inv(" + h.name + ")";
    Fn om = omega(h, hb);
    Fn s = h.s, t = h.t;
    hb.t = [=](const Elem& e) {
        Elem g = S->bd(e);
        return A->L->mul(A->L->inv(om(g)), A->sec(s(g), A->L->inv(t(e))));
    };
    return hb;
}

// ------------------------------------------------------------------ 2-derivations

Fn extend_2derivation(const Homotopy& h, std::vector<Elem> kb) {
    auto F = require_free(*h.f.src);
    auto A = h.f.tgt;
    if (kb.size() != F->rank()) throw GroupError("extend_2derivation: basis table has the wrong size");
    auto GE = std::make_shared<Semidirect>(A->G, A->E, A->actE);
    auto G0 = std::make_shared<Semidirect>(
        GE, A->L, Action{GE, A->L, [A](const Elem& ge, const Elem& k) { return A->actL(ge[0], A->sec(ge[1], k)); }, "•"});
    std::vector<Elem> pos;
    for (std::size_t i = 0; i < F->rank(); ++i) pos.push_back(T2(T2(h.f.phi(F->gen(i)), h.sb[i]), kb[i]));
    auto ev = word_eval(G0, std::move(pos));
    return [ev](const Elem& w) { return ev(w)[1]; };
}

TwoFold make_twofold(const Homotopy& h, std::vector<Elem> kb) {
    TwoFold k;
    k.h = h;
    k.k = extend_2derivation(h, kb);
    k.kb = std::move(kb);
    return k;
}

Elem xi(const Homotopy& h, const Fn& k, const Elem& g, const Elem& h1, const Elem& i) {
    const XMod2& S = *h.f.src;
    Ops o{*h.f.tgt};
    auto phi = [&](const Elem& x) { return h.f.phi(x); };
    Elem inner = o.sec(h.s(g), o.iL(k(g)));
    inner = o.gL(o.mG(phi(S.G->inv(h1)), phi(g)), inner);
    inner = o.mL(o.sec(o.iE(h.s(h1)), inner), k(h1));
    return o.mL(o.sec(o.iE(h.s(i)), o.gL(o.iG(phi(i)), inner)), k(i));
}

Homotopy twofold_target(const TwoFold& k) {
    const auto A = k.h.f.tgt;
    auto S = k.h.f.src;
    std::vector<Elem> sb;
    for (std::size_t i = 0; i < k.kb.size(); ++i) sb.push_back(A->E->mul(k.h.sb[i], A->delta(k.kb[i])));
    Fn kk = k.k, t = k.h.t;
    Fn t2 = [=](const Elem& e) { return A->L->mul(A->L->inv(kk(S->bd(e))), t(e)); };
    return make_homotopy(k.h.f, std::move(sb), std::move(t2), k.h.name + "'");
}

TwoFold vertical(const TwoFold& k, const TwoFold& k2) {
    Probes p = source_probes(*k.h.f.src, light_probe());
    if (!same_homotopy(twofold_target(k), k2.h, p)) throw GroupError("vertical: endpoint-mismatch");
    const auto A = k.h.f.tgt;
    std::vector<Elem> kb;
    for (std::size_t i = 0; i < k.kb.size(); ++i) kb.push_back(A->L->mul(k.kb[i], k2.kb[i]));
    return make_twofold(k.h, std::move(kb));
}

TwoFold invert_twofold(const TwoFold& k) {
    const auto A = k.h.f.tgt;
    std::vector<Elem> kb;
    for (const auto& x : k.kb) kb.push_back(A->L->inv(x));
    return make_twofold(twofold_target(k), std::move(kb));
}

TwoFold whisker_right(const TwoFold& k, const Homotopy& u) {
    const auto A = k.h.f.tgt;
    std::vector<Elem> kb;
    for (std::size_t i = 0; i < k.kb.size(); ++i) kb.push_back(A->sec(A->E->inv(u.sb[i]), k.kb[i]));
    return make_twofold(concat(k.h, u), std::move(kb));
}

TwoFold whisker_left(const Homotopy& u, const TwoFold& k) { return make_twofold(concat(u, k.h), k.kb); }

Homotopy compose_left(const Morph& g, const Homotopy& h) {
    Homotopy r;
    r.f = compose(g, h.f);
    Hom psi = g.psi, mu = g.mu;
    Fn s = h.s, t = h.t;
    r.s = [psi, s](const Elem& x) { return psi(s(x)); };
    r.t = [mu, t](const Elem& x) { return mu(t(x)); };
    for (const auto& x : h.sb) r.sb.push_back(psi(x));
    r.name = g.name + "∘" + h.name;
    return r;
}

Homotopy compose_right(const Homotopy& h, const Morph& m) {
    Homotopy r;
    r.f = compose(h.f, m);
    Hom phi = m.phi, psi = m.psi;
    Fn s = h.s, t = h.t;
    r.s = [phi, s](const Elem& x) { return s(phi(x)); };
    r.t = [psi, t](const Elem& x) { return t(psi(x)); };
    if (auto F = free_base(*m.src))
        for (std::size_t i = 0; i < F->rank(); ++i) r.sb.push_back(r.s(F->gen(i)));
    r.name = h.name + "∘" + m.name;
    return r;
}

Report twofold_check(const TwoFold& k, const VerifyCfg& cfg) {
    const XMod2& S = *k.h.f.src;
    const XMod2& A = *k.h.f.tgt;
    Ops o{A};
    Report r;
    r.subject = "2-fold homotopy over " + k.h.name;
    r.seed = cfg.run.seed;
    r.probe = show_probe(cfg, S);
    Probes p = source_probes(S, cfg.probe);
    const auto& h = k.h;
    auto sG = [&](const Elem& x) { return S.G->show(x); };
    auto sGG = [&](const Elem& a, const Elem& b) { return sG(a) + "," + sG(b); };
    r.add(forall<Elem>("2der", doms(p.G, p.G),
                       [&](const Elem& g, const Elem& x) {
                           Elem rhs = o.mL(o.sec(o.iE(h.s(x)), o.gL(o.iG(h.f.phi(x)), k.k(g))), k.k(x));
                           return k.k(S.G->mul(g, x)) == rhs;
                       },
                       sGG, cfg.run, p.complete));
    r.add(forall<Elem>("inverse", doms(p.G),
                       [&](const Elem& g) {
                           return k.k(S.G->inv(g)) == o.gL(h.f.phi(g), o.sec(h.s(g), o.iL(k.k(g))));
                       },
                       sG, cfg.run, p.complete));
    std::vector<Elem> few(p.G.begin(), p.G.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(p.G.size(), 24)));
    r.add(forall<Elem>("xi", doms(few, few, few),
                       [&](const Elem& g, const Elem& x, const Elem& i) {
                           Elem w = S.G->mul(S.G->mul(S.G->inv(g), x), i);
                           return k.k(w) == xi(h, k.k, g, x, i);
                       },
                       [&](const Elem& a, const Elem& b, const Elem& c) { return sG(a) + "," + sG(b) + "," + sG(c); },
                       cfg.run, p.complete && few.size() == p.G.size()));
    Homotopy tg = twofold_target(k);
    r.add(forall<Elem>("target.pointwise", doms(p.G),
                       [&](const Elem& g) { return tg.s(g) == o.mE(h.s(g), o.d(k.k(g))); }, sG, cfg.run, p.complete));
    r.absorb(is_quadratic_derivation(tg, cfg, false), "target.");
    {
        Check c;
        c.id = "endpoints";
        c.tested = 1;
        c.pass = same_morph(homotopy_target(tg), homotopy_target(h), p);
        c.failures = c.pass ? 0 : 1;
        r.add(c);
    }
    return r;
}

// ------------------------------------------------------------------ laws

namespace {

// Value signature of a morphism on the probes, used to group cells by endpoints.
std::vector<Elem> morph_key(const Morph& m, const Probes& p) {
    std::vector<Elem> k;
    for (const auto& x : p.L) k.push_back(m.mu(x));
    for (const auto& x : p.E) k.push_back(m.psi(x));
    for (const auto& x : p.G) k.push_back(m.phi(x));
    return k;
}

bool all_id(const GroupP& L, const Fn& f, const std::vector<Elem>& xs) {
    for (const auto& x : xs)
        if (!L->is_id(f(x))) return false;
    return true;
}

}  // namespace

Report hom2_laws(const std::vector<Homotopy>& cells, const std::vector<TwoFold>& twocells, const LawCfg& cfg) {
    Report r;
    r.subject = "2-groupoid laws";
    r.seed = cfg.verify.run.seed;
    if (cells.empty() && twocells.empty()) {
        r.add(make_check("cells", true, "", "no cells"));
        return r;
    }
    const XMod2& S = cells.empty() ? *twocells.front().h.f.src : *cells.front().f.src;
    const XMod2& A = cells.empty() ? *twocells.front().h.f.tgt : *cells.front().f.tgt;
    r.probe = show_probe(cfg.verify, S);
    Probes p = source_probes(S, cfg.verify.probe);
    Probes pk = source_probes(S, light_probe());
    int jobs = cfg.verify.run.jobs;
    Ops o{A};
    auto nm = [](const Homotopy& h) { return h.name; };

    // Endpoint groups.
    std::map<std::vector<Elem>, std::vector<std::size_t>> by_base;
    std::vector<std::vector<Elem>> tgt_key(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        by_base[morph_key(cells[i].f, pk)].push_back(i);
        tgt_key[i] = morph_key(homotopy_target(cells[i]), pk);
    }
    auto after = [&](std::size_t i) -> const std::vector<std::size_t>& {
        static const std::vector<std::size_t> none;
        auto it = by_base.find(tgt_key[i]);
        return it == by_base.end() ? none : it->second;
    };

    Tally units("units"), omega_units("units.omega"), inverses("inverses"), inv_omega("inverses.omega"), valid("cells.valid");
    parallel_for(cells.size(), jobs, [&](std::uint64_t i) {
        const Homotopy& h = cells[i];
        guarded(valid, nm(h), [&] { return quadratic_holds(h, p); });
        Homotopy u0 = unit_homotopy(h.f), u1 = unit_homotopy(homotopy_target(h));
        guarded(units, nm(h), [&] {
            return same_homotopy(concat(h, u1), h, p) && same_homotopy(concat(u0, h), h, p);
        });
        guarded(omega_units, nm(h), [&] {
            return all_id(A.L, omega(u0, h), p.G) && all_id(A.L, omega(h, u1), p.G);
        });
        Homotopy hb = invert(h);
        guarded(inverses, nm(h), [&] {
            Homotopy a = concat(h, hb), b = concat(hb, h);
            return same_homotopy(a, u0, p) && same_homotopy(b, u1, p);
        });
        guarded(inv_omega, nm(h), [&] {
            Fn w1 = omega(h, hb), w2 = omega(hb, h);
            for (const auto& g : p.G)
                if (w2(g) != o.sec(o.iE(h.s(g)), w1(g))) return false;
            return true;
        });
    });
    r.add(valid.check());
    r.add(units.check());
    r.add(omega_units.check());
    r.add(inverses.check());
    r.add(inv_omega.check());

    // Composable triples, in a fixed order.
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (auto j : after(i))
            for (auto k : after(j)) triples.push_back({i, j, k});
    std::size_t total_triples = triples.size();
    if (cfg.max_triples && triples.size() > cfg.max_triples) {
        std::vector<std::array<std::size_t, 3>> pick;
        for (std::size_t n = 0; n < cfg.max_triples; ++n)
            pick.push_back(triples[splitmix64(cfg.verify.run.seed ^ n) % triples.size()]);
        triples = std::move(pick);
    }
    Tally assoc("associativity"), assoc_omega("associativity.omega");
    parallel_for(triples.size(), jobs, [&](std::uint64_t n) {
        const auto& [i, j, k] = triples[n];
        const Homotopy &a = cells[i], &b = cells[j], &c = cells[k];
        std::string w = nm(a) + " | " + nm(b) + " | " + nm(c);
        Homotopy ab = concat(a, b, false), bc = concat(b, c, false);
        guarded(assoc, w, [&] { return same_homotopy(concat(ab, c, false), concat(a, bc, false), p); });
        guarded(assoc_omega, w, [&] {
            Fn lhs = omega(a, bc), w1 = omega(ab, c), w2 = omega(a, b), w3 = omega(b, c);
            for (const auto& g : p.G) {
                Elem rhs = o.mL(w1(g), o.sec(o.iE(c.s(g)), w2(g)), o.iL(w3(g)));
                if (lhs(g) != rhs) return false;
            }
            return true;
        });
    });
    Check ca = assoc.check(), cp = assoc_omega.check();
    if (total_triples != triples.size()) {
        ca.exhaustive = cp.exhaustive = false;
        ca.note = cp.note = std::to_string(triples.size()) + " of " + std::to_string(total_triples) + " triples";
    }
    r.add(ca);
    r.add(cp);

    if (twocells.empty()) return r;

    // 2-cells grouped by their source homotopy.
    std::vector<std::vector<Elem>> kbase(twocells.size()), ktgt(twocells.size()), kend(twocells.size());
    auto hkey = [&](const Homotopy& h) {
        std::vector<Elem> key = h.sb;
        for (const auto& e : pk.E) key.push_back(h.t(e));
        auto mk = morph_key(h.f, pk);
        key.insert(key.end(), mk.begin(), mk.end());
        return key;
    };
    std::map<std::vector<Elem>, std::vector<std::size_t>> k_by_src;
    for (std::size_t i = 0; i < twocells.size(); ++i) {
        kbase[i] = hkey(twocells[i].h);
        ktgt[i] = hkey(twofold_target(twocells[i]));
        kend[i] = morph_key(homotopy_target(twocells[i].h), pk);
        k_by_src[kbase[i]].push_back(i);
    }

    Tally tvalid("twofold.valid"), vert("vertical.pointwise"), vunit("vertical.inverse");
    parallel_for(twocells.size(), jobs, [&](std::uint64_t i) {
        const TwoFold& k = twocells[i];
        std::string w = nm(k.h) + " k#" + std::to_string(i);
        guarded(tvalid, w, [&] {
            Homotopy tg = twofold_target(k);
            for (const auto& g : p.G)
                if (tg.s(g) != o.mE(k.h.s(g), o.d(k.k(g)))) return false;
            return quadratic_holds(tg, p) && same_morph(homotopy_target(tg), homotopy_target(k.h), pk);
        });
        guarded(vunit, w, [&] {
            TwoFold kv = vertical(k, invert_twofold(k));
            for (const auto& x : kv.kb)
                if (!A.L->is_id(x)) return false;
            return true;
        });
        auto it = k_by_src.find(ktgt[i]);
        if (it == k_by_src.end()) return;
        for (auto j : it->second) {
            const TwoFold& k2 = twocells[j];
            guarded(vert, w + " ⋄ #" + std::to_string(j), [&] {
                TwoFold kv = vertical(k, k2);
                for (const auto& g : p.G)
                    if (kv.k(g) != o.mL(k.k(g), k2.k(g))) return false;
                return same_homotopy(twofold_target(kv), twofold_target(k2), p);
            });
        }
    });
    r.add(tvalid.check());
    r.add(vunit.check());
    r.add(vert.check());

    // Whiskering: right by homotopies leaving the common target, left by those
    // arriving at the common base.
    std::map<std::vector<Elem>, std::vector<std::size_t>> by_target;
    for (std::size_t i = 0; i < cells.size(); ++i) by_target[tgt_key[i]].push_back(i);
    Tally wr_s("whisker.right.s"), wr_t("whisker.right.t"), wr_omega("whisker.right.omega");
    Tally wl_s("whisker.left.s"), wl_t("whisker.left.t"), wl_omega("whisker.left.omega");
    Tally func_r("whisker.right.functorial"), func_r2("whisker.right.assoc"), commute("whisker.commute");
    Tally inter("interchange");
    parallel_for(twocells.size(), jobs, [&](std::uint64_t i) {
        const TwoFold& k = twocells[i];
        Homotopy h2 = twofold_target(k);
        auto rit = by_base.find(kend[i]);
        auto lit = by_target.find(morph_key(k.h.f, pk));
        if (rit != by_base.end()) {
            for (auto ui : rit->second) {
                const Homotopy& u = cells[ui];
                std::string w = "k#" + std::to_string(i) + " ⊗ " + nm(u);
                TwoFold ku = whisker_right(k, u);
                Homotopy hu = concat(k.h, u, false), h2u = concat(h2, u, false);
                guarded(wr_s, w, [&] {
                    for (const auto& g : p.G)
                        if (o.mE(hu.s(g), o.d(ku.k(g))) != h2u.s(g)) return false;
                    return true;
                });
                guarded(wr_t, w, [&] {
                    for (const auto& e : p.E)
                        if (o.mL(o.iL(ku.k(S.bd(e))), hu.t(e)) != h2u.t(e)) return false;
                    return true;
                });
                guarded(wr_omega, w, [&] {
                    Fn w1 = omega(k.h, u), w2 = omega(h2, u);
                    for (const auto& g : p.G)
                        if (o.mL(o.iL(ku.k(g)), w1(g)) != o.mL(w2(g), o.sec(o.iE(u.s(g)), o.iL(k.k(g)))))
                            return false;
                    return true;
                });
                // (k ⋄ k') ⊗ u = (k ⊗ u) ⋄ (k' ⊗ u) for every k' leaving h'.
                auto kit = k_by_src.find(ktgt[i]);
                if (kit != k_by_src.end())
                    for (auto j : kit->second) {
                        guarded(func_r, w + " ⋄ #" + std::to_string(j), [&] {
                            TwoFold lhs = whisker_right(vertical(k, twocells[j]), u);
                            TwoFold rhs = vertical(ku, whisker_right(twocells[j], u));
                            return lhs.kb == rhs.kb;
                        });
                    }
                // k ⊗ (u ⊗ u') = (k ⊗ u) ⊗ u'.
                for (auto vi : after(ui)) {
                    const Homotopy& v = cells[vi];
                    guarded(func_r2, w + " ⊗ " + nm(v), [&] {
                        return whisker_right(k, concat(u, v, false)).kb == whisker_right(ku, v).kb;
                    });
                }
                // Interchange against every 2-cell leaving u.
                auto uk = k_by_src.find(hkey(u));
                if (cfg.check_interchange && uk != k_by_src.end())
                    for (auto j : uk->second) {
                        const TwoFold& k2 = twocells[j];
                        guarded(inter, w + " | #" + std::to_string(j), [&] {
                            Homotopy u2 = twofold_target(k2);
                            TwoFold lhs = vertical(ku, whisker_left(h2, k2));
                            TwoFold rhs = vertical(whisker_left(k.h, k2), whisker_right(k, u2));
                            for (std::size_t b = 0; b < k.kb.size(); ++b) {
                                Elem l = o.mL(o.sec(o.iE(u.sb[b]), k.kb[b]), k2.kb[b]);
                                Elem rr = o.mL(k2.kb[b], o.sec(o.iE(u2.sb[b]), k.kb[b]));
                                if (l != rr || lhs.kb[b] != l || rhs.kb[b] != rr) return false;
                            }
                            return same_homotopy(twofold_target(lhs), twofold_target(rhs), p);
                        });
                    }
            }
        }
        if (lit != by_target.end()) {
            for (auto ui : lit->second) {
                const Homotopy& u = cells[ui];
                std::string w = nm(u) + " ⊗ k#" + std::to_string(i);
                TwoFold uk = whisker_left(u, k);
                Homotopy uh = concat(u, k.h, false), uh2 = concat(u, h2, false);
                guarded(wl_s, w, [&] {
                    for (const auto& g : p.G)
                        if (o.mE(uh.s(g), o.d(uk.k(g))) != uh2.s(g)) return false;
                    return true;
                });
                guarded(wl_t, w, [&] {
                    for (const auto& e : p.E)
                        if (o.mL(o.iL(uk.k(S.bd(e))), uh.t(e)) != uh2.t(e)) return false;
                    return true;
                });
                guarded(wl_omega, w, [&] {
                    Fn w1 = omega(u, k.h), w2 = omega(u, h2);
                    for (const auto& g : p.G)
                        if (o.mL(o.iL(uk.k(g)), w1(g)) != o.mL(w2(g), o.iL(k.k(g)))) return false;
                    return true;
                });
                if (rit != by_base.end() && !rit->second.empty()) {
                    const Homotopy& v = cells[rit->second.front()];
                    guarded(commute, w + " ⊗ " + nm(v), [&] {
                        return whisker_right(uk, v).kb == whisker_left(u, whisker_right(k, v)).kb;
                    });
                }
            }
        }
    });
    for (Tally* t : {&wr_s, &wr_t, &wr_omega, &wl_s, &wl_t, &wl_omega, &func_r, &func_r2, &commute, &inter})
        r.add(t->check());
    return r;
}

// ------------------------------------------------------------------ non-symmetry

FailCase fail_case(int bound, const VerifyCfg& cfg) {
    FailCase out;
    auto A = fixtures::fix_a();
    auto B = fixtures::fix_b();
    Morph f = fixtures::fail_map(A, B);
    Morph f2 = fixtures::fail_target(A, B);

    Homotopy h;
    h.f = f;
    h.s = [](const Elem& g) { return Elem(g.v); };
    h.t = [](const Elem&) { return Elem(0); };
    h.name = "(s,t)";
    out.forward = is_quadratic_derivation(h, cfg);
    out.forward.subject = "forward homotopy " + A->name + " -> " + B->name;
    Ops o{*B};
    for (int g = 0; g < 2; ++g)
        for (int k = 0; k < 2; ++k) {
            Elem lhs = h.s(A->G->mul(Elem(g), Elem(k)));
            Elem rhs = o.mE(o.gE(o.iG(f.phi(Elem(k))), h.s(Elem(g))), h.s(Elem(k)));
            out.forward.add(make_check("derivation.case." + std::to_string(g) + std::to_string(k), lhs == rhs,
                                       "s=" + B->E->show(lhs) + " vs " + B->E->show(rhs),
                                       B->E->show(lhs) + " = " + B->E->show(rhs)));
        }
    Probes p = source_probes(*A, cfg.probe);
    out.forward.add(make_check("target", same_morph(homotopy_target(h), f2, p), "", "target is the trivial map"));

    // Reverse direction: a quadratic f'-derivation reaching f.
    out.reverse.subject = "reverse homotopy " + f2.name + " -> " + f.name;
    std::uint64_t tried = 0, found = 0;
    std::string witness;
    for (int x0 = -bound; x0 <= bound; ++x0)
        for (int x1 = -bound; x1 <= bound; ++x1) {
            ++tried;
            Homotopy r;
            r.f = f2;
            r.s = [x0, x1](const Elem& g) { return Elem(g.v == 0 ? x0 : x1); };
            r.t = [](const Elem&) { return Elem(0); };
            if (quadratic_holds(r, p) && same_morph(homotopy_target(r), f, p)) {
                ++found;
                if (witness.empty()) witness = "s(0)=" + std::to_string(x0) + ",s(1)=" + std::to_string(x1);
            }
        }
    out.reverse_found = found > 0;
    Check c;
    c.id = "reverse.search";
    c.tested = tried;
    c.failures = found;
    c.pass = found == 0;
    c.exhaustive = false;
    c.note = "not found within bounds s(0),s(1) in [" + std::to_string(-bound) + "," + std::to_string(bound) + "]";
    if (!witness.empty()) c.witnesses.push_back(witness);
    out.reverse.add(c);

    // With φ' trivial, s' is a homomorphism Z2 -> Z, so 2·s'(1) = s'(0) = 0; Z has
    // no 2-torsion, hence s'(1) = 0, while reaching φ(1) = 1 needs ∂s'(1) = 1.
    Hom twice = linear_hom(B->E, B->E, 2);
    bool torsion_free = twice.lin.kind == Hom::Linear::Mul && twice.lin.k != 0 &&
                        std::dynamic_pointer_cast<const IntegerGroup>(B->E) != nullptr;
    Elem forced = B->E->id();
    Elem need = B->G->mul(B->G->inv(f2.phi(Elem(1))), f.phi(Elem(1)));
    out.exact_obstruction = torsion_free && B->bd(forced) != need;
    out.reverse.add(make_check("reverse.exact", out.exact_obstruction, "",
                               "2x = 0 forces x = 0 in Z, and d(0) = 0 differs from the required 1"));
    return out;
}

}  // namespace xm
