#include "xm/suites.hpp"

#include <algorithm>

#include "xm/fixtures.hpp"

namespace xm {

namespace {

// Successor lists, computed by grouping cells on their base tables.
std::vector<std::vector<std::size_t>> successors(const std::vector<LaxHomotopy>& cells) {
    std::vector<std::vector<std::size_t>> out(cells.size());
    std::vector<std::size_t> rep;  // one representative cell per distinct base
    std::vector<std::size_t> base(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::size_t b = rep.size();
        for (std::size_t r = 0; r < rep.size(); ++r)
            if (same_lax(lax_unit(cells[rep[r]].f), lax_unit(cells[i].f))) b = r;
        if (b == rep.size()) rep.push_back(i);
        base[i] = b;
    }
    std::vector<std::vector<std::size_t>> by_base(rep.size());
    for (std::size_t i = 0; i < cells.size(); ++i) by_base[base[i]].push_back(i);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        LaxHomotopy u = lax_unit(lax_target(cells[i]));
        for (std::size_t r = 0; r < rep.size(); ++r)
            if (same_lax(lax_unit(cells[rep[r]].f), u)) out[i] = by_base[r];
    }
    return out;
}

ProbeCfg strict_probe(const VerifyCfg& cfg) {
    ProbeCfg p = cfg.probe;
    p.word_depth = std::min(p.word_depth, 3);
    p.word_samples = std::min(p.word_samples, 50);
    return p;
}

}  // namespace

std::vector<LaxHomotopy> all_lax_cells(const XModP& A, const XModP& B, int jobs, std::uint64_t* space) {
    std::vector<LaxHomotopy> out;
    std::uint64_t n = 0;
    for (const auto& f : enumerate_morphisms(A, B)) {
        LaxSearch s = lax_search(f, jobs);
        n += s.space;
        for (auto& h : s.found) out.push_back(std::move(h));
    }
    if (space) *space = n;
    return out;
}

Report suite_axioms(const VerifyCfg& cfg) {
    Report r;
    r.subject = "2-crossed module axioms";
    r.seed = cfg.run.seed;
    for (const auto& A : {fixtures::fix_c(fixtures::Z2t()), fixtures::fix_c(fixtures::S3()), fixtures::fix_d(),
                          fixtures::fix_b()})
        r.absorb(verify_two_crossed(*A, cfg), A->name);
    return r;
}

Report suite_pathspace(const VerifyCfg& cfg) {
    Report r;
    r.subject = "path spaces";
    r.seed = cfg.run.seed;
    for (const auto& A : {fixtures::fix_c(fixtures::S3()), fixtures::fix_d()})
        r.absorb(path_space_report(path_space(A), cfg), A->name);
    return r;
}

Report suite_oracle(const VerifyCfg& cfg) {
    Report r;
    auto D = fixtures::fix_d();
    r.subject = "closed forms against inherited structure on " + D->name;
    r.seed = cfg.run.seed;
    r.absorb(double_faces_report(double_path_space(D), cfg), "double");
    Triangle T = triangle_space(D);
    r.absorb(triangle_report(T, cfg), "triangle");
    r.absorb(triangle_pullback_report(T, cfg), "triangle.pullback");
    r.absorb(disk_report(disk_space(D), cfg), "disk");
    r.absorb(tetra_report(tetra_group(D), cfg), "tetra");
    return r;
}

Report suite_omega(const XModP& A, const XModP& B, std::size_t words, const VerifyCfg& cfg) {
    Q1 Q = q1(A);
    auto cells = all_lax_cells(A, B, cfg.run.jobs);
    auto next = successors(cells);
    std::vector<Homotopy> strict;
    for (const auto& h : cells) strict.push_back(lax_to_strict(h, Q));
    std::vector<std::pair<Homotopy, Homotopy>> pairs;
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (auto j : next[i]) pairs.emplace_back(strict[i], strict[j]);
    Report r = omega_duality(pairs, words, 8, cfg.run);
    r.subject += " over " + Q.total->name + " -> " + B->name;
    return r;
}

Report suite_laws(const XModP& A, const XModP& B, std::size_t strict_triples, const VerifyCfg& cfg) {
    Q1 Q = q1(A);
    std::uint64_t space = 0;
    auto cells = all_lax_cells(A, B, cfg.run.jobs, &space);
    LaxLawCfg lc;
    lc.run = cfg.run;
    Report r = lax_laws(cells, Q, lc);
    r.subject = "2-groupoid laws " + A->name + " -> " + B->name;
    r.probe = std::to_string(cells.size()) + " valid cells of " + std::to_string(space) + " tuples";
    if (strict_triples) {
        std::vector<Homotopy> strict;
        for (const auto& h : cells) strict.push_back(lax_to_strict(h, Q));
        LawCfg sc;
        sc.verify = cfg;
        sc.verify.probe = strict_probe(cfg);
        sc.max_triples = strict_triples;
        r.absorb(hom2_laws(strict, {}, sc), "strict");
    }
    return r;
}

Report suite_counterexample(const VerifyCfg& cfg) {
    FailCase fc = fail_case(100, cfg);
    Report r;
    r.subject = "asymmetric homotopy fixA -> fixB";
    r.seed = cfg.run.seed;
    r.absorb(fc.forward, "forward");
    r.absorb(fc.reverse);
    r.absorb(lax_validate(fail_case_lax(), cfg), "forward.lax");
    r.add(make_check("statement", fc.forward.passed() && !fc.reverse_found && fc.exact_obstruction, "",
                     "forward homotopy validates; reverse not found within bounds; 2x = 0 forces x = 0 in Z, "
                     "so no reverse derivation exists"));
    return r;
}

Report suite_bijection(const VerifyCfg& cfg) {
    Report r;
    r.subject = "lax/strict correspondence";
    r.seed = cfg.run.seed;
    ProbeCfg sp = strict_probe(cfg);
    auto Z2 = fixtures::fix_c(fixtures::Z2t());
    auto D = fixtures::fix_d();
    std::vector<std::pair<XModP, XModP>> pairs{
        {Z2, D}, {fixtures::fix_a(), Z2}, {Z2, fixtures::fix_c(fixtures::S3())}};
    for (const auto& [A, B] : pairs) {
        Q1 Q = q1(A);
        std::uint64_t space = 0, lax_n = 0, strict_n = 0, bad = 0;
        std::vector<std::string> wit;
        for (const auto& f : enumerate_morphisms(A, B)) {
            Bijection b = lax_strict_bijection(f, Q, sp, cfg.run.jobs);
            space += b.space;
            lax_n += b.lax_accepted;
            strict_n += b.strict_accepted;
            bad += b.disagreements;
            for (auto& w : b.witnesses)
                if (wit.size() < 3) wit.push_back(w);
        }
        Check c;
        c.id = "acceptance." + A->name + "_" + B->name;
        c.tested = space;
        c.failures = bad;
        c.pass = bad == 0 && lax_n == strict_n;
        c.witnesses = wit;
        c.note = std::to_string(lax_n) + " lax, " + std::to_string(strict_n) + " strict accepted";
        r.add(c);
    }

    // Operations over fixC_Z2 -> fixD.
    Q1 Q = q1(Z2);
    auto cells = all_lax_cells(Z2, D, cfg.run.jobs);
    auto next = successors(cells);
    Probes p = source_probes(*Q.total, sp);
    std::vector<Homotopy> strict;
    for (const auto& h : cells) strict.push_back(lax_to_strict(h, Q));
    auto nm = [&](std::size_t i) { return cells[i].name; };
    Tally target("ops.target"), inv("ops.invert"), cat("ops.concat"), ktarget("ops.twofold_target"),
        vert("ops.vertical"), wr("ops.whisker_right"), wl("ops.whisker_left"), comp("ops.compose_strict");
    auto twofolds = [&](std::size_t i) { return lax_twofold_search(cells[i], Q); };
    auto autos = enumerate_morphisms(D, D);
    parallel_for(cells.size(), cfg.run.jobs, [&](std::uint64_t i) {
        const LaxHomotopy& h = cells[i];
        const Homotopy& s = strict[i];
        guarded(target, nm(i), [&] { return same_morph(strictify(lax_target(h), Q), homotopy_target(s), p); });
        guarded(inv, nm(i), [&] { return same_homotopy(lax_to_strict(lax_invert(h, Q), Q), invert(s), p); });
        for (auto j : next[i])
            guarded(cat, nm(i) + " ⊗ " + nm(j), [&] {
                return same_homotopy(lax_to_strict(lax_concat(h, cells[j], Q), Q), concat(s, strict[j]), p);
            });
        auto ks = twofolds(i);
        for (const auto& k : ks) {
            TwoFold sk = lax_twofold_to_strict(k, Q);
            guarded(ktarget, nm(i), [&] {
                return same_homotopy(lax_to_strict(lax_twofold_target(k, Q), Q), twofold_target(sk), p);
            });
        }
        // One vertical composite and one whisker of each kind per cell.
        const LaxTwoFold& k = ks[i % ks.size()];
        TwoFold sk = lax_twofold_to_strict(k, Q);
        LaxHomotopy h2 = lax_twofold_target(k, Q);
        auto k2s = lax_twofold_search(h2, Q);
        LaxTwoFold k2{h2, k2s[(i * 5) % k2s.size()].k};
        guarded(vert, nm(i), [&] {
            TwoFold lv = lax_twofold_to_strict(lax_vertical(k, k2, Q), Q);
            return lv.kb == vertical(sk, lax_twofold_to_strict(k2, Q)).kb;
        });
        if (!next[i].empty()) {
            std::size_t u = next[i][i % next[i].size()];
            guarded(wr, nm(i) + " ⊗ " + nm(u), [&] {
                LaxTwoFold lw = lax_whisker_right(k, cells[u], Q);
                TwoFold sw = whisker_right(sk, strict[u]);
                return lw.k == sw.kb && same_homotopy(lax_to_strict(lw.h, Q), sw.h, p);
            });
        }
        for (std::size_t u = 0; u < cells.size(); ++u) {
            auto nu = next[u];
            if (std::find(nu.begin(), nu.end(), i) == nu.end()) continue;
            guarded(wl, nm(u) + " ⊗ " + nm(i), [&] {
                LaxTwoFold lw = lax_whisker_left(cells[u], k, Q);
                TwoFold sw = whisker_left(strict[u], sk);
                return lw.k == sw.kb && same_homotopy(lax_to_strict(lw.h, Q), sw.h, p);
            });
            break;
        }
        // Post-composition with automorphisms of the target.
        const Morph& a = autos[i % autos.size()];
        guarded(comp, nm(i) + " by " + a.name, [&] {
            return same_homotopy(lax_to_strict(lax_compose_left(a, h), Q), compose_left(a, s), p);
        });
    });
    for (Tally* t : {&target, &inv, &cat, &ktarget, &vert, &wr, &wl, &comp}) r.add(t->check());
    return r;
}

Report suite_kernel(const VerifyCfg& cfg) {
    Report r;
    r.subject = "kernel presentation relations";
    r.seed = cfg.run.seed;
    for (const auto& A : {fixtures::fix_c(fixtures::Z2t()), fixtures::fix_c(fixtures::S3())})
        r.absorb(kernel_relations_check(q1(A), cfg), A->G->name);
    return r;
}

Report suite_homotopy_groups(const VerifyCfg& cfg) {
    Report r;
    r.subject = "homotopy groups";
    r.seed = cfg.run.seed;
    struct Case {
        XModP A;
        std::array<std::string, 3> want;
    };
    std::vector<Case> cases{{fixtures::fix_b(), {"1", "1", "1"}},
                            {fixtures::fix_d(), {"1", "Z2", "1"}},
                            {fixtures::bottom_only(fixtures::Z2t()), {"Z2", "1", "1"}},
                            {fixtures::bottom_only(fixtures::S3()), {"S3", "1", "1"}}};
    for (const auto& c : cases) {
        HomotopyGroups h = homotopy_groups(*c.A);
        std::array<std::string, 3> got{h.d1, h.d2, h.d3};
        for (int i = 0; i < 3; ++i)
            r.add(make_check(c.A->name + ".pi" + std::to_string(i + 1), got[i] == c.want[i], "got " + got[i],
                             got[i] + " (" + h.method + ")"));
    }
    return r;
}

Report suite_identities(const VerifyCfg& cfg) {
    auto D = fixtures::fix_d();
    Report r;
    r.subject = "lifting identities and lifted actions on " + D->name;
    r.seed = cfg.run.seed;
    r.absorb(lifting_identities(*D, cfg), "");
    r.absorb(verify_secondary_crossed(*D, cfg), "");
    r.absorb(lifted_action_cases(*D, cfg), "");
    return r;
}

}  // namespace xm
