// xmc: command-line front end for the 2-crossed module toolkit.
#include <chrono>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "xm/fixtures.hpp"
#include "xm/model.hpp"
#include "xm/suites.hpp"

#ifndef XM_DEFAULT_MODEL
#define XM_DEFAULT_MODEL "data/corpus.xmd"
#endif

using namespace xm;
using nlohmann::json;

namespace {

struct Opts {
    std::string model = XM_DEFAULT_MODEL;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int probe_depth = -1;
    long samples = -1;
    std::string format = "text";
    int jobs = 0;
};

// Extra key/value output next to a report (tables, sizes, group names).
struct Extra {
    std::vector<std::pair<std::string, std::string>> rows;
    void put(std::string k, std::string v) { rows.emplace_back(std::move(k), std::move(v)); }
};

std::string join(const std::vector<std::string>& v, const std::string& sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string quote(const std::string& s) {
    return s.find_first_of(" \t\"") == std::string::npos && !s.empty() ? s : "\"" + s + "\"";
}

void show_lax(Extra& x, const std::string& key, const LaxHomotopy& h) {
    const auto& A = *h.f.src;
    const auto& B = *h.f.tgt;
    std::vector<std::string> s, t, pi;
    for (const auto& v : h.s) s.push_back(quote(B.E->show(v)));
    for (const auto& v : h.t) t.push_back(quote(B.L->show(v)));
    for (const auto& v : h.Pi) pi.push_back(quote(B.L->show(v)));
    x.put(key + ".over", h.f.name.empty() ? A.name + " -> " + B.name : h.f.name);
    x.put(key + ".s", join(s));
    x.put(key + ".t", join(t));
    x.put(key + ".pi", join(pi));
}

void show_morph(Extra& x, const std::string& key, const Morph& f) {
    auto row = [&](const Hom& h) {
        if (!h.dom->finite()) return std::string(h.label.empty() ? "(infinite domain)" : h.label);
        std::vector<std::string> v;
        for (const auto& e : h.dom->elements()) v.push_back(quote(h.cod->show(h(e))));
        return join(v);
    };
    x.put(key + ".mu", row(f.mu));
    x.put(key + ".psi", row(f.psi));
    x.put(key + ".phi", row(f.phi));
}

std::string carrier_size(const GroupP& g) {
    return g->finite() ? std::to_string(g->order()) : "infinite (" + g->kind() + ")";
}

struct Runner {
    Opts o;
    std::vector<std::string> argv;
    Model m;
    VerifyCfg cfg;

    void load() {
        m = load_model(o.model);
        cfg.run.seed = o.seed_given ? o.seed : (m.has_seed ? m.seed : cfg.run.seed);
        cfg.probe.seed = cfg.run.seed;
        if (o.probe_depth >= 0) cfg.probe.word_depth = o.probe_depth;
        if (o.samples >= 0) {
            cfg.run.samples = static_cast<std::uint64_t>(o.samples);
            cfg.probe.word_samples = static_cast<int>(o.samples);
        }
        cfg.run.jobs = o.jobs;
    }

    int emit(const Report& r, const Extra& x, double ms, const std::string& probes) {
        bool pass = r.passed();
        if (o.format == "json") {
            json j;
            j["command"] = join(argv);
            j["model"] = o.model;
            j["seed"] = cfg.run.seed;
            j["probes"] = probes;
            j["wall_ms"] = ms;
            j["report"] = r.to_json();
            json d = json::object();
            for (const auto& [k, v] : x.rows) d[k] = v;
            j["data"] = d;
            j["pass"] = pass;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "command: " << join(argv) << "\n";
            std::cout << "model: " << o.model << "\n";
            std::cout << "probes: " << probes << "\n";
            for (const auto& [k, v] : x.rows) std::cout << k << ": " << v << "\n";
            std::cout << r.to_text();
            std::cout << "wall-time: " << std::fixed << std::setprecision(1) << ms << " ms\n";
        }
        return pass ? 0 : 1;
    }

    template <class F>
    int run(F&& body, const XMod2* probe_subject = nullptr) {
        auto t0 = std::chrono::steady_clock::now();
        Extra x;
        Report r = body(x);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::string probes = probe_subject ? show_probe(cfg, *probe_subject)
                                           : "depth " + std::to_string(cfg.probe.word_depth) + ", " +
                                                 std::to_string(cfg.probe.word_samples) + " words, radius " +
                                                 std::to_string(cfg.probe.int_radius);
        if (r.seed == 0) r.seed = cfg.run.seed;
        return emit(r, x, ms, probes);
    }

    bool is_lax(const std::string& n) const { return m.lax.count(n) != 0; }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-crossed modules, path spaces and homotopies"};
    app.require_subcommand(1);
    app.fallthrough();
    Opts o;
    app.add_option("-m,--model", o.model, "model file");
    auto* seed_opt = app.add_option("--seed", o.seed, "random seed (defaults to the model's seed)");
    app.add_option("--probe-depth", o.probe_depth, "maximal free word depth for probes");
    app.add_option("--samples", o.samples, "sample count for sampled quantifiers");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", o.jobs, "threads (1 = serial reference path, 0 = OpenMP default)");

    std::string a1, a2, a3;

    auto* verify = app.add_subcommand("verify", "check the 2-crossed module axioms");
    verify->add_option("xmod", a1)->required();
    auto* pi = app.add_subcommand("pi", "homotopy groups");
    pi->add_option("xmod", a1)->required();
    auto* pathspace = app.add_subcommand("pathspace", "path space, projections, inclusion");
    pathspace->add_option("xmod", a1)->required();
    auto* q1c = app.add_subcommand("q1", "the free cofibrant replacement and its kernel relations");
    q1c->add_option("xmod", a1)->required();

    auto* homotopy = app.add_subcommand("homotopy", "quadratic derivations");
    homotopy->require_subcommand(1);
    for (const char* n : {"check", "invert"}) homotopy->add_subcommand(n)->add_option("cell", a1)->required();
    {
        auto* c = homotopy->add_subcommand("compose");
        c->add_option("first", a1)->required();
        c->add_option("second", a2)->required();
    }

    auto* twofold = app.add_subcommand("twofold", "quadratic 2-derivations");
    twofold->require_subcommand(1);
    for (const char* n : {"check", "target"}) twofold->add_subcommand(n)->add_option("cell", a1)->required();
    {
        auto* c = twofold->add_subcommand("compose");
        c->add_option("first", a1)->required();
        c->add_option("second", a2)->required();
    }

    auto* lax = app.add_subcommand("lax", "lax homotopies over a finite source");
    lax->require_subcommand(1);
    for (const char* n : {"check", "target", "invert"}) lax->add_subcommand(n)->add_option("cell", a1)->required();
    {
        auto* c = lax->add_subcommand("compose");
        c->add_option("first", a1)->required();
        c->add_option("second", a2)->required();
        auto* e = lax->add_subcommand("equiv");
        e->add_option("f", a1)->required();
        e->add_option("g", a2)->required();
        lax->add_subcommand("search")->add_option("morph", a1)->required();
    }

    auto* laws = app.add_subcommand("laws", "named check suites");
    laws->add_option("suite", a1, "axioms|pathspace|oracle|omega|laws|counterexample|bijection|kernel|pi|identities")
        ->required()
        ->check(CLI::IsMember({"axioms", "pathspace", "oracle", "omega", "laws", "counterexample", "bijection",
                               "kernel", "pi", "identities"}));
    laws->add_option("source", a2, "source xmod for omega/laws")->default_val("fixC_Z2");
    laws->add_option("target", a3, "target xmod for omega/laws")->default_val("fixD");
    std::size_t words = 500, triples = 300;
    laws->add_option("--words", words, "random words per pair (omega)");
    laws->add_option("--triples", triples, "sampled strict triples (laws)");

    auto* counter = app.add_subcommand("counterexample", "the asymmetric homotopy and its reverse search");
    int bound = 100;
    counter->add_option("--bound", bound, "reverse search range");
    app.add_subcommand("emit", "print the model in canonical form");

    CLI11_PARSE(app, argc, argv);
    o.seed_given = seed_opt->count() > 0;

    Runner R;
    R.o = o;
    R.argv.assign(argv, argv + argc);
    R.argv[0] = "xmc";

    try {
        R.load();
        auto& m = R.m;
        auto& cfg = R.cfg;

        if (app.got_subcommand("emit")) {
            std::cout << emit_model(m);
            return 0;
        }
        if (verify->parsed()) {
            const auto& X = m.xmod(a1);
            return R.run([&](Extra& x) {
                for (auto [k, g] : {std::pair{"L", X->L}, {"E", X->E}, {"G", X->G}})
                    x.put(std::string("order.") + k, carrier_size(g));
                return verify_two_crossed(*X, cfg);
            }, X.get());
        }
        if (pi->parsed()) {
            const auto& X = m.xmod(a1);
            return R.run([&](Extra& x) {
                HomotopyGroups h = homotopy_groups(*X);
                x.put("pi1", h.d1);
                x.put("pi2", h.d2);
                x.put("pi3", h.d3);
                x.put("method", h.method);
                Report r;
                r.subject = "homotopy groups of " + X->name;
                r.add(make_check("computed", true, "", h.method));
                return r;
            });
        }
        if (pathspace->parsed()) {
            const auto& X = m.xmod(a1);
            return R.run([&](Extra& x) {
                PathSpace P = path_space(X);
                for (auto [k, g] : {std::pair{"L", P.total->L}, {"E", P.total->E}, {"G", P.total->G}})
                    x.put(std::string("order.") + k, carrier_size(g));
                return path_space_report(P, cfg);
            }, X.get());
        }
        if (q1c->parsed()) {
            const auto& X = m.xmod(a1);
            return R.run([&](Extra& x) {
                const Q1& Q = m.q1_of(X);
                x.put("basis", std::to_string(Q.F->rank()) + " generators");
                Report r;
                r.subject = "Q1(" + X->name + ")";
                r.absorb(kernel_relations_check(Q, cfg), "kernel");
                r.absorb(verify_two_crossed(*Q.total, cfg), "axioms");
                r.absorb(xmod_map_verify(Q.proj, cfg), "proj");
                return r;
            });
        }
        if (homotopy->parsed()) {
            auto q_of = [&](const LaxHomotopy& h) -> const Q1& { return m.q1_of(h.f.src); };
            auto strict_of = [&](const std::string& n) {
                if (R.is_lax(n)) {
                    const auto& h = m.lax_cell(n);
                    return lax_to_strict(h, q_of(h));
                }
                return m.homotopy(n);
            };
            if (homotopy->got_subcommand("check"))
                return R.run([&](Extra&) { return is_quadratic_derivation(strict_of(a1), cfg); });
            if (homotopy->got_subcommand("invert"))
                return R.run([&](Extra& x) {
                    Homotopy h = invert(strict_of(a1));
                    show_morph(x, "target", homotopy_target(h));
                    return is_quadratic_derivation(h, cfg);
                });
            return R.run([&](Extra& x) {
                Homotopy h = concat(strict_of(a1), strict_of(a2));
                show_morph(x, "target", homotopy_target(h));
                return is_quadratic_derivation(h, cfg);
            });
        }
        if (twofold->parsed()) {
            const auto& k = m.twofold(a1);
            const Q1& Q = m.q1_of(k.h.f.src);
            if (twofold->got_subcommand("check"))
                return R.run([&](Extra&) { return twofold_check(lax_twofold_to_strict(k, Q), cfg); });
            if (twofold->got_subcommand("target"))
                return R.run([&](Extra& x) {
                    LaxHomotopy t = lax_twofold_target(k, Q);
                    show_lax(x, "target", t);
                    Report r = lax_validate(t, cfg);
                    r.add(make_check("agrees_with_strict",
                                     same_homotopy(lax_to_strict(t, Q),
                                                   twofold_target(lax_twofold_to_strict(k, Q)),
                                                   source_probes(*Q.total, cfg.probe))));
                    return r;
                });
            const auto& k2 = m.twofold(a2);
            return R.run([&](Extra& x) {
                LaxTwoFold v = lax_vertical(k, k2, Q);
                std::vector<std::string> ks;
                for (const auto& e : v.k) ks.push_back(quote(v.h.f.tgt->L->show(e)));
                x.put("k", join(ks));
                return twofold_check(lax_twofold_to_strict(v, Q), cfg);
            });
        }
        if (lax->parsed()) {
            if (lax->got_subcommand("search")) {
                const auto& f = m.morph(a1);
                return R.run([&](Extra& x) {
                    LaxSearch s = lax_search(f, cfg.run.jobs);
                    x.put("space", std::to_string(s.space));
                    x.put("found", std::to_string(s.found.size()));
                    for (std::size_t i = 0; i < std::min<std::size_t>(s.found.size(), 5); ++i)
                        show_lax(x, "cell" + std::to_string(i), s.found[i]);
                    Report r;
                    r.subject = "lax search over " + f.name;
                    Check c;
                    c.id = "search";
                    c.tested = s.space;
                    c.note = std::to_string(s.found.size()) + " valid";
                    r.add(c);
                    return r;
                });
            }
            if (lax->got_subcommand("equiv")) {
                const auto& f = m.morph(a1);
                const auto& g = m.morph(a2);
                return R.run([&](Extra& x) {
                    LaxEquivalence e;
                    Report r = lax_equivalence_search(f, g, cfg, &e);
                    if (r.passed()) {
                        show_lax(x, "to_gf", e.to_gf);
                        show_lax(x, "to_fg", e.to_fg);
                    }
                    return r;
                });
            }
            const auto& h = m.lax_cell(a1);
            const Q1& Q = m.q1_of(h.f.src);
            if (lax->got_subcommand("check"))
                return R.run([&](Extra&) {
                    Report r = lax_validate(h, cfg);
                    r.absorb(lax_target_report(h, Q, cfg));
                    r.add(make_check("strict_side", strict_side_holds(h, Q, source_probes(*Q.total, cfg.probe))));
                    return r;
                });
            if (lax->got_subcommand("target"))
                return R.run([&](Extra& x) {
                    show_morph(x, "target", lax_target(h));
                    return lax_target_report(h, Q, cfg);
                });
            auto finish = [&](const LaxHomotopy& out, const Homotopy& strict, Extra& x) {
                show_lax(x, "result", out);
                Report r = lax_validate(out, cfg);
                r.add(make_check("agrees_with_strict", same_homotopy(lax_to_strict(out, Q), strict,
                                                                     source_probes(*Q.total, cfg.probe))));
                return r;
            };
            if (lax->got_subcommand("invert"))
                return R.run([&](Extra& x) { return finish(lax_invert(h, Q), invert(lax_to_strict(h, Q)), x); });
            const auto& h2 = m.lax_cell(a2);
            return R.run([&](Extra& x) {
                return finish(lax_concat(h, h2, Q), concat(lax_to_strict(h, Q), lax_to_strict(h2, Q)), x);
            });
        }
        if (laws->parsed()) {
            return R.run([&](Extra&) {
                if (a1 == "axioms") return suite_axioms(cfg);
                if (a1 == "pathspace") return suite_pathspace(cfg);
                if (a1 == "oracle") return suite_oracle(cfg);
                if (a1 == "omega") return suite_omega(m.xmod(a2), m.xmod(a3), words, cfg);
                if (a1 == "laws") return suite_laws(m.xmod(a2), m.xmod(a3), triples, cfg);
                if (a1 == "counterexample") return suite_counterexample(cfg);
                if (a1 == "bijection") return suite_bijection(cfg);
                if (a1 == "kernel") return suite_kernel(cfg);
                if (a1 == "pi") return suite_homotopy_groups(cfg);
                return suite_identities(cfg);
            });
        }
        if (counter->parsed()) {
            return R.run([&](Extra& x) {
                FailCase fc = fail_case(bound, cfg);
                x.put("reverse.range", "[" + std::to_string(-bound) + ", " + std::to_string(bound) + "]");
                x.put("reverse.found", fc.reverse_found ? "yes" : "no");
                Report r;
                r.subject = "asymmetric homotopy fixA -> fixB";
                r.absorb(fc.forward, "forward");
                r.absorb(fc.reverse);
                r.add(make_check("statement", fc.forward.passed() && !fc.reverse_found && fc.exact_obstruction, "",
                                 "forward homotopy validates; reverse not found within bounds; 2x = 0 forces "
                                 "x = 0 in Z, so no reverse derivation exists"));
                return r;
            });
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GroupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
