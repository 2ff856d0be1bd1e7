// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "xm/fixtures.hpp"
#include "xm/suites.hpp"

using namespace xm;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class F>
double timed(F&& f) {
    auto t0 = Clock::now();
    f();
    return seconds_since(t0);
}

bool all_exhaustive(const Report& r) {
    for (const auto& c : r.checks)
        if (!c.exhaustive) return false;
    return true;
}

std::string fails(const Report& r) {
    std::string s;
    for (const auto& id : r.failed_ids()) s += (s.empty() ? " failed: " : ", ") + id;
    return s;
}

int failures = 0;

void line(int n, const std::string& what, bool pass, double secs, const std::string& detail) {
    std::printf("criterion %2d %-34s %s  %7.2fs  %s\n", n, what.c_str(), pass ? "PASS" : "FAIL", secs, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

}  // namespace

int main() {
    VerifyCfg cfg;
    auto Z2 = fixtures::fix_c(fixtures::Z2t());
    auto S3 = fixtures::fix_c(fixtures::S3());
    auto D = fixtures::fix_d();
    auto B = fixtures::fix_b();

    {
        bool ok = true;
        std::string d;
        double total = 0;
        for (const auto& A : {Z2, S3, D, B}) {
            Report r;
            double t = timed([&] { r = verify_two_crossed(*A, cfg); });
            total += t;
            bool exh = all_exhaustive(r);
            bool good = r.passed() && t < 10 && (A == B || exh);
            ok = ok && good;
            d += A->name + (exh ? " exhaustive " : " probes ") + std::to_string(t).substr(0, 5) + "s" + fails(r) + "; ";
        }
        line(1, "2-crossed module axioms", ok, total, d);
    }
    {
        bool ok = true;
        std::string d;
        double total = 0;
        for (const auto& A : {S3, D}) {
            Report r;
            double t = timed([&] { r = path_space_report(path_space(A), cfg); });
            total += t;
            bool good = r.passed() && all_exhaustive(r) && r.find("pr0_incl.L") && r.find("pr1_incl.L") && r.find("surjective.pr0") &&
                        r.find("axioms.lifting.peiffer") && t < 60;
            ok = ok && good;
            d += A->name + " " + std::to_string(r.checks.size()) + " checks" + fails(r) + "; ";
        }
        line(2, "path space axioms", ok, total, d);
    }
    {
        Report r;
        double t = timed([&] { r = suite_oracle(cfg); });
        line(3, "closed forms on fixD", r.passed(), t, std::to_string(r.checks.size()) + " checks" + fails(r));
    }
    {
        Report r;
        double t = timed([&] { r = suite_omega(Z2, D, 500, cfg); });
        line(4, "omega homomorphic vs recursive", r.passed(), t, r.probe + fails(r));
    }
    {
        Report r;
        double t = timed([&] { r = suite_laws(Z2, D, 100, cfg); });
        line(5, "2-groupoid laws", r.passed() && t < 300, t, r.probe + fails(r));
    }
    {
        Report r;
        double t = timed([&] { r = suite_counterexample(cfg); });
        const Check* s = r.find("statement");
        line(6, "asymmetric homotopy", r.passed() && s, t, s ? s->note : "no statement" + fails(r));
    }
    {
        Report r;
        double t = timed([&] { r = suite_bijection(cfg); });
        line(7, "lax/strict correspondence", r.passed(), t, std::to_string(r.checks.size()) + " checks" + fails(r));
    }
    {
        Report r;
        double t = timed([&] { r = suite_kernel(cfg); });
        line(8, "kernel relations", r.passed(), t, std::to_string(r.checks.size()) + " checks" + fails(r));
    }
    {
        bool ok = true;
        double worst = 0;
        Report r;
        double t = timed([&] { r = suite_homotopy_groups(cfg); });
        for (const auto& A : {B, D, fixtures::bottom_only(fixtures::S3())})
            worst = std::max(worst, timed([&] { homotopy_groups(*A); }));
        ok = r.passed() && worst < 1;
        line(9, "homotopy groups", ok, t, "slowest case " + std::to_string(worst).substr(0, 6) + "s" + fails(r));
    }
    {
        Report r;
        double t = timed([&] { r = suite_identities(cfg); });
        line(10, "identity suites on fixD", r.passed() && all_exhaustive(r), t,
             std::to_string(r.checks.size()) + " checks" + fails(r));
    }
    std::printf("acceptance: %s\n", failures ? "FAIL" : "PASS");
    return failures ? 1 : 0;
}
