#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "xm/report.hpp"

namespace xm {

struct RunCfg {
    int jobs = 0;  // 0 = OpenMP default, 1 = serial reference path, n = n threads
    std::uint64_t cap = 20'000'000;  // quantify exhaustively up to this many tuples
    std::uint64_t samples = 200'000;
    std::uint64_t seed = 20240611;
    std::size_t max_witnesses = 3;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace detail {

template <std::size_t N>
struct TupleSpace {
    std::array<std::uint64_t, N> size{};
    std::uint64_t total = 1;
    bool exhaustive = true;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;

    std::array<std::uint64_t, N> decode(std::uint64_t i) const {
        std::array<std::uint64_t, N> idx{};
        if (exhaustive) {
            for (std::size_t k = N; k-- > 0;) {
                idx[k] = i % size[k];
                i /= size[k];
            }
        } else {
            for (std::size_t k = 0; k < N; ++k) idx[k] = splitmix64(seed ^ (i * N + k) * 0x2545f4914f6cdd1dULL) % size[k];
        }
        return idx;
    }
};

template <class T, std::size_t N, class F, std::size_t... I>
decltype(auto) apply_at(F& f, const std::array<const std::vector<T>*, N>& d, const std::array<std::uint64_t, N>& idx,
                        std::index_sequence<I...>) {
    return f((*d[I])[idx[I]]...);
}

// Keep the K smallest failing indices; merging two such lists stays deterministic.
inline void keep_smallest(std::vector<std::uint64_t>& v, std::uint64_t x, std::size_t k) {
    if (v.size() < k) {
        v.insert(std::upper_bound(v.begin(), v.end(), x), x);
    } else if (k > 0 && x < v.back()) {
        v.pop_back();
        v.insert(std::upper_bound(v.begin(), v.end(), x), x);
    }
}

}  // namespace detail

inline int effective_threads(int jobs) {
#ifdef _OPENMP
    return jobs <= 0 ? omp_get_max_threads() : jobs;
#else
    (void)jobs;
    return 1;
#endif
}

// Run f(i) for i in [0,n); parallel unless jobs == 1.
template <class F>
void parallel_for(std::uint64_t n, int jobs, F&& f) {
    if (jobs == 1) {
        for (std::uint64_t i = 0; i < n; ++i) f(i);
        return;
    }
    auto sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64) num_threads(effective_threads(jobs))
    for (std::int64_t i = 0; i < sn; ++i) f(static_cast<std::uint64_t>(i));
}

// Universally quantified law over a product of finite domains. Exhaustive
// when the product fits under cfg.cap, otherwise seeded sampling. `complete`
// records whether the domains themselves cover their carriers.
template <class T, std::size_t N, class Pred, class Show>
Check forall(std::string id, const std::array<const std::vector<T>*, N>& doms, Pred pred, Show show,
             const RunCfg& cfg, bool complete = true) {
    detail::TupleSpace<N> sp;
    bool overflow = false;
    for (std::size_t k = 0; k < N; ++k) {
        sp.size[k] = doms[k]->size();
        if (sp.size[k] == 0) {
            Check c;
            c.id = std::move(id);
            c.note = "empty domain";
            return c;
        }
        if (sp.total > std::numeric_limits<std::uint64_t>::max() / sp.size[k]) overflow = true;
        else sp.total *= sp.size[k];
    }
    sp.exhaustive = !overflow && sp.total <= cfg.cap;
    sp.count = sp.exhaustive ? sp.total : cfg.samples;
    sp.seed = splitmix64(cfg.seed ^ std::hash<std::string>{}(id));

    std::vector<std::uint64_t> fails;
    std::uint64_t nfail = 0;
    std::string err;
    auto run_one = [&](std::uint64_t i) -> bool {
        auto idx = sp.decode(i);
        return detail::apply_at<T, N>(pred, doms, idx, std::make_index_sequence<N>{});
    };

    if (cfg.jobs == 1) {
        for (std::uint64_t i = 0; i < sp.count; ++i) {
            bool ok;
            try {
                ok = run_one(i);
            } catch (const std::exception& ex) {
                ok = false;
                if (err.empty()) err = ex.what();
            }
            if (!ok) {
                ++nfail;
                detail::keep_smallest(fails, i, cfg.max_witnesses);
            }
        }
    } else {
        auto n = static_cast<std::int64_t>(sp.count);
#pragma omp parallel num_threads(effective_threads(cfg.jobs))
        {
            std::vector<std::uint64_t> local;
            std::uint64_t lfail = 0;
            std::string lerr;
#pragma omp for schedule(dynamic, 1024) nowait
            for (std::int64_t i = 0; i < n; ++i) {
                bool ok;
                try {
                    ok = run_one(static_cast<std::uint64_t>(i));
                } catch (const std::exception& ex) {
                    ok = false;
                    if (lerr.empty()) lerr = ex.what();
                }
                if (!ok) {
                    ++lfail;
                    detail::keep_smallest(local, static_cast<std::uint64_t>(i), cfg.max_witnesses);
                }
            }
#pragma omp critical(xm_forall_merge)
            {
                nfail += lfail;
                for (auto x : local) detail::keep_smallest(fails, x, cfg.max_witnesses);
                if (err.empty()) err = lerr;
            }
        }
    }

    Check c;
    c.id = std::move(id);
    c.tested = sp.count;
    c.failures = nfail;
    c.pass = nfail == 0;
    c.exhaustive = sp.exhaustive && complete;
    for (auto i : fails) {
        auto idx = sp.decode(i);
        c.witnesses.push_back(detail::apply_at<T, N>(show, doms, idx, std::make_index_sequence<N>{}));
    }
    if (!err.empty()) c.note = "exception: " + err;
    return c;
}

// Accumulates a law over many cells; thread-safe.
struct Tally {
    std::string id;
    std::uint64_t tested = 0, failures = 0;
    std::vector<std::string> witnesses;
    std::string err;
    std::mutex m;

    explicit Tally(std::string i) : id(std::move(i)) {}

    void add(bool ok, const std::string& w) {
        std::lock_guard<std::mutex> g(m);
        ++tested;
        if (!ok) {
            ++failures;
            if (witnesses.size() < 3) witnesses.push_back(w);
        }
    }
    Check check() const {
        Check c;
        c.id = id;
        c.tested = tested;
        c.failures = failures;
        c.witnesses = witnesses;
        c.pass = failures == 0;
        if (tested == 0) c.note = "no cells";
        return c;
    }
};

template <class F>
void guarded(Tally& t, const std::string& w, F&& f) {
    bool ok;
    try {
        ok = f();
    } catch (const std::exception& ex) {
        ok = false;
        t.add(false, w + ": " + ex.what());
        return;
    }
    t.add(ok, w);
}

}  // namespace xm
