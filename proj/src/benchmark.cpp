#include "leapp/benchmark.hpp"

#include "leapp/baselines.hpp"
#include "leapp/eval.hpp"
#include "leapp/pipeline.hpp"
#include "leapp/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace leapp {

std::string method_name(Method m) {
    switch (m) {
        case Method::Raw: return "raw";
        case Method::Oracle: return "oracle";
        case Method::Eigenstrat: return "eigenstrat";
        case Method::Sva: return "sva";
        case Method::Leapp: return "leapp";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    if (name == "raw") return Method::Raw;
    if (name == "oracle") return Method::Oracle;
    if (name == "eigenstrat") return Method::Eigenstrat;
    if (name == "sva") return Method::Sva;
    if (name == "leapp") return Method::Leapp;
    throw Error(ErrorCode::InvalidScenario, "unknown method '" + name + "'");
}

int thread_count_from_env() {
    if (const char* env = std::getenv("LATENT_ADJUST_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

struct RepResult {
    std::map<Method, GeneResult> results;
    std::vector<bool> truth;
};

RepResult run_replicate(const SimScenario& base, int rep, const std::vector<Method>& methods,
                        bool auto_k, const Vector* shared_gamma) {
    SimScenario sc = base;
    sc.seed = rng::Stream(base.seed, "replicate-seed", static_cast<std::uint64_t>(rep)).next_u64();
    auto [Y, design, truth] = generate(sc);
    if (shared_gamma) {
        // Swap the gamma component so every replicate tests the same genes.
        Y.values += (*shared_gamma - truth.gamma) * design.g.transpose();
        truth.gamma = *shared_gamma;
        for (Index i = 0; i < truth.gamma.size(); ++i) {
            truth.nonnull_mask[static_cast<size_t>(i)] = truth.gamma[i] != 0.0;
        }
    }

    RepResult out;
    out.truth = truth.nonnull_mask;

    int k_shared = sc.k;
    LeappConfig cfg;
    cfg.rank_cfg.seed = sc.seed;
    if (auto_k) {
        cfg.k = std::nullopt;
    } else {
        cfg.k = sc.k;
    }

    // LEAPP runs first so its estimated rank can be reused by the other
    // adjustment methods (all methods see the same k, as in the benchmark
    // design).
    bool want_leapp = false;
    for (Method m : methods) want_leapp |= (m == Method::Leapp);
    if (want_leapp || auto_k) {
        auto [genes, latent] = leapp(Y, design, cfg);
        if (auto_k) k_shared = std::max(1, latent.k);
        if (want_leapp) out.results[Method::Leapp] = std::move(genes);
    }

    for (Method m : methods) {
        switch (m) {
            case Method::Raw:
                out.results[m] = raw_regress(Y, design);
                break;
            case Method::Oracle:
                out.results[m] =
                    oracle_regress(Y, design, truth.U * truth.V.transpose());
                break;
            case Method::Eigenstrat:
                out.results[m] = eigenstrat(Y, design, k_shared);
                break;
            case Method::Sva:
                out.results[m] = sva(Y, design, k_shared);
                break;
            case Method::Leapp:
                break;  // already computed
        }
    }
    return out;
}

}  // namespace

std::map<Method, MethodPool> run_benchmark(const SimScenario& sc,
                                           const std::vector<Method>& methods,
                                           const BenchmarkOptions& opt) {
    if (opt.reps < 1) {
        throw Error(ErrorCode::InvalidScenario, "need at least one replicate");
    }

    Vector shared_gamma;
    if (opt.shared_gamma) {
        SimScenario first = sc;
        first.seed = rng::Stream(sc.seed, "replicate-seed", 0).next_u64();
        shared_gamma = draw_gamma(first);
    }

    std::vector<RepResult> reps(static_cast<size_t>(opt.reps));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        for (;;) {
            const int rep = next.fetch_add(1);
            if (rep >= opt.reps) return;
            try {
                reps[static_cast<size_t>(rep)] =
                    run_replicate(sc, rep, methods, opt.auto_k,
                                  opt.shared_gamma ? &shared_gamma : nullptr);
                if (opt.on_replicate_done) opt.on_replicate_done(rep);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const int n_threads = std::max(1, std::min(opt.threads, opt.reps));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    // Merge in replicate order for pool-size-independent output.
    std::map<Method, MethodPool> pooled;
    for (Method m : methods) pooled[m] = MethodPool{};
    for (const auto& rep : reps) {
        for (Method m : methods) {
            const GeneResult& r = rep.results.at(m);
            MethodPool& pool = pooled[m];
            std::vector<double> scores(static_cast<size_t>(r.t_stat.size()));
            for (Index i = 0; i < r.t_stat.size(); ++i) {
                scores[static_cast<size_t>(i)] = std::abs(r.t_stat[i]);
            }
            pool.precision50.push_back(
                precision_at(scores, rep.truth, std::min<int>(50, static_cast<int>(scores.size()))));
            pool.scores.insert(pool.scores.end(), scores.begin(), scores.end());
            pool.truth.insert(pool.truth.end(), rep.truth.begin(), rep.truth.end());
            pool.pvalues.emplace_back(r.p_value.data(), r.p_value.data() + r.p_value.size());
        }
    }
    return pooled;
}

}  // namespace leapp
