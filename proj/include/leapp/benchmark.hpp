#ifndef LEAPP_BENCHMARK_HPP
#define LEAPP_BENCHMARK_HPP

#include "leapp/simgen.hpp"
#include "leapp/types.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace leapp {

enum class Method { Raw, Oracle, Eigenstrat, Sva, Leapp };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

/// Pooled per-method predictions across replicates: |T| as the score,
/// nonnull truth flags, plus per-replicate precision@50 and the p-values
/// column-by-column for resemblance work.
struct MethodPool {
    std::vector<double> scores;
    std::vector<bool> truth;
    std::vector<double> precision50;          // one entry per replicate
    std::vector<std::vector<double>> pvalues;  // one column per replicate
};

struct BenchmarkOptions {
    int reps = 100;
    int threads = 1;            // replicate worker pool size
    bool auto_k = false;        // estimate k per replicate instead of using sc.k
    bool shared_gamma = false;  // reuse replicate 0's gamma across replicates
    std::function<void(int)> on_replicate_done;  // progress hook (replicate index)
};

/// Runs `reps` replicates of the scenario (replicate r uses a seed derived
/// from sc.seed and r), applies each method to the same data, and pools the
/// predictions. Replicates may run on a worker pool; pooling is by
/// replicate index, so results do not depend on the pool size.
std::map<Method, MethodPool> run_benchmark(const SimScenario& sc,
                                           const std::vector<Method>& methods,
                                           const BenchmarkOptions& opt);

/// Worker-pool size from the LATENT_ADJUST_THREADS environment variable,
/// falling back to the hardware concurrency.
int thread_count_from_env();

}  // namespace leapp

#endif
