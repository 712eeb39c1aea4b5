#ifndef LEAPP_RANK_ESTIMATE_HPP
#define LEAPP_RANK_ESTIMATE_HPP

#include "leapp/types.hpp"

#include <cstdint>

namespace leapp {

struct RankConfig {
    int n_permutations = 20;
    double significance_threshold = 0.1;
    int max_rank = -1;  // -1: use min(N, m) - 1
    std::uint64_t seed = 0;
};

struct RankReport {
    std::vector<Index> dropped_rows;  // zero-variance rows excluded from the analysis
    Vector observed;                  // leading singular values of the standardized matrix
    Vector null_quantile;             // per-index permutation quantile compared against
};

/// Permutation estimate of the number of significant factors: each row of R
/// is standardized, then entries are permuted within rows to build the null
/// for each singular value. Factors are accepted while the observed singular
/// value exceeds the (1 - threshold) null quantile; the scan stops at the
/// first failure.
int parallel_analysis(const Matrix& R, const RankConfig& cfg, RankReport* report = nullptr);

}  // namespace leapp

#endif
