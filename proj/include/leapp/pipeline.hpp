#ifndef LEAPP_PIPELINE_HPP
#define LEAPP_PIPELINE_HPP

#include "leapp/rank_estimate.hpp"
#include "leapp/rotation.hpp"
#include "leapp/types.hpp"

namespace leapp {

struct LeappConfig {
    std::optional<int> k;       // absent: estimate by parallel_analysis
    RankConfig rank_cfg;
    bool sparse_gamma = true;   // MAD tau; false uses the df-based tau
    double crisscross_tol = 1e-4;
    int crisscross_max_iter = 100;
    int ipod_grid_points = 40;
    double ipod_grid_hi = 5.0;
    double ipod_grid_lo = 0.5;
    double ipod_tol = 1e-6;
    int ipod_max_iter = 500;
};

/// Full latent-effect adjustment after primary projection: rotate so the
/// primary effect occupies one column, estimate the latent structure from
/// the remaining columns, then score each gene as a mean-shift outlier in
/// the primary column. With an estimated rank of zero the latent regressor
/// is omitted and the standardized primary column is scored directly.
std::pair<GeneResult, LatentEstimate> leapp(const DataMatrix& Y, const StudyDesign& d,
                                            const LeappConfig& cfg = {});

/// Same algorithm with a caller-supplied rotation O (O g = e1). The default
/// entry point uses the Householder reflector.
std::pair<GeneResult, LatentEstimate> leapp_with_rotation(const DataMatrix& Y,
                                                          const StudyDesign& d,
                                                          const LeappConfig& cfg,
                                                          const RotationMatrix& O);

}  // namespace leapp

#endif
