#include "leapp/pipeline.hpp"

#include "leapp/crisscross.hpp"
#include "leapp/ipod.hpp"
#include "leapp/stats.hpp"

#include <cmath>

namespace leapp {

std::pair<GeneResult, LatentEstimate> leapp(const DataMatrix& Y, const StudyDesign& d,
                                            const LeappConfig& cfg) {
    return leapp_with_rotation(Y, d, cfg, householder_for(d.g));
}

std::pair<GeneResult, LatentEstimate> leapp_with_rotation(const DataMatrix& Y,
                                                          const StudyDesign& d,
                                                          const LeappConfig& cfg,
                                                          const RotationMatrix& O) {
    validate(Y, d);
    const Index N = Y.genes();
    const int n = static_cast<int>(Y.subjects());
    const int s = static_cast<int>(d.s());

    const RotatedData rot = rotate_and_split(Y, d, O);

    int k = 0;
    if (cfg.k) {
        k = *cfg.k;
        if (k < 0 || n - s - k - 1 < 2) {
            throw Error(ErrorCode::DegenerateDesign, "need n - s - k - 1 >= 2");
        }
    } else {
        // Rank estimation on the covariate residuals of the primary-free block.
        const Matrix B0 = regress_covariates(rot.y_rest, rot.x_rest);
        Matrix R0 = rot.y_rest;
        if (s > 0) R0 -= B0 * rot.x_rest.transpose();
        k = parallel_analysis(R0, cfg.rank_cfg);
        k = std::min(k, n - s - 3);  // keep the primary regression estimable
        k = std::max(k, 0);
    }

    LatentEstimate est = estimate_latent(rot, k, cfg.crisscross_tol, cfg.crisscross_max_iter);

    // Primary regression: standardized first column on the standardized loadings.
    Vector y_p = rot.y_first;
    if (s > 0) y_p -= est.beta_hat * rot.x_first;
    y_p = y_p.cwiseQuotient(est.sigma_hat);
    const Matrix& U_p = est.u_s_hat;

    const std::vector<double> grid =
        default_lambda_grid(y_p, U_p, cfg.ipod_grid_points, cfg.ipod_grid_hi, cfg.ipod_grid_lo);
    const IpodFit fit = select_lambda(y_p, U_p, grid, cfg.ipod_tol, cfg.ipod_max_iter);

    Vector resid = y_p;
    if (k > 0) resid -= U_p * fit.coef;
    const double tau = cfg.sparse_gamma ? mad_scale(resid) : tau_nonsparse(n, s, k);

    GeneResult genes;
    genes.t_stat = resid / tau;
    genes.p_value = Vector(N);
    for (Index i = 0; i < N; ++i) {
        genes.p_value[i] = stats::normal_two_sided_p(genes.t_stat[i]);
    }
    genes.gamma_hat = fit.gamma;
    genes.tau_hat = tau;
    genes.rank = rank_by_abs_descending(genes.t_stat);
    return {std::move(genes), std::move(est)};
}

}  // namespace leapp
