#ifndef LEAPP_IPOD_HPP
#define LEAPP_IPOD_HPP

#include "leapp/types.hpp"

namespace leapp {

/// Robust regression fit with sparse mean-shift outliers.
struct IpodFit {
    Vector coef;    // k, regression coefficients
    Vector gamma;   // N, sparse mean shifts
    double lambda = 0.0;
    double bic = 0.0;
    int iterations = 0;
    bool converged = true;
};

/// Componentwise hard threshold: keeps x[i] when |x[i]| > lambda, else 0.
Vector hard_threshold(const Vector& x, double lambda);

/// Mean-shift outlier regression: iterate
///   gamma <- hard_threshold(H gamma + (I - H) y, lambda)
/// with H the hat matrix of U, then refit the coefficients on y - gamma.
/// U may have zero columns (pure thresholding, no regression part).
IpodFit theta_ipod(const Vector& y, const Matrix& U, double lambda, double tol = 1e-6,
                   int max_iter = 500);

/// Fits the descending lambda grid with warm starts and returns the fit
/// minimizing the extended BIC  N log(RSS/N) + |support| (1 + 2 gamma_ebic) log N
/// with gamma_ebic = 1. Fits with more than N/2 outliers are excluded.
IpodFit select_lambda(const Vector& y, const Matrix& U, const std::vector<double>& grid,
                      double tol = 1e-6, int max_iter = 500);

/// Default grid for select_lambda: n_points log-spaced multiples of the MAD
/// of the plain least-squares residual, from hi_mult down to lo_mult.
std::vector<double> default_lambda_grid(const Vector& y, const Matrix& U, int n_points = 40,
                                        double hi_mult = 5.0, double lo_mult = 0.5);

/// 1.4826 * median(|r - median(r)|). Throws ZeroSpread when the deviations
/// have zero median.
double mad_scale(const Vector& r);

/// Degrees-of-freedom tau for non-sparse gamma: sqrt((n-s-k-1)/(n-s-k-3)).
double tau_nonsparse(int n, int s, int k);

}  // namespace leapp

#endif
