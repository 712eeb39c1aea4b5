#ifndef LEAPP_CRISSCROSS_HPP
#define LEAPP_CRISSCROSS_HPP

#include "leapp/rotation.hpp"
#include "leapp/types.hpp"

namespace leapp {

/// Row-wise least squares coefficients B = Ys Xl (Xl^T Xl)^{-1}.
/// s = 0 yields an N x 0 matrix.
Matrix regress_covariates(const Matrix& Ys, const Matrix& Xl);

/// Best rank-k Frobenius approximation E ~ U_k V_k^T with V_k^T V_k = I_k
/// and singular values absorbed into U_k. Sign convention: the
/// largest-magnitude entry of each V_k column is positive.
std::pair<Matrix, Matrix> truncated_svd(const Matrix& E, int k);

/// Criss-cross alternation on the primary-free block: standardize by the
/// current sigma, regress out covariates, fit a rank-k factor term, refresh
/// sigma from the unstandardized residuals. Stops when the L1 relative
/// change of sigma drops below tol. k = 0 skips the factor term (used by
/// the pipeline's rank-zero fallback).
LatentEstimate estimate_latent(const RotatedData& rot, int k, double tol = 1e-4,
                               int max_iter = 100);

}  // namespace leapp

#endif
