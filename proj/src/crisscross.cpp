#include "leapp/crisscross.hpp"

#include <cmath>

namespace leapp {

namespace {
constexpr double kSigmaFloor = 1e-10;
}

Matrix regress_covariates(const Matrix& Ys, const Matrix& Xl) {
    const Index s = Xl.cols();
    if (s == 0) {
        return Matrix(Ys.rows(), 0);
    }
    if (Xl.rows() != Ys.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "Xl rows must match Ys columns");
    }
    Eigen::ColPivHouseholderQR<Matrix> qr(Xl);
    qr.setThreshold(1e-10);
    if (qr.rank() < s) {
        throw Error(ErrorCode::RankDeficientCovariates, "Xl is rank deficient");
    }
    const Matrix gram = Xl.transpose() * Xl;
    const Matrix proj = Xl * gram.ldlt().solve(Matrix::Identity(s, s));  // m x s
    return Ys * proj;
}

std::pair<Matrix, Matrix> truncated_svd(const Matrix& E, int k) {
    const Index N = E.rows();
    const Index m = E.cols();
    if (k < 1 || k > std::min(N, m)) {
        throw Error(ErrorCode::InvalidRank, "k must satisfy 1 <= k <= min(N, m)");
    }
    // Top-k right singular vectors via the m x m Gram matrix; U = E V then
    // carries the singular values in its column norms.
    const Matrix gram = E.transpose() * E;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
    Matrix V(m, k);
    for (int j = 0; j < k; ++j) {
        V.col(j) = eig.eigenvectors().col(m - 1 - j);  // eigenvalues ascend
    }
    for (int j = 0; j < k; ++j) {
        Index imax = 0;
        V.col(j).cwiseAbs().maxCoeff(&imax);
        if (V(imax, j) < 0.0) V.col(j) = -V.col(j);
    }
    Matrix U = E * V;
    return {std::move(U), std::move(V)};
}

LatentEstimate estimate_latent(const RotatedData& rot, int k, double tol, int max_iter) {
    const Index N = rot.y_rest.rows();
    const Index m = rot.y_rest.cols();
    const Index s = rot.x_rest.cols();
    if (k < 0 || k > std::min(N, m)) {
        throw Error(ErrorCode::InvalidRank, "invalid latent rank");
    }
    if (m <= s + k + 1 && k > 0) {
        throw Error(ErrorCode::DegenerateDesign,
                    "need n-1 > s+k+1 residual degrees of freedom");
    }

    LatentEstimate est;
    est.k = k;
    Vector sigma = Vector::Ones(N);
    Matrix B(N, s);
    Matrix Us(N, k);
    Matrix Vl(m, k);

    bool converged = false;
    int iter = 0;
    for (iter = 1; iter <= max_iter; ++iter) {
        const Matrix Ysl = sigma.cwiseInverse().asDiagonal() * rot.y_rest;
        B = regress_covariates(Ysl, rot.x_rest);
        Matrix resid = Ysl;
        if (s > 0) resid -= B * rot.x_rest.transpose();
        if (k > 0) {
            std::tie(Us, Vl) = truncated_svd(resid, k);
            resid -= Us * Vl.transpose();
        }
        // Unstandardized residual row norms give the new sigma.
        Vector sigma_new(N);
        for (Index i = 0; i < N; ++i) {
            sigma_new[i] = sigma[i] * resid.row(i).norm() / std::sqrt(static_cast<double>(m));
        }
        sigma_new = sigma_new.cwiseMax(kSigmaFloor);
        const double rel = (sigma_new - sigma).cwiseAbs().sum() / sigma.cwiseAbs().sum();
        sigma = sigma_new;
        if (rel < tol) {
            converged = true;
            break;
        }
    }

    for (Index i = 0; i < N; ++i) {
        if (sigma[i] <= kSigmaFloor) est.sigma_floor_genes.push_back(i);
    }
    est.beta_hat = sigma.asDiagonal() * B;
    est.U_hat = sigma.asDiagonal() * Us;
    est.u_s_hat = Us;
    est.sigma_hat = sigma;
    est.V_rest_hat = Vl;
    est.iterations = std::min(iter, max_iter);
    est.converged = converged;
    return est;
}

}  // namespace leapp
