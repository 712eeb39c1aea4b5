#include "leapp/baselines.hpp"

#include "leapp/crisscross.hpp"
#include "leapp/stats.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace leapp {

namespace detail {

GeneOls gene_wise_ols(const Matrix& Y, const Matrix& D, Index which) {
    const Index n = Y.cols();
    const Index q = D.cols();
    if (D.rows() != n) {
        throw Error(ErrorCode::DimensionMismatch, "design rows must match Y columns");
    }
    if (n - q < 1) {
        throw Error(ErrorCode::DegenerateDesign, "no residual degrees of freedom");
    }
    Eigen::ColPivHouseholderQR<Matrix> qr(D);
    qr.setThreshold(1e-10);
    if (qr.rank() < q) {
        throw Error(ErrorCode::RankDeficientCovariates, "design matrix is rank deficient");
    }
    const Matrix gram_inv = (D.transpose() * D).ldlt().solve(Matrix::Identity(q, q));

    GeneOls out;
    out.df = static_cast<int>(n - q);
    out.coef = Y * D * gram_inv;  // N x q
    const Matrix resid = Y - out.coef * D.transpose();
    out.rss = resid.rowwise().squaredNorm();
    const double gii = gram_inv(which, which);
    const Index N = Y.rows();
    out.t = Vector(N);
    out.p = Vector(N);
    for (Index i = 0; i < N; ++i) {
        const double se = std::sqrt(out.rss[i] / out.df * gii);
        const double b = out.coef(i, which);
        if (se > 0.0) {
            out.t[i] = b / se;
        } else {
            out.t[i] = b == 0.0 ? 0.0
                                : std::copysign(std::numeric_limits<double>::infinity(), b);
        }
        out.p[i] = stats::normal_two_sided_p(out.t[i]);
    }
    return out;
}

namespace {

/// Local two-group posterior null probability per p-value: pi0 / f(p),
/// clamped to [0, 1], with f a 20-bin histogram density estimate.
Vector local_fdr(const Vector& pvals) {
    const Index N = pvals.size();
    constexpr int kBins = 20;
    std::array<int, kBins> counts{};
    int above_half = 0;
    for (Index i = 0; i < N; ++i) {
        int b = static_cast<int>(pvals[i] * kBins);
        b = std::min(std::max(b, 0), kBins - 1);
        ++counts[static_cast<size_t>(b)];
        if (pvals[i] > 0.5) ++above_half;
    }
    const double pi0 =
        std::min(1.0, static_cast<double>(above_half) / (0.5 * static_cast<double>(N)));
    Vector out(N);
    for (Index i = 0; i < N; ++i) {
        int b = static_cast<int>(pvals[i] * kBins);
        b = std::min(std::max(b, 0), kBins - 1);
        const double dens =
            kBins * static_cast<double>(counts[static_cast<size_t>(b)]) / static_cast<double>(N);
        out[i] = dens > 0.0 ? std::min(1.0, pi0 / dens) : 1.0;
    }
    return out;
}

Matrix build_design(const Vector& g, const Matrix& X, const Matrix& V) {
    const Index n = g.size();
    Matrix D(n, 1 + X.cols() + V.cols());
    D.col(0) = g;
    if (X.cols() > 0) D.middleCols(1, X.cols()) = X;
    if (V.cols() > 0) D.rightCols(V.cols()) = V;
    return D;
}

Matrix row_centered(const Matrix& Y) {
    return Y.colwise() - Y.rowwise().mean();
}

GeneResult finish(const detail::GeneOls& ols) {
    GeneResult out;
    out.t_stat = ols.t;
    out.p_value = ols.p;
    out.gamma_hat = Vector(0);
    out.tau_hat = 1.0;
    out.rank = rank_by_abs_descending(ols.t);
    return out;
}

}  // namespace

Vector sva_weights(const Matrix& Yc, const Vector& g, const Matrix& X, const Matrix& Vhat) {
    const Matrix D_full = build_design(g, X, Vhat);
    const Matrix D_base = build_design(g, X, Matrix(g.size(), 0));
    const GeneOls full = gene_wise_ols(Yc, D_full, 0);
    const GeneOls base = gene_wise_ols(Yc, D_base, 0);

    // Joint significance of the Vhat block given g via a Wald chi-square.
    const int k = static_cast<int>(Vhat.cols());
    const Index N = Yc.rows();
    Vector p_u(N);
    for (Index i = 0; i < N; ++i) {
        const double rss1 = full.rss[i];
        const double rss0 = base.rss[i];
        if (rss1 <= 0.0) {
            p_u[i] = 0.0;
            continue;
        }
        const double fstat = ((rss0 - rss1) / k) / (rss1 / full.df);
        p_u[i] = stats::chisq_sf(std::max(0.0, fstat * k), k);
    }

    const Vector lfdr_g = local_fdr(full.p);
    const Vector lfdr_u = local_fdr(p_u);
    Vector w(N);
    for (Index i = 0; i < N; ++i) {
        w[i] = lfdr_g[i] * (1.0 - lfdr_u[i]);
    }
    return w;
}

}  // namespace detail

GeneResult raw_regress(const DataMatrix& Y, const StudyDesign& d) {
    validate(Y, d);
    const Index n = Y.subjects();
    if (n <= d.s() + 2) {
        throw Error(ErrorCode::DegenerateDesign, "need n > s + 2");
    }
    const Matrix D = detail::build_design(d.g, d.X, Matrix(n, 0));
    return detail::finish(detail::gene_wise_ols(Y.values, D, 0));
}

GeneResult oracle_regress(const DataMatrix& Y, const StudyDesign& d, const Matrix& truth_latent) {
    if (truth_latent.size() > 0 &&
        (truth_latent.rows() != Y.genes() || truth_latent.cols() != Y.subjects())) {
        throw Error(ErrorCode::DimensionMismatch, "latent matrix must match Y");
    }
    DataMatrix adj;
    adj.values = truth_latent.size() > 0 ? (Y.values - truth_latent).eval() : Y.values;
    return raw_regress(adj, d);
}

GeneResult eigenstrat(const DataMatrix& Y, const StudyDesign& d, int k) {
    validate(Y, d);
    const Index n = Y.subjects();
    const Index s = d.s();
    if (k < 1 || k > n - s - 2) {
        throw Error(ErrorCode::InvalidRank, "need 1 <= k <= n - s - 2");
    }
    const Matrix Yc = detail::row_centered(Y.values);
    const Matrix Vhat = truncated_svd(Yc, k).second;  // n x k
    const Matrix D = detail::build_design(d.g, d.X, Vhat);
    return detail::finish(detail::gene_wise_ols(Yc, D, 0));
}

GeneResult sva(const DataMatrix& Y, const StudyDesign& d, int k, int max_outer) {
    validate(Y, d);
    const Index n = Y.subjects();
    const Index s = d.s();
    if (k < 1 || k > n - s - 2) {
        throw Error(ErrorCode::InvalidRank, "need 1 <= k <= n - s - 2");
    }
    const Matrix Yc = detail::row_centered(Y.values);

    // Initial surrogate estimate from the residuals of the unadjusted fit.
    const Matrix D_base = detail::build_design(d.g, d.X, Matrix(n, 0));
    const detail::GeneOls base = detail::gene_wise_ols(Yc, D_base, 0);
    const Matrix R = Yc - base.coef * D_base.transpose();
    Matrix Vhat = truncated_svd(R, k).second;

    for (int outer = 0; outer < max_outer; ++outer) {
        const Vector w = detail::sva_weights(Yc, d.g, d.X, Vhat);
        if (w.maxCoeff() < 1e-8) break;  // all rows downweighted to nothing
        const Matrix Yw = w.asDiagonal() * Yc;
        Matrix Vnew = truncated_svd(Yw, k).second;
        const double change = (Vnew - Vhat).norm();
        Vhat = std::move(Vnew);
        if (change < 1e-6) break;
    }

    const Matrix D = detail::build_design(d.g, d.X, Vhat);
    return detail::finish(detail::gene_wise_ols(Yc, D, 0));
}

}  // namespace leapp
