#include "leapp/ipod.hpp"

#include "leapp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace leapp {

Vector hard_threshold(const Vector& x, double lambda) {
    if (!(lambda > 0.0)) {
        throw Error(ErrorCode::InvalidScenario, "lambda must be positive");
    }
    Vector out = x;
    for (Index i = 0; i < out.size(); ++i) {
        if (std::abs(out[i]) <= lambda) out[i] = 0.0;
    }
    return out;
}

namespace {

struct HatOperator {
    // Solver for the k x k normal equations; applies H = U (U^T U)^{-1} U^T.
    Matrix U;
    Eigen::LDLT<Matrix> gram;

    explicit HatOperator(const Matrix& U_in) : U(U_in) {
        const Index k = U.cols();
        if (k > 0) {
            if (k >= U.rows()) {
                throw Error(ErrorCode::SingularDesign, "need k < N");
            }
            const Matrix g = U.transpose() * U;
            Eigen::ColPivHouseholderQR<Matrix> qr(U);
            qr.setThreshold(1e-12);
            if (qr.rank() < k) {
                throw Error(ErrorCode::SingularDesign, "U is rank deficient");
            }
            gram.compute(g);
        }
    }

    Vector coef_for(const Vector& v) const {
        if (U.cols() == 0) return Vector(0);
        return gram.solve(U.transpose() * v);
    }

    Vector apply(const Vector& v) const {
        if (U.cols() == 0) return Vector::Zero(v.size());
        return U * coef_for(v);
    }
};

IpodFit theta_ipod_impl(const Vector& y, const HatOperator& hat, double lambda,
                        const Vector& gamma0, double tol, int max_iter) {
    IpodFit fit;
    fit.lambda = lambda;
    Vector gamma = gamma0;
    const Vector resid_part = y - hat.apply(y);  // (I - H) y
    bool converged = false;
    int iter = 0;
    for (iter = 1; iter <= max_iter; ++iter) {
        Vector next = hard_threshold(hat.apply(gamma) + resid_part, lambda);
        const double delta = (next - gamma).cwiseAbs().maxCoeff();
        gamma = std::move(next);
        if (delta < tol) {
            converged = true;
            break;
        }
    }
    fit.gamma = std::move(gamma);
    fit.coef = hat.coef_for(y - fit.gamma);
    fit.iterations = std::min(iter, max_iter);
    fit.converged = converged;
    return fit;
}

double extended_bic(const Vector& y, const Matrix& U, const IpodFit& fit) {
    const double N = static_cast<double>(y.size());
    Vector resid = y - fit.gamma;
    if (U.cols() > 0) resid -= U * fit.coef;
    const double rss = std::max(resid.squaredNorm(), 1e-300);
    const int support = static_cast<int>((fit.gamma.array() != 0.0).count());
    // |support| * (log N + 2 * gamma_ebic * log N) with gamma_ebic = 1.
    return N * std::log(rss / N) + support * 3.0 * std::log(N);
}

}  // namespace

IpodFit theta_ipod(const Vector& y, const Matrix& U, double lambda, double tol, int max_iter) {
    if (U.cols() > 0 && U.rows() != y.size()) {
        throw Error(ErrorCode::DimensionMismatch, "U rows must match y length");
    }
    HatOperator hat(U);
    IpodFit fit = theta_ipod_impl(y, hat, lambda, Vector::Zero(y.size()), tol, max_iter);
    fit.bic = extended_bic(y, U, fit);
    return fit;
}

IpodFit select_lambda(const Vector& y, const Matrix& U, const std::vector<double>& grid,
                      double tol, int max_iter) {
    if (grid.empty()) {
        throw Error(ErrorCode::EmptyGrid, "lambda grid is empty");
    }
    std::vector<double> lambdas = grid;
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());

    HatOperator hat(U);
    const Index N = y.size();
    Vector warm = Vector::Zero(N);
    IpodFit best;
    bool have_best = false;
    IpodFit fallback;  // retained in case every fit exceeds the support cap
    bool have_fallback = false;
    for (double lambda : lambdas) {
        IpodFit fit = theta_ipod_impl(y, hat, lambda, warm, tol, max_iter);
        fit.bic = extended_bic(y, U, fit);
        warm = fit.gamma;
        if (!have_fallback) {
            fallback = fit;
            have_fallback = true;
        }
        const Index support = (fit.gamma.array() != 0.0).count();
        if (support > N / 2) continue;
        if (!have_best || fit.bic < best.bic) {
            best = fit;
            have_best = true;
        }
    }
    return have_best ? best : fallback;
}

std::vector<double> default_lambda_grid(const Vector& y, const Matrix& U, int n_points,
                                        double hi_mult, double lo_mult) {
    HatOperator hat(U);
    const Vector resid = y - hat.apply(y);
    double scale = 0.0;
    try {
        scale = mad_scale(resid);
    } catch (const Error&) {
        // Degenerate spread: fall back to the standard deviation.
        const double mean = resid.mean();
        scale = std::sqrt((resid.array() - mean).square().sum() /
                          std::max<double>(1.0, static_cast<double>(resid.size() - 1)));
    }
    if (!(scale > 0.0)) {
        scale = std::max(resid.cwiseAbs().maxCoeff(), 1e-12);
    }
    std::vector<double> grid(static_cast<size_t>(n_points));
    const double log_hi = std::log(hi_mult * scale);
    const double log_lo = std::log(lo_mult * scale);
    for (int i = 0; i < n_points; ++i) {
        const double t = n_points == 1 ? 0.0 : static_cast<double>(i) / (n_points - 1);
        grid[static_cast<size_t>(i)] = std::exp(log_hi + t * (log_lo - log_hi));
    }
    return grid;
}

double mad_scale(const Vector& r) {
    if (r.size() < 2) {
        throw Error(ErrorCode::ZeroSpread, "need at least two values");
    }
    const double med = stats::median(r);
    const double mad = stats::median((r.array() - med).abs().matrix());
    if (mad <= 0.0) {
        throw Error(ErrorCode::ZeroSpread, "median absolute deviation is zero");
    }
    return 1.4826 * mad;
}

double tau_nonsparse(int n, int s, int k) {
    const int df = n - s - k;
    if (df <= 3) {
        throw Error(ErrorCode::InsufficientDF, "need n - s - k > 3");
    }
    return std::sqrt(static_cast<double>(df - 1) / static_cast<double>(df - 3));
}

}  // namespace leapp
