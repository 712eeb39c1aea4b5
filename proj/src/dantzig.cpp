#include "leapp/dantzig.hpp"

#include "leapp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace leapp {

DantzigResult dantzig_gamma(const Vector& y1, const Vector& u_star, double sigma, int s_assumed) {
    const Index N = y1.size();
    if (N < 2 || u_star.size() != N) {
        throw Error(ErrorCode::DimensionMismatch, "need matching y1 and u_star with N >= 2");
    }
    if (std::abs(u_star.norm() - 1.0) > 1e-8) {
        throw Error(ErrorCode::NotUnitVector, "u_star must have unit norm");
    }
    if (sigma <= 0.0 || s_assumed < 0 || 3 * s_assumed > N) {
        throw Error(ErrorCode::InvalidScenario, "bad sigma or assumed sparsity");
    }

    const double t = sigma * std::sqrt(std::log(static_cast<double>(N)));
    const Matrix P = Matrix::Identity(N, N) - u_star * u_star.transpose();
    const Vector py = P * y1;

    // min 1^T (gp + gm)  s.t.  P(gp - gm) <= py + t,  -P(gp - gm) <= t - py.
    Matrix A(2 * N, 2 * N);
    A.block(0, 0, N, N) = P;
    A.block(0, N, N, N) = -P;
    A.block(N, 0, N, N) = -P;
    A.block(N, N, N, N) = P;
    Vector b(2 * N);
    b.head(N) = py.array() + t;
    b.tail(N) = t - py.array();
    const Vector c = Vector::Ones(2 * N);

    const LpResult lp = simplex_solve(A, b, c);
    if (!lp.feasible) {
        throw Error(ErrorCode::NumericalFailure, "LP solver failed on the Dantzig program");
    }

    DantzigResult out;
    out.gamma_hat = lp.x.head(N) - lp.x.tail(N);
    out.feasible = (P * (y1 - out.gamma_hat)).cwiseAbs().maxCoeff() <= t + 1e-7;

    std::vector<double> sq(static_cast<size_t>(N));
    for (Index i = 0; i < N; ++i) sq[static_cast<size_t>(i)] = u_star[i] * u_star[i];
    std::sort(sq.begin(), sq.end(), std::greater<>());
    double B = 0.0;
    for (int i = 0; i < 2 * s_assumed; ++i) B += sq[static_cast<size_t>(i)];
    for (int i = 0; i < 3 * s_assumed; ++i) B += 0.5 * sq[static_cast<size_t>(i)];
    out.B = B;
    return out;
}

}  // namespace leapp
