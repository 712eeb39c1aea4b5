#include "leapp/simgen.hpp"

#include "leapp/rng.hpp"

#include <cmath>

namespace leapp {

Vector sample_orthogonal_unit(const Vector& g, std::uint64_t seed) {
    rng::Stream stream(seed, "orthogonal-unit");
    const Index n = g.size();
    for (;;) {
        Vector z(n);
        for (Index i = 0; i < n; ++i) z[i] = stream.normal();
        z -= (g.dot(z)) * g;
        const double norm = z.norm();
        if (norm > 1e-8) {
            return z / norm;
        }
    }
}

namespace {

/// Gram-Schmidt draw of a unit vector orthogonal to g and to the columns
/// of prev (used for latent ranks above one).
Vector orthogonal_unit_against(const Vector& g, const Matrix& prev, rng::Stream& stream) {
    const Index n = g.size();
    for (;;) {
        Vector z(n);
        for (Index i = 0; i < n; ++i) z[i] = stream.normal();
        z -= (g.dot(z)) * g;
        for (Index j = 0; j < prev.cols(); ++j) {
            z -= (prev.col(j).dot(z)) * prev.col(j);
        }
        const double norm = z.norm();
        if (norm > 1e-8) {
            return z / norm;
        }
    }
}

}  // namespace

Vector draw_gamma(const SimScenario& sc) {
    const double c = std::sqrt(sc.snr / sc.pi);
    rng::Stream stream(sc.seed, "gamma");
    Vector gamma = Vector::Zero(sc.N);
    for (Index i = 0; i < sc.N; ++i) {
        if (stream.uniform() < sc.pi) gamma[i] = c;
    }
    return gamma;
}

std::tuple<DataMatrix, StudyDesign, SimTruth> generate(const SimScenario& sc) {
    if (sc.n < 4 || sc.n % 2 != 0) {
        throw Error(ErrorCode::InvalidScenario, "n must be even and at least 4");
    }
    if (sc.N < 1 || sc.pi <= 0.0 || sc.pi >= 1.0 || sc.snr <= 0.0 || sc.lnr <= 0.0 ||
        std::abs(sc.rho) >= 1.0 || sc.k < 1 || sc.k > sc.n - 2) {
        throw Error(ErrorCode::InvalidScenario, "invalid scenario parameters");
    }

    const Index N = sc.N;
    const Index n = sc.n;

    // Balanced two-group primary variable, unit norm.
    Vector g(n);
    const double inv = 1.0 / std::sqrt(static_cast<double>(n));
    for (Index j = 0; j < n; ++j) g[j] = j < n / 2 ? inv : -inv;

    const double a = std::sqrt(3.0 * sc.lnr);

    SimTruth truth;
    truth.gamma = draw_gamma(sc);
    truth.nonnull_mask.assign(static_cast<size_t>(N), false);
    for (Index i = 0; i < N; ++i) {
        truth.nonnull_mask[static_cast<size_t>(i)] = truth.gamma[i] != 0.0;
    }

    truth.sigma = Vector(N);
    {
        // 1/sigma_i^2 ~ Gamma(5)/4, so E(sigma_i^2) = 1.
        rng::Stream stream(sc.seed, "sigma");
        for (Index i = 0; i < N; ++i) {
            truth.sigma[i] = std::sqrt(4.0 / stream.gamma(5.0));
        }
    }

    truth.U = Matrix(N, sc.k);
    {
        rng::Stream stream(sc.seed, "U");
        for (Index j = 0; j < sc.k; ++j) {
            for (Index i = 0; i < N; ++i) truth.U(i, j) = stream.uniform(-a, a);
        }
    }

    truth.V = Matrix(n, sc.k);
    {
        rng::Stream stream(sc.seed, "W");
        const Vector w = orthogonal_unit_against(g, Matrix(n, 0), stream);
        truth.V.col(0) = sc.rho * g + std::sqrt(1.0 - sc.rho * sc.rho) * w;
        for (Index j = 1; j < sc.k; ++j) {
            truth.V.col(j) = orthogonal_unit_against(g, truth.V.leftCols(j), stream);
        }
    }

    DataMatrix Y;
    Y.values = truth.gamma * g.transpose() + truth.U * truth.V.transpose();
    {
        rng::Stream stream(sc.seed, "E");
        for (Index j = 0; j < n; ++j) {
            for (Index i = 0; i < N; ++i) {
                Y.values(i, j) += truth.sigma[i] * stream.normal();
            }
        }
    }

    StudyDesign design(g, Matrix(), sc.k);
    return {std::move(Y), std::move(design), std::move(truth)};
}

}  // namespace leapp
