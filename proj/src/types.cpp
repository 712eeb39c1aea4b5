#include "leapp/types.hpp"

#include <algorithm>
#include <numeric>

namespace leapp {

void validate(const DataMatrix& Y, const StudyDesign& d) {
    const Index N = Y.genes();
    const Index n = Y.subjects();
    if (N < 1) {
        throw Error(ErrorCode::DegenerateDesign, "need at least one gene row");
    }
    if (n < 4) {
        throw Error(ErrorCode::DegenerateDesign,
                    "need at least 4 subjects, got " + std::to_string(n));
    }
    if (!Y.values.allFinite()) {
        throw Error(ErrorCode::DegenerateDesign, "response matrix has non-finite entries");
    }
    if (d.n() != n) {
        throw Error(ErrorCode::DimensionMismatch,
                    "g has length " + std::to_string(d.n()) + ", Y has " +
                        std::to_string(n) + " columns");
    }
    const Index s = d.s();
    if (s > 0) {
        if (d.X.rows() != n) {
            throw Error(ErrorCode::DimensionMismatch, "X rows must match Y columns");
        }
        if (!d.X.allFinite()) {
            throw Error(ErrorCode::DegenerateDesign, "covariates have non-finite entries");
        }
        if (s > n - 3) {
            throw Error(ErrorCode::DegenerateDesign, "too many covariates: s must be <= n-3");
        }
        Eigen::ColPivHouseholderQR<Matrix> qr(d.X);
        qr.setThreshold(1e-10);
        if (qr.rank() < s) {
            throw Error(ErrorCode::RankDeficientCovariates,
                        "covariate matrix is rank deficient");
        }
    }
    if (d.k) {
        if (*d.k < 0 || *d.k > n - s - 2) {
            throw Error(ErrorCode::DegenerateDesign,
                        "latent rank k must satisfy 0 <= k <= n-s-2");
        }
    }
}

std::vector<int> rank_by_abs_descending(const Vector& t) {
    const Index N = t.size();
    std::vector<int> order(static_cast<size_t>(N));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double ta = std::abs(t[a]);
        const double tb = std::abs(t[b]);
        if (ta != tb) return ta > tb;
        return a < b;
    });
    std::vector<int> rank(static_cast<size_t>(N));
    for (Index pos = 0; pos < N; ++pos) {
        rank[static_cast<size_t>(order[static_cast<size_t>(pos)])] = static_cast<int>(pos) + 1;
    }
    return rank;
}

}  // namespace leapp
