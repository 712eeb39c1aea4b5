#include "leapp/rank_estimate.hpp"

#include "leapp/rng.hpp"

#include <algorithm>
#include <cmath>

namespace leapp {

namespace {

/// Descending singular values of A via the Gram matrix on the short side.
Vector singular_values(const Matrix& A) {
    Matrix gram;
    if (A.cols() <= A.rows()) {
        gram = A.transpose() * A;
    } else {
        gram = A * A.transpose();
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
    const Index p = gram.rows();
    Vector sv(p);
    for (Index i = 0; i < p; ++i) {
        sv[i] = std::sqrt(std::max(0.0, eig.eigenvalues()[p - 1 - i]));
    }
    return sv;
}

}  // namespace

int parallel_analysis(const Matrix& R, const RankConfig& cfg, RankReport* report) {
    const Index N = R.rows();
    const Index m = R.cols();
    if (m < 2 || N < 1) {
        throw Error(ErrorCode::DegenerateMatrix, "need at least 1 row and 2 columns");
    }
    if (!R.allFinite()) {
        throw Error(ErrorCode::DegenerateMatrix, "matrix has non-finite entries");
    }
    if (cfg.n_permutations < 1 || cfg.significance_threshold <= 0.0 ||
        cfg.significance_threshold >= 1.0) {
        throw Error(ErrorCode::InvalidScenario, "bad parallel-analysis configuration");
    }

    // Standardize rows; constant rows carry no information and are dropped.
    std::vector<Index> keep;
    std::vector<Index> dropped;
    keep.reserve(static_cast<size_t>(N));
    for (Index i = 0; i < N; ++i) {
        const double mean = R.row(i).mean();
        const double ss = (R.row(i).array() - mean).square().sum();
        if (ss > 0.0) {
            keep.push_back(i);
        } else {
            dropped.push_back(i);
        }
    }
    if (keep.size() < 2) {
        throw Error(ErrorCode::DegenerateMatrix, "fewer than two rows with nonzero variance");
    }
    Matrix S(static_cast<Index>(keep.size()), m);
    for (size_t r = 0; r < keep.size(); ++r) {
        const double mean = R.row(keep[r]).mean();
        const double sd =
            std::sqrt((R.row(keep[r]).array() - mean).square().sum() / static_cast<double>(m - 1));
        S.row(static_cast<Index>(r)) = (R.row(keep[r]).array() - mean) / sd;
    }

    const Index nr = S.rows();
    int max_rank = cfg.max_rank >= 0 ? cfg.max_rank : static_cast<int>(std::min(nr, m)) - 1;
    max_rank = std::min<int>(max_rank, static_cast<int>(std::min(nr, m)));
    const Vector observed = singular_values(S);

    // Null singular values from within-row permutations of S (permutation
    // preserves each row's mean and variance, so S stays standardized).
    const int P = cfg.n_permutations;
    using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Matrix null_sv(P, max_rank);
    for (int b = 0; b < P; ++b) {
        rng::Stream stream(cfg.seed, "parallel-analysis", static_cast<std::uint64_t>(b));
        RowMajor Sp = S;
        for (Index i = 0; i < nr; ++i) {
            stream.shuffle_span(Sp.row(i).data(), static_cast<size_t>(m));
        }
        const Vector sv = singular_values(Sp);
        for (int j = 0; j < max_rank; ++j) null_sv(b, j) = sv[j];
    }

    // Nearest-rank (1 - threshold) quantile per index.
    const int qidx = std::min(
        P, std::max(1, static_cast<int>(std::ceil((1.0 - cfg.significance_threshold) * P))));
    Vector quantile(max_rank);
    for (int j = 0; j < max_rank; ++j) {
        std::vector<double> col(null_sv.col(j).data(), null_sv.col(j).data() + P);
        std::nth_element(col.begin(), col.begin() + (qidx - 1), col.end());
        quantile[j] = col[static_cast<size_t>(qidx - 1)];
    }

    int k = 0;
    for (int j = 0; j < max_rank; ++j) {
        if (observed[j] > quantile[j]) {
            k = j + 1;
        } else {
            break;
        }
    }

    if (report) {
        report->dropped_rows = std::move(dropped);
        report->observed = observed.head(max_rank);
        report->null_quantile = quantile;
    }
    return k;
}

}  // namespace leapp
