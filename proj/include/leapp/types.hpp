#ifndef LEAPP_TYPES_HPP
#define LEAPP_TYPES_HPP

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace leapp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Failure categories raised across the library. Soft conditions
/// (non-convergence, sigma clamping) are reported through result flags
/// instead of exceptions.
enum class ErrorCode {
    DimensionMismatch,
    RankDeficientCovariates,
    DegenerateDesign,
    NotUnitVector,
    InvalidRank,
    SingularDesign,
    EmptyGrid,
    ZeroSpread,
    InsufficientDF,
    DegenerateMatrix,
    DegenerateTruth,
    ZeroVector,
    IndexMismatch,
    InvalidScenario,
    Infeasible,
    NumericalFailure,
    ParseFailure,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Response matrix: N genes (rows) by n subjects (columns).
struct DataMatrix {
    Matrix values;

    Index genes() const { return values.rows(); }
    Index subjects() const { return values.cols(); }
};

/// Primary variable g, optional covariates X and optional latent rank k.
/// The constructor scales g to unit norm; it does not center it (the CLI
/// centers group variables before building the design).
struct StudyDesign {
    Vector g;            // unit norm, length n
    Matrix X;            // n x s, s >= 0
    std::optional<int> k;

    StudyDesign() = default;
    StudyDesign(Vector g_raw, Matrix X_in = Matrix(), std::optional<int> k_in = std::nullopt)
        : g(std::move(g_raw)), X(std::move(X_in)), k(k_in) {
        const double norm = g.norm();
        if (!(norm > 0.0) || !g.allFinite()) {
            throw Error(ErrorCode::DegenerateDesign, "primary variable must be nonzero and finite");
        }
        g /= norm;
        if (X.size() > 0 && X.rows() != g.size()) {
            throw Error(ErrorCode::DimensionMismatch, "covariate rows must match length of g");
        }
    }

    Index n() const { return g.size(); }
    Index s() const { return X.size() == 0 ? 0 : X.cols(); }
};

/// Fitted latent structure from the primary-free columns.
/// u_s_hat is the standardized loading matrix (U_hat row i divided by
/// sigma_hat[i]); the primary regression consumes it directly.
struct LatentEstimate {
    Matrix beta_hat;     // N x s
    Matrix U_hat;        // N x k, singular values absorbed
    Matrix u_s_hat;      // N x k, standardized loadings
    Vector sigma_hat;    // N, strictly positive
    Matrix V_rest_hat;   // (n-1) x k, orthonormal columns
    int k = 0;
    int iterations = 0;
    bool converged = true;
    std::vector<Index> sigma_floor_genes;  // rows clamped at the sigma floor
};

/// Per-gene test output. rank[i] is the position of gene i when sorting
/// |t_stat| from largest to smallest (1 = most significant); ties broken
/// by gene index ascending.
struct GeneResult {
    Vector t_stat;        // N
    Vector p_value;       // N, = 2 (1 - Phi(|T|))
    Vector gamma_hat;     // N for LEAPP (standardized scale), empty otherwise
    double tau_hat = 1.0;
    std::vector<int> rank;  // permutation of 1..N
};

/// Ground truth retained by the synthetic generator for scoring.
struct SimTruth {
    Vector gamma;          // N
    Matrix U;              // N x k
    Matrix V;              // n x k
    Vector sigma;          // N
    std::vector<bool> nonnull_mask;  // nonnull_mask[i] <=> gamma[i] != 0
};

/// Checks the type invariants of Y and the design together:
/// matching dimensions, n >= 4, finite entries, full-rank covariates,
/// s <= n-3 and (when present) 0 <= k <= n-s-2.
void validate(const DataMatrix& Y, const StudyDesign& d);

/// Ranks by |t| descending, ties broken by gene index ascending.
std::vector<int> rank_by_abs_descending(const Vector& t);

}  // namespace leapp

#endif
