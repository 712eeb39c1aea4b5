#ifndef LEAPP_BASELINES_HPP
#define LEAPP_BASELINES_HPP

#include "leapp/types.hpp"

namespace leapp {

namespace detail {

/// Row-wise OLS of Y on the shared design D with the t statistic of column
/// `which` (residual-variance standard errors, normal-reference p-values).
struct GeneOls {
    Matrix coef;  // N x q
    Vector t;     // N
    Vector p;     // N
    Vector rss;   // N
    int df = 0;
};

GeneOls gene_wise_ols(const Matrix& Y, const Matrix& D, Index which);

/// SVA reweighting: w_i = P(gamma_i = 0) * P(U_i != 0), both factors from
/// two-group local estimates on 20-bin p-value histograms with Storey's
/// pi0 at lambda = 0.5.
Vector sva_weights(const Matrix& Yc, const Vector& g, const Matrix& X, const Matrix& Vhat);

}  // namespace detail

/// Per-gene regression of Y on (g, X), ignoring latent structure.
GeneResult raw_regress(const DataMatrix& Y, const StudyDesign& d);

/// raw_regress applied to Y - UV^T, with the latent term supplied as truth.
GeneResult oracle_regress(const DataMatrix& Y, const StudyDesign& d, const Matrix& truth_latent);

/// PCA adjustment: top-k right singular vectors of the row-centered data
/// enter each gene's regression as covariates.
GeneResult eigenstrat(const DataMatrix& Y, const StudyDesign& d, int k);

/// Iteratively reweighted surrogate variable estimate followed by per-gene
/// regression on (g, X, Vhat).
GeneResult sva(const DataMatrix& Y, const StudyDesign& d, int k, int max_outer = 20);

}  // namespace leapp

#endif
