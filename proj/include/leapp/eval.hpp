#ifndef LEAPP_EVAL_HPP
#define LEAPP_EVAL_HPP

#include "leapp/types.hpp"

#include <utility>
#include <vector>

namespace leapp {

struct RocResult {
    std::vector<std::pair<double, double>> curve;  // (fpr, tpr), tie groups step together
    double auc = 0.0;
};

/// ROC over descending scores; pooled inputs are just concatenated
/// (score, truth) pairs. Tied scores advance fpr and tpr simultaneously.
RocResult roc_auc(const std::vector<double>& scores, const std::vector<bool>& truth);

/// Fraction of true items among the top H scores (ties broken by index).
double precision_at(const std::vector<double>& scores, const std::vector<bool>& truth, int H = 50);

/// |u^T v| / (||u|| ||v||); sign-free cosine between single-column loadings.
double angle_cosine(const Vector& u_hat, const Vector& u);

struct ResemblancePoint {
    double alpha = 0.0;
    long long intersections = 0;  // sum over list pairs of |A_j and A_j'|
    long long union_size = 0;     // size of the union of all lists
};

/// Pooled resemblance across M significance lists sharing gene indices:
/// for each alpha, counts pairwise intersections and the pooled union of
/// the sets {i : pvals[j][i] <= alpha}.
std::vector<ResemblancePoint> resemblance_curve(const std::vector<std::vector<double>>& pvals,
                                                const std::vector<double>& alphas);

}  // namespace leapp

#endif
