#ifndef LEAPP_STATS_HPP
#define LEAPP_STATS_HPP

#include <Eigen/Dense>

#include <vector>

namespace leapp::stats {

/// Two-sided standard normal p-value, Pr(|Z| >= |t|) = erfc(|t|/sqrt(2)).
double normal_two_sided_p(double t);

/// Upper tail of the chi-square distribution with df degrees of freedom.
double chisq_sf(double x, double df);

/// Median of a vector (copies; average of the middle pair for even length).
double median(std::vector<double> v);
double median(const Eigen::VectorXd& v);

}  // namespace leapp::stats

#endif
