#ifndef LEAPP_DANTZIG_HPP
#define LEAPP_DANTZIG_HPP

#include "leapp/types.hpp"

namespace leapp {

struct DantzigResult {
    Vector gamma_hat;
    double B = 0.0;  // order-statistic bound at the assumed sparsity
    bool feasible = false;
};

/// l1-minimal gamma subject to ||(I - u u^T)(y1 - gamma)||_inf <= sigma sqrt(log N),
/// solved as a linear program in the positive/negative parts of gamma.
/// B sums the squared top order statistics of |u|: the largest 2s plus half
/// of the largest 3s.
DantzigResult dantzig_gamma(const Vector& y1, const Vector& u_star, double sigma, int s_assumed);

}  // namespace leapp

#endif
