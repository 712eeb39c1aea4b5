#include "leapp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace leapp::stats {

double normal_two_sided_p(double t) {
    return std::erfc(std::abs(t) / std::sqrt(2.0));
}

namespace {

// Regularized lower incomplete gamma P(a, x) by series; upper Q(a, x) by
// continued fraction (Lentz). Standard split at x < a + 1.
double gamma_p_series(double a, double x) {
    double sum = 1.0 / a;
    double term = sum;
    double ap = a;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_contfrac(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double chisq_sf(double x, double df) {
    if (x <= 0.0) return 1.0;
    const double a = df / 2.0;
    const double half = x / 2.0;
    if (half < a + 1.0) {
        return 1.0 - gamma_p_series(a, half);
    }
    return gamma_q_contfrac(a, half);
}

double median(std::vector<double> v) {
    if (v.empty()) {
        throw std::invalid_argument("median of empty vector");
    }
    const size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    double hi = v[mid];
    if (v.size() % 2 == 1) return hi;
    double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lo + hi);
}

double median(const Eigen::VectorXd& v) {
    return median(std::vector<double>(v.data(), v.data() + v.size()));
}

}  // namespace leapp::stats
