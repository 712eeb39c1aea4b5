#ifndef LEAPP_SIMPLEX_HPP
#define LEAPP_SIMPLEX_HPP

#include "leapp/types.hpp"

namespace leapp {

struct LpResult {
    Vector x;
    double objective = 0.0;
    bool feasible = false;
    int iterations = 0;
};

/// Solves  min c^T x  subject to  A x <= b,  x >= 0  by a dense two-phase
/// simplex (Dantzig pricing with a Bland fallback against cycling). Sized
/// for verification problems, not production optimization.
LpResult simplex_solve(const Matrix& A, const Vector& b, const Vector& c,
                       int max_iterations = 200000);

}  // namespace leapp

#endif
