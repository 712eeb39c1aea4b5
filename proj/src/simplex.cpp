#include "leapp/simplex.hpp"

#include <cmath>
#include <vector>

namespace leapp {

namespace {

constexpr double kEps = 1e-9;

struct Tableau {
    // Rows: m constraints plus one objective row (last). Columns: structural
    // variables, slacks, artificials, then the right-hand side (last).
    Matrix T;
    std::vector<int> basis;
    int m = 0;
    int total = 0;  // number of variable columns

    int pick_entering(bool bland) const {
        int col = -1;
        double best = -kEps;
        for (int j = 0; j < total; ++j) {
            const double rc = T(m, j);
            if (rc < -kEps) {
                if (bland) return j;
                if (rc < best) {
                    best = rc;
                    col = j;
                }
            }
        }
        return col;
    }

    int pick_leaving(int col, bool bland) const {
        int row = -1;
        double best_ratio = 0.0;
        for (int i = 0; i < m; ++i) {
            const double a = T(i, col);
            if (a > kEps) {
                const double ratio = T(i, total) / a;
                if (row == -1 || ratio < best_ratio - kEps ||
                    (std::abs(ratio - best_ratio) <= kEps &&
                     (bland ? basis[i] < basis[row] : a > T(row, col)))) {
                    best_ratio = ratio;
                    row = i;
                }
            }
        }
        return row;
    }

    void pivot(int row, int col) {
        T.row(row) /= T(row, col);
        for (int i = 0; i <= m; ++i) {
            if (i == row) continue;
            const double factor = T(i, col);
            if (factor != 0.0) T.row(i) -= factor * T.row(row);
        }
        basis[static_cast<size_t>(row)] = col;
    }

    // Returns false when the iteration limit is exhausted.
    bool iterate(int max_iterations, int* used) {
        int stall = 0;
        double last_obj = T(m, total);
        for (int it = 0; it < max_iterations; ++it) {
            const bool bland = stall > 2 * (m + total);
            const int col = pick_entering(bland);
            if (col < 0) {
                *used += it;
                return true;  // optimal
            }
            const int row = pick_leaving(col, bland);
            if (row < 0) {
                // Unbounded direction. The callers' LPs are bounded; treat as failure.
                return false;
            }
            pivot(row, col);
            // T(m, total) holds -objective, so progress pushes it upward.
            const double obj = T(m, total);
            stall = obj > last_obj + 1e-12 ? 0 : stall + 1;
            last_obj = obj;
        }
        return false;
    }
};

}  // namespace

LpResult simplex_solve(const Matrix& A, const Vector& b, const Vector& c, int max_iterations) {
    const int m = static_cast<int>(A.rows());
    const int nvar = static_cast<int>(A.cols());

    // Normalize rows to nonnegative right-hand sides; flipped rows get
    // artificial variables in phase 1.
    std::vector<int> flipped(static_cast<size_t>(m), 0);
    int n_art = 0;
    for (int i = 0; i < m; ++i) {
        if (b[i] < 0.0) {
            flipped[static_cast<size_t>(i)] = 1;
            ++n_art;
        }
    }

    Tableau tab;
    tab.m = m;
    tab.total = nvar + m + n_art;
    tab.T = Matrix::Zero(m + 1, tab.total + 1);
    tab.basis.assign(static_cast<size_t>(m), -1);

    int art = 0;
    for (int i = 0; i < m; ++i) {
        const double sign = flipped[static_cast<size_t>(i)] ? -1.0 : 1.0;
        tab.T.block(i, 0, 1, nvar) = sign * A.row(i);
        tab.T(i, nvar + i) = sign;  // slack
        tab.T(i, tab.total) = sign * b[i];
        if (flipped[static_cast<size_t>(i)]) {
            tab.T(i, nvar + m + art) = 1.0;
            tab.basis[static_cast<size_t>(i)] = nvar + m + art;
            ++art;
        } else {
            tab.basis[static_cast<size_t>(i)] = nvar + i;
        }
    }

    LpResult result;
    int used = 0;

    if (n_art > 0) {
        // Phase 1: minimize the sum of artificials.
        for (int j = nvar + m; j < tab.total; ++j) tab.T(m, j) = 1.0;
        for (int i = 0; i < m; ++i) {
            if (tab.basis[static_cast<size_t>(i)] >= nvar + m) {
                tab.T.row(m) -= tab.T.row(i);
            }
        }
        if (!tab.iterate(max_iterations, &used)) return result;
        if (tab.T(m, tab.total) < -1e-7) return result;  // infeasible

        // Pivot lingering artificials out of the basis where possible.
        for (int i = 0; i < m; ++i) {
            if (tab.basis[static_cast<size_t>(i)] >= nvar + m) {
                for (int j = 0; j < nvar + m; ++j) {
                    if (std::abs(tab.T(i, j)) > kEps) {
                        tab.pivot(i, j);
                        break;
                    }
                }
            }
        }
    }

    // Phase 2 objective; artificial columns are frozen out.
    tab.T.row(m).setZero();
    for (int j = 0; j < nvar; ++j) tab.T(m, j) = c[j];
    for (int j = nvar + m; j < tab.total; ++j) {
        tab.T.col(j).setZero();
    }
    for (int i = 0; i < m; ++i) {
        const int bj = tab.basis[static_cast<size_t>(i)];
        if (bj < nvar && c[bj] != 0.0) {
            tab.T.row(m) -= c[bj] * tab.T.row(i);
        }
    }
    if (!tab.iterate(max_iterations, &used)) return result;

    result.x = Vector::Zero(nvar);
    for (int i = 0; i < m; ++i) {
        const int bj = tab.basis[static_cast<size_t>(i)];
        if (bj < nvar) result.x[bj] = tab.T(i, tab.total);
    }
    result.objective = c.dot(result.x);
    result.feasible = true;
    result.iterations = used;
    return result;
}

}  // namespace leapp
