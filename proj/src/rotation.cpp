#include "leapp/rotation.hpp"

namespace leapp {

RotationMatrix householder_for(const Vector& g) {
    const Index n = g.size();
    if (std::abs(g.norm() - 1.0) > 1e-8) {
        throw Error(ErrorCode::NotUnitVector, "g must have unit norm");
    }
    Vector kappa = g;
    kappa[0] -= 1.0;
    const double norm = kappa.norm();
    if (norm < 1e-12) {
        return {Matrix::Identity(n, n)};
    }
    kappa /= norm;
    Matrix O = Matrix::Identity(n, n) - 2.0 * kappa * kappa.transpose();
    return {std::move(O)};
}

RotatedData rotate_and_split(const DataMatrix& Y, const StudyDesign& d, const RotationMatrix& O) {
    validate(Y, d);
    const Index n = Y.subjects();
    if (O.O.rows() != n || O.O.cols() != n) {
        throw Error(ErrorCode::DimensionMismatch, "rotation matrix must be n x n");
    }
    RotatedData out;
    const Matrix Yr = Y.values * O.O.transpose();  // N x n
    out.y_first = Yr.col(0);
    out.y_rest = Yr.rightCols(n - 1);
    const Index s = d.s();
    if (s > 0) {
        const Matrix Xr = O.O * d.X;  // n x s
        out.x_first = Xr.row(0).transpose();
        out.x_rest = Xr.bottomRows(n - 1);
    } else {
        out.x_first = Vector(0);
        out.x_rest = Matrix(n - 1, 0);
    }
    return out;
}

}  // namespace leapp
