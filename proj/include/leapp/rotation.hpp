#ifndef LEAPP_ROTATION_HPP
#define LEAPP_ROTATION_HPP

#include "leapp/types.hpp"

namespace leapp {

/// Orthogonal n x n matrix with O g = e1.
struct RotationMatrix {
    Matrix O;
};

/// Rotated data split into the primary column and the primary-free block.
struct RotatedData {
    Vector y_first;  // N, first column of Y O^T (equals Y g)
    Matrix y_rest;   // N x (n-1)
    Vector x_first;  // s, first row of O X
    Matrix x_rest;   // (n-1) x s
};

/// Householder reflector O = I - 2 kappa kappa^T with kappa = (g - e1)/||g - e1||.
/// Returns the identity when g is already e1 (the formula degenerates there
/// while O g = e1 still holds).
RotationMatrix householder_for(const Vector& g);

/// Applies O to Y and X and splits off the first rotated column/row.
RotatedData rotate_and_split(const DataMatrix& Y, const StudyDesign& d, const RotationMatrix& O);

}  // namespace leapp

#endif
