#pragma once

// Gaussian elimination over Q and F_p: echelon forms, kernels, affine
// solves, inverses. All results are deterministic: kernels are read off
// the reduced row-echelon form, one basis vector per free column in
// increasing column order.

#include <optional>
#include <vector>

#include "hopf/mat.hpp"

namespace hopf {

struct Echelon {
    Mat reduced;                       ///< reduced row-echelon form
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

Echelon rref(const Mat& a);
std::size_t rank(const Mat& a);

/// Basis of {x : A x = 0} as n x 1 columns.
std::vector<Mat> kernel(const Mat& a);

struct AffineSolution {
    Mat particular;              ///< n x k with A * particular = B
    std::vector<Mat> nullspace;  ///< basis of ker A, n x 1 each
};

/// Solves A X = B, or returns nullopt if the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Mat& a, const Mat& b);

std::optional<Mat> inverse(const Mat& a);
Scalar determinant(const Mat& a);
bool is_invertible(const Mat& a);

/// Basis (as columns of one matrix) of the column space, taken from the
/// pivot columns of the input.
Mat column_basis(const Mat& a);

/// True iff the column spaces coincide.
bool same_column_space(const Mat& a, const Mat& b);

}  // namespace hopf
