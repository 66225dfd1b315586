#pragma once

// Dense row-major matrices of exact scalars.
//
// Tensor legs are flattened left to right: the basis vector e_i (x) e_j of
// X (x) Y has index i * dim(Y) + j. Linear maps X -> Y are stored as
// dim(Y) x dim(X) matrices acting on column vectors, so a structure map
// such as the multiplication H (x) H -> H is a dim x dim^2 matrix.

#include <cstddef>
#include <optional>
#include <utility>
#include <span>
#include <string>
#include <vector>

#include "hopf/field.hpp"

namespace hopf {

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, const Field& field);

    static Mat zero(std::size_t rows, std::size_t cols, const Field& field) { return Mat(rows, cols, field); }
    static Mat identity(std::size_t n, const Field& field);
    /// Column vector e_i of length n.
    static Mat unit_vector(std::size_t n, std::size_t i, const Field& field);
    static Mat from_ints(const std::vector<std::vector<long>>& rows, const Field& field);
    /// Concatenates n x 1 column vectors side by side.
    static Mat from_columns(std::span<const Mat> columns, std::size_t rows, const Field& field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    /// Entry of a column vector.
    const Scalar& operator[](std::size_t i) const { return data_[i]; }
    Scalar& operator[](std::size_t i) { return data_[i]; }

    Mat column(std::size_t j) const;
    Mat row(std::size_t i) const;
    Mat transpose() const;
    /// Columns [first, first + count).
    Mat columns(std::size_t first, std::size_t count) const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Scalar& s) const;
    Mat& operator+=(const Mat& o);

    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;
    bool is_square() const { return rows_ == cols_; }

    /// First (row, col) where the two matrices differ; requires equal shapes.
    std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Mat& o) const;

    std::vector<std::vector<std::string>> to_strings() const;
    std::string to_string() const;

private:
    void require_shape(const Mat& o, const char* op) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_;
    std::vector<Scalar> data_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

/// Kronecker product with (i (x) j) = i * dim(B) + j.
Mat kron(const Mat& a, const Mat& b);

}  // namespace hopf
