#include "hopf/mat.hpp"

#include <sstream>

namespace hopf {

Mat::Mat(std::size_t rows, std::size_t cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

Mat Mat::identity(std::size_t n, const Field& field) {
    Mat m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

Mat Mat::unit_vector(std::size_t n, std::size_t i, const Field& field) {
    Mat m(n, 1, field);
    m[i] = field.one();
    return m;
}

Mat Mat::from_ints(const std::vector<std::vector<long>>& rows, const Field& field) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    Mat m(r, c, field);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("ragged integer matrix");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
}

Mat Mat::from_columns(std::span<const Mat> columns, std::size_t rows, const Field& field) {
    Mat m(rows, columns.size(), field);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        const Mat& c = columns[j];
        if (c.rows() != rows || c.cols() != 1) throw DimensionMismatch("from_columns: not a column of the right length");
        if (!c.field().compatible(field)) throw FieldMismatch("from_columns: mixed fields");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = c[i];
    }
    return m;
}

Mat Mat::column(std::size_t j) const { return columns(j, 1); }

Mat Mat::columns(std::size_t first, std::size_t count) const {
    Mat m(rows_, count, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
    return m;
}

Mat Mat::row(std::size_t i) const {
    Mat m(1, cols_, field_);
    for (std::size_t j = 0; j < cols_; ++j) m(0, j) = (*this)(i, j);
    return m;
}

Mat Mat::transpose() const {
    Mat m(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

void Mat::require_shape(const Mat& o, const char* op) const {
    if (!field_.compatible(o.field_)) throw FieldMismatch(std::string(op) + ": mixed fields");
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw DimensionMismatch(std::string(op) + ": shapes " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                " and " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    }
}

Mat Mat::operator*(const Mat& o) const {
    if (!field_.compatible(o.field_)) throw FieldMismatch("matrix product: mixed fields");
    if (cols_ != o.rows_) {
        throw DimensionMismatch("matrix product: " + std::to_string(rows_) + "x" + std::to_string(cols_) + " times " +
                                std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    }
    Mat m(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o(k, j);
                if (!b.is_zero()) m(i, j) += a * b;
            }
        }
    }
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    Mat m = *this;
    m += o;
    return m;
}

Mat& Mat::operator+=(const Mat& o) {
    require_shape(o, "matrix sum");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Mat Mat::operator-(const Mat& o) const {
    require_shape(o, "matrix difference");
    Mat m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
    return m;
}

Mat Mat::operator-() const {
    Mat m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat m = *this;
    for (auto& x : m.data_) x *= s;
    return m;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_.compatible(o.field_) && data_ == o.data_;
}

bool Mat::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? field_.one() : field_.zero())) return false;
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> Mat::first_difference(const Mat& o) const {
    require_shape(o, "comparison");
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != o(i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

std::vector<std::vector<std::string>> Mat::to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i].reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
    }
    return out;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).to_string();
    }
    os << "]";
    return os.str();
}

Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row counts differ");
    if (!a.field().compatible(b.field())) throw FieldMismatch("hstack: mixed fields");
    Mat m(a.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
    if (!a.field().compatible(b.field())) throw FieldMismatch("vstack: mixed fields");
    Mat m(a.rows() + b.rows(), a.cols(), a.field());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) m(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) m(a.rows() + i, j) = b(i, j);
    }
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    if (!a.field().compatible(b.field())) throw FieldMismatch("kron: mixed fields");
    Mat m(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Scalar& y = b(k, l);
                    if (!y.is_zero()) m(i * b.rows() + k, j * b.cols() + l) = x * y;
                }
        }
    return m;
}

}  // namespace hopf
