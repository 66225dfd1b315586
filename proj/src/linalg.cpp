#include "hopf/linalg.hpp"

#include <cstdint>

namespace hopf {

namespace {

// Residue-only elimination. Keeps entries as machine words, which is an
// order of magnitude faster than going through Scalar for F_p systems.
Echelon rref_prime(const Mat& a) {
    const std::uint64_t p = a.field().characteristic();
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::uint64_t> m(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i * cols + j] = a(i, j).residue();

    auto inv = [p](std::uint64_t x) {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
        std::uint64_t s = inv(m[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j) m[r * cols + j] = m[r * cols + j] * s % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::uint64_t f = m[i * cols + c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                std::uint64_t t = m[r * cols + j];
                if (t) m[i * cols + j] = (m[i * cols + j] + (p - f) * t) % p;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    Mat out(rows, cols, a.field());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (m[i * cols + j]) out(i, j) = Scalar(static_cast<std::int64_t>(m[i * cols + j]), static_cast<std::uint32_t>(p));
    return {std::move(out), std::move(pivots)};
}

Echelon rref_rational(const Mat& a) {
    Mat m = a;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        Scalar s = m(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) *= s;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

Echelon rref(const Mat& a) {
    if (a.field().kind() == Field::Kind::Prime) return rref_prime(a);
    return rref_rational(a);
}

std::size_t rank(const Mat& a) { return rref(a).pivots.size(); }

std::vector<Mat> kernel(const Mat& a) {
    Echelon e = rref(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Mat> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Mat v(n, 1, a.field());
        v[f] = a.field().one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            const Scalar& x = e.reduced(r, f);
            if (!x.is_zero()) v[e.pivots[r]] = -x;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<AffineSolution> solve_affine(const Mat& a, const Mat& b) {
    if (!a.field().compatible(b.field())) throw FieldMismatch("solve_affine: mixed fields");
    if (a.rows() != b.rows()) throw DimensionMismatch("solve_affine: row counts differ");
    const std::size_t n = a.cols(), k = b.cols();
    Echelon e = rref(hstack(a, b));
    Mat x(n, k, a.field());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        std::size_t c = e.pivots[r];
        if (c >= n) return std::nullopt;
        for (std::size_t j = 0; j < k; ++j) x(c, j) = e.reduced(r, n + j);
    }
    return AffineSolution{std::move(x), kernel(a)};
}

std::optional<Mat> inverse(const Mat& a) {
    if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Echelon e = rref(hstack(a, Mat::identity(n, a.field())));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    return e.reduced.columns(n, n);
}

Scalar determinant(const Mat& a) {
    if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    Mat m = a;
    const std::size_t n = a.rows();
    Scalar det = a.field().one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c).is_zero()) ++piv;
        if (piv == n) return a.field().zero();
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        Scalar s = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Scalar f = m(i, c) * s;
            for (std::size_t j = c; j < n; ++j)
                if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

bool is_invertible(const Mat& a) { return a.is_square() && rank(a) == a.rows(); }

Mat column_basis(const Mat& a) {
    Echelon e = rref(a);
    Mat out(a.rows(), e.pivots.size(), a.field());
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        for (std::size_t i = 0; i < a.rows(); ++i) out(i, k) = a(i, e.pivots[k]);
    return out;
}

bool same_column_space(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) return false;
    std::size_t ra = rank(a), rb = rank(b);
    return ra == rb && rank(hstack(a, b)) == ra;
}

}  // namespace hopf
