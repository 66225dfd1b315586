#pragma once

// Finite abelian grading groups (products of cyclic groups), bicharacters
// valued in roots of unity, and graded vector spaces. Together these model
// the braided category of G-graded vector spaces with braiding
// sigma(x (x) y) = beta(|x|, |y|) y (x) x on homogeneous vectors.

#include <cstddef>
#include <string>
#include <vector>

#include "hopf/mat.hpp"

namespace hopf {

/// Exponent tuple reduced modulo the cyclic factor orders.
using GroupElement = std::vector<int>;

class GradingGroup {
public:
    GradingGroup() = default;
    explicit GradingGroup(std::vector<int> orders);

    const std::vector<int>& orders() const { return orders_; }
    std::size_t order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    GroupElement identity() const { return GroupElement(orders_.size(), 0); }
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement reduce(const GroupElement& a) const;
    bool contains(const GroupElement& a) const;

    /// Mixed-radix index, first factor most significant.
    std::size_t index_of(const GroupElement& a) const;
    GroupElement element(std::size_t index) const;

    bool operator==(const GradingGroup& o) const { return orders_ == o.orders_; }

    static std::string format(const GroupElement& g);

private:
    std::vector<int> orders_;
    std::size_t order_ = 1;
};

/// beta(g, h) = zeta^(g^T E h) for an integer exponent matrix E and a
/// primitive n-th root of unity zeta.
class Bicharacter {
public:
    Bicharacter() = default;
    Bicharacter(GradingGroup group, std::vector<std::vector<long>> exponents, const Scalar& root, unsigned root_order);

    /// beta == 1 on the given group.
    static Bicharacter trivial(GradingGroup group, const Field& field);

    const GradingGroup& group() const { return group_; }
    const std::vector<std::vector<long>>& exponents() const { return exponents_; }
    const Scalar& root() const { return root_; }
    unsigned root_order() const { return root_order_; }

    Scalar operator()(const GroupElement& g, const GroupElement& h) const;
    Scalar at(std::size_t gi, std::size_t hi) const { return table_[gi * group_.order() + hi]; }

    /// Checks beta(g+g',h) = beta(g,h)beta(g',h) and the mirrored identity
    /// over every triple of group elements.
    bool is_bimultiplicative() const;
    bool is_trivial() const;

private:
    GradingGroup group_;
    std::vector<std::vector<long>> exponents_;
    Scalar root_;
    unsigned root_order_ = 1;
    std::vector<Scalar> table_;
};

/// Finite-dimensional graded vector space: one degree per basis vector.
struct GradedSpace {
    std::vector<GroupElement> degrees;
    std::size_t dim() const { return degrees.size(); }
};

/// Matrix of sigma_{X,Y}: X (x) Y -> Y (x) X.
Mat braiding_matrix(const Bicharacter& beta, const GradedSpace& x, const GradedSpace& y);
/// Matrix of (sigma_{X,Y})^{-1}: Y (x) X -> X (x) Y.
Mat inverse_braiding_matrix(const Bicharacter& beta, const GradedSpace& x, const GradedSpace& y);

/// Tensor product of graded spaces (degrees add).
GradedSpace tensor(const GradingGroup& g, const GradedSpace& x, const GradedSpace& y);
/// Dual space: the dual basis vector of e_i sits in degree -|e_i|.
GradedSpace dual(const GradingGroup& g, const GradedSpace& x);

}  // namespace hopf
