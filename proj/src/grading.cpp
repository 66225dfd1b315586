#include "hopf/grading.hpp"

#include <sstream>

namespace hopf {

GradingGroup::GradingGroup(std::vector<int> orders) : orders_(std::move(orders)) {
    for (int n : orders_) {
        if (n <= 0) throw Error("grading group factor orders must be positive");
        order_ *= static_cast<std::size_t>(n);
    }
}

GroupElement GradingGroup::reduce(const GroupElement& a) const {
    if (a.size() != orders_.size()) throw DimensionMismatch("group element of the wrong rank");
    GroupElement r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        int v = a[i] % orders_[i];
        r[i] = v < 0 ? v + orders_[i] : v;
    }
    return r;
}

GroupElement GradingGroup::add(const GroupElement& a, const GroupElement& b) const {
    if (a.size() != orders_.size() || b.size() != orders_.size()) throw DimensionMismatch("group element of the wrong rank");
    GroupElement r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return reduce(r);
}

GroupElement GradingGroup::negate(const GroupElement& a) const {
    GroupElement r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return reduce(r);
}

bool GradingGroup::contains(const GroupElement& a) const {
    if (a.size() != orders_.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] >= orders_[i]) return false;
    return true;
}

std::size_t GradingGroup::index_of(const GroupElement& a) const {
    GroupElement r = reduce(a);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < r.size(); ++i) idx = idx * static_cast<std::size_t>(orders_[i]) + static_cast<std::size_t>(r[i]);
    return idx;
}

GroupElement GradingGroup::element(std::size_t index) const {
    GroupElement r(orders_.size());
    for (std::size_t i = orders_.size(); i-- > 0;) {
        r[i] = static_cast<int>(index % static_cast<std::size_t>(orders_[i]));
        index /= static_cast<std::size_t>(orders_[i]);
    }
    return r;
}

std::string GradingGroup::format(const GroupElement& g) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
    os << ")";
    return os.str();
}

Bicharacter::Bicharacter(GradingGroup group, std::vector<std::vector<long>> exponents, const Scalar& root,
                         unsigned root_order)
    : group_(std::move(group)), exponents_(std::move(exponents)), root_(root), root_order_(root_order) {
    const std::size_t r = group_.orders().size();
    if (exponents_.size() != r) throw DimensionMismatch("bicharacter exponent matrix has the wrong size");
    for (const auto& row : exponents_)
        if (row.size() != r) throw DimensionMismatch("bicharacter exponent matrix is not square");
    if (root_order_ == 0) throw Error("bicharacter root order must be positive");
    if (!root_.pow(root_order_).is_one()) throw Error("bicharacter root is not a root of unity of the stated order");

    const std::size_t n = group_.order();
    table_.reserve(n * n);
    for (std::size_t gi = 0; gi < n; ++gi) {
        GroupElement g = group_.element(gi);
        for (std::size_t hi = 0; hi < n; ++hi) {
            GroupElement h = group_.element(hi);
            long e = 0;
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < r; ++b) e += static_cast<long>(g[a]) * exponents_[a][b] * h[b];
            long m = e % static_cast<long>(root_order_);
            if (m < 0) m += root_order_;
            table_.push_back(root_.pow(m));
        }
    }
}

Bicharacter Bicharacter::trivial(GradingGroup group, const Field& field) {
    const std::size_t r = group.orders().size();
    return Bicharacter(std::move(group), std::vector<std::vector<long>>(r, std::vector<long>(r, 0)), field.one(), 1);
}

Scalar Bicharacter::operator()(const GroupElement& g, const GroupElement& h) const {
    return at(group_.index_of(g), group_.index_of(h));
}

bool Bicharacter::is_bimultiplicative() const {
    const std::size_t n = group_.order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ab = group_.index_of(group_.add(group_.element(a), group_.element(b)));
            for (std::size_t c = 0; c < n; ++c) {
                if (at(ab, c) != at(a, c) * at(b, c)) return false;
                if (at(c, ab) != at(c, a) * at(c, b)) return false;
            }
        }
    return true;
}

bool Bicharacter::is_trivial() const {
    for (const auto& v : table_)
        if (!v.is_one()) return false;
    return true;
}

Mat braiding_matrix(const Bicharacter& beta, const GradedSpace& x, const GradedSpace& y) {
    const std::size_t dx = x.dim(), dy = y.dim();
    const Field field = Field::of(beta.root());
    Mat s(dy * dx, dx * dy, field);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j) s(j * dx + i, i * dy + j) = beta(x.degrees[i], y.degrees[j]);
    return s;
}

Mat inverse_braiding_matrix(const Bicharacter& beta, const GradedSpace& x, const GradedSpace& y) {
    const std::size_t dx = x.dim(), dy = y.dim();
    const Field field = Field::of(beta.root());
    Mat s(dx * dy, dy * dx, field);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j) s(i * dy + j, j * dx + i) = beta(x.degrees[i], y.degrees[j]).inverse();
    return s;
}

GradedSpace tensor(const GradingGroup& g, const GradedSpace& x, const GradedSpace& y) {
    GradedSpace out;
    out.degrees.reserve(x.dim() * y.dim());
    for (const auto& a : x.degrees)
        for (const auto& b : y.degrees) out.degrees.push_back(g.add(a, b));
    return out;
}

GradedSpace dual(const GradingGroup& g, const GradedSpace& x) {
    GradedSpace out;
    for (const auto& a : x.degrees) out.degrees.push_back(g.negate(a));
    return out;
}

}  // namespace hopf
