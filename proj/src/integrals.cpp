#include "hopf/integrals.hpp"

#include "hopf/linalg.hpp"
#include "hopf/pipeline.hpp"

namespace hopf {

IntegralSpace integral_space(const BraidedHopf& h, Side side) {
    const std::size_t d = h.dim();
    Mat system(0, d, h.field);
    const Mat id = h.identity();
    for (std::size_t i = 0; i < d; ++i) {
        const Mat mult = side == Side::Right ? h.right_mult(h.basis(i)) : h.left_mult(h.basis(i));
        system = vstack(system, mult - id.scaled(h.counit(0, i)));
    }
    return IntegralSpace{side, kernel(system)};
}

Mat right_integral(const BraidedHopf& h) {
    IntegralSpace s = integral_space(h, Side::Right);
    if (s.basis.size() != 1)
        throw Error("right integral space has dimension " + std::to_string(s.basis.size()) + ", expected 1");
    return s.basis.front();
}

Character modular_function(const BraidedHopf& h) {
    const Mat lambda = right_integral(h);
    const std::size_t d = h.dim();
    std::size_t p = 0;
    while (lambda[p].is_zero()) ++p;
    Mat alpha(1, d, h.field);
    for (std::size_t i = 0; i < d; ++i) {
        const Mat v = h.product(h.basis(i), lambda);
        alpha(0, i) = v[p] / lambda[p];
        if (v != lambda.scaled(alpha(0, i)))
            throw Error("modular function: basis element " + std::to_string(i) + " does not act by a scalar");
    }
    if (!is_character(h, alpha)) throw Error("modular function is not an algebra map");
    return Character{alpha};
}

Mat distinguished_grouplike(const BraidedHopf& h) {
    const Character a = modular_function(dual_hopf(h));
    const Mat g = a.row.transpose();
    if (h.delta * g != kron(g, g) || !(h.counit * g)(0, 0).is_one())
        throw Error("distinguished grouplike is not grouplike");
    return g;
}

bool is_unimodular(const BraidedHopf& h) { return modular_function(h).row == h.counit; }

RadfordResult radford_s4_check(const BraidedHopf& h) {
    if (!h.trivially_graded()) throw Error("radford_s4_check: only trivially graded Hopf algebras are supported");
    RadfordResult r;
    const std::size_t d = h.dim();
    r.alpha = modular_function(h);
    r.grouplike = distinguished_grouplike(h);
    const Mat alpha_inv = r.alpha.row * h.S;
    const Mat g_inv = h.S * r.grouplike;

    const Mat s2 = h.S * h.S;
    r.s4 = s2 * s2;
    auto twisted = [&](const Mat& left, const Mat& right) {
        return Pipeline({d}, h.field)
            .then(h.delta, 0, 1, {d, d})
            .then(h.delta, 1, 1, {d, d})
            .then(left, 0, 1, {})
            .then(right, 1, 1, {})
            .matrix();
    };
    const Mat conj = h.left_mult(r.grouplike) * h.right_mult(g_inv);
    r.rhs = conj * twisted(r.alpha.row, alpha_inv);
    if (auto diff = r.s4.first_difference(r.rhs)) r.witness = diff->second;
    r.holds = !r.witness.has_value();
    r.mirrored_holds = r.s4 == conj * twisted(alpha_inv, r.alpha.row);
    return r;
}

}  // namespace hopf
