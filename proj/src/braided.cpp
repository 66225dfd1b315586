#include "hopf/braided.hpp"

#include <random>

#include "hopf/corpus.hpp"
#include "hopf/extension.hpp"
#include "hopf/integrals.hpp"
#include "hopf/linalg.hpp"
#include "hopf/pipeline.hpp"

namespace hopf {

namespace {

void compare(AxiomReport& r, const std::string& name, const Mat& lhs, const Mat& rhs) {
    AxiomCheck c;
    c.name = name;
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        c.passed = false;
        c.detail = "shape mismatch";
    } else if (auto d = lhs.first_difference(rhs)) {
        c.passed = false;
        c.witness = d;
        c.detail = "lhs " + lhs(d->first, d->second).to_string() + " != rhs " + rhs(d->first, d->second).to_string();
    }
    r.checks.push_back(std::move(c));
}

void degree_check(AxiomReport& r, const std::string& name, const Mat& f, const GradedSpace& x,
                  const GradedSpace& y) {
    AxiomCheck c;
    c.name = name;
    if (auto w = degree_violation(f, x, y)) {
        c.passed = false;
        c.witness = w;
    }
    r.checks.push_back(std::move(c));
}

// Indices of basis vectors of degree g.
std::vector<std::size_t> indices_of_degree(const GradedSpace& v, const GroupElement& g) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (v.degrees[i] == g) out.push_back(i);
    return out;
}

// Kernel of `a` restricted to the coordinates of each degree in turn, so
// every basis vector returned is homogeneous.
std::vector<std::pair<Mat, GroupElement>> graded_kernel(const Mat& a, const GradedSpace& v, const GradingGroup& g) {
    std::vector<std::pair<Mat, GroupElement>> out;
    for (std::size_t gi = 0; gi < g.order(); ++gi) {
        const GroupElement deg = g.element(gi);
        const auto idx = indices_of_degree(v, deg);
        if (idx.empty()) continue;
        Mat sub(a.rows(), idx.size(), a.field());
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = a(r, idx[c]);
        for (const Mat& k : kernel(sub)) {
            Mat full(v.dim(), 1, a.field());
            for (std::size_t c = 0; c < idx.size(); ++c) full[idx[c]] = k[c];
            out.emplace_back(std::move(full), deg);
        }
    }
    return out;
}

Scalar random_scalar(std::mt19937_64& rng, const Field& field) {
    const std::uint64_t x = rng();
    if (field.kind() == Field::Kind::Prime) return field.from_int(static_cast<std::int64_t>(x % field.characteristic()));
    return field.from_int(static_cast<std::int64_t>(x % 1000) - 500);
}

}  // namespace

IntegralDatum integral_datum(const BraidedHopf& h) {
    const std::size_t d = h.dim();
    const Mat id = h.identity();
    Mat system(0, d, h.field);
    for (std::size_t i = 0; i < d; ++i)
        system = vstack(system, h.right_mult(h.basis(i)) - id.scaled(h.counit(0, i)));
    const auto sols = graded_kernel(system, h.space, h.group());
    if (sols.size() != 1)
        throw Error(h.name + ": integral space has dimension " + std::to_string(sols.size()) + " in homogeneous parts");
    IntegralDatum out;
    out.Lambda = sols.front().first;
    out.degree = sols.front().second;

    // (lambda (x) id) delta = lambda (x) u and lambda(Lambda) = 1, unknowns lambda_a.
    Mat a(d * d + 1, d, h.field);
    Mat b(d * d + 1, 1, h.field);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            const std::size_t row = x * d + y;
            for (std::size_t s = 0; s < d; ++s) a(row, s) += h.delta(s * d + y, x);
            a(row, x) -= h.u[y];
        }
    for (std::size_t s = 0; s < d; ++s) a(d * d, s) = out.Lambda[s];
    b[d * d] = h.field.one();
    const auto sol = solve_affine(a, b);
    if (!sol) throw Error(h.name + ": no cointegral normalized against the integral");
    if (!sol->nullspace.empty()) throw Error(h.name + ": cointegral is not unique");
    out.lambda = sol->particular.transpose();
    for (std::size_t s = 0; s < d; ++s)
        if (!out.lambda(0, s).is_zero() && h.degree(s) != out.degree)
            throw Error(h.name + ": cointegral is not supported in the integral degree");
    return out;
}

Character braided_modular_function(const BraidedHopf& h, const IntegralDatum& dat) {
    const std::size_t d = h.dim();
    std::size_t pivot = 0;
    while (dat.Lambda[pivot].is_zero()) ++pivot;
    Mat alpha(1, d, h.field);
    for (std::size_t i = 0; i < d; ++i) {
        const Mat v = h.product(h.basis(i), dat.Lambda);
        const Scalar c = v[pivot] / dat.Lambda[pivot];
        if (v != dat.Lambda.scaled(c)) throw Error(h.name + ": h * Lambda is not a multiple of Lambda");
        alpha(0, i) = c;
    }
    if (!is_character(h, alpha)) throw Error(h.name + ": modular function is not a character");
    return Character{alpha};
}

Character braided_modular_function(const BraidedHopf& h) { return braided_modular_function(h, integral_datum(h)); }

Pairing pairing_phi(const BraidedHopf& h, const IntegralDatum& dat) {
    const std::size_t d = h.dim();
    Pairing p;
    p.phi = Mat(d, d, h.field);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t j = 0; j < d; ++j) p.phi(j, x) = (dat.lambda * h.product(h.basis(x), h.basis(j)))(0, 0);
    auto inv = inverse(p.phi);
    if (!inv) throw Error(h.name + ": the pairing is degenerate");
    p.phi_inverse = std::move(*inv);
    return p;
}

Mat monodromy(const Bicharacter& beta, const GroupElement& k, const GradedSpace& v) {
    Mat out(v.dim(), v.dim(), Field::of(beta.root()));
    for (std::size_t i = 0; i < v.dim(); ++i) out(i, i) = beta(k, v.degrees[i]) * beta(v.degrees[i], k);
    return out;
}

MonodromyLaws monodromy_laws(const Bicharacter& beta, const GradedSpace& v) {
    const GradingGroup& g = beta.group();
    MonodromyLaws laws;
    laws.unit = monodromy(beta, g.identity(), v).is_identity();
    laws.tensor = true;
    laws.dual = true;
    for (std::size_t a = 0; a < g.order(); ++a) {
        const GroupElement ka = g.element(a);
        const Mat oa = monodromy(beta, ka, v);
        const auto inv = inverse(oa);
        if (!inv || *inv != monodromy(beta, g.negate(ka), v)) laws.dual = false;
        for (std::size_t b = 0; b < g.order(); ++b) {
            const GroupElement kb = g.element(b);
            if (monodromy(beta, g.add(ka, kb), v) != oa * monodromy(beta, kb, v)) laws.tensor = false;
        }
    }
    return laws;
}

Mat nakayama(const BraidedHopf& h, const IntegralDatum& dat) {
    const Pairing p = pairing_phi(h, dat);
    const std::size_t d = h.dim();
    Mat t(d, d, h.field);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) t(a, b) = h.bichar(h.degree(a), h.degree(b)) * p.phi(a, b);
    return p.phi_inverse.transpose() * t;
}

NakayamaCheck nakayama_formula_check(const BraidedHopf& h) {
    const IntegralDatum dat = integral_datum(h);
    const Character alpha = braided_modular_function(h, dat);
    NakayamaCheck out;
    out.nakayama = nakayama(h, dat);
    const Mat s_inv = antipode_inverse(h);
    out.formula = s_inv * s_inv * kron(alpha.row, h.identity()) * h.delta * monodromy(h.bichar, dat.degree, h.space);
    out.holds = out.nakayama == out.formula;
    out.automorphism =
        out.nakayama * h.u == h.u && is_invertible(out.nakayama) && !degree_violation(out.nakayama, h.space, h.space);
    out.multiplicative = out.nakayama * h.m == h.m * kron(out.nakayama, out.nakayama);
    return out;
}

AxiomReport verify_bimodule(const HopfBimodule& mod) {
    const BraidedHopf& h = *mod.H;
    const std::size_t d = h.dim();
    const std::size_t n = mod.dim();
    const Field& k = h.field;
    const GradingGroup& g = h.group();
    if (mod.left.rows() != n || mod.left.cols() != d * n || mod.right.rows() != n || mod.right.cols() != n * d)
        throw DimensionMismatch(mod.label + ": action shapes do not match the space");
    AxiomReport r;
    degree_check(r, "degree(left)", mod.left, tensor(g, h.space, mod.space), mod.space);
    degree_check(r, "degree(right)", mod.right, tensor(g, mod.space, h.space), mod.space);
    const Mat idn = Mat::identity(n, k);
    const Mat idh = h.identity();
    compare(r, "left associativity", mod.left * kron(h.m, idn), mod.left * kron(idh, mod.left));
    compare(r, "left unit", mod.left * kron(h.u, idn), idn);
    compare(r, "right associativity", mod.right * kron(mod.right, idh), mod.right * kron(idn, h.m));
    compare(r, "right unit", mod.right * kron(idn, h.u), idn);
    compare(r, "bimodule", mod.left * kron(idh, mod.right), mod.right * kron(mod.left, idh));
    if (mod.coaction) {
        const Mat& delta = *mod.coaction;
        if (delta.rows() != d * n || delta.cols() != n) throw DimensionMismatch(mod.label + ": coaction shape");
        degree_check(r, "degree(coaction)", delta, mod.space, tensor(g, h.space, mod.space));
        compare(r, "coassociativity", kron(h.delta, idn) * delta, kron(idh, delta) * delta);
        compare(r, "counit", kron(h.counit, idn) * delta, idn);
        const Mat lhs_left = delta * mod.left;
        const Mat rhs_left = Pipeline({d, n}, k)
                                 .then(h.delta, 0, 1, {d, d})
                                 .then(delta, 2, 1, {d, n})
                                 .then(h.braiding(), 1, 2, {d, d})
                                 .then(h.m, 0, 2)
                                 .then(mod.left, 1, 2)
                                 .matrix();
        compare(r, "left compatibility", lhs_left, rhs_left);
        const Mat lhs_right = delta * mod.right;
        const Mat rhs_right = Pipeline({n, d}, k)
                                  .then(delta, 0, 1, {d, n})
                                  .then(h.delta, 2, 1, {d, d})
                                  .then(braiding_matrix(h.bichar, mod.space, h.space), 1, 2, {d, n})
                                  .then(h.m, 0, 2)
                                  .then(mod.right, 1, 2)
                                  .matrix();
        compare(r, "right compatibility", lhs_right, rhs_right);
    }
    return r;
}

HopfBimodule regular_bimodule(const BraidedHopf& h) {
    return HopfBimodule{&h, h.space, h.m, h.m, h.delta, h.name};
}

HopfBimodule unit_bimodule(const BraidedHopf& h) {
    return HopfBimodule{&h, GradedSpace{{h.group().identity()}}, h.counit, h.counit, std::nullopt, "1"};
}

HopfBimodule trivial_left_bimodule(const BraidedHopf& h, const GradedSpace& space, const Mat& right,
                                   std::string label) {
    const Mat left = kron(h.counit, Mat::identity(space.dim(), h.field));
    return HopfBimodule{&h, space, left, right, std::nullopt, std::move(label)};
}

HopfBimodule bar_tensor(const HopfBimodule& a, const HopfBimodule& b) {
    if (a.H != b.H) throw Error("bar_tensor: bimodules over different Hopf algebras");
    const BraidedHopf& h = *a.H;
    const std::size_t d = h.dim();
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    HopfBimodule out;
    out.H = &h;
    out.space = tensor(h.group(), a.space, b.space);
    out.label = a.label + " (x) " + b.label;
    out.left = Pipeline({d, na, nb}, h.field)
                   .then(h.delta, 0, 1, {d, d})
                   .then(braiding_matrix(h.bichar, h.space, a.space), 1, 2, {na, d})
                   .then(a.left, 0, 2)
                   .then(b.left, 1, 2)
                   .matrix();
    out.right = Pipeline({na, nb, d}, h.field)
                    .then(h.delta, 2, 1, {d, d})
                    .then(braiding_matrix(h.bichar, b.space, h.space), 1, 2, {d, nb})
                    .then(a.right, 0, 2)
                    .then(b.right, 1, 2)
                    .matrix();
    if (a.coaction) out.coaction = kron(*a.coaction, Mat::identity(nb, h.field));
    return out;
}

HopfBimodule dual_bimodule(const HopfBimodule& mod) {
    const BraidedHopf& h = *mod.H;
    const GradingGroup& g = h.group();
    const std::size_t d = h.dim();
    const std::size_t n = mod.dim();
    const Mat s_inv = antipode_inverse(h);
    HopfBimodule out;
    out.H = &h;
    out.space = dual(g, mod.space);
    out.label = mod.label + "^v";
    // (h |> f)(m) = beta(|h|, |f|) f(S(h) |> m)
    out.left = Mat(n, d * n, h.field);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t i = 0; i < n; ++i) {
            const Scalar c = h.bichar(h.degree(a), out.space.degrees[i]);
            for (std::size_t j = 0; j < n; ++j) {
                Scalar s = h.field.zero();
                for (std::size_t x = 0; x < d; ++x)
                    if (!h.S(x, a).is_zero()) s += h.S(x, a) * mod.left(i, x * n + j);
                out.left(j, a * n + i) = c * s;
            }
        }
    // (f <| h)(m) = beta(|h|, |h|) beta(|f|, |h|) f(m <| S^{-1}(h))
    out.right = Mat(n, n * d, h.field);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t i = 0; i < n; ++i) {
            const Scalar c = h.bichar(h.degree(a), h.degree(a)) * h.bichar(out.space.degrees[i], h.degree(a));
            for (std::size_t j = 0; j < n; ++j) {
                Scalar s = h.field.zero();
                for (std::size_t x = 0; x < d; ++x)
                    if (!s_inv(x, a).is_zero()) s += s_inv(x, a) * mod.right(i, j * d + x);
                out.right(j, i * d + a) = c * s;
            }
        }
    return out;
}

HopfBimodule dual_hopf_bimodule(const BraidedHopf& h) {
    HopfBimodule out = dual_bimodule(regular_bimodule(h));
    const std::size_t d = h.dim();
    // delta(e_i*) = sum_{x, j} delta_H[(i, x), j] e_x (x) e_j*
    Mat coaction(d * d, d, h.field);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t j = 0; j < d; ++j) coaction(x * d + j, i) = h.delta(i * d + x, j);
    out.coaction = std::move(coaction);
    return out;
}

Mat evaluation(const HopfBimodule& mod) {
    const std::size_t n = mod.dim();
    Mat ev(1, n * n, mod.H->field);
    for (std::size_t i = 0; i < n; ++i) ev(0, i * n + i) = mod.H->field.one();
    return ev;
}

Mat coevaluation(const HopfBimodule& mod) { return evaluation(mod).transpose(); }

bool is_bimodule_map(const Mat& f, const HopfBimodule& a, const HopfBimodule& b) {
    const Mat idh = a.H->identity();
    return f * a.left == b.left * kron(idh, f) && f * a.right == b.right * kron(f, idh);
}

Mat adjoint_action(const HopfBimodule& mod) {
    const BraidedHopf& h = *mod.H;
    const std::size_t d = h.dim();
    const std::size_t n = mod.dim();
    return Pipeline({n, d}, h.field)
        .then(h.delta, 1, 1, {d, d})
        .then(braiding_matrix(h.bichar, mod.space, h.space), 0, 2, {d, n})
        .then(h.S, 0, 1)
        .then(mod.right, 1, 2)
        .then(mod.left, 0, 2)
        .matrix();
}

Coinvariants coinvariants(const HopfBimodule& mod) {
    if (!mod.coaction) throw Error(mod.label + ": coinvariants need a coaction");
    const BraidedHopf& h = *mod.H;
    const std::size_t d = h.dim();
    const std::size_t n = mod.dim();
    const Mat idn = Mat::identity(n, h.field);
    const Mat eq1 = *mod.coaction - kron(h.u, idn);
    const Mat pi = mod.left * kron(h.S, idn) * *mod.coaction;
    const Mat eq2 = pi - idn;

    Coinvariants out;
    std::vector<Mat> cols;
    for (auto& [v, deg] : graded_kernel(eq1, mod.space, h.group())) {
        cols.push_back(std::move(v));
        out.degrees.push_back(std::move(deg));
    }
    out.basis = Mat::from_columns(cols, n, h.field);
    const auto k2 = kernel(eq2);
    const Mat basis2 = Mat::from_columns(k2, n, h.field);
    out.equalizers_agree = cols.size() == k2.size() && (cols.empty() || same_column_space(out.basis, basis2));

    out.adjoint_preserves = true;
    const Mat ad = adjoint_action(mod);
    const std::size_t r = cols.size();
    for (std::size_t x = 0; x < d; ++x) {
        Mat op(r, r, h.field);
        if (r > 0) {
            const Mat images = ad * kron(out.basis, h.basis(x));
            const auto sol = solve_affine(out.basis, images);
            if (!sol) {
                out.adjoint_preserves = false;
            } else {
                op = sol->particular;
            }
        }
        out.ops.push_back(std::move(op));
    }
    return out;
}

DualCoinvariantCheck dual_coinvariants_check(const BraidedHopf& h) {
    const IntegralDatum dat = integral_datum(h);
    const Character alpha = braided_modular_function(h, dat);
    const HopfBimodule dualh = dual_hopf_bimodule(h);
    const Coinvariants c = coinvariants(dualh);
    DualCoinvariantCheck out;
    out.dim = c.degrees.size();
    if (out.dim != 1 || !c.equalizers_agree || !c.adjoint_preserves) return out;
    out.degree = c.degrees.front();
    Mat row(1, h.dim(), h.field);
    for (std::size_t x = 0; x < h.dim(); ++x) row(0, x) = c.ops[x](0, 0);
    out.action = Character{row};
    out.pass = verify_bimodule(dualh).ok() && out.degree == h.group().negate(dat.degree) && out.action == alpha;
    return out;
}

namespace {

// Right action matrix r x (r * d) from per-element operators.
Mat action_from_ops(const std::vector<Mat>& ops, std::size_t r, const Field& k) {
    const std::size_t d = ops.size();
    Mat out(r, r * d, k);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t c = 0; c < r; ++c)
            for (std::size_t row = 0; row < r; ++row) out(row, c * d + x) = ops[x](row, c);
    return out;
}

}  // namespace

FundamentalTheoremCheck fundamental_theorem_check(const BraidedHopf& h) {
    FundamentalTheoremCheck out;
    const std::size_t d = h.dim();
    const HopfBimodule reg = regular_bimodule(h);
    auto fail = [&](const std::string& why) { out.failures.push_back(why); };

    struct Input {
        GradedSpace space;
        Mat right;
        std::string label;
    };
    const std::vector<Input> inputs = {
        {GradedSpace{{h.group().identity()}}, h.counit, "unit"},
        {h.space, h.m, "regular"},
    };
    std::vector<HopfBimodule> targets = {reg, dual_hopf_bimodule(h)};
    for (const Input& in : inputs) {
        const HopfBimodule v = trivial_left_bimodule(h, in.space, in.right, in.label);
        const HopfBimodule free = bar_tensor(reg, v);
        if (!verify_bimodule(free).ok()) fail("H (x) " + in.label + " is not a Hopf bimodule");
        const Coinvariants c = coinvariants(free);
        const Mat iota = kron(h.u, Mat::identity(v.dim(), h.field));
        if (c.degrees.size() != v.dim() || !same_column_space(iota, c.basis))
            fail("coinvariants of H (x) " + in.label + " differ from 1 (x) V");
        if (adjoint_action(free) * kron(iota, h.identity()) != iota * in.right)
            fail("1 (x) - is not right linear on " + in.label);
        targets.push_back(free);
    }
    for (const HopfBimodule& m : targets) {
        const Coinvariants c = coinvariants(m);
        const std::size_t r = c.degrees.size();
        if (!c.equalizers_agree) fail(m.label + ": equalizers disagree");
        if (!c.adjoint_preserves) fail(m.label + ": adjoint action leaves the coinvariants");
        if (r * d != m.dim()) {
            fail(m.label + ": dim coinvariants * dim H != dim M");
            continue;
        }
        const Mat mu = m.left * kron(h.identity(), c.basis);
        if (!is_invertible(mu)) fail(m.label + ": H (x) M^coH -> M is not invertible");
        const HopfBimodule w =
            trivial_left_bimodule(h, GradedSpace{c.degrees}, action_from_ops(c.ops, r, h.field), "coinv");
        const HopfBimodule free = bar_tensor(reg, w);
        if (!is_bimodule_map(mu, free, m)) fail(m.label + ": H (x) M^coH -> M is not a bimodule map");
        if (*m.coaction * mu != kron(h.identity(), mu) * *free.coaction)
            fail(m.label + ": H (x) M^coH -> M is not colinear");
    }
    out.pass = out.failures.empty();
    return out;
}

BraidedHopf bosonization(const BraidedHopf& h) {
    const GradingGroup& g = h.group();
    const std::size_t d = h.dim();
    const std::size_t n = g.order();
    const std::size_t dim = d * n;
    const Field& k = h.field;
    auto idx = [n](std::size_t x, std::size_t gi) { return x * n + gi; };
    auto deg_index = [&](std::size_t x) { return g.index_of(h.degree(x)); };

    BraidedHopf out;
    out.name = h.name + "#kG";
    out.field = k;
    out.bichar = Bicharacter::trivial(GradingGroup(std::vector<int>{}), k);
    out.space.degrees.assign(dim, GroupElement{});
    out.m = Mat(dim, dim * dim, k);
    out.u = Mat(dim, 1, k);
    out.delta = Mat(dim * dim, dim, k);
    out.counit = Mat(1, dim, k);
    out.S = Mat(dim, dim, k);

    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t ga = 0; ga < n; ++ga)
            for (std::size_t b = 0; b < d; ++b)
                for (std::size_t gb = 0; gb < n; ++gb) {
                    const Scalar twist = h.bichar.at(ga, deg_index(b));
                    const std::size_t gc = g.index_of(g.add(g.element(ga), g.element(gb)));
                    const std::size_t col = idx(a, ga) * dim + idx(b, gb);
                    for (std::size_t c = 0; c < d; ++c)
                        if (!h.m(c, a * d + b).is_zero()) out.m(idx(c, gc), col) += twist * h.m(c, a * d + b);
                }
    for (std::size_t c = 0; c < d; ++c) out.u[idx(c, 0)] = h.u[c];
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t gx = 0; gx < n; ++gx) {
            out.counit(0, idx(x, gx)) = h.counit(0, x);
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) {
                    const Scalar& c = h.delta(a * d + b, x);
                    if (c.is_zero()) continue;
                    const std::size_t ga = g.index_of(g.add(h.degree(b), g.element(gx)));
                    out.delta(idx(a, ga) * dim + idx(b, gx), idx(x, gx)) += c;
                }
            const GroupElement shift = g.negate(g.add(h.degree(x), g.element(gx)));
            const std::size_t gs = g.index_of(shift);
            const Scalar twist = h.bichar(shift, h.degree(x));
            for (std::size_t c = 0; c < d; ++c)
                if (!h.S(c, x).is_zero()) out.S(idx(c, gs), idx(x, gx)) = twist * h.S(c, x);
        }

    // Presentation: generators of H in degree 0 of kG, then the group generators.
    std::size_t unit_index = d;
    for (std::size_t c = 0; c < d; ++c)
        if (h.u[c].is_one() && h.u == h.basis(c)) unit_index = c;
    if (!h.words.empty() && unit_index < d) {
        for (std::size_t q : h.generators) out.generators.push_back(idx(q, 0));
        const std::size_t base = out.generators.size();
        for (std::size_t f = 0; f < g.orders().size(); ++f) {
            GroupElement e(g.orders().size(), 0);
            e[f] = 1;
            out.generators.push_back(idx(unit_index, g.index_of(e)));
        }
        out.words.resize(dim);
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t gx = 0; gx < n; ++gx) {
                std::vector<std::size_t> w = h.words[x];
                const GroupElement el = g.element(gx);
                for (std::size_t f = 0; f < el.size(); ++f) w.insert(w.end(), el[f], base + f);
                out.words[idx(x, gx)] = std::move(w);
            }
    }
    return out;
}

std::vector<Mat> grouplikes(const BraidedHopf& h) {
    std::vector<Mat> out;
    for (const Character& c : enumerate_characters(dual_hopf(h))) out.push_back(c.row.transpose());
    return out;
}

namespace {

// phi on every basis vector from generator images along the words.
Mat extend_along_words(const BraidedHopf& source, const BraidedHopf& target, const std::vector<Mat>& images) {
    Mat f(target.dim(), source.dim(), target.field);
    for (std::size_t b = 0; b < source.dim(); ++b) {
        Mat v = target.u;
        for (std::size_t q : source.words[b]) v = target.product(v, images[q]);
        for (std::size_t r = 0; r < target.dim(); ++r) f(r, b) = v[r];
    }
    return f;
}

}  // namespace

HopfIsoResult find_hopf_iso(const BraidedHopf& source, const BraidedHopf& target, std::uint64_t seed,
                            std::size_t trials) {
    HopfIsoResult out;
    if (source.dim() != target.dim()) {
        out.reason = "dimensions differ";
        return out;
    }
    if (!source.trivially_graded() || !target.trivially_graded()) {
        out.reason = "only trivially graded Hopf algebras are compared";
        return out;
    }
    if (source.words.size() != source.dim() || source.generators.empty()) {
        out.reason = "source has no generator presentation";
        return out;
    }
    const std::size_t ng = source.generators.size();
    const std::size_t d = source.dim();
    // For each generator: -1 if grouplike, else the basis index g of a (g, 1)-skew primitive.
    std::vector<long> kind(ng, -1);
    for (std::size_t q = 0; q < ng; ++q) {
        const Mat s = source.basis(source.generators[q]);
        const Mat ds = source.delta * s;
        if (ds == kron(s, s)) continue;
        const Mat rest = ds - kron(s, source.u);
        long found = -1;
        for (std::size_t gi = 0; gi < d && found < 0; ++gi)
            if (rest == kron(source.basis(gi), s)) found = static_cast<long>(gi);
        if (found < 0) {
            out.reason = "generator " + std::to_string(q) + " is neither grouplike nor skew primitive";
            return out;
        }
        kind[q] = found;
    }
    const std::vector<Mat> tg = grouplikes(target);
    std::vector<std::size_t> group_gens, skew_gens;
    for (std::size_t q = 0; q < ng; ++q) (kind[q] < 0 ? group_gens : skew_gens).push_back(q);

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> choice(group_gens.size(), 0);
    const Mat eye = target.identity();
    while (true) {
        std::vector<Mat> images(ng, Mat(target.dim(), 1, target.field));
        for (std::size_t k = 0; k < group_gens.size(); ++k) images[group_gens[k]] = tg[choice[k]];
        // Each skew generator's grouplike must be a word in grouplike generators.
        bool usable = true;
        std::vector<std::vector<Mat>> candidates;
        for (std::size_t q : skew_gens) {
            Mat gimg = target.u;
            for (std::size_t w : source.words[kind[q]]) {
                if (kind[w] >= 0) usable = false;
                else gimg = target.product(gimg, images[w]);
            }
            if (!usable) break;
            const Mat sys = target.delta - kron(eye, target.u) - kron(gimg, eye);
            const auto basis = kernel(sys);
            std::vector<Mat> cand = basis;
            for (std::size_t t = 0; t < trials && !basis.empty(); ++t) {
                Mat v(target.dim(), 1, target.field);
                for (const Mat& b : basis) v += b.scaled(random_scalar(rng, target.field));
                if (!v.is_zero()) cand.push_back(std::move(v));
            }
            candidates.push_back(std::move(cand));
        }
        if (usable) {
            std::vector<std::size_t> pick(skew_gens.size(), 0);
            bool empty = false;
            for (const auto& c : candidates) empty = empty || c.empty();
            while (!empty) {
                for (std::size_t k = 0; k < skew_gens.size(); ++k) images[skew_gens[k]] = candidates[k][pick[k]];
                const Mat f = extend_along_words(source, target, images);
                if (is_invertible(f) && check_hopf_map(HopfMap{&source, &target, f}).ok()) {
                    out.found = true;
                    out.map = f;
                    return out;
                }
                std::size_t k = 0;
                while (k < pick.size() && ++pick[k] == candidates[k].size()) pick[k++] = 0;
                if (k == pick.size()) break;
            }
        }
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == tg.size()) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    out.reason = "no generator assignment gave a Hopf isomorphism";
    return out;
}

ModularObjectCheck modular_object_check(const BraidedHopf& h, const std::optional<GroupElement>& ambient_degree) {
    const GradingGroup& g = h.group();
    const IntegralDatum dat = integral_datum(h);
    const Character alpha = braided_modular_function(h, dat);
    const BraidedHopf b = bosonization(h);
    ModularObjectCheck out;
    out.integral_degree = dat.degree;
    out.modular_bosonized = modular_function(b);
    // Int(H)* sits in degree -g_int; an object of degree e makes g act by beta(g, e)^{-1}.
    GroupElement e = g.negate(dat.degree);
    if (ambient_degree) e = g.add(e, g.reduce(*ambient_degree));
    const std::size_t n = g.order();
    Mat row(1, h.dim() * n, h.field);
    for (std::size_t x = 0; x < h.dim(); ++x)
        for (std::size_t gx = 0; gx < n; ++gx) row(0, x * n + gx) = alpha(x) * h.bichar(g.element(gx), e).inverse();
    out.predicted = Character{row};
    out.pass = out.modular_bosonized == out.predicted;
    return out;
}

BraidedFrobeniusReport braided_frobenius_criterion(const BraidedExtension& e, const IsoSearchOptions& opts) {
    if (!(e.A->group() == e.B->group())) throw Error(e.name + ": grading groups differ");
    const AxiomReport ext = check_hopf_map(HopfMap{e.B.get(), e.A.get(), e.i});
    if (!ext.ok()) throw Error(e.name + ": not a Hopf map\n" + ext.to_string());
    BraidedFrobeniusReport out;
    const IntegralDatum da = integral_datum(*e.A);
    const IntegralDatum db = integral_datum(*e.B);
    out.degree_a = da.degree;
    out.degree_b = db.degree;
    out.same_integral_degree = da.degree == db.degree;
    out.alpha_restricts = braided_modular_function(*e.A, da).row * e.i == braided_modular_function(*e.B, db).row;
    out.condition2 = out.same_integral_degree && out.alpha_restricts;

    Extension boson;
    boson.name = e.name + " bosonized";
    boson.A = std::make_shared<const BraidedHopf>(bosonization(*e.A));
    boson.B = std::make_shared<const BraidedHopf>(bosonization(*e.B));
    boson.i = kron(e.i, Mat::identity(e.A->group().order(), e.A->field));
    out.condition1 = frobenius_functor_check(boson, opts);
    out.agree = out.condition1 == out.condition2;
    return out;
}

std::vector<BraidedExtension> corpus_braided_extensions() {
    std::vector<BraidedExtension> out;
    auto e1 = std::make_shared<const BraidedHopf>(exterior_hopf(1));
    auto e2 = std::make_shared<const BraidedHopf>(exterior_hopf(2));
    Mat inc(4, 2, e1->field);
    inc(0, 0) = e1->field.one();
    inc(1, 1) = e1->field.one();
    out.push_back({"exterior_hopf_2/exterior_hopf_1", e2, e1, inc});
    out.push_back({"exterior_hopf_1/exterior_hopf_1", e1, e1, e1->identity()});
    auto line = std::make_shared<const BraidedHopf>(braided_line(3, Field::prime(7).with_root(2, 3)));
    out.push_back({line->name + "/" + line->name, line, line, line->identity()});
    auto c2 = std::make_shared<const BraidedHopf>(group_algebra({2}));
    auto c4 = std::make_shared<const BraidedHopf>(group_algebra({4}));
    Mat g2(4, 2, c2->field);
    g2(0, 0) = c2->field.one();
    g2(2, 1) = c2->field.one();
    out.push_back({"group_algebra_4/group_algebra_2", c4, c2, g2});
    return out;
}

}  // namespace hopf
