#include "hopf/extension.hpp"

#include <random>

#include "hopf/corpus.hpp"
#include "hopf/linalg.hpp"

namespace hopf {

namespace {

// Solves for the coordinates of many matrices at once in the span of
// `basis`; throws if some matrix lies outside the span.
std::vector<std::vector<Scalar>> coordinates_all(const std::vector<Mat>& basis, const std::vector<Mat>& xs,
                                                 const Field& field) {
    if (xs.empty()) return {};
    const std::size_t len = xs.front().rows() * xs.front().cols();
    Mat a(len, basis.size(), field);
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t i = 0; i < len; ++i) a(i, k) = basis[k](i / basis[k].cols(), i % basis[k].cols());
    Mat rhs(len, xs.size(), field);
    for (std::size_t j = 0; j < xs.size(); ++j)
        for (std::size_t i = 0; i < len; ++i) rhs(i, j) = xs[j](i / xs[j].cols(), i % xs[j].cols());
    auto sol = solve_affine(a, rhs);
    if (!sol) throw Error("coordinates: matrix outside the span");
    std::vector<std::vector<Scalar>> out(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j)
        for (std::size_t k = 0; k < basis.size(); ++k) out[j].push_back(sol->particular(k, j));
    return out;
}

// Operators in coordinates: ops[a] column k = coords of act(basis[k], a).
template <class Act>
std::vector<Mat> operators_on_span(const std::vector<Mat>& basis, std::size_t count, const Field& field, Act act) {
    const std::size_t r = basis.size();
    std::vector<Mat> images;
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t k = 0; k < r; ++k) images.push_back(act(basis[k], a));
    const auto coords = coordinates_all(basis, images, field);
    std::vector<Mat> ops;
    for (std::size_t a = 0; a < count; ++a) {
        Mat op(r, r, field);
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < r; ++j) op(j, k) = coords[a * r + k][j];
        ops.push_back(op);
    }
    return ops;
}

bool condition_three(const Extension& e, const Character& chi, const IsoSearchOptions& opts,
                     std::vector<ModuleVerdict>* verdicts) {
    bool all = true;
    for (const Module& v : b_test_modules(e)) {
        const Module lhs = coinduce(v, e).module;
        const Module rhs = induce(twist_by_character(v, chi), e).module;
        IsoResult r = module_iso(lhs, rhs, opts);
        const bool found = r.verdict == IsoVerdict::Found;
        all = all && found;
        if (verdicts) verdicts->push_back(ModuleVerdict{v.label, std::move(r)});
        else if (!found) return false;
    }
    return all;
}

}  // namespace

AxiomReport check_extension(const Extension& e) {
    AxiomReport r = check_hopf_map(HopfMap{e.B.get(), e.A.get(), e.i});
    AxiomCheck c;
    c.name = "injective";
    if (rank(e.i) != e.B->dim()) {
        c.passed = false;
        c.detail = "inclusion has rank " + std::to_string(rank(e.i));
    }
    r.checks.push_back(c);
    return r;
}

Module restrict(const Module& m, const Extension& e) {
    if (m.algebra->dim() != e.A->dim()) throw Error("restrict: module is not over the larger algebra");
    Module out = pull_back(m, *e.B, e.i);
    out.label = "Res(" + m.label + ")";
    return out;
}

InducedModule induce(const Module& v, const Extension& e) {
    if (v.side != Side::Right) throw Error("induce: right modules only");
    const BraidedHopf& A = *e.A;
    const BraidedHopf& B = *e.B;
    const std::size_t dv = v.dim(), da = A.dim();
    const std::size_t n = dv * da;
    const Field& k = A.field;
    const auto gens = acting_elements(B);

    // relations v.b (x) a - v (x) i(b)a, one row each (transposed)
    Mat rel(dv * gens.size() * da, n, k);
    std::size_t row = 0;
    for (std::size_t b : gens) {
        const Mat ib = A.left_mult(e.i.column(b));
        for (std::size_t x = 0; x < dv; ++x)
            for (std::size_t a = 0; a < da; ++a, ++row) {
                for (std::size_t y = 0; y < dv; ++y)
                    if (!v.ops[b](y, x).is_zero()) rel(row, y * da + a) += v.ops[b](y, x);
                for (std::size_t c = 0; c < da; ++c)
                    if (!ib(c, a).is_zero()) rel(row, x * da + c) -= ib(c, a);
            }
    }
    // functionals vanishing on every relation: kernel vectors of rel
    const auto functionals = kernel(rel);
    const std::size_t q = functionals.size();
    Mat proj(q, n, k);
    for (std::size_t r = 0; r < q; ++r)
        for (std::size_t j = 0; j < n; ++j) proj(r, j) = functionals[r][j];
    auto sec = solve_affine(proj, Mat::identity(q, k));
    if (!sec) throw Error("induce: quotient map has no section");

    InducedModule out;
    out.projection = proj;
    out.section = sec->particular;
    out.module.algebra = &A;
    out.module.side = Side::Right;
    out.module.label = "Ind(" + v.label + ")";
    const Mat idv = Mat::identity(dv, k);
    for (std::size_t a = 0; a < da; ++a)
        out.module.ops.push_back(proj * kron(idv, A.right_mult(A.basis(a))) * out.section);
    return out;
}

CoinducedModule coinduce(const Module& v, const Extension& e) {
    if (v.side != Side::Right) throw Error("coinduce: right modules only");
    const BraidedHopf& A = *e.A;
    CoinducedModule out;
    out.maps = hom_space(restrict(regular_module(A), e), v);
    out.module.algebra = &A;
    out.module.side = Side::Right;
    out.module.label = "CoInd(" + v.label + ")";
    if (out.maps.empty()) return out;
    out.module.ops = operators_on_span(out.maps, A.dim(), A.field,
                                       [&](const Mat& f, std::size_t a) { return f * A.left_mult(A.basis(a)); });
    return out;
}

std::optional<std::vector<Mat>> free_basis_over(const Extension& e, std::uint64_t seed) {
    const BraidedHopf& A = *e.A;
    const std::size_t da = A.dim(), db = e.B->dim();
    if (db == 0 || da % db != 0) return std::nullopt;
    const std::size_t r = da / db;
    const Field& k = A.field;
    std::vector<Mat> images;  // right multiplication by i(b_j)
    for (std::size_t j = 0; j < db; ++j) images.push_back(A.right_mult(e.i.column(j)));

    std::vector<Mat> chosen;
    Mat span(da, 0, k);
    auto try_add = [&](const Mat& a) {
        Mat block(da, db, k);
        for (std::size_t j = 0; j < db; ++j) {
            const Mat c = images[j] * a;
            for (std::size_t t = 0; t < da; ++t) block(t, j) = c[t];
        }
        const Mat grown = hstack(span, block);
        if (rank(grown) != span.cols() + db) return;
        span = grown;
        chosen.push_back(a);
    };
    for (std::size_t b = 0; b < da && chosen.size() < r; ++b) try_add(A.basis(b));
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < 64 && chosen.size() < r; ++t) {
        Mat a(da, 1, k);
        for (std::size_t j = 0; j < da; ++j) {
            const std::uint64_t x = rng();
            a[j] = k.kind() == Field::Kind::Prime ? k.from_int(static_cast<std::int64_t>(x % k.characteristic()))
                                                  : k.from_int(static_cast<std::int64_t>(x % 7) - 3);
        }
        try_add(a);
    }
    if (chosen.size() != r) return std::nullopt;
    return chosen;
}

Character relative_modular_function(const Extension& e) {
    const BraidedHopf& B = *e.B;
    const Mat alpha_a_i = modular_function(*e.A).row * e.i;
    const Mat alpha_b_s = modular_function(B).row * B.S;
    Character chi{kron(alpha_a_i, alpha_b_s) * B.delta};
    if (!is_character(B, chi.row)) throw Error("relative modular function is not a character");
    return chi;
}

Mat relative_nakayama(const Extension& e, const Character& chi) {
    const BraidedHopf& B = *e.B;
    if (!is_character(B, chi.row)) throw Error("relative_nakayama: not a character");
    return kron(chi.row, B.identity()) * B.delta;
}

bool is_algebra_automorphism(const BraidedHopf& b, const Mat& f) {
    return f * b.u == b.u && f * b.m == b.m * kron(f, f) && is_invertible(f);
}

Bimodule hom_bimodule(const Extension& e) {
    const BraidedHopf& A = *e.A;
    const BraidedHopf& B = *e.B;
    const auto maps = hom_space(restrict(regular_module(A), e), regular_module(B));
    Bimodule out;
    out.left = &B;
    out.right = &A;
    out.label = "Hom_B(A_B, B_B)";
    out.left_ops = operators_on_span(maps, B.dim(), A.field,
                                     [&](const Mat& f, std::size_t b) { return B.left_mult(B.basis(b)) * f; });
    out.right_ops = operators_on_span(maps, A.dim(), A.field,
                                      [&](const Mat& f, std::size_t a) { return f * A.left_mult(A.basis(a)); });
    return out;
}

Bimodule twisted_regular_bimodule(const Extension& e, const Mat& t) {
    const BraidedHopf& A = *e.A;
    const BraidedHopf& B = *e.B;
    Bimodule out;
    out.left = &B;
    out.right = &A;
    out.label = "twisted A";
    const Mat it = e.i * t;
    for (std::size_t b = 0; b < B.dim(); ++b) out.left_ops.push_back(A.left_mult(it.column(b)));
    for (std::size_t a = 0; a < A.dim(); ++a) out.right_ops.push_back(A.right_mult(A.basis(a)));
    return out;
}

BetaFrobeniusResult beta_frobenius_check(const Extension& e, const IsoSearchOptions& opts,
                                         const std::optional<Mat>& twist_override) {
    BetaFrobeniusResult r;
    r.free_basis = free_basis_over(e, opts.seed);
    if (!r.free_basis) throw Error("beta_frobenius_check: no free basis found, refusing to guess");
    r.chi = relative_modular_function(e);
    r.beta = relative_nakayama(e, r.chi);
    auto inv = inverse(r.beta);
    if (!inv || !is_algebra_automorphism(*e.B, r.beta)) throw Error("relative Nakayama map is not an automorphism");
    r.beta_inverse = *inv;
    const Mat twist = twist_override ? *twist_override : r.beta_inverse;
    r.iso = bimodule_iso(twisted_regular_bimodule(e, twist), hom_bimodule(e), opts);
    r.pass = r.iso.verdict == IsoVerdict::Found;
    return r;
}

std::vector<Module> b_test_modules(const Extension& e) {
    std::vector<Module> out{regular_module(*e.B)};
    for (const Character& c : enumerate_characters(*e.B)) out.push_back(character_module(*e.B, c));
    out.push_back(restrict(regular_module(*e.A), e));
    return out;
}

std::vector<Module> a_test_modules(const Extension& e) {
    std::vector<Module> out{regular_module(*e.A)};
    for (const Character& c : enumerate_characters(*e.A)) out.push_back(character_module(*e.A, c));
    return out;
}

ConditionsReport frobenius_conditions_report(const Extension& e, const Character& chi, const IsoSearchOptions& opts) {
    ConditionsReport r;
    r.chi = chi;
    r.projective = projective_check(restrict(regular_module(*e.A), e));
    r.coinduction = condition_three(e, chi, opts, &r.modules);
    return r;
}

ChiFormulaResult verify_chi_formula(const Extension& e, const IsoSearchOptions& opts) {
    ChiFormulaResult r;
    const BraidedHopf& B = *e.B;
    r.candidates = enumerate_characters(B);
    for (const Character& c : r.candidates)
        if (condition_three(e, c, opts, nullptr)) r.working.push_back(c);
    if (r.working.size() != 1) return r;
    r.chi = r.working.front();
    r.matches_formula = *r.chi == relative_modular_function(e);
    const Character alpha_b = modular_function(B);
    const Character alpha_a_i{modular_function(*e.A).row * e.i};
    r.convolution_identity = convolve(B, *r.chi, alpha_b) == alpha_a_i;
    r.invertible = convolve(B, *r.chi, character_inverse(B, *r.chi)) == counit_character(B) &&
                   convolve(B, character_inverse(B, *r.chi), *r.chi) == counit_character(B);
    r.pass = r.matches_formula && r.convolution_identity && r.invertible;
    return r;
}

std::vector<AdjunctionRow> adjunction_dimension_law(const Extension& e) {
    std::vector<AdjunctionRow> rows;
    const auto vs = b_test_modules(e);
    const auto ws = a_test_modules(e);
    for (const Module& v : vs) {
        const Module ind = induce(v, e).module;
        const Module coind = coinduce(v, e).module;
        for (const Module& w : ws) {
            const Module res = restrict(w, e);
            AdjunctionRow row;
            row.v = v.label;
            row.w = w.label;
            row.hom_induced = ind.dim() == 0 ? 0 : hom_space(ind, w).size();
            row.hom_restricted = hom_space(v, res).size();
            row.hom_coinduced = coind.dim() == 0 ? 0 : hom_space(w, coind).size();
            row.hom_restricted2 = hom_space(res, v).size();
            rows.push_back(row);
        }
    }
    return rows;
}

bool frobenius_functor_check(const Extension& e, const IsoSearchOptions& opts) {
    return condition_three(e, counit_character(*e.B), opts, nullptr);
}

Extension identity_extension(std::shared_ptr<const BraidedHopf> a) {
    Extension e;
    e.name = a->name + "/" + a->name;
    e.A = a;
    e.B = a;
    e.i = a->identity();
    return e;
}

std::vector<Extension> corpus_extensions() {
    std::vector<Extension> out;
    auto inclusion = [](std::shared_ptr<const BraidedHopf> a, std::shared_ptr<const BraidedHopf> b,
                        const std::vector<std::size_t>& images, std::string name) {
        Extension e;
        e.name = std::move(name);
        e.A = a;
        e.B = b;
        e.i = Mat(a->dim(), b->dim(), a->field);
        for (std::size_t j = 0; j < images.size(); ++j) e.i(images[j], j) = a->field.one();
        return e;
    };
    auto sw = std::make_shared<const BraidedHopf>(sweedler());
    auto c2 = std::make_shared<const BraidedHopf>(group_algebra({2}));
    const Field f7 = Field::prime(7).with_root(2, 3);
    auto t3 = std::make_shared<const BraidedHopf>(taft(3, f7));
    auto c3 = std::make_shared<const BraidedHopf>(group_algebra({3}, f7));
    auto c22 = std::make_shared<const BraidedHopf>(group_algebra({2, 2}));
    auto c4 = std::make_shared<const BraidedHopf>(group_algebra({4}));
    out.push_back(inclusion(sw, c2, {0, 2}, "sweedler/k[g]"));
    out.push_back(inclusion(t3, c3, {0, 3, 6}, "taft3/k[g]"));
    out.push_back(inclusion(c22, c2, {0, 2}, "kC2xC2/kC2"));
    out.push_back(inclusion(c4, c2, {0, 2}, "kC4/kC2"));
    out.push_back(identity_extension(sw));
    out.push_back(identity_extension(c2));
    return out;
}

}  // namespace hopf
