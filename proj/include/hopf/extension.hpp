#pragma once

// Extensions A/B of finite-dimensional Hopf algebras: restriction,
// induction V (x)_B A and coinduction Hom_B(A, V) of right modules, the
// relative modular function chi and relative Nakayama automorphism beta,
// and the Frobenius-type checks built on them.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopf/modules.hpp"

namespace hopf {

struct Extension {
    std::string name;
    std::shared_ptr<const BraidedHopf> A;
    std::shared_ptr<const BraidedHopf> B;
    Mat i;  // dim A x dim B
};

/// check_hopf_map on i plus injectivity.
AxiomReport check_extension(const Extension& e);

Module restrict(const Module& m, const Extension& e);

struct InducedModule {
    Module module;
    Mat projection;  // (V (x) A) -> V (x)_B A
    Mat section;     // a linear right inverse of the projection
};
/// V (x)_B A: quotient of V (x) A by v.b (x) a - v (x) i(b) a.
InducedModule induce(const Module& v, const Extension& e);

struct CoinducedModule {
    Module module;
    std::vector<Mat> maps;  // basis of Hom_B(A, V), each dim V x dim A
};
/// Hom_B(A, V) with (f.a)(a') = f(a a').
CoinducedModule coinduce(const Module& v, const Extension& e);

/// Elements a_1..a_r of A such that the a_k . i(b_j) form a basis of A
/// (A as a right B-module); r = dim A / dim B. Nullopt means none was found,
/// which is not a proof that A is not free.
std::optional<std::vector<Mat>> free_basis_over(const Extension& e, std::uint64_t seed = kDefaultSeed);

/// chi(b) = alpha_A(i(b1)) alpha_B(S(b2)).
Character relative_modular_function(const Extension& e);
/// beta(b) = chi(b1) b2, as a dim B x dim B matrix.
Mat relative_nakayama(const Extension& e, const Character& chi);
/// beta is unital, multiplicative and invertible.
bool is_algebra_automorphism(const BraidedHopf& b, const Mat& f);

/// B-A-bimodule Hom_B(A_B, B_B): (b.f)(a) = b f(a), (f.a)(a') = f(a a').
Bimodule hom_bimodule(const Extension& e);
/// A as a B-A-bimodule with the left action twisted: b.a = i(t(b)) a.
Bimodule twisted_regular_bimodule(const Extension& e, const Mat& t);

struct BetaFrobeniusResult {
    bool pass = false;
    Character chi;
    Mat beta;
    Mat beta_inverse;
    std::optional<std::vector<Mat>> free_basis;
    IsoResult iso;  // _{t}A_A versus Hom_B(A_B, B_B), t = beta^{-1} unless overridden
};

/// Compares _{beta^{-1}}A_A with Hom_B(A_B, B_B). `twist_override`
/// replaces beta^{-1} (falsification controls).
BetaFrobeniusResult beta_frobenius_check(const Extension& e, const IsoSearchOptions& opts = {},
                                         const std::optional<Mat>& twist_override = std::nullopt);

/// Finite family of right B-modules: regular B, every one-dimensional
/// character module, and restrict(regular A).
std::vector<Module> b_test_modules(const Extension& e);
/// Regular A and every one-dimensional character module of A.
std::vector<Module> a_test_modules(const Extension& e);

struct ModuleVerdict {
    std::string label;
    IsoResult iso;
};

struct ConditionsReport {
    Character chi;
    bool projective = false;  // restrict(regular A) is projective over B
    bool coinduction = false; // coinduce(V) ~ induce(V (x) chi) on every test module
    std::vector<ModuleVerdict> modules;
    bool ok() const { return projective && coinduction; }
};

ConditionsReport frobenius_conditions_report(const Extension& e, const Character& chi,
                                             const IsoSearchOptions& opts = {});

struct ChiFormulaResult {
    std::vector<Character> candidates;  // all characters of B
    std::vector<Character> working;     // those passing the coinduction condition
    std::optional<Character> chi;       // the unique working one
    bool matches_formula = false;       // equals relative_modular_function
    bool convolution_identity = false;  // chi * alpha_B = alpha_A o i
    bool invertible = false;            // chi * (chi o S) = counit
    bool pass = false;
};

ChiFormulaResult verify_chi_formula(const Extension& e, const IsoSearchOptions& opts = {});

struct AdjunctionRow {
    std::string v, w;
    std::size_t hom_induced = 0;    // dim Hom_A(V (x)_B A, W)
    std::size_t hom_restricted = 0; // dim Hom_B(V, Res W)
    std::size_t hom_coinduced = 0;  // dim Hom_A(W, Hom_B(A, V))
    std::size_t hom_restricted2 = 0;// dim Hom_B(Res W, V)
    bool ok() const { return hom_induced == hom_restricted && hom_coinduced == hom_restricted2; }
};

std::vector<AdjunctionRow> adjunction_dimension_law(const Extension& e);

/// induce(V) ~ coinduce(V) on the B test set.
bool frobenius_functor_check(const Extension& e, const IsoSearchOptions& opts = {});

/// Extension given by the identity map of a Hopf algebra.
Extension identity_extension(std::shared_ptr<const BraidedHopf> a);

/// sweedler/k[g], taft(3, F7)/k[g], kC2xC2/kC2, kC4/kC2, and the identity
/// extensions of sweedler and kC2.
std::vector<Extension> corpus_extensions();

}  // namespace hopf
