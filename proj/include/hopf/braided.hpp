#pragma once

// Integrals, the Frobenius pairing, the Nakayama automorphism, monodromy
// and Hopf bimodules for Hopf algebras in G-graded vector spaces.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopf/braided_hopf.hpp"
#include "hopf/modules.hpp"

namespace hopf {

struct IntegralDatum {
    GroupElement degree;  // Int(H) sits in this degree
    Mat Lambda;           // right integral, dim x 1
    Mat lambda;           // cointegral, 1 x dim, lambda(Lambda) = 1
};

/// Solves the right-integral system degree by degree; throws Error unless
/// the solution space is one-dimensional (hence homogeneous), or if no
/// normalized cointegral exists.
IntegralDatum integral_datum(const BraidedHopf& h);

/// h * Lambda = alpha(h) Lambda.
Character braided_modular_function(const BraidedHopf& h, const IntegralDatum& d);
Character braided_modular_function(const BraidedHopf& h);

struct Pairing {
    Mat phi;          // phi(j, h) = lambda(h e_j)
    Mat phi_inverse;
};
/// h |-> lambda(h * -); throws Error when singular.
Pairing pairing_phi(const BraidedHopf& h, const IntegralDatum& d);

/// Omega(K)_V: multiplies the degree-v component of V by beta(k, v) beta(v, k).
Mat monodromy(const Bicharacter& beta, const GroupElement& k, const GradedSpace& v);

struct MonodromyLaws {
    bool unit = false;     // Omega(1) = id
    bool tensor = false;   // Omega(K (x) K') = Omega(K) Omega(K')
    bool dual = false;     // Omega(K*) = Omega(K)^{-1}
    bool ok() const { return unit && tensor && dual; }
};
/// Checks the three laws on V for every pair of degrees of the group.
MonodromyLaws monodromy_laws(const Bicharacter& beta, const GradedSpace& v);

/// The unique N with lambda m sigma = lambda m (id (x) N).
Mat nakayama(const BraidedHopf& h, const IntegralDatum& d);

struct NakayamaCheck {
    bool holds = false;
    bool automorphism = false;   // invertible, unital, degree 0
    bool multiplicative = false; // N m = m (N (x) N); fails for nontrivial monodromy
    Mat nakayama;
    Mat formula;  // S^{-2} (alpha (x) id) delta Omega(Int(H))_H
};
NakayamaCheck nakayama_formula_check(const BraidedHopf& h);

/// An H-bimodule in graded vector spaces, optionally with a left coaction.
struct HopfBimodule {
    const BraidedHopf* H = nullptr;
    GradedSpace space;
    Mat left;   // dim x (dim H * dim):  h (x) m |-> h |> m
    Mat right;  // dim x (dim * dim H):  m (x) h |-> m <| h
    std::optional<Mat> coaction;  // (dim H * dim) x dim
    std::string label;

    std::size_t dim() const { return space.dim(); }
};

/// Bimodule axioms, degree-0 structure maps, and when a coaction is
/// present: coassociativity, counitality and both compatibilities making
/// the coaction a bimodule map into H (x)bar M.
AxiomReport verify_bimodule(const HopfBimodule& m);

/// H with both actions by multiplication and coaction delta.
HopfBimodule regular_bimodule(const BraidedHopf& h);
/// The unit object, both actions through the counit. It carries no
/// coaction: k is not a Hopf bimodule.
HopfBimodule unit_bimodule(const BraidedHopf& h);
/// A right H-module in the category, made a bimodule by the counit on
/// the left. `right` is dim x (dim * dim H).
HopfBimodule trivial_left_bimodule(const BraidedHopf& h, const GradedSpace& space, const Mat& right,
                                   std::string label);

/// M (x)bar N; the coaction is delta_M (x) id when M carries one.
HopfBimodule bar_tensor(const HopfBimodule& m, const HopfBimodule& n);

/// The left dual H^v of the regular bimodule with the coaction dual to the
/// right regular coaction.
HopfBimodule dual_hopf_bimodule(const BraidedHopf& h);
/// Left dual of a bimodule (no coaction).
HopfBimodule dual_bimodule(const HopfBimodule& m);

/// eval: M* (x) M -> 1 and coev: 1 -> M (x) M*.
Mat evaluation(const HopfBimodule& m);
Mat coevaluation(const HopfBimodule& m);
/// f: M -> N commutes with both actions.
bool is_bimodule_map(const Mat& f, const HopfBimodule& m, const HopfBimodule& n);

/// The adjoint right action |> (S (x) <|) (sigma_{M,H} (x) id) (id (x) delta).
Mat adjoint_action(const HopfBimodule& m);

struct Coinvariants {
    Mat basis;                          // dim M x r, homogeneous columns
    std::vector<GroupElement> degrees;  // degree of each column
    std::vector<Mat> ops;               // adjoint action, r x r per basis element of H
    bool equalizers_agree = false;      // ker(delta - u (x) id) = ker(pi - id)
    bool adjoint_preserves = false;     // the adjoint action maps the kernel to itself
};
Coinvariants coinvariants(const HopfBimodule& m);

struct DualCoinvariantCheck {
    bool pass = false;
    std::size_t dim = 0;
    GroupElement degree;
    Character action;  // the character through which H acts
};
/// (H^v)^{coH} is one-dimensional, in degree -deg Int(H), with H acting by
/// alpha_H.
DualCoinvariantCheck dual_coinvariants_check(const BraidedHopf& h);

struct FundamentalTheoremCheck {
    bool pass = false;
    std::vector<std::string> failures;
};
/// Both directions of the fundamental theorem on corpus-sized inputs:
/// V -> (H (x)bar V)^{coH}, v |-> 1 (x) v is an isomorphism of right
/// modules (V = unit and V = H regular), and H (x)bar M^{coH} -> M,
/// h (x) m |-> h |> m is invertible for M = H, H^v and the free ones.
FundamentalTheoremCheck fundamental_theorem_check(const BraidedHopf& h);

/// Radford biproduct H # kG on basis h # g (index h * |G| + g) with
/// (h # g)(h' # g') = beta(g, |h'|) hh' # (g + g'),
/// delta(h # g) = h1 # (|h2| + g) (x) h2 # g,
/// S(h # g) = (1 # (-|h| - g)) (S(h) # 0).
BraidedHopf bosonization(const BraidedHopf& h);

struct HopfIsoResult {
    bool found = false;
    std::optional<Mat> map;  // target x source
    std::string reason;
};
/// Semi-decision: classifies the source generators as grouplike or
/// skew-primitive, maps grouplikes to grouplikes and skew-primitives into
/// the matching skew-primitive spaces, extends multiplicatively along the
/// basis words, and certifies candidates with check_hopf_map plus
/// invertibility.
HopfIsoResult find_hopf_iso(const BraidedHopf& source, const BraidedHopf& target, std::uint64_t seed = kDefaultSeed,
                            std::size_t trials = 64);

/// All grouplike elements (delta g = g (x) g, counit(g) = 1) of a trivially
/// graded Hopf algebra, as columns.
std::vector<Mat> grouplikes(const BraidedHopf& h);

struct ModularObjectCheck {
    bool pass = false;
    Character modular_bosonized;  // modular function of H # kG
    Character predicted;          // Int(H)* (x) alpha_H (x) alpha_ambient on H # kG
    GroupElement integral_degree;
};
/// `ambient_degree` is the degree of the modular object of the graded
/// category; the identity (trivial object) by default.
ModularObjectCheck modular_object_check(const BraidedHopf& h, const std::optional<GroupElement>& ambient_degree = {});

struct BraidedExtension {
    std::string name;
    std::shared_ptr<const BraidedHopf> A;
    std::shared_ptr<const BraidedHopf> B;
    Mat i;
};

struct BraidedFrobeniusReport {
    bool same_integral_degree = false;
    bool alpha_restricts = false;  // alpha_A o i = alpha_B
    bool condition2 = false;
    bool condition1 = false;       // induce ~ coinduce over the bosonized extension
    bool agree = false;
    GroupElement degree_a, degree_b;
};
BraidedFrobeniusReport braided_frobenius_criterion(const BraidedExtension& e, const IsoSearchOptions& opts = {});

/// A/B names: exterior_hopf(1) in exterior_hopf(2), identity extensions of
/// exterior_hopf(1) and braided_line(3), and kC2 in kC4.
std::vector<BraidedExtension> corpus_braided_extensions();

}  // namespace hopf
