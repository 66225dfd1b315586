#pragma once

// Finite-dimensional modules and bimodules over the algebras underlying
// Hopf algebras, intertwiner spaces, and a search for invertible
// intertwiners.
//
// A module stores one operator per basis element of the algebra. For a
// right module ops[b] is v |-> v.b, so ops[b] ops[a] = ops[ab]; for a left
// module ops[a] ops[b] = ops[ab].

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopf/braided_hopf.hpp"
#include "hopf/integrals.hpp"

namespace hopf {

struct Module {
    const BraidedHopf* algebra = nullptr;
    Side side = Side::Right;
    std::vector<Mat> ops;
    std::string label;

    std::size_t dim() const { return ops.empty() ? 0 : ops.front().rows(); }
    const Field& field() const { return algebra->field; }

    /// The action as one dim x (dim * dim A) matrix: rho(v (x) b) = v.b for a
    /// right module, dim x (dim A * dim) with rho(b (x) v) for a left one.
    Mat action_matrix() const;
};

/// A-B-bimodule: left A-action and right B-action on the same space.
struct Bimodule {
    const BraidedHopf* left = nullptr;
    const BraidedHopf* right = nullptr;
    std::vector<Mat> left_ops;
    std::vector<Mat> right_ops;
    std::string label;

    std::size_t dim() const;
};

/// Module axioms (associativity and unit). On failure `why` names the
/// first broken identity.
bool is_module(const Module& m, std::string* why = nullptr);
/// Module axioms on both sides plus commuting actions.
bool is_bimodule(const Bimodule& m, std::string* why = nullptr);

Module regular_module(const BraidedHopf& a, Side side = Side::Right);
/// One-dimensional module on which b acts by c(b).
Module character_module(const BraidedHopf& a, const Character& c, Side side = Side::Right);
/// ops[b] = sum_c coeffs(c, b) ops[c] for a change of acting elements.
Module pull_back(const Module& m, const BraidedHopf& b, const Mat& f);
/// Right module V (x) chi: v.b = v.(b1) chi(b2).
Module twist_by_character(const Module& v, const Character& chi);

/// Basis elements whose operators determine every module structure: the
/// presentation generators when present, otherwise the full basis.
std::vector<std::size_t> acting_elements(const BraidedHopf& a);

/// Basis of {f : f ops_m[k] = ops_n[k] f for all k}, each f dim N x dim M.
std::vector<Mat> intertwiners(const std::vector<Mat>& ops_m, const std::vector<Mat>& ops_n, std::size_t dim_m,
                              std::size_t dim_n, const Field& field);

std::vector<Mat> hom_space(const Module& m, const Module& n);
std::vector<Mat> bimodule_hom_space(const Bimodule& m, const Bimodule& n);

/// Coordinates of a matrix in the span of `basis`, or nullopt.
std::optional<std::vector<Scalar>> coordinates(const std::vector<Mat>& basis, const Mat& x);

enum class IsoVerdict { Found, ProvenNo, ProbablyNo };
std::string to_string(IsoVerdict v);

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct IsoSearchOptions {
    std::size_t trials = 64;
    std::uint64_t seed = kDefaultSeed;
    /// Largest grid searched exhaustively after the random trials.
    std::size_t grid_limit = 1u << 15;
};

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::ProbablyNo;
    std::optional<Mat> witness;
    std::optional<Mat> witness_inverse;
    std::vector<Scalar> coefficients;  // witness = sum coefficients[k] basis[k]
    std::size_t hom_dim = 0;
    std::uint64_t seed = kDefaultSeed;
    std::size_t trials = 0;
    std::string reason;
};

/// Looks for an invertible element in the span of `basis` (square n x n
/// matrices). First `trials` random combinations drawn from mt19937_64;
/// then, if the grid S^r (S = {0..n}, or all of F_p when p <= n) has at
/// most grid_limit points, it is enumerated. det of a generic combination
/// has degree <= n in every coordinate, so an empty grid search proves that
/// no invertible combination exists.
IsoResult find_invertible(const std::vector<Mat>& basis, std::size_t n, const Field& field,
                          const IsoSearchOptions& opts = {});

IsoResult module_iso(const Module& m, const Module& n, const IsoSearchOptions& opts = {});
IsoResult bimodule_iso(const Bimodule& m, const Bimodule& n, const IsoSearchOptions& opts = {});

/// Right module splitting test: surjection from a free module onto M and a
/// module section of it.
bool projective_check(const Module& m);

/// Minimal set of basis vectors generating M as a module (greedy).
std::vector<std::size_t> generating_set(const Module& m);

/// All characters of the algebra, ordered lexicographically by their rows
/// as they are found. Values on each acting element are roots of its
/// minimal polynomial (as a left multiplication operator).
std::vector<Character> enumerate_characters(const BraidedHopf& a);

}  // namespace hopf
