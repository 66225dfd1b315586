#pragma once

// Hopf algebras in the braided category of G-graded vector spaces, stored
// as structure-constant matrices. With the trivial grading group these are
// ordinary Hopf algebras.
//
//   m : H (x) H -> H     dim x dim^2
//   u : k -> H           dim x 1
//   delta : H -> H (x) H dim^2 x dim
//   counit : H -> k      1 x dim
//   S : H -> H           dim x dim

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf/grading.hpp"
#include "hopf/mat.hpp"

namespace hopf {

struct BraidedHopf {
    std::string name;
    Field field;
    Bicharacter bichar;
    GradedSpace space;
    Mat m, u, delta, counit, S;

    // Optional presentation data: basis indices of algebra generators, and
    // for each basis vector the generator word whose product it equals.
    std::vector<std::size_t> generators;
    std::vector<std::vector<std::size_t>> words;

    std::size_t dim() const { return space.dim(); }
    const GradingGroup& group() const { return bichar.group(); }
    bool trivially_graded() const { return bichar.group().is_trivial() || bichar.is_trivial(); }

    const GroupElement& degree(std::size_t i) const { return space.degrees[i]; }

    Mat basis(std::size_t i) const { return Mat::unit_vector(dim(), i, field); }
    Mat identity() const { return Mat::identity(dim(), field); }
    /// sigma_{H,H}.
    Mat braiding() const { return braiding_matrix(bichar, space, space); }

    /// a * b for column vectors.
    Mat product(const Mat& a, const Mat& b) const { return m * kron(a, b); }
    /// h |-> a * h.
    Mat left_mult(const Mat& a) const { return m * kron(a, identity()); }
    /// h |-> h * a.
    Mat right_mult(const Mat& a) const { return m * kron(identity(), a); }
    /// Multiplication in the braided tensor square:
    /// (a (x) b)(c (x) d) = beta(|b|, |c|) ac (x) bd.
    Mat tensor_square_product() const;
};

/// Algebra morphism H -> k, stored as a 1 x dim row.
struct Character {
    Mat row;

    Scalar operator()(std::size_t i) const { return row(0, i); }
    bool operator==(const Character& o) const { return row == o.row; }
    bool operator!=(const Character& o) const { return !(*this == o); }
};

bool is_character(const BraidedHopf& h, const Mat& row);
/// The counit as a character.
Character counit_character(const BraidedHopf& h);
/// Convolution product (a (x) b) o delta.
Character convolve(const BraidedHopf& h, const Character& a, const Character& b);
/// a o S, the convolution inverse of a character.
Character character_inverse(const BraidedHopf& h, const Character& a);

struct AxiomCheck {
    std::string name;
    bool passed = true;
    /// (row, column) of the first mismatching entry on failure. The column
    /// indexes the flattened input basis tensor.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool ok() const;
    std::vector<std::string> failures() const;
    const AxiomCheck* find(const std::string& name) const;
    std::string to_string() const;
};

/// Checks every braided Hopf algebra axiom, degree-0-ness of the structure
/// maps, bimultiplicativity of the bicharacter and invertibility of S.
/// Throws DimensionMismatch on malformed tensors.
AxiomReport verify_hopf(const BraidedHopf& h);

struct HopfMap {
    const BraidedHopf* source = nullptr;
    const BraidedHopf* target = nullptr;
    Mat f;  // dim(target) x dim(source)
};

/// The six compatibilities of a Hopf algebra morphism plus degree-0.
AxiomReport check_hopf_map(const HopfMap& map);

/// Transposed structure: m* = delta^T, delta* = m^T, u* = counit^T,
/// counit* = u^T, S* = S^T. Only defined for the trivial grading.
BraidedHopf dual_hopf(const BraidedHopf& h);

/// S^{-1}; throws Error if S is singular.
Mat antipode_inverse(const BraidedHopf& h);

/// Degree-by-degree check that a map X -> Y between graded spaces is
/// homogeneous of degree 0.
std::optional<std::pair<std::size_t, std::size_t>> degree_violation(const Mat& f, const GradedSpace& x,
                                                                     const GradedSpace& y);

/// Tensor power X^{(x)n} of a graded space.
GradedSpace tensor_power(const GradingGroup& g, const GradedSpace& x, std::size_t n);

}  // namespace hopf
