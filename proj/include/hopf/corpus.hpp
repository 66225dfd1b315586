#pragma once

// Builtin example Hopf algebras.

#include <vector>

#include "hopf/braided_hopf.hpp"

namespace hopf {

/// Group algebra of Z/n1 x ... x Z/nr, basis in mixed-radix order.
BraidedHopf group_algebra(const std::vector<int>& orders, const Field& field = Field::rationals());

/// Taft algebra of dimension n^2 on the basis g^i x^j (index i*n + j) with
/// g^n = 1, x^n = 0, xg = zeta gx, g grouplike and x (g,1)-skew primitive.
/// The field must carry a primitive n-th root of unity zeta.
BraidedHopf taft(int n, const Field& field);

/// taft(2) over Q with zeta = -1: basis 1, x, g, gx.
BraidedHopf sweedler();

/// Exterior algebra on n odd primitive generators, a Hopf algebra in super
/// vector spaces. Basis vectors are bitmasks of generators.
BraidedHopf exterior_hopf(int n, const Field& field = Field::rationals());

/// k[x]/(x^n) with x primitive of degree 1 in Z/n-graded spaces, braided by
/// beta(a, b) = zeta^(ab). The field must carry a primitive n-th root zeta.
BraidedHopf braided_line(int n, const Field& field);

/// braided_line(2, F_3), braided_line(3, F_7), braided_line(4, F_5), each with zeta = 2.
std::vector<BraidedHopf> braided_lines();

/// exterior_hopf(1..3) and braided_lines().
std::vector<BraidedHopf> braided_corpus();

/// Group algebras of C2, C3, C4, C2xC2 and their duals, sweedler, taft(3)
/// over F_7 with zeta = 2, and braided_corpus().
std::vector<BraidedHopf> full_corpus();

/// Builds delta, counit and S multiplicatively from their values on the
/// generators, using the words of `h`. m, u, space, bichar, generators and
/// words must already be filled in; gen_delta/gen_counit/gen_antipode are
/// indexed like h.generators.
void extend_from_generators(BraidedHopf& h, const std::vector<Mat>& gen_delta, const std::vector<Scalar>& gen_counit,
                            const std::vector<Mat>& gen_antipode);

}  // namespace hopf
