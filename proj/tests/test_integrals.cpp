#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopf/corpus.hpp"
#include "hopf/integrals.hpp"
#include "hopf/linalg.hpp"
#include "oracle.hpp"

using namespace hopf;
using oracle::Sweedler;
using oracle::Vec;

namespace {

constexpr std::size_t kD = Sweedler::dim;

Mat column_of(const Vec& v, const Field& f) {
    Mat m(v.size(), 1, f);
    for (std::size_t i = 0; i < v.size(); ++i) m[i] = Scalar(v[i]);
    return m;
}

bool same_line(const std::vector<Mat>& a, const Vec& v, const Field& f) {
    return a.size() == 1 && rank(hstack(a[0], column_of(v, f))) == 1;
}

}  // namespace

TEST_CASE("Sweedler integrals against the hand-written oracle") {
    const BraidedHopf s = sweedler();
    const auto right = Sweedler::integrals(true);
    const auto left = Sweedler::integrals(false);
    REQUIRE(right.size() == 1);
    REQUIRE(left.size() == 1);
    CHECK(same_line(integral_space(s, Side::Right).basis, right[0], s.field));
    CHECK(same_line(integral_space(s, Side::Left).basis, left[0], s.field));
    // x - gx is a right integral, x + gx a left one (basis g^i x^j at 2i + j)
    CHECK(same_line(integral_space(s, Side::Right).basis, Vec{0, 1, 0, -1}, s.field));
    CHECK(same_line(integral_space(s, Side::Left).basis, Vec{0, 1, 0, 1}, s.field));

    // modular function: e_b * Lambda = alpha(b) Lambda
    const Character alpha = modular_function(s);
    const Vec expected = Sweedler::modular_function();
    for (std::size_t b = 0; b < kD; ++b) CHECK(alpha(b).rational() == expected[b]);
    CHECK(alpha(2).rational() == -1);
    CHECK(alpha(1).is_zero());
    CHECK_FALSE(is_unimodular(s));
}

TEST_CASE("Sweedler distinguished grouplike from the oracle dual") {
    const Vec g = Sweedler::distinguished_grouplike();
    const BraidedHopf s = sweedler();
    CHECK(distinguished_grouplike(s) == column_of(g, s.field));
    CHECK(g == Vec{0, 0, 1, 0});  // the grouplike g itself
}

TEST_CASE("group algebras are unimodular with the sum as integral") {
    for (const std::vector<int>& orders : {std::vector<int>{2}, {3}, {4}, {2, 2}}) {
        const BraidedHopf h = group_algebra(orders);
        CAPTURE(h.name);
        Mat sum(h.dim(), 1, h.field);
        for (std::size_t i = 0; i < h.dim(); ++i) sum[i] = h.field.one();
        const Mat r = right_integral(h);
        CHECK(rank(hstack(r, sum)) == 1);
        CHECK(is_unimodular(h));
        CHECK(is_unimodular(dual_hopf(h)));
        CHECK(distinguished_grouplike(h) == h.u);
    }
}

TEST_CASE("unimodularity across the corpus") {
    CHECK_FALSE(is_unimodular(taft(3, Field::prime(7).with_root(2, 3))));
    CHECK_FALSE(is_unimodular(dual_hopf(sweedler())));
    CHECK(is_unimodular(exterior_hopf(2)));
}

TEST_CASE("integral spaces are lines and alpha is a character") {
    for (const BraidedHopf& h : full_corpus()) {
        CAPTURE(h.name);
        CHECK(integral_space(h, Side::Right).basis.size() == 1);
        CHECK(integral_space(h, Side::Left).basis.size() == 1);
        const Mat lam = right_integral(h);
        for (std::size_t b = 0; b < h.dim(); ++b) CHECK(h.product(lam, h.basis(b)) == lam.scaled(h.counit(0, b)));
        CHECK(is_character(h, modular_function(h).row));
    }
}

TEST_CASE("left integrals are right integrals of the opposite algebra") {
    for (const BraidedHopf& h : full_corpus()) {
        CAPTURE(h.name);
        BraidedHopf op = h;
        const std::size_t d = h.dim();
        Mat flip(d * d, d * d, h.field);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) flip(b * d + a, a * d + b) = h.field.one();
        op.m = h.m * flip;
        const auto l = integral_space(h, Side::Left).basis;
        const auto r = integral_space(op, Side::Right).basis;
        REQUIRE(l.size() == 1);
        REQUIRE(r.size() == 1);
        CHECK(rank(hstack(l[0], r[0])) == 1);
    }
}

TEST_CASE("Radford S^4 formula") {
    for (const BraidedHopf& h : full_corpus()) {
        if (!h.trivially_graded()) continue;
        CAPTURE(h.name);
        const RadfordResult r = radford_s4_check(h);
        CHECK(r.holds);
        CHECK_FALSE(r.witness.has_value());
        CHECK(r.s4 == r.rhs);
    }
    const BraidedHopf s = sweedler();
    CHECK(radford_s4_check(s).s4.is_identity());
    const BraidedHopf t = taft(3, Field::prime(7).with_root(2, 3));
    const RadfordResult rt = radford_s4_check(t);
    CHECK(rt.holds);
    CHECK_FALSE(rt.s4.is_identity());
    CHECK_FALSE(rt.mirrored_holds);
}

TEST_CASE("integrals of a non-Hopf input are rejected") {
    BraidedHopf h = group_algebra({2});
    h.m = Mat(2, 4, h.field);  // zero product: Lambda * 1 = 0 forces Lambda = 0
    CHECK(integral_space(h, Side::Right).basis.empty());
    CHECK_THROWS(right_integral(h));
}
