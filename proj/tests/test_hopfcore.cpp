#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopf/braided.hpp"
#include "hopf/corpus.hpp"
#include "hopf/linalg.hpp"
#include "oracle.hpp"

using namespace hopf;

namespace {

// Braided bialgebra compatibility evaluated entry by entry from the
// structure constants, without the pipeline evaluator.
bool compatibility_by_loops(const BraidedHopf& h) {
    const std::size_t d = h.dim();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Mat lhs(d * d, 1, h.field);
            for (std::size_t c = 0; c < d; ++c) {
                if (h.m(c, a * d + b).is_zero()) continue;
                for (std::size_t r = 0; r < d * d; ++r) lhs[r] += h.m(c, a * d + b) * h.delta(r, c);
            }
            Mat rhs(d * d, 1, h.field);
            for (std::size_t a1 = 0; a1 < d; ++a1)
                for (std::size_t a2 = 0; a2 < d; ++a2) {
                    const Scalar ca = h.delta(a1 * d + a2, a);
                    if (ca.is_zero()) continue;
                    for (std::size_t b1 = 0; b1 < d; ++b1)
                        for (std::size_t b2 = 0; b2 < d; ++b2) {
                            const Scalar cb = h.delta(b1 * d + b2, b);
                            if (cb.is_zero()) continue;
                            const Scalar coef = ca * cb * h.bichar(h.degree(a2), h.degree(b1));
                            for (std::size_t p = 0; p < d; ++p) {
                                if (h.m(p, a1 * d + b1).is_zero()) continue;
                                for (std::size_t q = 0; q < d; ++q)
                                    rhs[p * d + q] += coef * h.m(p, a1 * d + b1) * h.m(q, a2 * d + b2);
                            }
                        }
                }
            if (lhs != rhs) return false;
        }
    return true;
}

bool same_structure(const BraidedHopf& a, const BraidedHopf& b) {
    return a.m == b.m && a.u == b.u && a.delta == b.delta && a.counit == b.counit && a.S == b.S &&
           a.space.degrees == b.space.degrees;
}

}  // namespace

TEST_CASE("grading group arithmetic") {
    GradingGroup g({2, 3});
    CHECK(g.order() == 6);
    CHECK(g.add({1, 2}, {1, 2}) == GroupElement{0, 1});
    CHECK(g.negate({1, 1}) == GroupElement{1, 2});
    CHECK(g.index_of({1, 0}) == 3);  // first factor most significant
    for (std::size_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element(i)) == i);
    CHECK(GradingGroup(std::vector<int>{}).is_trivial());
}

TEST_CASE("bicharacters are bimultiplicative by exhaustion") {
    const Field f7 = Field::prime(7).with_root(2, 3);
    Bicharacter beta(GradingGroup({3, 3}), {{1, 2}, {0, 1}}, f7.from_int(2), 3);
    CHECK(beta.is_bimultiplicative());
    CHECK(beta({1, 0}, {1, 0}) == f7.from_int(2));
    CHECK(beta({0, 1}, {1, 0}) == f7.one());
    CHECK(beta({1, 0}, {0, 1}) == f7.from_int(4));
    CHECK_THROWS(Bicharacter(GradingGroup({3}), {{1}}, f7.from_int(3), 3));
}

TEST_CASE("braiding matrices") {
    const Field q = Field::rationals().with_root(-1, 2);
    Bicharacter super(GradingGroup({2}), {{1}}, q.from_int(-1), 2);
    const GradedSpace odd{{{1}}};
    CHECK(braiding_matrix(super, odd, odd) == Mat::from_ints({{-1}}, q));
    const GradedSpace mixed{{{0}, {1}}};
    const Mat s = braiding_matrix(super, mixed, mixed);
    CHECK(inverse_braiding_matrix(super, mixed, mixed) * s == Mat::identity(4, q));
    const Bicharacter triv = Bicharacter::trivial(GradingGroup(std::vector<int>{}), q);
    const GradedSpace plain{{{}, {}}};
    // trivial group: the flip
    const Mat flip = braiding_matrix(triv, plain, plain);
    CHECK(flip(0, 0).is_one());
    CHECK(flip(2, 1).is_one());
    CHECK(flip(1, 2).is_one());
    CHECK(flip(3, 3).is_one());
}

TEST_CASE("the corpus passes every axiom") {
    for (const BraidedHopf& h : full_corpus()) {
        CAPTURE(h.name);
        const AxiomReport r = verify_hopf(h);
        CHECK_MESSAGE(r.ok(), r.to_string());
        CHECK(compatibility_by_loops(h));
        CHECK(is_invertible(h.S));
    }
}

TEST_CASE("group algebras") {
    const BraidedHopf c2 = group_algebra({2});
    CHECK(c2.dim() == 2);
    CHECK(c2.S == Mat::identity(2, c2.field));
    const BraidedHopf c3 = group_algebra({3});
    CHECK(c3.S == Mat::from_ints({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, c3.field));
    CHECK(verify_hopf(group_algebra({2, 3}, Field::prime(5))).ok());
}

TEST_CASE("sweedler matches the hand-written relations") {
    const BraidedHopf s = sweedler();
    REQUIRE(s.dim() == 4);
    for (std::size_t a = 0; a < 4; ++a) {
        const oracle::Vec delta = oracle::Sweedler::comult(a);
        for (std::size_t r = 0; r < 16; ++r) CHECK(s.delta(r, a).rational() == delta[r]);
        CHECK(s.counit(0, a).rational() == oracle::Sweedler::counit(a));
        for (std::size_t b = 0; b < 4; ++b) {
            const oracle::Vec p = oracle::Sweedler::mult(a, b);
            for (std::size_t c = 0; c < 4; ++c) CHECK(s.m(c, a * 4 + b).rational() == p[c]);
        }
    }
    CHECK(same_structure(taft(2, Field::rationals().with_root(-1, 2)), s));
}

TEST_CASE("taft(3) over F7") {
    const BraidedHopf t = taft(3, Field::prime(7).with_root(2, 3));
    CHECK(t.dim() == 9);
    CHECK(verify_hopf(t).ok());
    CHECK_THROWS(taft(3, Field::prime(7)));
    CHECK_THROWS(taft(3, Field::prime(7).with_root(6, 2)));
}

TEST_CASE("exterior Hopf algebras") {
    const BraidedHopf e1 = exterior_hopf(1, Field::prime(5));
    CHECK(verify_hopf(e1).ok());
    CHECK(e1.bichar({1}, {1}) == Field::prime(5).from_int(-1));
    CHECK(e1.S * e1.S == e1.identity());

    const BraidedHopf e2 = exterior_hopf(2);
    const Field& q = e2.field;
    // delta(x1 x2) = x1x2 (x) 1 + x1 (x) x2 - x2 (x) x1 + 1 (x) x1x2 on bitmask basis
    Mat expected(16, 1, q);
    expected[3 * 4 + 0] = q.one();
    expected[1 * 4 + 2] = q.one();
    expected[2 * 4 + 1] = q.from_int(-1);
    expected[0 * 4 + 3] = q.one();
    CHECK(e2.delta * e2.basis(3) == expected);
    CHECK(e2.degree(3) == GroupElement{0});
    CHECK_THROWS(exterior_hopf(1, Field::prime(2)));
}

TEST_CASE("braided lines") {
    const BraidedHopf l2 = braided_line(2, Field::rationals().with_root(-1, 2));
    CHECK(same_structure(l2, exterior_hopf(1)));
    const BraidedHopf l3 = braided_line(3, Field::prime(7).with_root(2, 3));
    CHECK(verify_hopf(l3).ok());
    CHECK(l3.degree(2) == GroupElement{2});
    CHECK_THROWS(braided_line(3, Field::prime(7)));
}

TEST_CASE("duals") {
    const BraidedHopf c2 = group_algebra({2});
    const BraidedHopf fc2 = dual_hopf(c2);
    CHECK(verify_hopf(fc2).ok());
    CHECK(same_structure(dual_hopf(fc2), c2));
    const BraidedHopf s = sweedler();
    CHECK(same_structure(dual_hopf(dual_hopf(s)), s));
    CHECK(grouplikes(s).size() == 2);
    CHECK(grouplikes(dual_hopf(s)).size() == 2);
    CHECK_THROWS(dual_hopf(exterior_hopf(1)));
}

TEST_CASE("Hopf maps") {
    const BraidedHopf s = sweedler();
    const BraidedHopf c2 = group_algebra({2});
    CHECK(check_hopf_map(HopfMap{&s, &s, s.identity()}).ok());
    Mat inc(4, 2, s.field);
    inc(0, 0) = s.field.one();
    inc(2, 1) = s.field.one();
    CHECK(check_hopf_map(HopfMap{&c2, &s, inc}).ok());
    Mat bad = s.identity();
    bad(1, 1) = s.field.zero();
    bad(2, 1) = s.field.one();
    const AxiomReport r = check_hopf_map(HopfMap{&s, &s, bad});
    CHECK_FALSE(r.ok());
    REQUIRE(r.find("comultiplicative"));
    CHECK_FALSE(r.find("comultiplicative")->passed);
}

TEST_CASE("injected antipode fault is reported with a witness") {
    BraidedHopf s = sweedler();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (!s.S(i, j).is_zero() && j == 1) s.S(i, j) = s.field.zero();
    const AxiomReport r = verify_hopf(s);
    CHECK_FALSE(r.ok());
    const AxiomCheck* c = r.find("left antipode");
    REQUIRE(c);
    CHECK_FALSE(c->passed);
    CHECK(c->witness.has_value());
}

TEST_CASE("malformed tensors throw") {
    BraidedHopf s = sweedler();
    s.m = Mat(4, 15, s.field);
    CHECK_THROWS_AS(verify_hopf(s), DimensionMismatch);
}

TEST_CASE("antipode inverse") {
    for (const BraidedHopf& h : full_corpus()) {
        CAPTURE(h.name);
        CHECK((antipode_inverse(h) * h.S).is_identity());
    }
}
