#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopf/corpus.hpp"
#include "hopf/extension.hpp"
#include "hopf/linalg.hpp"

using namespace hopf;

namespace {

const Extension& find_extension(const std::vector<Extension>& all, const std::string& name) {
    for (const Extension& e : all)
        if (e.name == name) return e;
    FAIL("missing extension " << name);
    throw Error("unreachable");
}

Character sign_character(const BraidedHopf& b) {
    // k[C2]: 1 -> 1, g -> -1
    return Character{Mat::from_ints({{1, -1}}, b.field)};
}

}  // namespace

TEST_CASE("characters") {
    const BraidedHopf s = sweedler();
    const auto cs = enumerate_characters(s);
    CHECK(cs.size() == 2);
    for (const auto& c : cs) CHECK(is_character(s, c.row));
    CHECK(enumerate_characters(taft(3, Field::prime(7).with_root(2, 3))).size() == 3);
    // x^2 + 1 has no rational root: only +1 and -1 survive for C4 over Q
    CHECK(enumerate_characters(group_algebra({4})).size() == 2);
    CHECK(enumerate_characters(group_algebra({4}, Field::prime(5))).size() == 4);
    const Character eps = counit_character(s);
    CHECK(convolve(s, eps, eps) == eps);
    const Character a = modular_function(s);
    CHECK(convolve(s, a, character_inverse(s, a)) == eps);
}

TEST_CASE("regular and character modules") {
    const BraidedHopf s = sweedler();
    for (Side side : {Side::Left, Side::Right}) {
        std::string why;
        CHECK(is_module(regular_module(s, side), &why));
        CHECK(why.empty());
    }
    Module bad = regular_module(s);
    bad.ops[1] = s.identity();
    std::string why;
    CHECK_FALSE(is_module(bad, &why));
    CHECK_FALSE(why.empty());

    const Module triv = character_module(s, counit_character(s));
    CHECK(triv.dim() == 1);
    // Hom(trivial, A_A) consists of right integrals
    CHECK(hom_space(triv, regular_module(s)).size() == 1);
    CHECK(hom_space(regular_module(s), regular_module(s)).size() == 4);
}

TEST_CASE("isomorphism search verdicts") {
    const BraidedHopf s = sweedler();
    const auto cs = enumerate_characters(s);
    REQUIRE(cs.size() == 2);
    const Module m0 = character_module(s, cs[0]);
    const Module m1 = character_module(s, cs[1]);
    const IsoResult same = module_iso(m0, m0);
    CHECK(same.verdict == IsoVerdict::Found);
    REQUIRE(same.witness);
    CHECK(is_invertible(*same.witness));
    const IsoResult diff = module_iso(m0, m1);
    CHECK(diff.verdict == IsoVerdict::ProvenNo);
    CHECK(diff.hom_dim == 0);
    CHECK(to_string(IsoVerdict::ProbablyNo) == "probably-no");

    // the span of a nilpotent matrix has no invertible element: the grid proves it
    const Field q = Field::rationals();
    const IsoResult nil = find_invertible({Mat::from_ints({{0, 1}, {0, 0}}, q)}, 2, q);
    CHECK(nil.verdict == IsoVerdict::ProvenNo);
    IsoSearchOptions tiny;
    tiny.grid_limit = 0;
    CHECK(find_invertible({Mat::from_ints({{0, 1}, {0, 0}}, q)}, 2, q, tiny).verdict == IsoVerdict::ProbablyNo);
}

TEST_CASE("iso search is reproducible from its seed") {
    const BraidedHopf s = sweedler();
    const Module r = regular_module(s);
    IsoSearchOptions o;
    o.seed = 5;
    const IsoResult a = module_iso(r, r, o);
    const IsoResult b = module_iso(r, r, o);
    REQUIRE(a.witness);
    REQUIRE(b.witness);
    CHECK(*a.witness == *b.witness);
    CHECK(a.seed == 5);
}

TEST_CASE("restriction, induction, coinduction") {
    const auto all = corpus_extensions();
    const Extension& e = find_extension(all, "sweedler/k[g]");
    REQUIRE(check_extension(e).ok());
    const Module res = restrict(regular_module(*e.A), e);
    CHECK(res.dim() == 4);
    CHECK(is_module(res));
    CHECK(projective_check(res));

    const Module chi = character_module(*e.B, sign_character(*e.B));
    const InducedModule ind = induce(chi, e);
    CHECK(ind.module.dim() == 2);
    CHECK(is_module(ind.module));
    CHECK((ind.projection * ind.section).is_identity());
    const CoinducedModule co = coinduce(chi, e);
    CHECK(co.module.dim() == 2);
    CHECK(co.maps.size() == 2);
    CHECK(is_module(co.module));
    CHECK(induce(regular_module(*e.B), e).module.dim() == 4);
}

TEST_CASE("adjunction dimension law on every corpus extension") {
    for (const Extension& e : corpus_extensions()) {
        CAPTURE(e.name);
        for (const AdjunctionRow& row : adjunction_dimension_law(e)) {
            CAPTURE(row.v);
            CAPTURE(row.w);
            CHECK(row.ok());
        }
    }
}

TEST_CASE("free bases") {
    for (const Extension& e : corpus_extensions()) {
        CAPTURE(e.name);
        const auto fb = free_basis_over(e);
        REQUIRE(fb);
        CHECK(fb->size() * e.B->dim() == e.A->dim());
    }
}

TEST_CASE("projectivity") {
    const BraidedHopf s = sweedler();
    CHECK(projective_check(regular_module(s)));
    // Sweedler's algebra is not semisimple: the trivial module does not split off
    CHECK_FALSE(projective_check(character_module(s, counit_character(s))));
    const BraidedHopf c2 = group_algebra({2});
    CHECK(projective_check(character_module(c2, counit_character(c2))));
}

TEST_CASE("relative modular function and Nakayama automorphism") {
    const auto all = corpus_extensions();
    const Extension& sw = find_extension(all, "sweedler/k[g]");
    const Character chi = relative_modular_function(sw);
    CHECK(chi == sign_character(*sw.B));
    const Mat beta = relative_nakayama(sw, chi);
    CHECK(is_algebra_automorphism(*sw.B, beta));
    CHECK(beta == Mat::from_ints({{1, 0}, {0, -1}}, sw.B->field));

    const Extension& tf = find_extension(all, "taft3/k[g]");
    CHECK(relative_modular_function(tf).row == Mat::from_ints({{1, 2, 4}}, tf.B->field));

    for (const Extension& e : all) {
        CAPTURE(e.name);
        if (e.A->name == e.B->name)
            CHECK(relative_modular_function(e) == counit_character(*e.B));
        const ChiFormulaResult cf = verify_chi_formula(e);
        CHECK(cf.pass);
        CHECK(cf.working.size() == 1);
        CHECK(cf.matches_formula);
        CHECK(cf.convolution_identity);
        CHECK(cf.invertible);
    }
}

TEST_CASE("beta-Frobenius isomorphism with falsification controls") {
    for (const Extension& e : corpus_extensions()) {
        CAPTURE(e.name);
        const BetaFrobeniusResult r = beta_frobenius_check(e);
        CHECK(r.pass);
        CHECK(r.iso.verdict == IsoVerdict::Found);
        CHECK(is_bimodule(hom_bimodule(e)));
    }
    const auto all = corpus_extensions();
    const Extension& sw = find_extension(all, "sweedler/k[g]");
    const BetaFrobeniusResult wrong = beta_frobenius_check(sw, {}, sw.B->identity());
    CHECK_FALSE(wrong.pass);
    CHECK(wrong.iso.verdict == IsoVerdict::ProvenNo);
}

TEST_CASE("Frobenius conditions") {
    const auto all = corpus_extensions();
    for (const Extension& e : all) {
        CAPTURE(e.name);
        const ConditionsReport r = frobenius_conditions_report(e, relative_modular_function(e));
        CHECK(r.ok());
        CHECK(r.modules.size() == b_test_modules(e).size());
    }
    const Extension& sw = find_extension(all, "sweedler/k[g]");
    const ConditionsReport wrong = frobenius_conditions_report(sw, counit_character(*sw.B));
    CHECK(wrong.projective);
    CHECK_FALSE(wrong.coinduction);
    CHECK_FALSE(wrong.ok());
}

TEST_CASE("induction versus coinduction without the twist") {
    const auto all = corpus_extensions();
    CHECK_FALSE(frobenius_functor_check(find_extension(all, "taft3/k[g]")));
    CHECK_FALSE(frobenius_functor_check(find_extension(all, "sweedler/k[g]")));
    CHECK(frobenius_functor_check(find_extension(all, "kC4/kC2")));
}

TEST_CASE("malformed extensions") {
    auto a = std::make_shared<const BraidedHopf>(sweedler());
    auto b = std::make_shared<const BraidedHopf>(group_algebra({2}));
    Extension e{"bad", a, b, Mat(4, 2, a->field)};
    CHECK_FALSE(check_extension(e).ok());
    Extension shape{"shape", a, b, Mat(3, 2, a->field)};
    CHECK_THROWS_AS(check_extension(shape), DimensionMismatch);
}
