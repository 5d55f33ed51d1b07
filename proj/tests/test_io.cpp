#include <catch2/catch_amalgamated.hpp>

#include "beurling/io.hpp"
#include "beurling/suites.hpp"

using namespace beurling;

TEST_CASE("element text sugar") {
    FreeElement f = parse_element_text("1 - t:ab");
    REQUIRE(f.coeff(FreeWord{}) == Gaussian(1));
    REQUIRE(f.coeff(FreeWord::parse("ab")) == Gaussian(-1));

    FreeElement g = parse_element_text("1/2 t:a + 2i t:b - 3");
    REQUIRE(g.coeff(FreeWord::parse("a")) == Gaussian(Rational(1, 2)));
    REQUIRE(g.coeff(FreeWord::parse("b")) == Gaussian(Rational(0), Rational(2)));
    REQUIRE(g.coeff(FreeWord{}) == Gaussian(Rational(-3)));

    REQUIRE(parse_element_text("i").coeff(FreeWord{}) == Gaussian(Rational(0), Rational(1)));
}

TEST_CASE("element text errors carry an offset") {
    try {
        parse_element_text("1 + $");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.offset == 4);
    }
    REQUIRE_THROWS_AS(parse_element_text(""), ParseError);
    REQUIRE_THROWS_AS(parse_element_text("1 +"), ParseError);
}

TEST_CASE("element JSON round-trip is canonical") {
    Rng rng(77);
    for (int i = 0; i < 50; ++i) {
        FreeElement f = rng.element(2, 4, 6);
        json j = element_to_json(f);
        FreeElement back = free_element_from_json(j);
        REQUIRE(back == f);
        REQUIRE(element_to_json(back) == j);
    }
}

TEST_CASE("quotient element JSON round-trip") {
    QuotientElement f;
    f.add_term(Permutation({1, 0}), Gaussian(Rational(1, 2)));
    f.add_term(Permutation::identity(2), Gaussian(Rational(0), Rational(-1)));
    json j = element_to_json(f);
    REQUIRE(quotient_element_from_json(j) == f);
}

TEST_CASE("rational coefficients parse exactly") {
    FreeElement f = free_element_from_json(json::parse(
        R"({"terms":[{"word":"abA","coeff":{"re":"1/2","im":"0"}}]})"));
    REQUIRE(f.coeff(FreeWord::parse("abA")) == Gaussian(Rational(1, 2)));
    REQUIRE_THROWS_AS(parse_rational("x/y"), ParseError);
}

TEST_CASE("group specs") {
    GroupSpec spec = parse_group_spec(
        R"({"rank":2,"degree":2,"images":[[1,0],[1,0]],"mode":"kernel"})");
    REQUIRE(spec.hom.rank() == 2);
    REQUIRE(spec.mode.is_kernel());

    GroupSpec stab = parse_group_spec(
        R"({"rank":2,"degree":3,"images":[[1,2,0],[0,1,2]],"mode":{"stabilizer":0}})");
    REQUIRE_FALSE(stab.mode.is_kernel());

    GroupSpec grig = parse_group_spec("grigorchuk:2");
    REQUIRE(grig.hom.rank() == 4);
    REQUIRE(grig.hom.degree() == 4);

    REQUIRE_THROWS_AS(parse_group_spec("grigorchuk"), ParseError);
    REQUIRE_THROWS_AS(parse_group_spec(R"({"rank":2})"), json::exception);
}

TEST_CASE("weight specs") {
    WeightSpec radial = weight_spec_from_json(json::parse(R"({"kind":"radial","base":"2"})"));
    REQUIRE(radial.kind == WeightSpec::Kind::radial);
    REQUIRE(radial.base == 2);

    WeightSpec induced = weight_spec_from_json(json::parse(
        R"({"kind":"induced","parent":{"kind":"radial","base":"3/2"},"group":"grigorchuk:1"})"));
    REQUIRE(induced.kind == WeightSpec::Kind::induced);
    REQUIRE(induced.base == Rational(3, 2));

    REQUIRE_THROWS_AS(weight_spec_from_json(json::parse(R"({"kind":"banana"})")), ParseError);
}

TEST_CASE("certificate JSON shape") {
    FiniteIndexSubgroup even = make_subgroup(hom_sym2(), SubgroupMode::kernel());
    YGraph graph(even);
    TelescopeCertificate cert = telescope_certificate(even, graph, FreeWord::parse("abab"));
    json j = certificate_to_json(cert);
    REQUIRE(j.at("u") == "abab");
    REQUIRE(j.at("identity_checked") == true);
    REQUIRE(j.at("eq2_bound").at("bound") == "16");
    bool found = false;
    for (const auto& gen : j.at("gens"))
        if (gen.at("y") == "ab" && gen.at("norm") == "5") found = true;
    REQUIRE(found);
}

TEST_CASE("suite reports are reproducible bit for bit") {
    SuiteReport a = suite_lemma24(7, 20, 4);
    SuiteReport b = suite_lemma24(7, 20, 4);
    REQUIRE(suite_report_to_json(a).dump() == suite_report_to_json(b).dump());
    SuiteReport c = suite_lemma24(8, 20, 4);
    REQUIRE(suite_report_to_json(a).dump() != suite_report_to_json(c).dump());
}
