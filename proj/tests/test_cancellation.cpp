#include <catch2/catch_amalgamated.hpp>

#include "beurling/suites.hpp"

using namespace beurling;

TEST_CASE("pair cancellation counts") {
    REQUIRE(pair_cancellation(FreeWord::parse("ab"), FreeWord::parse("ab")) == 0);
    REQUIRE(pair_cancellation(FreeWord::parse("ab"), FreeWord::parse("Ba")) == 1);
    FreeWord w = FreeWord::parse("abAb");
    REQUIRE(pair_cancellation(w, w.inverse()) == w.size());
}

TEST_CASE("lemma 2.3 checks on pinned factorizations") {
    FiniteIndexSubgroup even = make_subgroup(hom_sym2(), SubgroupMode::kernel());
    YGraph graph(even);

    SECTION("abab = (ab)(ab): zero cancellation allowed, zero observed") {
        CancellationReport r = check_lemma_2_3(even, graph, graph.geodesic(FreeWord::parse("abab")));
        REQUIRE(r.pass);
        REQUIRE(r.pair_cancellations == std::vector<unsigned>{0});
        REQUIRE(r.pair_bounds == std::vector<unsigned>{0});
        REQUIRE(r.growth_ok == std::vector<bool>{true});
    }
    SECTION("aabb = (aa)(bb): both letters of bb survive") {
        CancellationReport r = check_lemma_2_3(even, graph, graph.geodesic(FreeWord::parse("aabb")));
        REQUIRE(r.pass);
        REQUIRE(r.survival_ok == std::vector<bool>{true});
    }
    SECTION("single factor: nothing to check, passes") {
        CancellationReport r = check_lemma_2_3(even, graph, graph.geodesic(FreeWord::parse("aa")));
        REQUIRE(r.pass);
        REQUIRE(r.pair_ok.empty());
    }
}

TEST_CASE("non-geodesic factorizations are rejected") {
    FiniteIndexSubgroup even = make_subgroup(hom_sym2(), SubgroupMode::kernel());
    YGraph graph(even);
    YFactorization fake;
    fake.u = FreeWord::parse("aa");
    fake.factors = {FreeWord::parse("ab"), FreeWord::parse("Ba")};
    REQUIRE(fake.product() == fake.u);
    REQUIRE_THROWS_AS(check_lemma_2_3(even, graph, fake), DomainError);

    YFactorization outside;
    outside.u = FreeWord::parse("aa");
    outside.factors = {FreeWord::parse("aa"), FreeWord::parse("bb"), FreeWord::parse("BB")};
    REQUIRE_THROWS_AS(check_lemma_2_3(even, graph, outside), DomainError);
}

TEST_CASE("exhaustive lemma 2.3 over index-3 and index-4 subgroups, small radius") {
    for (auto& [name, sub] : standard_subgroups()) {
        YGraph graph(sub);
        for (const FreeWord& u : graph.elements_within(3)) {
            bool truncated = false;
            for (const YFactorization& fact : graph.all_geodesics(u, 500, &truncated)) {
                CancellationReport r = check_lemma_2_3(sub, graph, fact);
                INFO(name << " u=" << u.str());
                REQUIRE(r.pass);
            }
        }
    }
}
