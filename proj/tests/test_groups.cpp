#include <catch2/catch_amalgamated.hpp>

#include "beurling/suites.hpp"

using namespace beurling;

TEST_CASE("permutation arithmetic") {
    Permutation id = Permutation::identity(3);
    Permutation c((std::vector<std::uint32_t>{1, 2, 0}));
    REQUIRE(c * c * c == id);
    REQUIRE(c * c.inverse() == id);
    REQUIRE_THROWS_AS(Permutation({0, 0, 1}), DomainError);
    REQUIRE_THROWS_AS(Permutation::identity(2) * id, RankError);
}

TEST_CASE("apply_hom is multiplicative and sends the empty word to identity") {
    GroupHom h = hom_sym2();
    REQUIRE(h.apply(FreeWord::parse("ab")).is_identity());
    REQUIRE(h.apply(FreeWord::parse("a")) == Permutation({1, 0}));
    REQUIRE(h.apply(FreeWord{}).is_identity());

    Rng rng(7);
    GroupHom homs[] = {hom_sym3(), hom_z4(), grigorchuk_level_hom(2)};
    for (const GroupHom& hom : homs)
        for (int i = 0; i < 1000; ++i) {
            FreeWord u = rng.word(hom.rank(), 6), v = rng.word(hom.rank(), 6);
            REQUIRE(hom.apply(u * v) == hom.apply(u) * hom.apply(v));
        }
}

TEST_CASE("rank guard") {
    REQUIRE_THROWS_AS(hom_sym2().apply(FreeWord::parse("c")), RankError);
}

TEST_CASE("subgroup membership") {
    FiniteIndexSubgroup even = make_subgroup(hom_sym2(), SubgroupMode::kernel());
    REQUIRE(even.contains(FreeWord::parse("ab")));
    REQUIRE_FALSE(even.contains(FreeWord::parse("a")));
    REQUIRE(even.contains(FreeWord{}));
}

TEST_CASE("coset transversals are shortlex-minimal") {
    SECTION("even-length subgroup of F_2") {
        FiniteIndexSubgroup s = FiniteIndexSubgroup::coset_transversal(hom_sym2(), SubgroupMode::kernel());
        REQUIRE(s.index() == 2);
        REQUIRE(s.transversal()[0].empty());
        REQUIRE(s.transversal()[1].str() == "a");
    }
    SECTION("trivial quotient") {
        GroupHom triv(2, 1, {Permutation({0}), Permutation({0})});
        FiniteIndexSubgroup s = FiniteIndexSubgroup::coset_transversal(triv, SubgroupMode::kernel());
        REQUIRE(s.index() == 1);
    }
    SECTION("stabilizer of 0 under a -> 3-cycle") {
        GroupHom h(2, 3, {Permutation({1, 2, 0}), Permutation({0, 1, 2})});
        FiniteIndexSubgroup s = FiniteIndexSubgroup::coset_transversal(h, SubgroupMode::stabilizer(0));
        REQUIRE(s.index() == 3);
        REQUIRE(s.transversal()[0].str() == "1");
        REQUIRE(s.transversal()[1].str() == "a");
        REQUIRE(s.transversal()[2].str() == "A");
    }
    SECTION("representatives hit pairwise distinct cosets and cover") {
        for (auto& [name, sub] : standard_subgroups()) {
            std::set<std::size_t> seen;
            for (const FreeWord& t : sub.transversal()) seen.insert(sub.coset_of(t));
            REQUIRE(seen.size() == sub.index());
            // minimality against a brute-force scan of small words
            Ball b = enumerate_ball(2, 3);
            for (const FreeWord& w : b.elements) {
                const FreeWord& rep = sub.transversal()[sub.coset_of(w)];
                REQUIRE(rep.size() <= w.size());
            }
        }
    }
}

TEST_CASE("Schreier generators lie in the subgroup and bound the radius") {
    for (auto& [name, sub] : standard_subgroups()) {
        for (const FreeWord& g : sub.schreier_generators()) {
            REQUIRE(sub.contains(g));
            REQUIRE(g.size() <= 2 * sub.transversal().back().size() + 1);
        }
    }
}

TEST_CASE("Schreier generators of the even-length subgroup") {
    FiniteIndexSubgroup even = make_subgroup(hom_sym2(), SubgroupMode::kernel());
    std::set<std::string> gens;
    for (const FreeWord& g : even.schreier_generators()) gens.insert(g.str());
    REQUIRE(gens.count("aa"));
    REQUIRE(gens.count("ab"));
    REQUIRE(gens.count("bA"));
}

TEST_CASE("index-1 subgroup: Schreier generators are all of X") {
    GroupHom triv(2, 1, {Permutation({0}), Permutation({0})});
    FiniteIndexSubgroup s = make_subgroup(triv, SubgroupMode::kernel());
    std::set<std::string> gens;
    for (const FreeWord& g : s.schreier_generators()) gens.insert(g.str());
    REQUIRE(gens == std::set<std::string>{"a", "A", "b", "B"});
    REQUIRE(s.ball_radius() == 1);
    REQUIRE(s.y().size() == 4);
}

TEST_CASE("ball generating set") {
    FiniteIndexSubgroup even = make_subgroup(hom_sym2(), SubgroupMode::kernel());
    SECTION("auto radius is 2 and Y is the 12 two-letter words") {
        REQUIRE(even.ball_radius() == 2);
        REQUIRE(even.y().size() == 12);
        for (const FreeWord& y : even.y()) {
            REQUIRE(y.size() == 2);
            REQUIRE(even.contains(y));
        }
    }
    SECTION("Y is symmetric") {
        for (auto& [name, sub] : standard_subgroups()) {
            std::set<std::string> ys;
            for (const FreeWord& y : sub.y()) ys.insert(y.str());
            for (const FreeWord& y : sub.y()) REQUIRE(ys.count(y.inverse().str()));
        }
    }
    SECTION("r = 1 gives the empty set (no length-1 word is even), which cannot generate") {
        FiniteIndexSubgroup s = FiniteIndexSubgroup::coset_transversal(hom_sym2(), SubgroupMode::kernel());
        s.schreier_generators();
        REQUIRE(s.ball_generating_set(1u).empty());
        REQUIRE_FALSE(s.verify_y_generates());
    }
    SECTION("an explicit radius equal to the auto one passes the generation check") {
        FiniteIndexSubgroup s = FiniteIndexSubgroup::coset_transversal(hom_sym2(), SubgroupMode::kernel());
        s.schreier_generators();
        REQUIRE(s.ball_generating_set(2u).size() == 12);
        REQUIRE(s.verify_y_generates());
    }
    SECTION("Schreier generators are contained in auto-radius Y") {
        for (auto& [name, sub] : standard_subgroups()) {
            std::set<std::string> ys;
            for (const FreeWord& y : sub.y()) ys.insert(y.str());
            for (const FreeWord& g : sub.schreier_generators()) REQUIRE(ys.count(g.str()));
        }
    }
}

TEST_CASE("quotient tables") {
    SECTION("order and lengths for the sym2 hom") {
        FiniteGroupTable t = quotient_table(hom_sym2());
        REQUIRE(t.order() == 2);
        REQUIRE(t.length(0) == 0);
        REQUIRE(t.length(1) == 1);
    }
    SECTION("trivial hom") {
        GroupHom triv(2, 1, {Permutation({0}), Permutation({0})});
        REQUIRE(quotient_table(triv).order() == 1);
    }
    SECTION("lengths are the quotient BFS metric") {
        FiniteGroupTable t = quotient_table(hom_sym3());
        REQUIRE(t.order() == 6);
        for (std::size_t i = 0; i < t.order(); ++i) {
            for (unsigned code = 0; code < 4; ++code) {
                std::size_t j = t.index_of(t.element(i) * hom_sym3().letter_image(Letter(std::uint8_t(code))));
                REQUIRE(t.length(j) + 1 >= t.length(i));
                REQUIRE(t.length(i) + 1 >= t.length(j));
            }
        }
    }
    SECTION("cap guard") {
        REQUIRE_THROWS_AS(quotient_table(grigorchuk_level_hom(5), 1000), CapError);
    }
}

TEST_CASE("grigorchuk level actions") {
    SECTION("level 1: only a acts") {
        GroupHom h = grigorchuk_level_hom(1);
        REQUIRE(h.images()[0] == Permutation({1, 0}));
        for (int i : {1, 2, 3}) REQUIRE(h.images()[i].is_identity());
        REQUIRE(quotient_table(h).order() == 2);
    }
    SECTION("all four generators are involutions at every level") {
        for (unsigned level = 1; level <= 6; ++level) {
            GroupHom h = grigorchuk_level_hom(level);
            for (const Permutation& p : h.images()) REQUIRE((p * p).is_identity());
        }
    }
    SECTION("b c d acts trivially at every level") {
        for (unsigned level = 1; level <= 6; ++level) {
            GroupHom h = grigorchuk_level_hom(level);
            REQUIRE(h.apply(FreeWord::parse("bcd")).is_identity());
        }
    }
    SECTION("level quotient orders 2, 8, 128") {
        REQUIRE(quotient_table(grigorchuk_level_hom(1)).order() == 2);
        REQUIRE(quotient_table(grigorchuk_level_hom(2)).order() == 8);
        REQUIRE(quotient_table(grigorchuk_level_hom(3)).order() == 128);
    }
    SECTION("level projection compatibility: dropping the deepest bit") {
        for (unsigned level = 2; level <= 6; ++level) {
            GroupHom hi = grigorchuk_level_hom(level);
            GroupHom lo = grigorchuk_level_hom(level - 1);
            for (unsigned g = 0; g < 4; ++g) {
                const Permutation& p = hi.images()[g];
                const Permutation& q = lo.images()[g];
                for (std::uint32_t leaf = 0; leaf < p.degree(); ++leaf)
                    REQUIRE(p(leaf) >> 1 == q(leaf >> 1));
            }
        }
    }
}

TEST_CASE("finite subgroups of tables") {
    FiniteGroupTable g = quotient_table(hom_sym3());
    std::size_t b = g.index_of(hom_sym3().images()[1]);
    FiniteSubgroup alt3 = FiniteSubgroup::generated_by(g, {b});
    REQUIRE(alt3.order() == 3);
    REQUIRE(alt3.index() == 2);
    REQUIRE(alt3.is_normal());

    std::size_t a = g.index_of(hom_sym3().images()[0]);
    FiniteSubgroup stab = FiniteSubgroup::generated_by(g, {a});
    REQUIRE(stab.order() == 2);
    REQUIRE(stab.index() == 3);
    REQUIRE_FALSE(stab.is_normal());

    SECTION("cosets partition the group") {
        std::vector<std::size_t> count(alt3.index());
        for (std::size_t i = 0; i < g.order(); ++i) ++count[alt3.coset_of(i)];
        for (std::size_t c : count) REQUIRE(c == alt3.order());
    }
}
