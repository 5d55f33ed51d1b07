#include <catch2/catch_amalgamated.hpp>

#include "beurling/suites.hpp"

using namespace beurling;

TEST_CASE("radial evaluation is exact") {
    RadialWeight w2(2);
    REQUIRE(w2.eval(FreeWord{}) == 1);
    REQUIRE(w2.eval(FreeWord::parse("aba")) == 8);
    RadialWeight w32(Rational(3, 2));
    REQUIRE(w32.eval(FreeWord::parse("ab")) == Rational(9, 4));
    REQUIRE_THROWS_AS(RadialWeight(Rational(1, 2)), DomainError);
}

TEST_CASE("induced weight equals base^(quotient length)") {
    FiniteGroupTable t = quotient_table(hom_sym2());
    REQUIRE(induced_eval(2, t, Permutation::identity(2)) == 1);
    REQUIRE(induced_eval(2, t, Permutation({1, 0})) == 2);

    SECTION("brute-force minimum over small preimages agrees") {
        Ball b = enumerate_ball(2, 3);
        Rational best_id = 0, best_swap = 0;
        RadialWeight w(2);
        for (const FreeWord& u : b.elements) {
            Rational v = w.eval(u);
            Permutation p = hom_sym2().apply(u);
            Rational& best = p.is_identity() ? best_id : best_swap;
            if (best == 0 || v < best) best = v;
        }
        REQUIRE(best_id == 1);
        REQUIRE(best_swap == 2);
    }

    SECTION("grigorchuk level 1: coset of b is the identity coset") {
        FiniteGroupTable g1 = quotient_table(grigorchuk_level_hom(1));
        Permutation qb = grigorchuk_level_hom(1).apply(FreeWord::parse("b"));
        REQUIRE(induced_eval(2, g1, qb) == 1);
    }
}

TEST_CASE("restricted weight guards membership") {
    FiniteIndexSubgroup even = make_subgroup(hom_sym2(), SubgroupMode::kernel());
    RestrictedWeight gamma(RadialWeight(2), &even);
    REQUIRE(gamma.eval(FreeWord::parse("ab")) == 4);
    REQUIRE_THROWS_AS(gamma.eval(FreeWord::parse("a")), DomainError);
}

TEST_CASE("submultiplicativity checker") {
    SECTION("radial weights pass on B_4") {
        WeightCheckReport r = check_submultiplicative(RadialWeight(2), enumerate_ball(2, 4));
        REQUIRE(r.pass());
        REQUIRE(r.checked_pairs == 161 * 161);
    }
    SECTION("broken table weight is flagged with a witness") {
        FiniteGroupTable z4 = quotient_table(hom_z4_cyclic());
        std::size_t a = z4.index_of(hom_z4_cyclic().images()[0]);
        std::vector<Rational> vals(4, 1);
        vals[z4.mul(a, a)] = 5;
        WeightCheckReport r = check_submultiplicative(TableWeight(&z4, vals), z4);
        REQUIRE_FALSE(r.pass());
        REQUIRE(r.violations.size() >= 1);
        REQUIRE(r.violations[0].product_value == 5);
        REQUIRE(r.violations[0].bound == 1);
    }
    SECTION("the checker does not demand w(t) = w(t^-1)") {
        FiniteGroupTable z3 = quotient_table(hom_z3());
        std::size_t a = z3.index_of(hom_z3().images()[0]);
        std::vector<Rational> vals(3, 1);
        vals[a] = 2;
        vals[z3.inv(a)] = 4;
        WeightCheckReport r = check_submultiplicative(TableWeight(&z3, vals), z3);
        REQUIRE(r.pass());
    }
}

TEST_CASE("table weight validation") {
    FiniteGroupTable z3 = quotient_table(hom_z3());
    REQUIRE_THROWS_AS(TableWeight(&z3, {Rational(2), Rational(1), Rational(1)}), DomainError);
    REQUIRE_THROWS_AS(TableWeight(&z3, {Rational(1), Rational(1, 2), Rational(1)}), DomainError);
    REQUIRE_THROWS_AS(TableWeight(&z3, {Rational(1), Rational(1)}), DomainError);
}

TEST_CASE("finite induced weight takes the coset minimum") {
    FiniteGroupTable z4 = quotient_table(hom_z4_cyclic());
    std::size_t a = z4.index_of(hom_z4_cyclic().images()[0]);
    FiniteSubgroup h = FiniteSubgroup::generated_by(z4, {z4.mul(a, a)});
    std::vector<Rational> vals = {1, 2, 3, 2};
    TableWeight w(&z4, vals);
    // coset {0, a^2} has min 1; coset {a, a^3} has min 2
    REQUIRE(finite_induced_eval(w, h, 0) == 1);
    REQUIRE(finite_induced_eval(w, h, a) == 2);
}
