#include <catch2/catch_amalgamated.hpp>

#include "beurling/suites.hpp"

using namespace beurling;

namespace {
FreeElement d(const std::string& w) { return FreeElement::delta(FreeWord::parse(w)); }
}

TEST_CASE("gaussian rationals") {
    Gaussian z(Rational(1), Rational(2));
    REQUIRE(z * z.conj() == Gaussian(Rational(5)));
    REQUIRE(z / z == Gaussian(1));
    REQUIRE(Gaussian(Rational(3), Rational(4)).abs_lower() == 4);
    REQUIRE(Gaussian(Rational(3), Rational(4)).abs_upper() == 7);
    REQUIRE(Gaussian(Rational(-5)).abs_lower() == 5);
    REQUIRE_THROWS_AS(z / Gaussian(0), DomainError);
}

TEST_CASE("point-mass products") {
    REQUIRE(convolve(d("a"), d("b")) == d("ab"));
    REQUIRE(convolve(d("ab"), d("B")) == d("a"));
    FreeElement f = d("1") - d("a");
    FreeElement g = d("1") + d("a");
    REQUIRE(convolve(f, g) == d("1") - d("aa"));
    REQUIRE(convolve(f, FreeElement::zero()).is_zero());
}

TEST_CASE("zero coefficients are pruned") {
    FreeElement f;
    f.add_term(FreeWord::parse("a"), Gaussian(1));
    f.add_term(FreeWord::parse("a"), Gaussian(-1));
    REQUIRE(f.is_zero());
    REQUIRE(f.support_size() == 0);
}

TEST_CASE("augmentation") {
    REQUIRE(augmentation(d("1") - d("ab")).is_zero());
    REQUIRE(augmentation(d("ab")) == Gaussian(1));
    FreeElement f = Gaussian(3) * d("a") - d("b");
    REQUIRE(augmentation(f) == Gaussian(2));
}

TEST_CASE("weighted norms") {
    RadialWeight w(2);
    REQUIRE(weighted_norm(d("ab"), w).lower == 4);
    REQUIRE(weighted_norm(d("ab"), w).exact());

    FreeElement f = Gaussian(2) * d("1") - d("a");
    NormBound n = weighted_norm(f, w);
    REQUIRE(n.exact());
    REQUIRE(n.upper == 4);

    FreeElement g = Gaussian(Rational(1), Rational(1)) * d("1");
    NormBound m = weighted_norm(g, w);
    REQUIRE(m.lower == 1);
    REQUIRE(m.upper == 2);
}

TEST_CASE("conjugation") {
    FreeWord t = FreeWord::parse("ab");
    REQUIRE(conjugate(d("a"), t) == FreeElement::delta(t * FreeWord::parse("a") * t.inverse()));
    FreeElement f = d("a") + Gaussian(2) * d("bb");
    REQUIRE(conjugate(f, FreeWord{}) == f);
    REQUIRE(conjugate(conjugate(f, t), t.inverse()) == f);
}

TEST_CASE("coset sums for the even-length subgroup") {
    FiniteIndexSubgroup even = make_subgroup(hom_sym2(), SubgroupMode::kernel());
    SECTION("delta_e") {
        auto sums = coset_sums(d("1"), even);
        REQUIRE(sums[0] == Gaussian(1));
        REQUIRE(sums[1].is_zero());
    }
    SECTION("delta_a - delta_b: same left coset") {
        auto sums = coset_sums(d("a") - d("b"), even);
        REQUIRE(sums[0].is_zero());
        REQUIRE(sums[1].is_zero());
    }
    SECTION("delta_e - delta_aa: both in H") {
        auto sums = coset_sums(d("1") - d("aa"), even);
        REQUIRE(sums[0].is_zero());
        REQUIRE(sums[1].is_zero());
    }
    SECTION("rank mismatch") {
        REQUIRE_THROWS_AS(coset_sums(d("c"), even), RankError);
    }
}

TEST_CASE("push_forward") {
    GroupHom h = hom_sym2();
    REQUIRE(push_forward(d("a") - d("b"), h).is_zero());
    REQUIRE(push_forward(d("1"), h) == QuotientElement::delta(Permutation::identity(2)));
    SECTION("algebra homomorphism on point masses and random elements") {
        Rng rng(11);
        for (int i = 0; i < 200; ++i) {
            FreeElement f = rng.element(2, 3, 4), g = rng.element(2, 3, 4);
            REQUIRE(push_forward(convolve(f, g), h) ==
                    convolve(push_forward(f, h), push_forward(g, h)));
        }
    }
    SECTION("norm contraction: upper bounds compared") {
        FiniteGroupTable t = quotient_table(hom_sym3());
        InducedWeight wq(2, &t);
        RadialWeight wf(2);
        Rng rng(13);
        for (int i = 0; i < 100; ++i) {
            FreeElement f = rng.element(2, 4, 5);
            REQUIRE(weighted_norm(push_forward(f, hom_sym3()), wq).upper <=
                    weighted_norm(f, wf).upper);
        }
    }
}

TEST_CASE("kernel of push_forward is the coset-sum space") {
    FiniteIndexSubgroup even = make_subgroup(hom_sym2(), SubgroupMode::kernel());
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        FreeElement f = rng.element(2, 4, 5);
        bool push_zero = push_forward(f, even.hom()).is_zero();
        bool sums_zero = true;
        for (const Gaussian& s : coset_sums(f, even)) sums_zero = sums_zero && s.is_zero();
        REQUIRE(push_zero == sums_zero);
    }
}
