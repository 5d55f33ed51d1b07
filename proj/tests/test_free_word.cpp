#include <catch2/catch_amalgamated.hpp>

#include "beurling/free_word.hpp"
#include "beurling/suites.hpp"

using namespace beurling;

TEST_CASE("reduction of pinned letter sequences") {
    REQUIRE(FreeWord::parse("aA").empty());
    REQUIRE(FreeWord::parse("abBa") == FreeWord::parse("aa"));
    REQUIRE(FreeWord::parse("abA").str() == "abA");
    REQUIRE(FreeWord::parse("1").empty());
    REQUIRE(FreeWord::parse("").empty());
}

TEST_CASE("parse rejects bad characters") {
    REQUIRE_THROWS_AS(FreeWord::parse("ab2"), ParseError);
    try {
        FreeWord::parse("ab 2");
    } catch (const ParseError& e) {
        REQUIRE(e.offset == 2);
    }
}

TEST_CASE("reduce against a declared alphabet") {
    std::vector<Letter> seq{Letter(0, false), Letter(2, true)};
    REQUIRE(FreeWord::reduce(seq, 3).str() == "aC");
    REQUIRE_THROWS_AS(FreeWord::reduce(seq, 2), RankError);
}

TEST_CASE("multiplication, inversion, identity laws") {
    FreeWord ab = FreeWord::parse("ab");
    FreeWord ba = FreeWord::parse("Ba");
    REQUIRE((ab * ba).str() == "aa");
    REQUIRE((ab * ab.inverse()).empty());
    REQUIRE((FreeWord{} * ab) == ab);
    REQUIRE(ab.inverse().str() == "BA");
    REQUIRE(FreeWord{}.inverse().empty());
    REQUIRE(FreeWord::parse("A").inverse().str() == "a");
}

TEST_CASE("reduce matches the quadratic oracle on random sequences") {
    Rng rng(12345);
    for (int i = 0; i < 2000; ++i) {
        unsigned rank = (i % 2) ? 2 : 3;
        auto seq = rng.letter_sequence(rank, 64);
        REQUIRE(FreeWord::reduce(seq) == naive_reduce_oracle(seq));
    }
}

TEST_CASE("multiplication is associative and parity-preserving") {
    Rng rng(99);
    for (int i = 0; i < 500; ++i) {
        FreeWord u = rng.word(2, 8), v = rng.word(2, 8), w = rng.word(2, 8);
        REQUIRE((u * v) * w == u * (v * w));
        REQUIRE((u * v).size() % 2 == (u.size() + v.size()) % 2);
    }
}

TEST_CASE("ball enumeration sizes") {
    REQUIRE(enumerate_ball(2, 0).elements.size() == 1);
    REQUIRE(enumerate_ball(2, 1).elements.size() == 5);
    REQUIRE(enumerate_ball(2, 2).elements.size() == 17);

    SECTION("recurrence |B_r| = |B_{r-1}| + 2m(2m-1)^{r-1}") {
        for (unsigned m = 1; m <= 3; ++m)
            for (unsigned r = 0; r <= 5; ++r)
                REQUIRE(enumerate_ball(m, r).elements.size() == ball_size_formula(m, r));
    }

    SECTION("no duplicates, all reduced, all within radius") {
        Ball b = enumerate_ball(2, 4);
        std::set<std::string> seen;
        for (const auto& w : b.elements) {
            REQUIRE(w.size() <= 4);
            REQUIRE(seen.insert(w.str()).second);
        }
    }

    SECTION("cap guard") {
        REQUIRE_THROWS_AS(enumerate_ball(2, 12, 1000), CapError);
    }
}

TEST_CASE("shortlex order: length first, then codes") {
    REQUIRE(FreeWord::parse("a") < FreeWord::parse("A"));
    REQUIRE(FreeWord::parse("A") < FreeWord::parse("b"));
    REQUIRE(FreeWord::parse("B") < FreeWord::parse("aa"));
    Ball b = enumerate_ball(2, 3);
    for (std::size_t i = 1; i < b.elements.size(); ++i)
        REQUIRE(b.elements[i - 1] < b.elements[i]);
}
