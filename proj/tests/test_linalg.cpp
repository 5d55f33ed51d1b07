#include <catch2/catch_amalgamated.hpp>

#include "beurling/linalg.hpp"
#include "beurling/suites.hpp"

using namespace beurling;

namespace {
std::vector<Gaussian> vec(std::initializer_list<int> xs) {
    std::vector<Gaussian> v;
    for (int x : xs) v.push_back(Gaussian(x));
    return v;
}
}

TEST_CASE("rank and codimension") {
    RowSpace s(3);
    REQUIRE(s.insert(vec({1, 0, 0})));
    REQUIRE(s.insert(vec({1, 1, 0})));
    REQUIRE_FALSE(s.insert(vec({2, 1, 0})));
    REQUIRE(s.rank() == 2);
    REQUIRE(s.codim() == 1);
    REQUIRE(s.contains(vec({5, -3, 0})));
    REQUIRE_FALSE(s.contains(vec({0, 0, 1})));
}

TEST_CASE("express returns exact coordinates over the inserted vectors") {
    RowSpace s(3);
    s.insert(vec({1, 2, 0}));
    s.insert(vec({0, 1, 1}));
    s.insert(vec({1, 3, 1}));   // dependent
    auto c = s.express(vec({2, 5, 1}));
    REQUIRE(c);
    // recombine
    std::vector<std::vector<Gaussian>> original = {vec({1, 2, 0}), vec({0, 1, 1}), vec({1, 3, 1})};
    std::vector<Gaussian> sum(3);
    for (std::size_t i = 0; i < original.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j) sum[j] += (*c)[i] * original[i][j];
    REQUIRE(sum == vec({2, 5, 1}));
    REQUIRE(s.express(vec({0, 0, 0})).has_value());
    REQUIRE_FALSE(s.express(vec({1, 0, 0})).has_value());
}

TEST_CASE("gaussian entries eliminate exactly") {
    RowSpace s(2);
    std::vector<Gaussian> r1 = {Gaussian(Rational(1), Rational(1)), Gaussian(2)};
    std::vector<Gaussian> r2 = {Gaussian(Rational(0), Rational(2)), Gaussian(Rational(2), Rational(2))};
    REQUIRE(s.insert(r1));
    REQUIRE_FALSE(s.insert(r2));   // r2 = (1+i) * r1
    REQUIRE(s.rank() == 1);
}

TEST_CASE("random subspaces: express recombines exactly") {
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t dim = 4 + rng.below(3);
        RowSpace s(dim);
        std::vector<std::vector<Gaussian>> inserted;
        for (int k = 0; k < 5; ++k) {
            std::vector<Gaussian> v(dim);
            for (auto& x : v) x = rng.gaussian(3, 2);
            inserted.push_back(v);
            s.insert(std::move(v));
        }
        std::vector<Gaussian> target(dim);
        std::vector<Gaussian> coeffs;
        for (const auto& v : inserted) {
            Gaussian c = rng.gaussian(3, 2);
            coeffs.push_back(c);
            for (std::size_t j = 0; j < dim; ++j) target[j] += c * v[j];
        }
        auto expr = s.express(target);
        REQUIRE(expr);
        std::vector<Gaussian> sum(dim);
        for (std::size_t i = 0; i < inserted.size(); ++i)
            for (std::size_t j = 0; j < dim; ++j) sum[j] += (*expr)[i] * inserted[i][j];
        REQUIRE(sum == target);
    }
}
