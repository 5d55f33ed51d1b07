// Acceptance suite: runs each criterion at its pinned parameters and prints
// one PASS/FAIL line per criterion.  Exit status 0 only if everything passes.

#include <chrono>
#include <cstdio>

#include "beurling/suites.hpp"

using namespace beurling;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, double seconds,
            double budget_seconds, const std::string& detail) {
    bool in_budget = budget_seconds <= 0 || seconds <= budget_seconds;
    bool ok = pass && in_budget;
    if (!ok) ++failures;
    std::printf("[%s] %d. %-28s %6.2fs%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                seconds, detail.empty() ? "" : "  -- ", detail.c_str());
    if (!in_budget)
        std::printf("       time budget exceeded: %.2fs > %.2fs\n", seconds, budget_seconds);
    if (!pass) std::printf("       criterion checks failed\n");
    std::fflush(stdout);
}

template <typename F>
void criterion(int number, const std::string& name, double budget_seconds, F&& run) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        auto [p, d] = run();
        pass = p;
        detail = d;
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, name, pass, seconds, budget_seconds, detail);
}

std::string suite_detail(const SuiteReport& rep) {
    std::size_t failed = 0;
    for (const auto& c : rep.cases)
        if (!c.pass) ++failed;
    std::string s = std::to_string(rep.checks) + " checks";
    if (failed) {
        s += ", failing:";
        for (const auto& c : rep.cases)
            if (!c.pass) s += " " + c.name;
    }
    return s;
}

} // namespace

int main() {
    constexpr std::uint64_t seed = 20230901;
    std::printf("acceptance suite (seed %llu)\n", static_cast<unsigned long long>(seed));

    criterion(1, "reduction-oracle", 5.0, [] {
        SuiteReport rep = suite_reduction_oracle(seed, 10'000, 64);
        return std::pair(rep.pass, suite_detail(rep));
    });

    criterion(2, "lemma-2.4-certificates", 30.0, [] {
        SuiteReport rep = suite_lemma24(seed, 200, 6);
        return std::pair(rep.pass, suite_detail(rep));
    });

    criterion(3, "lemma-2.3-exhaustive", 60.0, [] {
        SuiteReport rep = suite_lemma23(seed, 4, 10'000);
        return std::pair(rep.pass, suite_detail(rep));
    });

    criterion(4, "induced-weight-identity", 0.0, [] {
        SuiteReport rep = suite_lemma25(seed);
        return std::pair(rep.pass, suite_detail(rep));
    });

    criterion(5, "kernel-characterization", 0.0, [] {
        SuiteReport rep = suite_algebra_axioms(seed, 500, 200);
        bool kernel_case = false;
        for (const auto& c : rep.cases)
            if (c.name == "kernel-characterization") kernel_case = c.pass;
        return std::pair(rep.pass && kernel_case, suite_detail(rep));
    });

    criterion(6, "finite-model-lifting", 30.0, [] {
        SuiteReport rep = suite_lemma21(seed, 20);
        return std::pair(rep.pass, suite_detail(rep));
    });

    criterion(7, "separation", 120.0, [] {
        SuiteReport rep = suite_separation(seed, 100, 8);
        return std::pair(rep.pass, suite_detail(rep));
    });

    criterion(8, "weight-axioms", 0.0, [] {
        SuiteReport rep = suite_weights(seed);
        return std::pair(rep.pass, suite_detail(rep));
    });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
