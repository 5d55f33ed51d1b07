#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "beurling/algebra.hpp"
#include "beurling/grigorchuk.hpp"

namespace beurling {

// A family of finite quotients indexed by level, e.g. the Grigorchuk tree
// actions.  Used to hunt for a quotient whose kernel separates an element
// from zero.
struct QuotientFamily {
    unsigned rank;
    std::function<GroupHom(unsigned)> level_hom;
    std::string name;

    static QuotientFamily grigorchuk() {
        return {4, [](unsigned level) { return grigorchuk_level_hom(level); }, "grigorchuk"};
    }
};

// Outcome of the residual-finiteness separation hunt: the first level whose
// kernel H_L gives a nonzero identity-coset sum q(f)(e) = sum_{s in H_L} f(s).
// When the support set F intersects H_L only at the identity and |f(e)|
// dominates the off-F tail, the certified lower bound
//   |q(f)(e)| >= |f(e)| - tail
// holds; it is checked here through exact rational brackets.
struct SeparationResult {
    FreeElement f;                   // after the left-translation normalization
    FreeWord translated_by;          // t with f_used = delta_t * f_input
    unsigned level = 0;
    Gaussian identity_sum;           // Eq-3 value q(f)(e)
    std::vector<FreeWord> finite_set;// F: support words with e, tail below epsilon
    Rational tail_upper = 0;         // sum_{t in supp \ F} |f(t)|, upper bracket
    bool kernel_meets_F_only_at_e = false;
    bool bound_applicable = false;   // |f(e)| lower bracket exceeds tail upper
    bool bound_holds = false;        // |q(f)(e)| >= |f(e)| - tail, in brackets
};

inline SeparationResult separate(const FreeElement& input, const QuotientFamily& family,
                                 unsigned level_max) {
    if (input.is_zero()) throw DomainError("separate: zero element has no separating quotient");
    for (const auto& [w, c] : input.terms()) require_rank(w, family.rank, "separate");

    SeparationResult res;
    // normalize so that f(e) != 0 by left-translating by the inverse of the
    // shortlex-least support word
    FreeWord e;
    if (input.coeff(e).is_zero()) {
        const FreeWord& first = input.terms().begin()->first;
        res.translated_by = first.inverse();
        res.f = convolve(FreeElement::delta(res.translated_by), input);
    } else {
        res.f = input;
    }

    Gaussian fe = res.f.coeff(e);

    // F: greedily keep the largest contributions until the rest is below
    // eps = |f(e)|/2
    Rational eps = fe.abs_lower() / 2;
    struct Entry { FreeWord word; Rational contrib; };
    std::vector<Entry> rest;
    for (const auto& [t, c] : res.f.terms())
        if (!t.empty()) rest.push_back({t, c.abs_upper()});
    std::sort(rest.begin(), rest.end(), [](const Entry& a, const Entry& b) {
        if (a.contrib != b.contrib) return a.contrib > b.contrib;
        return a.word < b.word;
    });
    Rational tail = 0;
    for (const Entry& en : rest) tail += en.contrib;
    res.finite_set.push_back(e);
    std::size_t keep = 0;
    while (keep < rest.size() && tail >= eps) {
        tail -= rest[keep].contrib;
        res.finite_set.push_back(rest[keep].word);
        ++keep;
    }
    res.tail_upper = tail;

    for (unsigned level = 1; level <= level_max; ++level) {
        GroupHom hom = family.level_hom(level);
        Gaussian sum;
        for (const auto& [t, c] : res.f.terms())
            if (hom.apply(t).is_identity()) sum += c;
        if (sum.is_zero()) continue;

        res.level = level;
        res.identity_sum = sum;

        res.kernel_meets_F_only_at_e = true;
        for (const FreeWord& t : res.finite_set)
            if (!t.empty() && hom.apply(t).is_identity()) res.kernel_meets_F_only_at_e = false;

        if (res.kernel_meets_F_only_at_e) {
            res.bound_applicable = fe.abs_lower() > res.tail_upper;
            // q(f)(e) - f(e) sums support terms inside the kernel minus e,
            // all outside F, so its modulus is at most the tail
            Gaussian dev = sum - fe;
            bool dev_ok = dev.abs_upper() <= res.tail_upper;
            // componentwise, |sum| >= |f(e)| - tail follows in brackets
            bool bracket_ok = sum.abs_lower() >= fe.abs_lower() - res.tail_upper;
            res.bound_holds = dev_ok && bracket_ok;
        }
        return res;
    }
    throw DomainError("no separating quotient in family '" + family.name + "' within level " +
                      std::to_string(level_max));
}

} // namespace beurling
