#pragma once

#include <vector>

#include "beurling/y_graph.hpp"

namespace beurling {

// Number of trailing letters of y annihilated when y z is reduced (equal to
// the number of leading letters of z annihilated).
inline unsigned pair_cancellation(const FreeWord& y, const FreeWord& z) {
    return unsigned((y.size() + z.size() - (y * z).size()) / 2);
}

// The three checks on a geodesic Y-factorization u = y_1 ... y_n:
//   (i)  adjacent factors cancel at most min(ceil(k_i/2), ceil(k_{i+1}/2)) - 1
//        letters,
//   (ii) the upper half of each factor survives in the reduced prefix
//        product,
//   (iii) prefix X-lengths grow strictly.
struct CancellationReport {
    YFactorization factorization;

    std::vector<unsigned> pair_cancellations;   // i = 1..n-1
    std::vector<unsigned> pair_bounds;
    std::vector<bool> pair_ok;

    std::vector<bool> survival_ok;              // j = 2..n
    std::vector<bool> growth_ok;                // j = 2..n

    bool pass = true;
};

inline CancellationReport check_lemma_2_3(const FiniteIndexSubgroup& sub, YGraph& graph,
                                          const YFactorization& fact) {
    for (const FreeWord& y : fact.factors) {
        bool in_y = false;
        for (const FreeWord& cand : sub.y())
            if (cand == y) { in_y = true; break; }
        if (!in_y) throw DomainError("factorization uses a factor outside Y: '" + y.str() + "'");
    }
    FreeWord u = fact.product();
    if (fact.u != u) throw DomainError("factorization does not multiply to its word");
    unsigned n_geo = graph.y_length(u);
    if (fact.length() != n_geo)
        throw DomainError("non-geodesic factorization rejected: length " +
                          std::to_string(fact.length()) + " vs |u|_Y = " + std::to_string(n_geo));

    CancellationReport rep;
    rep.factorization = fact;
    const auto& ys = fact.factors;
    std::size_t n = ys.size();

    for (std::size_t i = 0; i + 1 < n; ++i) {
        unsigned ki = unsigned(ys[i].size());
        unsigned kj = unsigned(ys[i + 1].size());
        unsigned cancel = pair_cancellation(ys[i], ys[i + 1]);
        unsigned bound = std::min((ki + 1) / 2, (kj + 1) / 2) - 1;
        rep.pair_cancellations.push_back(cancel);
        rep.pair_bounds.push_back(bound);
        bool ok = cancel <= bound;
        rep.pair_ok.push_back(ok);
        rep.pass = rep.pass && ok;
    }

    FreeWord prefix = n > 0 ? ys[0] : FreeWord{};
    for (std::size_t j = 1; j < n; ++j) {
        unsigned kj = unsigned(ys[j].size());
        unsigned half = (kj + 1) / 2;   // ceil(k_j / 2), 1-based position
        unsigned cancel = pair_cancellation(prefix, ys[j]);
        FreeWord next = prefix * ys[j];

        // (ii): letters x_{j,p}, p = ceil(k_j/2)..k_j, survive: the reduced
        // product must end with that exact suffix of y_j.
        bool survive = cancel < half;
        if (survive) {
            unsigned tail = kj - half + 1;
            if (next.size() < tail) {
                survive = false;
            } else {
                for (unsigned p = 0; p < tail && survive; ++p)
                    survive = next.letter(next.size() - tail + p) == ys[j].letter(half - 1 + p);
            }
        }
        rep.survival_ok.push_back(survive);

        bool growth = prefix.size() < next.size();
        rep.growth_ok.push_back(growth);

        rep.pass = rep.pass && survive && growth;
        prefix = std::move(next);
    }
    return rep;
}

} // namespace beurling
