#pragma once

#include <vector>

#include "beurling/algebra.hpp"
#include "beurling/finite_group.hpp"
#include "beurling/linalg.hpp"

namespace beurling {

// Coordinates of a quotient-algebra element over the table's element order.
inline std::vector<Gaussian> to_vector(const QuotientElement& f, const FiniteGroupTable& table) {
    std::vector<Gaussian> v(table.order());
    for (const auto& [p, c] : f.terms()) v[table.index_of(p)] = c;
    return v;
}

inline QuotientElement from_vector(const std::vector<Gaussian>& v, const FiniteGroupTable& table) {
    QuotientElement f;
    for (std::size_t i = 0; i < v.size(); ++i) f.add_term(table.element(i), v[i]);
    return f;
}

inline QuotientElement table_delta(const FiniteGroupTable& table, std::size_t i) {
    return QuotientElement::delta(table.element(i));
}

inline bool supported_on(const QuotientElement& f, const FiniteSubgroup& sub) {
    for (const auto& [p, c] : f.terms())
        if (!sub.member(sub.table().index_of(p))) return false;
    return true;
}

// Sums over the left cosets t H of a finite-group subgroup, indexed by
// transversal position.
inline std::vector<Gaussian> table_coset_sums(const QuotientElement& f, const FiniteSubgroup& sub) {
    std::vector<Gaussian> sums(sub.index());
    for (const auto& [p, c] : f.terms()) sums[sub.coset_of(sub.table().index_of(p))] += c;
    return sums;
}

// J = delta_{t_1} * I + ... + delta_{t_n} * I for a normal finite-index
// subgroup H and a left ideal I of the subgroup algebra, presented by the
// translates of the given I-generators.  Each witness records the
// re-expression delta_x * delta_{t_i} * b = delta_{t_{j}} * (delta_{v} * b)
// with v in H that makes J a left ideal.
struct LiftedIdeal {
    const FiniteGroupTable* table = nullptr;
    const FiniteSubgroup* sub = nullptr;
    std::vector<QuotientElement> i_generators;
    std::vector<QuotientElement> j_generators;   // transversal-major order

    struct Witness {
        unsigned letter_code;    // generator x of G (letter of the defining hom)
        std::size_t coset_from;  // i with x t_i in t_j H
        std::size_t coset_to;    // j
        std::size_t v;           // element index of v = t_j^-1 x t_i, in H
    };
    std::vector<Witness> witnesses;
    bool verified = false;
};

inline LiftedIdeal lift_ideal(const FiniteGroupTable& table, const FiniteSubgroup& sub,
                              const std::vector<QuotientElement>& i_generators) {
    if (!sub.is_normal()) throw DomainError("lift_ideal requires a normal subgroup");
    for (const auto& b : i_generators)
        if (!supported_on(b, sub)) throw DomainError("ideal generator support escapes the subgroup");

    LiftedIdeal lift;
    lift.table = &table;
    lift.sub = &sub;
    lift.i_generators = i_generators;
    for (std::size_t t : sub.transversal()) {
        QuotientElement dt = table_delta(table, t);
        for (const auto& b : i_generators) lift.j_generators.push_back(convolve(dt, b));
    }

    // left-ideal witness on the group generators
    for (unsigned code = 0; code < 2 * table.hom().rank(); ++code) {
        std::size_t x = table.index_of(table.hom().letter_image(Letter(std::uint8_t(code))));
        for (std::size_t i = 0; i < sub.transversal().size(); ++i) {
            std::size_t xt = table.mul(x, sub.transversal()[i]);
            std::size_t j = sub.coset_of(xt);
            std::size_t v = table.mul(table.inv(sub.transversal()[j]), xt);
            if (!sub.member(v)) throw VerifyError("left-ideal witness: v escapes the subgroup");
            for (const auto& b : i_generators) {
                QuotientElement lhs = convolve(table_delta(table, x),
                                               convolve(table_delta(table, sub.transversal()[i]), b));
                QuotientElement rhs = convolve(table_delta(table, sub.transversal()[j]),
                                               convolve(table_delta(table, v), b));
                if (lhs != rhs) throw VerifyError("left-ideal witness identity failed");
            }
            lift.witnesses.push_back({code, i, j, v});
        }
    }
    lift.verified = true;
    return lift;
}

// Dimension of the left ideal generated by the given elements inside the
// full group algebra (span of all left translates).
inline RowSpace left_ideal_span(const FiniteGroupTable& table,
                                const std::vector<QuotientElement>& generators) {
    RowSpace space(table.order());
    for (const auto& g : generators)
        for (std::size_t x = 0; x < table.order(); ++x)
            space.insert(to_vector(convolve(table_delta(table, x), g), table));
    return space;
}

// The extraction identity of the finite-index lifting: given g supported on
// H and an exact expression g = sum_i h_i * f_i with each f_i in J, rewrite
// it as
//   g = sum_k sum_i delta_{t_{k'} t_k} * (h_i^{(k')})^{t_k^-1} * f_i^{(k)},
// where f_i^{(k)} are the transversal components of f_i (supported on H) and
// k' is the index with t_k^-1 H = t_{k'} H.  The result expresses g through
// the subgroup-side components alone.
struct ExtractedExpression {
    struct Term {
        std::size_t i;               // which f_i
        std::size_t k;               // transversal component index
        std::size_t k_prime;
        QuotientElement coefficient; // delta_{t_{k'} t_k} * (h_i^{(k')})^{t_k^-1}
        QuotientElement component;   // f_i^{(k)}
    };
    std::vector<Term> terms;
    bool verified = false;

    QuotientElement recombined() const {
        QuotientElement s;
        for (const auto& t : terms) s += convolve(t.coefficient, t.component);
        return s;
    }
};

inline ExtractedExpression extract_subgroup_expression(
    const FiniteGroupTable& table, const FiniteSubgroup& sub, const QuotientElement& g,
    const std::vector<std::pair<QuotientElement, QuotientElement>>& expression) {
    if (!sub.is_normal()) throw DomainError("extraction requires a normal subgroup");
    if (!supported_on(g, sub)) throw DomainError("extraction target must be supported on the subgroup");

    QuotientElement check;
    for (const auto& [h, f] : expression) check += convolve(h, f);
    if (check != g) throw DomainError("expression does not reproduce g");

    const auto& tr = sub.transversal();
    std::size_t n = tr.size();

    // k' per k: t_k^-1 H = t_{k'} H
    std::vector<std::size_t> kprime(n);
    for (std::size_t k = 0; k < n; ++k) kprime[k] = sub.coset_of(table.inv(tr[k]));

    // transversal components: e = sum_k delta_{t_k} * e^{(k)} with e^{(k)} on H
    auto components = [&](const QuotientElement& e) {
        std::vector<QuotientElement> comp(n);
        for (const auto& [p, c] : e.terms()) {
            std::size_t idx = table.index_of(p);
            std::size_t k = sub.coset_of(idx);
            comp[k].add_term(table.element(table.mul(table.inv(tr[k]), idx)), c);
        }
        return comp;
    };

    ExtractedExpression out;
    for (std::size_t i = 0; i < expression.size(); ++i) {
        std::vector<QuotientElement> hc = components(expression[i].first);
        std::vector<QuotientElement> fc = components(expression[i].second);
        for (std::size_t k = 0; k < n; ++k) {
            if (fc[k].is_zero()) continue;
            std::size_t kp = kprime[k];
            if (hc[kp].is_zero()) continue;
            const Permutation& tk = table.element(tr[k]);
            QuotientElement conj = conjugate(hc[kp], tk.inverse());
            if (!supported_on(conj, sub))
                throw VerifyError("conjugated coefficient escapes the subgroup");
            ExtractedExpression::Term term;
            term.i = i;
            term.k = k;
            term.k_prime = kp;
            term.coefficient =
                convolve(table_delta(table, table.mul(tr[kp], tr[k])), conj);
            term.component = fc[k];
            out.terms.push_back(std::move(term));
        }
    }
    if (out.recombined() != g) throw VerifyError("extraction identity failed to verify");
    out.verified = true;
    return out;
}

} // namespace beurling
