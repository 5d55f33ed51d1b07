#pragma once

#include <vector>

#include "beurling/finite_group.hpp"
#include "beurling/free_word.hpp"
#include "beurling/rational.hpp"
#include "beurling/subgroup.hpp"

namespace beurling {

// w(t) = base^{|t|_X} on a free group.  Exact for rational base >= 1;
// submultiplicative because |st| <= |s| + |t|.
class RadialWeight {
public:
    explicit RadialWeight(Rational base) : base_(std::move(base)) {
        if (base_ < 1) throw DomainError("radial weight base must be >= 1");
    }

    const Rational& base() const { return base_; }
    Rational eval_length(unsigned len) const { return rational_pow(base_, len); }
    Rational eval(const FreeWord& w) const { return eval_length(unsigned(w.size())); }

private:
    Rational base_;
};

// gamma = w|_H: same values as the parent, defined only on subgroup members.
class RestrictedWeight {
public:
    RestrictedWeight(RadialWeight parent, const FiniteIndexSubgroup* sub)
        : parent_(std::move(parent)), sub_(sub) {}

    Rational eval(const FreeWord& w) const {
        if (!sub_->contains(w))
            throw DomainError("restricted weight evaluated outside the subgroup: " + w.str());
        return parent_.eval(w);
    }
    const RadialWeight& parent() const { return parent_; }

private:
    RadialWeight parent_;
    const FiniteIndexSubgroup* sub_;
};

// The weight induced on a finite quotient by a radial weight upstairs:
//   w~(Nt) = inf{ w(st) : s in N } = base^{min{|s|_Z : q(s) = t}},
// the infimum being attained at a minimal-length preimage, which is exactly
// the quotient BFS length.
class InducedWeight {
public:
    InducedWeight(Rational base, const FiniteGroupTable* table)
        : base_(std::move(base)), table_(table) {
        if (base_ < 1) throw DomainError("induced weight base must be >= 1");
    }

    Rational eval_index(std::size_t i) const { return rational_pow(base_, table_->length(i)); }
    Rational eval(const Permutation& p) const { return eval_index(table_->index_of(p)); }
    const FiniteGroupTable& table() const { return *table_; }
    const Rational& base() const { return base_; }

private:
    Rational base_;
    const FiniteGroupTable* table_;
};

inline Rational induced_eval(const Rational& radial_base, const FiniteGroupTable& table,
                             const Permutation& coset_element) {
    return InducedWeight(radial_base, &table).eval(coset_element);
}

// An explicit value table on a finite group.  No axiom is assumed beyond
// w(e) = 1 and w >= 1; in particular w(t) = w(t^-1) is NOT required, and
// submultiplicativity is whatever check_submultiplicative reports.
class TableWeight {
public:
    TableWeight(const FiniteGroupTable* table, std::vector<Rational> values)
        : table_(table), values_(std::move(values)) {
        if (values_.size() != table_->order())
            throw DomainError("table weight needs one value per group element");
        if (values_[0] != 1) throw DomainError("weight must satisfy w(e) = 1");
        for (const Rational& v : values_)
            if (v < 1) throw DomainError("weight values must be >= 1");
    }

    Rational eval_index(std::size_t i) const { return values_[i]; }
    Rational eval(const Permutation& p) const { return values_[table_->index_of(p)]; }
    const FiniteGroupTable& table() const { return *table_; }

private:
    const FiniteGroupTable* table_;
    std::vector<Rational> values_;
};

// Eq-5 style induced value for a table weight on a finite group with a
// normal subgroup: the infimum is a minimum over the coset.
inline Rational finite_induced_eval(const TableWeight& parent, const FiniteSubgroup& normal_sub,
                                    std::size_t element_index) {
    if (!normal_sub.is_normal())
        throw DomainError("induced weight requires a normal subgroup");
    bool first = true;
    Rational best = 0;
    for (std::size_t s : normal_sub.elements()) {
        Rational v = parent.eval_index(normal_sub.table().mul(s, element_index));
        if (first || v < best) { best = v; first = false; }
    }
    return best;
}

struct WeightViolation {
    std::string s, t;
    Rational product_value;   // w(st)
    Rational bound;           // w(s) w(t)
};

struct WeightCheckReport {
    std::uint64_t checked_pairs = 0;
    std::uint64_t violation_count = 0;
    std::vector<WeightViolation> violations;   // first few witnesses

    bool pass() const { return violation_count == 0; }

    void note(std::string s, std::string t, Rational val, Rational bound) {
        ++violation_count;
        if (violations.size() < 100)
            violations.push_back({std::move(s), std::move(t), std::move(val), std::move(bound)});
    }
};

// Tests w(st) <= w(s) w(t) on every ordered pair of the ball.
template <typename W>
WeightCheckReport check_submultiplicative(const W& w, const Ball& domain) {
    WeightCheckReport rep;
    std::vector<Rational> vals;
    vals.reserve(domain.elements.size());
    for (const auto& e : domain.elements) vals.push_back(w.eval(e));
    for (std::size_t i = 0; i < domain.elements.size(); ++i) {
        for (std::size_t j = 0; j < domain.elements.size(); ++j) {
            ++rep.checked_pairs;
            Rational lhs = w.eval(domain.elements[i] * domain.elements[j]);
            Rational rhs = vals[i] * vals[j];
            if (lhs > rhs)
                rep.note(domain.elements[i].str(), domain.elements[j].str(), lhs, rhs);
        }
    }
    return rep;
}

// Same, exhaustively over a finite group.
template <typename W>
WeightCheckReport check_submultiplicative(const W& w, const FiniteGroupTable& table) {
    WeightCheckReport rep;
    std::vector<Rational> vals;
    for (std::size_t i = 0; i < table.order(); ++i) vals.push_back(w.eval_index(i));
    for (std::size_t i = 0; i < table.order(); ++i) {
        for (std::size_t j = 0; j < table.order(); ++j) {
            ++rep.checked_pairs;
            Rational lhs = vals[table.mul(i, j)];
            Rational rhs = vals[i] * vals[j];
            if (lhs > rhs)
                rep.note("#" + std::to_string(i), "#" + std::to_string(j), lhs, rhs);
        }
    }
    return rep;
}

} // namespace beurling
