#pragma once

#include <unordered_map>
#include <vector>

#include "beurling/group_hom.hpp"

namespace beurling {

// The closure of the generator images of a hom: a concrete finite quotient
// group.  Element 0 is the identity; discovery order is BFS from the identity
// over the symmetric generator set, so lengths[i] is the word-length metric
//   lengths[t] = min{ |s|_Z : q(s) = t }
// of the quotient, and indices are deterministic.
class FiniteGroupTable {
public:
    static FiniteGroupTable build(const GroupHom& hom, std::size_t order_cap = 100'000) {
        FiniteGroupTable t;
        t.hom_ = hom;
        t.push(Permutation::identity(hom.degree()), 0);
        std::size_t head = 0;
        while (head < t.elements_.size()) {
            const std::size_t i = head++;
            for (unsigned code = 0; code < 2 * hom.rank(); ++code) {
                Permutation next = t.elements_[i] * hom.letter_image(Letter(std::uint8_t(code)));
                if (t.index_.count(next)) continue;
                if (t.elements_.size() >= order_cap)
                    throw CapError("quotient order exceeds cap of " + std::to_string(order_cap));
                t.push(std::move(next), t.lengths_[i] + 1);
            }
        }
        t.inverse_.resize(t.elements_.size());
        for (std::size_t i = 0; i < t.elements_.size(); ++i)
            t.inverse_[i] = t.index_.at(t.elements_[i].inverse());
        return t;
    }

    const GroupHom& hom() const { return hom_; }
    std::size_t order() const { return elements_.size(); }
    const Permutation& element(std::size_t i) const { return elements_[i]; }
    unsigned length(std::size_t i) const { return lengths_[i]; }

    std::size_t index_of(const Permutation& p) const {
        auto it = index_.find(p);
        if (it == index_.end())
            throw DomainError("permutation does not belong to this quotient group");
        return it->second;
    }
    bool contains(const Permutation& p) const { return index_.count(p) != 0; }

    std::size_t mul(std::size_t i, std::size_t j) const {
        return index_.at(elements_[i] * elements_[j]);
    }
    std::size_t inv(std::size_t i) const { return inverse_[i]; }

private:
    void push(Permutation p, unsigned len) {
        index_.emplace(p, elements_.size());
        elements_.push_back(std::move(p));
        lengths_.push_back(len);
    }

    GroupHom hom_;
    std::vector<Permutation> elements_;
    std::vector<unsigned> lengths_;
    std::vector<std::size_t> inverse_;
    std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

inline FiniteGroupTable quotient_table(const GroupHom& hom, std::size_t order_cap = 100'000) {
    return FiniteGroupTable::build(hom, order_cap);
}

// A subgroup of a finite group table, given by generating element indices.
// Keeps a left-coset transversal of minimal length (ties broken by element
// index, i.e. BFS discovery order) and a full coset lookup.
class FiniteSubgroup {
public:
    static FiniteSubgroup generated_by(const FiniteGroupTable& table, const std::vector<std::size_t>& gens) {
        FiniteSubgroup s;
        s.table_ = &table;
        s.member_.assign(table.order(), false);
        s.member_[0] = true;
        std::vector<std::size_t> frontier{0};
        while (!frontier.empty()) {
            std::vector<std::size_t> next;
            for (std::size_t h : frontier) {
                for (std::size_t g : gens) {
                    for (std::size_t n : {table.mul(h, g), table.mul(h, table.inv(g))}) {
                        if (!s.member_[n]) {
                            s.member_[n] = true;
                            next.push_back(n);
                        }
                    }
                }
            }
            frontier = std::move(next);
        }
        for (std::size_t i = 0; i < table.order(); ++i)
            if (s.member_[i]) s.elements_.push_back(i);

        // left cosets tH; element order is BFS order, so reps are minimal length
        s.coset_of_.assign(table.order(), SIZE_MAX);
        for (std::size_t g = 0; g < table.order(); ++g) {
            if (s.coset_of_[g] != SIZE_MAX) continue;
            std::size_t c = s.transversal_.size();
            s.transversal_.push_back(g);
            for (std::size_t h : s.elements_) s.coset_of_[table.mul(g, h)] = c;
        }

        s.normal_ = true;
        for (std::size_t t : s.transversal_) {
            for (std::size_t h : s.elements_) {
                if (!s.member_[table.mul(table.mul(t, h), table.inv(t))]) {
                    s.normal_ = false;
                    break;
                }
            }
            if (!s.normal_) break;
        }
        return s;
    }

    const FiniteGroupTable& table() const { return *table_; }
    std::size_t order() const { return elements_.size(); }
    std::size_t index() const { return transversal_.size(); }
    bool is_normal() const { return normal_; }
    bool member(std::size_t i) const { return member_[i]; }
    const std::vector<std::size_t>& elements() const { return elements_; }
    const std::vector<std::size_t>& transversal() const { return transversal_; }
    std::size_t coset_of(std::size_t i) const { return coset_of_[i]; }

private:
    const FiniteGroupTable* table_ = nullptr;
    std::vector<bool> member_;
    std::vector<std::size_t> elements_;
    std::vector<std::size_t> transversal_;
    std::vector<std::size_t> coset_of_;
    bool normal_ = false;
};

} // namespace beurling
