#pragma once

#include <map>
#include <string>

#include "beurling/free_word.hpp"
#include "beurling/group_hom.hpp"
#include "beurling/permutation.hpp"
#include "beurling/rational.hpp"
#include "beurling/subgroup.hpp"
#include "beurling/weight.hpp"

namespace beurling {

// A finitely supported element of the group algebra over the Gaussian
// rationals.  Key is the group element type: FreeWord for the free-group
// context, Permutation for finite-quotient contexts.  Zero coefficients are
// pruned eagerly so the stored support is canonical, and terms iterate in
// the canonical key order.
template <typename Key>
class Element {
public:
    using Terms = std::map<Key, Gaussian>;

    Element() = default;

    static Element delta(Key k) {
        Element e;
        e.terms_.emplace(std::move(k), Gaussian(1));
        return e;
    }

    static Element zero() { return {}; }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    Gaussian coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Gaussian() : it->second;
    }

    void add_term(const Key& k, const Gaussian& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { a += b; return a; }
    friend Element operator-(Element a, const Element& b) { a -= b; return a; }
    Element operator-() const {
        Element e;
        for (const auto& [k, c] : terms_) e.terms_.emplace(k, -c);
        return e;
    }

    friend Element operator*(const Gaussian& s, const Element& e) {
        Element r;
        if (s.is_zero()) return r;
        for (const auto& [k, c] : e.terms_) r.terms_.emplace(k, s * c);
        return r;
    }

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
    Terms terms_;
};

using FreeElement = Element<FreeWord>;
using QuotientElement = Element<Permutation>;

// (f*g)(t) = sum over uv = t of f(u) g(v)
template <typename Key>
Element<Key> convolve(const Element<Key>& f, const Element<Key>& g) {
    Element<Key> r;
    for (const auto& [u, cu] : f.terms())
        for (const auto& [v, cv] : g.terms()) r.add_term(u * v, cu * cv);
    return r;
}

template <typename Key>
Gaussian augmentation(const Element<Key>& f) {
    Gaussian s;
    for (const auto& [k, c] : f.terms()) s += c;
    return s;
}

// f^t = delta_t * f * delta_{t^-1}: support conjugated, coefficients kept.
template <typename Key>
Element<Key> conjugate(const Element<Key>& f, const Key& t) {
    Element<Key> r;
    Key tinv = t.inverse();
    for (const auto& [k, c] : f.terms()) r.add_term(t * k * tinv, c);
    return r;
}

// ||f||_w = sum |f(t)| w(t), bracketed exactly.  Exact (lower == upper) when
// every coefficient is real or purely imaginary.
template <typename Key, typename W>
NormBound weighted_norm(const Element<Key>& f, const W& w) {
    NormBound n;
    for (const auto& [k, c] : f.terms()) {
        Rational wk = w.eval(k);
        n += NormBound(c.abs_lower() * wk, c.abs_upper() * wk);
    }
    return n;
}

// Sums of f over the left cosets tH, indexed by transversal position.
// f lies in the coset-sum ideal J_w(F, H) iff all sums vanish.
inline std::vector<Gaussian> coset_sums(const FreeElement& f, const FiniteIndexSubgroup& sub) {
    std::vector<Gaussian> sums(sub.index());
    for (const auto& [w, c] : f.terms()) {
        require_rank(w, sub.hom().rank(), "coset_sums");
        sums[sub.coset_of(w)] += c;
    }
    return sums;
}

// q(f)(x) = sum over q(s) = x of f(s): the pushforward along the quotient
// map, an algebra homomorphism.
inline QuotientElement push_forward(const FreeElement& f, const GroupHom& hom) {
    QuotientElement r;
    for (const auto& [w, c] : f.terms()) r.add_term(hom.apply(w), c);
    return r;
}

template <typename Key>
std::string element_str(const Element<Key>& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& [k, c] : f.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + gaussian_str(c) + ")*d[" + k.str() + "]";
    }
    return s;
}

} // namespace beurling
