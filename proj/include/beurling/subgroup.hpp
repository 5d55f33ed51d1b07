#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "beurling/finite_group.hpp"
#include "beurling/free_word.hpp"
#include "beurling/group_hom.hpp"

namespace beurling {

// How a finite-index subgroup of F_m is cut out of a permutation hom:
// either the full kernel (always normal) or the stabilizer of a point
// (generally not normal).
struct SubgroupMode {
    enum class Kind { kernel, stabilizer } kind = Kind::kernel;
    std::uint32_t point = 0;

    static SubgroupMode kernel() { return {Kind::kernel, 0}; }
    static SubgroupMode stabilizer(std::uint32_t p) { return {Kind::stabilizer, p}; }
    bool is_kernel() const { return kind == Kind::kernel; }

    std::string str() const {
        return is_kernel() ? "kernel" : "stabilizer(" + std::to_string(point) + ")";
    }
};

// H = q^{-1}(kernel) or q^{-1}(Stab(point)) inside the free group, together
// with the combinatorial data the certificate machinery needs: a shortlex-BFS
// left transversal, Schreier generators, and the ball generating set
// Y = punctured B_r intersect H.
class FiniteIndexSubgroup {
public:
    // Stage 1 of construction: coset count and minimal-length transversal.
    // BFS over reduced words in shortlex order; the first word reaching a
    // coset is its representative, so transversal[0] is the empty word.
    static FiniteIndexSubgroup coset_transversal(GroupHom hom, SubgroupMode mode,
                                                 std::size_t order_cap = 100'000) {
        FiniteIndexSubgroup s;
        s.hom_ = std::move(hom);
        s.mode_ = mode;

        std::size_t target;
        if (mode.is_kernel()) {
            target = count_image_order(s.hom_, order_cap);
        } else {
            if (mode.point >= s.hom_.degree())
                throw DomainError("stabilized point out of range");
            target = orbit_size(s.hom_, mode.point);
        }

        // BFS on the coset graph itself: extending representatives in
        // discovery order with letters in canonical order yields the
        // shortlex-minimal representative of every coset.
        s.transversal_.push_back(FreeWord{});
        s.note_coset(Permutation::identity(s.hom_.degree()), 0);
        std::size_t head = 0;
        while (head < s.transversal_.size() && s.transversal_.size() < target) {
            FreeWord w = s.transversal_[head++];
            for (unsigned code = 0; code < 2 * s.hom_.rank(); ++code) {
                FreeWord nw = w * FreeWord::generator(code >> 1, code & 1);
                if (s.coset_of(nw) == SIZE_MAX) {
                    s.note_coset(s.hom_.apply(nw), s.transversal_.size());
                    s.transversal_.push_back(std::move(nw));
                }
            }
        }
        if (s.transversal_.size() != target)
            throw VerifyError("coset enumeration did not reach the expected index");
        return s;
    }

    // Stage 2: Schreier generators { t x rep(t x)^{-1} } \ {e}, freely
    // reduced, in shortlex order.  They generate H and bound the auto radius.
    const std::vector<FreeWord>& schreier_generators() {
        if (!schreier_done_) {
            std::set<FreeWord> gens;
            for (const FreeWord& t : transversal_) {
                for (unsigned code = 0; code < 2 * hom_.rank(); ++code) {
                    FreeWord tx = t * FreeWord::generator(code >> 1, code & 1);
                    FreeWord g = tx * representative(tx).inverse();
                    if (!g.empty()) gens.insert(std::move(g));
                }
            }
            schreier_gens_.assign(gens.begin(), gens.end());
            schreier_done_ = true;
        }
        return schreier_gens_;
    }

    // Stage 3: Y = punctured B_r intersect H.  With r unset, r defaults to the
    // maximal Schreier generator length, which guarantees that Y generates H.
    // An explicit smaller r returns the filtered set as-is: whether it still
    // generates is a separate question (verify_y_generates).
    const std::vector<FreeWord>& ball_generating_set(std::optional<unsigned> r = std::nullopt,
                                                     std::size_t ball_cap = 5'000'000) {
        unsigned radius;
        if (r) {
            radius = *r;
        } else {
            radius = 0;
            for (const FreeWord& g : schreier_generators())
                radius = std::max<unsigned>(radius, unsigned(g.size()));
        }
        if (y_done_ && radius == r_) return y_;
        Ball ball = enumerate_ball(hom_.rank(), radius, ball_cap);
        y_.clear();
        for (const FreeWord& w : ball.elements)
            if (!w.empty() && contains(w)) y_.push_back(w);
        r_ = radius;
        y_done_ = true;
        return y_;
    }

    // BFS over Y-products until every Schreier generator is reached.
    bool verify_y_generates(std::size_t node_cap = 2'000'000) {
        schreier_generators();
        std::unordered_set<FreeWord, FreeWordHash> targets(schreier_gens_.begin(), schreier_gens_.end());
        for (const FreeWord& y : y_) targets.erase(y);
        if (targets.empty()) return true;
        std::unordered_set<FreeWord, FreeWordHash> seen{FreeWord{}};
        std::vector<FreeWord> frontier{FreeWord{}};
        while (!frontier.empty() && !targets.empty()) {
            std::vector<FreeWord> next;
            for (const FreeWord& w : frontier) {
                for (const FreeWord& y : y_) {
                    FreeWord nw = w * y;
                    if (seen.insert(nw).second) {
                        targets.erase(nw);
                        if (seen.size() > node_cap) return false;
                        next.push_back(std::move(nw));
                    }
                }
            }
            frontier = std::move(next);
        }
        return targets.empty();
    }

    bool contains(const FreeWord& w) const {
        Permutation p = hom_.apply(w);
        return mode_.is_kernel() ? p.is_identity() : p(mode_.point) == mode_.point;
    }

    // Index of the left coset wH among the transversal, SIZE_MAX if unknown
    // (cannot happen once the transversal is complete).
    std::size_t coset_of(const FreeWord& w) const {
        Permutation p = hom_.apply(w);
        if (mode_.is_kernel()) {
            auto it = kernel_cosets_.find(p);
            return it == kernel_cosets_.end() ? SIZE_MAX : it->second;
        }
        auto it = orbit_cosets_.find(p(mode_.point));
        return it == orbit_cosets_.end() ? SIZE_MAX : it->second;
    }

    const FreeWord& representative(const FreeWord& w) const { return transversal_[coset_of(w)]; }

    const GroupHom& hom() const { return hom_; }
    SubgroupMode mode() const { return mode_; }
    bool is_normal() const { return mode_.is_kernel(); }   // stabilizers are not certified normal
    std::size_t index() const { return transversal_.size(); }
    const std::vector<FreeWord>& transversal() const { return transversal_; }
    unsigned ball_radius() const { return r_; }
    const std::vector<FreeWord>& y() const {
        if (!y_done_) throw DomainError("ball generating set not computed yet");
        return y_;
    }

private:
    FiniteIndexSubgroup() = default;

    // coset key: image permutation for kernels, image of the point for stabilizers
    void note_coset(const Permutation& p, std::size_t idx) {
        if (mode_.is_kernel()) kernel_cosets_.emplace(p, idx);
        else orbit_cosets_.emplace(p(mode_.point), idx);
    }

    static std::size_t count_image_order(const GroupHom& hom, std::size_t cap) {
        std::unordered_set<Permutation, PermutationHash> seen{Permutation::identity(hom.degree())};
        std::vector<Permutation> frontier{Permutation::identity(hom.degree())};
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const Permutation& p : frontier) {
                for (unsigned code = 0; code < 2 * hom.rank(); ++code) {
                    Permutation np = p * hom.letter_image(Letter(std::uint8_t(code)));
                    if (seen.insert(np).second) {
                        if (seen.size() > cap)
                            throw CapError("image group order exceeds cap of " + std::to_string(cap));
                        next.push_back(std::move(np));
                    }
                }
            }
            frontier = std::move(next);
        }
        return seen.size();
    }

    static std::size_t orbit_size(const GroupHom& hom, std::uint32_t point) {
        std::unordered_set<std::uint32_t> seen{point};
        std::vector<std::uint32_t> frontier{point};
        while (!frontier.empty()) {
            std::vector<std::uint32_t> next;
            for (std::uint32_t x : frontier) {
                for (unsigned code = 0; code < 2 * hom.rank(); ++code) {
                    std::uint32_t y = hom.letter_image(Letter(std::uint8_t(code)))(x);
                    if (seen.insert(y).second) next.push_back(y);
                }
            }
            frontier = std::move(next);
        }
        return seen.size();
    }

    GroupHom hom_;
    SubgroupMode mode_;
    std::vector<FreeWord> transversal_;
    std::vector<FreeWord> schreier_gens_;
    std::vector<FreeWord> y_;
    unsigned r_ = 0;
    bool schreier_done_ = false;
    bool y_done_ = false;
    std::unordered_map<Permutation, std::size_t, PermutationHash> kernel_cosets_;
    std::unordered_map<std::uint32_t, std::size_t> orbit_cosets_;
};

// Convenience: all three stages at once.
inline FiniteIndexSubgroup make_subgroup(GroupHom hom, SubgroupMode mode,
                                         std::optional<unsigned> r = std::nullopt,
                                         std::size_t order_cap = 100'000) {
    FiniteIndexSubgroup s = FiniteIndexSubgroup::coset_transversal(std::move(hom), mode, order_cap);
    s.schreier_generators();
    s.ball_generating_set(r);
    return s;
}

} // namespace beurling
