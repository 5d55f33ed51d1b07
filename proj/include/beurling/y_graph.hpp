#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "beurling/free_word.hpp"
#include "beurling/subgroup.hpp"

namespace beurling {

// A factorization u = y_1 y_2 ... y_n with every factor in Y.  When produced
// by the geodesic search, n = |u|_Y and no shorter Y-word equals u.  The
// letter expansions x_{i,1} ... x_{i,k_i} of the factors are just the
// factors' letters, so k_i = factors[i].size().
struct YFactorization {
    FreeWord u;
    std::vector<FreeWord> factors;

    std::size_t length() const { return factors.size(); }

    FreeWord product() const {
        FreeWord p;
        for (const FreeWord& y : factors) p = p * y;
        return p;
    }
};

// Search machinery on the Y-Cayley graph of H (vertices: elements of H,
// edges: right multiplication by an element of Y).  Y is symmetric, so
// |v|_Y = |v^-1|_Y; the searches below lean on that.
//
// The canonical geodesic factorization is the lexicographically smallest
// one under the canonical (shortlex) order of Y — exactly what a plain BFS
// from the empty word returns when it expands neighbours in Y order.  The
// implementation meets in the middle instead, which is equivalent but stays
// polynomial in |u|_Y rather than exponential.
class YGraph {
public:
    explicit YGraph(const FiniteIndexSubgroup& sub) : sub_(&sub), y_(sub.y()) {
        nodes_.push_back(Node{FreeWord{}, 0, SIZE_MAX, 0});
        index_.emplace(FreeWord{}, 0);
        layer_bounds_ = {0, 1};
    }

    const std::vector<FreeWord>& y() const { return y_; }
    const FiniteIndexSubgroup& sub() const { return *sub_; }

    unsigned forward_radius() const { return unsigned(layer_bounds_.size()) - 2; }

    // Grow the forward BFS ball from the empty word out to the given radius.
    void extend_forward(unsigned radius, std::size_t node_cap = 5'000'000) {
        while (forward_radius() < radius) {
            std::size_t begin = layer_bounds_[layer_bounds_.size() - 2];
            std::size_t end = layer_bounds_.back();
            if (begin == end) {
                layer_bounds_.push_back(end);   // graph exhausted
                continue;
            }
            for (std::size_t i = begin; i < end; ++i) {
                for (std::size_t yi = 0; yi < y_.size(); ++yi) {
                    FreeWord next = nodes_[i].w * y_[yi];
                    if (index_.count(next)) continue;
                    if (nodes_.size() >= node_cap)
                        throw CapError("Y-ball exceeds node cap of " + std::to_string(node_cap));
                    index_.emplace(next, nodes_.size());
                    nodes_.push_back(Node{std::move(next), nodes_[i].dist + 1, i, yi});
                }
            }
            layer_bounds_.push_back(nodes_.size());
        }
    }

    std::optional<unsigned> forward_dist(const FreeWord& w) const {
        auto it = index_.find(w);
        if (it == index_.end()) return std::nullopt;
        return nodes_[it->second].dist;
    }

    // y-indices of the lexicographically smallest geodesic from e to w
    // (valid for any w inside the current forward ball).
    std::vector<std::size_t> forward_path(const FreeWord& w) const {
        std::vector<std::size_t> path;
        std::size_t i = index_.at(w);
        while (nodes_[i].parent != SIZE_MAX) {
            path.push_back(nodes_[i].via);
            i = nodes_[i].parent;
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

    // BFS-ordered elements of H with |v|_Y <= radius.
    std::vector<FreeWord> elements_within(unsigned radius, std::size_t node_cap = 5'000'000) {
        extend_forward(radius, node_cap);
        std::vector<FreeWord> out;
        for (const Node& n : nodes_)
            if (n.dist <= radius) out.push_back(n.w);
        return out;
    }

    unsigned y_length(const FreeWord& u, unsigned max_n = 64, std::size_t node_cap = 5'000'000) {
        return search(u, max_n, node_cap).n;
    }

    // The canonical geodesic factorization of u (lex-min in Y order).
    YFactorization geodesic(const FreeWord& u, unsigned max_n = 64, std::size_t node_cap = 5'000'000) {
        Meet m = search(u, max_n, node_cap);
        YFactorization fact;
        fact.u = u;
        if (m.n == 0) return fact;

        unsigned a = (m.n + 1) / 2;
        // Geodesics cross the forward sphere of radius a exactly at nodes
        // with forward distance a and backward distance n - a.  The lex-min
        // geodesic starts with the lex-min forward path among those nodes.
        std::vector<std::size_t> best_path;
        const FreeWord* best_node = nullptr;
        for (const auto& [w, bd] : m.backward) {
            if (bd != m.n - a) continue;
            auto fd = forward_dist(w);
            if (!fd || *fd != a) continue;
            std::vector<std::size_t> p = forward_path(w);
            if (!best_node || p < best_path) {
                best_path = std::move(p);
                best_node = &w;
            }
        }
        if (!best_node) throw VerifyError("meet-in-the-middle lost the meet node");

        FreeWord cur = *best_node;
        for (std::size_t yi : best_path) fact.factors.push_back(y_[yi]);
        // Greedy lex-min suffix using exact backward distances.
        for (unsigned remaining = m.n - a; remaining > 0; --remaining) {
            bool stepped = false;
            for (std::size_t yi = 0; yi < y_.size(); ++yi) {
                FreeWord next = cur * y_[yi];
                auto it = m.backward.find(next);
                if (it != m.backward.end() && it->second == remaining - 1) {
                    fact.factors.push_back(y_[yi]);
                    cur = std::move(next);
                    stepped = true;
                    break;
                }
            }
            if (!stepped) throw VerifyError("backward distances are inconsistent");
        }
        if (fact.product() != u) throw VerifyError("geodesic factorization does not multiply to u");
        return fact;
    }

    // Every geodesic factorization of u, in lex order, up to max_count.
    // Requires the forward ball out to radius |u|_Y, so intended for small
    // radii (exhaustive lemma checks).  Sets *truncated if the cap bit.
    std::vector<YFactorization> all_geodesics(const FreeWord& u, std::size_t max_count,
                                              bool* truncated = nullptr,
                                              std::size_t node_cap = 5'000'000) {
        unsigned n = y_length(u, 64, node_cap);
        extend_forward(n, node_cap);
        if (truncated) *truncated = false;
        std::vector<YFactorization> out;
        std::vector<FreeWord> prefix_factors;
        dfs_geodesics(u, FreeWord{}, n, prefix_factors, out, max_count, truncated);
        return out;
    }

private:
    struct Node {
        FreeWord w;
        unsigned dist;
        std::size_t parent;
        std::size_t via;
    };

    struct Meet {
        unsigned n = 0;
        std::unordered_map<FreeWord, unsigned, FreeWordHash> backward;   // dist to u
    };

    // Bidirectional distance search: forward ball is shared and persistent,
    // backward ball from u is local.  Returns exact backward distances out
    // to floor(n/2).
    Meet search(const FreeWord& u, unsigned max_n, std::size_t node_cap) {
        require_rank(u, sub_->hom().rank(), "y_geodesic");
        if (!sub_->contains(u))
            throw DomainError("word '" + u.str() + "' is not in the subgroup");
        Meet m;
        m.backward.emplace(u, 0);
        if (u.empty()) return m;

        std::vector<FreeWord> frontier{u};
        unsigned b = 0;
        for (unsigned n = 1; n <= max_n; ++n) {
            unsigned a = (n + 1) / 2;
            extend_forward(a, node_cap);
            while (b < n - a) {
                // grow backward ball by one layer: v -> v y^-1
                std::vector<FreeWord> next;
                for (const FreeWord& v : frontier) {
                    for (const FreeWord& y : y_) {
                        FreeWord w = v * y.inverse();
                        if (m.backward.size() >= node_cap)
                            throw CapError("backward Y-ball exceeds node cap");
                        if (m.backward.emplace(w, b + 1).second) next.push_back(std::move(w));
                    }
                }
                frontier = std::move(next);
                ++b;
            }
            // look for a meet certifying distance exactly n
            for (const auto& [w, bd] : m.backward) {
                auto fd = forward_dist(w);
                if (fd && *fd + bd == n) {
                    m.n = n;
                    return m;
                }
            }
        }
        throw CapError("no Y-factorization of '" + u.str() + "' within length " + std::to_string(max_n));
    }

    void dfs_geodesics(const FreeWord& u, const FreeWord& prefix, unsigned remaining,
                       std::vector<FreeWord>& factors, std::vector<YFactorization>& out,
                       std::size_t max_count, bool* truncated) {
        if (out.size() >= max_count) {
            if (truncated) *truncated = true;
            return;
        }
        if (remaining == 0) {
            if (prefix == u) out.push_back(YFactorization{u, factors});
            return;
        }
        for (const FreeWord& y : y_) {
            FreeWord next = prefix * y;
            auto fd = forward_dist(next);
            if (!fd || *fd != factors.size() + 1) continue;           // prefix must stay geodesic
            auto rd = forward_dist(next.inverse() * u);               // |v^-1 u|_Y via symmetry of Y
            if (!rd || *rd != remaining - 1) continue;
            factors.push_back(y);
            dfs_geodesics(u, next, remaining - 1, factors, out, max_count, truncated);
            factors.pop_back();
            if (out.size() >= max_count && truncated && *truncated) return;
        }
    }

    const FiniteIndexSubgroup* sub_;
    std::vector<FreeWord> y_;
    std::vector<Node> nodes_;
    std::unordered_map<FreeWord, std::size_t, FreeWordHash> index_;
    std::vector<std::size_t> layer_bounds_;   // layer_bounds_[d] .. layer_bounds_[d+1) = sphere d
};

} // namespace beurling
