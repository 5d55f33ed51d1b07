#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "beurling/errors.hpp"

namespace beurling {

// A bijection on {0, ..., degree-1}, acting on the left: (p*q)(x) = p(q(x)),
// so that word evaluation is multiplicative.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (auto v : img_) {
            if (v >= img_.size() || seen[v])
                throw DomainError("permutation images are not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t degree) {
        Permutation p;
        p.img_.resize(degree);
        std::iota(p.img_.begin(), p.img_.end(), 0);
        return p;
    }

    std::size_t degree() const { return img_.size(); }
    std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
    const std::vector<std::uint32_t>& images() const { return img_; }

    bool is_identity() const {
        for (std::uint32_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    Permutation inverse() const {
        Permutation p;
        p.img_.resize(img_.size());
        for (std::uint32_t i = 0; i < img_.size(); ++i) p.img_[img_[i]] = i;
        return p;
    }

    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.degree() != b.degree())
            throw RankError("permutation degree mismatch: " + std::to_string(a.degree()) + " vs " +
                            std::to_string(b.degree()));
        Permutation p;
        p.img_.resize(a.img_.size());
        for (std::uint32_t i = 0; i < a.img_.size(); ++i) p.img_[i] = a.img_[b.img_[i]];
        return p;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto v : img_) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(img_[i]);
        }
        return s + "]";
    }

private:
    std::vector<std::uint32_t> img_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

} // namespace beurling
