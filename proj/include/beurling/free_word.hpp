#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "beurling/errors.hpp"

namespace beurling {

// One symbol of the symmetric alphabet X = {a_1, a_1^-1, ..., a_m, a_m^-1}.
// Packed as code = 2*generator + inverted, which is also the canonical
// ordering a_1 < a_1^-1 < a_2 < ... used everywhere for determinism.
struct Letter {
    std::uint8_t code;

    constexpr Letter(unsigned generator, bool inverted)
        : code(static_cast<std::uint8_t>(2 * generator + (inverted ? 1 : 0))) {}
    constexpr explicit Letter(std::uint8_t raw) : code(raw) {}

    constexpr unsigned generator() const { return code >> 1; }
    constexpr bool inverted() const { return code & 1; }
    constexpr Letter inverse() const { return Letter(static_cast<std::uint8_t>(code ^ 1)); }

    friend constexpr bool operator==(Letter a, Letter b) { return a.code == b.code; }
    friend constexpr bool operator<(Letter a, Letter b) { return a.code < b.code; }
};

// A freely reduced word over X.  The stored sequence *is* the normal form,
// so size() equals the word length |w|_X.  Immutable after construction.
class FreeWord {
public:
    FreeWord() = default;

    // Reduces an arbitrary letter sequence.  Single left-to-right pass with a
    // stack: linear time, deterministic.
    static FreeWord reduce(std::span<const Letter> letters) {
        FreeWord w;
        w.codes_.reserve(letters.size());
        for (Letter l : letters) w.push_reduce(l.code);
        return w;
    }

    // Same, against a declared alphabet.
    static FreeWord reduce(std::span<const Letter> letters, unsigned rank) {
        for (Letter l : letters)
            if (l.generator() >= rank)
                throw RankError("reduce: letter index " + std::to_string(l.generator()) +
                                " out of alphabet of rank " + std::to_string(rank));
        return reduce(letters);
    }

    static FreeWord generator(unsigned g, bool inverted = false) {
        FreeWord w;
        w.codes_.push_back(static_cast<std::uint8_t>(2 * g + (inverted ? 1 : 0)));
        return w;
    }

    std::size_t size() const { return codes_.size(); }   // |w|_X
    bool empty() const { return codes_.empty(); }
    Letter letter(std::size_t i) const { return Letter(codes_[i]); }
    const std::vector<std::uint8_t>& codes() const { return codes_; }

    unsigned max_generator() const {
        unsigned m = 0;
        for (auto c : codes_) m = std::max(m, unsigned(c >> 1));
        return m;
    }

    // True when every letter fits in an alphabet of the given rank.
    bool fits_rank(unsigned rank) const { return empty() || max_generator() < rank; }

    FreeWord inverse() const {
        FreeWord w;
        w.codes_.reserve(codes_.size());
        for (auto it = codes_.rbegin(); it != codes_.rend(); ++it)
            w.codes_.push_back(static_cast<std::uint8_t>(*it ^ 1));
        return w;   // reversal of a reduced word is reduced
    }

    friend FreeWord operator*(const FreeWord& u, const FreeWord& v) {
        FreeWord w;
        w.codes_ = u.codes_;
        w.codes_.reserve(u.codes_.size() + v.codes_.size());
        for (auto c : v.codes_) w.push_reduce(c);
        return w;
    }

    friend bool operator==(const FreeWord& a, const FreeWord& b) { return a.codes_ == b.codes_; }
    friend bool operator!=(const FreeWord& a, const FreeWord& b) { return !(a == b); }

    // Shortlex: length first, then letter codes.  The canonical order for
    // transversals, Y sets and serialized supports.
    friend bool operator<(const FreeWord& a, const FreeWord& b) {
        if (a.codes_.size() != b.codes_.size()) return a.codes_.size() < b.codes_.size();
        return a.codes_ < b.codes_;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto c : codes_) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }

    // Text form: 'a'..'z' are generators 0..25, 'A'..'Z' their inverses,
    // "1" or "" is the empty word.
    static FreeWord parse(const std::string& text) {
        if (text.empty() || text == "1") return {};
        FreeWord w;
        for (std::size_t i = 0; i < text.size(); ++i) {
            char ch = text[i];
            if (ch >= 'a' && ch <= 'z')
                w.push_reduce(static_cast<std::uint8_t>(2 * (ch - 'a')));
            else if (ch >= 'A' && ch <= 'Z')
                w.push_reduce(static_cast<std::uint8_t>(2 * (ch - 'A') + 1));
            else
                throw ParseError(std::string("bad word character '") + ch + "'", i);
        }
        return w;
    }

    std::string str() const {
        if (codes_.empty()) return "1";
        std::string s;
        s.reserve(codes_.size());
        for (auto c : codes_) {
            char base = static_cast<char>((c & 1) ? 'A' : 'a');
            s += static_cast<char>(base + (c >> 1));
        }
        return s;
    }

private:
    void push_reduce(std::uint8_t code) {
        if (!codes_.empty() && (codes_.back() ^ 1) == code)
            codes_.pop_back();
        else
            codes_.push_back(code);
    }

    std::vector<std::uint8_t> codes_;
};

struct FreeWordHash {
    std::size_t operator()(const FreeWord& w) const { return w.hash(); }
};

inline void require_rank(const FreeWord& w, unsigned rank, const char* where) {
    if (!w.fits_rank(rank))
        throw RankError(std::string(where) + ": word '" + w.str() + "' does not fit alphabet of rank " +
                        std::to_string(rank));
}

// B_r = { w : |w|_X <= r }, enumerated in shortlex order by BFS over reduced
// extensions (appending any letter except the inverse of the last one).
struct Ball {
    unsigned rank = 0;
    unsigned radius = 0;
    std::vector<FreeWord> elements;   // shortlex order, elements[0] = empty word
};

inline Ball enumerate_ball(unsigned rank, unsigned radius, std::size_t cap = 5'000'000) {
    if (rank < 1) throw DomainError("ball: rank must be >= 1");
    Ball b;
    b.rank = rank;
    b.radius = radius;
    b.elements.push_back(FreeWord{});
    std::size_t layer_begin = 0;
    for (unsigned r = 1; r <= radius; ++r) {
        std::size_t layer_end = b.elements.size();
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
            for (unsigned code = 0; code < 2 * rank; ++code) {
                const FreeWord& w = b.elements[i];
                if (!w.empty() && (w.codes().back() ^ 1) == code) continue;
                b.elements.push_back(w * FreeWord::generator(code >> 1, code & 1));
                if (b.elements.size() > cap)
                    throw CapError("ball enumeration exceeds cap of " + std::to_string(cap) +
                                   " words (rank " + std::to_string(rank) + ", radius " +
                                   std::to_string(radius) + ")");
            }
        }
        layer_begin = layer_end;
    }
    return b;
}

// |B_r| in the free group of the given rank, by the sphere recurrence.
inline std::uint64_t ball_size_formula(unsigned rank, unsigned radius) {
    std::uint64_t total = 1, sphere = 1;
    for (unsigned r = 1; r <= radius; ++r) {
        sphere = (r == 1) ? 2ull * rank : sphere * (2ull * rank - 1);
        total += sphere;
    }
    return total;
}

} // namespace beurling
