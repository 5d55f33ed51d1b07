#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "beurling/group_hom.hpp"

namespace beurling {

// The four-state automaton acting on the binary rooted tree:
//   a swaps the two subtrees at the root,
//   b = (a, c), c = (a, d), d = (1, b)  with no root swap.
// Leaves at depth L are indexed by binary strings read root-down, most
// significant bit first, so dropping the lowest bit is the projection onto
// the level above.
struct TreeAutomorphismRecursion {
    enum class State : std::uint8_t { a, b, c, d };

    struct Children {
        std::optional<State> left, right;   // nullopt = trivial child action
        bool root_swap;
    };

    static Children children(State s) {
        switch (s) {
            case State::a: return {std::nullopt, std::nullopt, true};
            case State::b: return {State::a, State::c, false};
            case State::c: return {State::a, State::d, false};
            case State::d: return {std::nullopt, State::b, false};
        }
        throw DomainError("bad automaton state");
    }

    // Permutation of the 2^level leaves induced by the state.
    static Permutation level_action(State s, unsigned level) {
        std::vector<std::uint32_t> img(std::size_t(1) << level);
        fill(s, level, 0, img);
        return Permutation(std::move(img));
    }

private:
    static void fill_identity(unsigned level, std::uint32_t base, std::vector<std::uint32_t>& img) {
        std::uint32_t n = std::uint32_t(1) << level;
        for (std::uint32_t i = 0; i < n; ++i) img[base + i] = base + i;
    }

    static void fill(State s, unsigned level, std::uint32_t base, std::vector<std::uint32_t>& img) {
        if (level == 0) {
            img[base] = base;
            return;
        }
        std::uint32_t half = std::uint32_t(1) << (level - 1);
        Children ch = children(s);
        if (ch.root_swap) {
            // a: exchange the two subtrees wholesale, trivial below.
            for (std::uint32_t i = 0; i < half; ++i) {
                img[base + i] = base + half + i;
                img[base + half + i] = base + i;
            }
            return;
        }
        if (ch.left) fill(*ch.left, level - 1, base, img);
        else fill_identity(level - 1, base, img);
        if (ch.right) fill(*ch.right, level - 1, base + half, img);
        else fill_identity(level - 1, base + half, img);
    }
};

// F_4 -> Sym(2^L): generators a, b, c, d act on the level-L leaves.
inline GroupHom grigorchuk_level_hom(unsigned level, std::size_t degree_cap = 1u << 20) {
    if (level < 1) throw DomainError("grigorchuk level must be >= 1");
    if ((std::size_t(1) << level) > degree_cap)
        throw CapError("grigorchuk level " + std::to_string(level) + " exceeds degree cap");
    using S = TreeAutomorphismRecursion::State;
    std::vector<Permutation> images;
    for (S s : {S::a, S::b, S::c, S::d})
        images.push_back(TreeAutomorphismRecursion::level_action(s, level));
    return GroupHom(4, std::size_t(1) << level, std::move(images));
}

} // namespace beurling
