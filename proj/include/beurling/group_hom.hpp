#pragma once

#include <vector>

#include "beurling/free_word.hpp"
#include "beurling/permutation.hpp"

namespace beurling {

// A homomorphism F_rank -> Sym(degree) given by generator images.  Words are
// evaluated letterwise, so apply() is multiplicative by construction.
class GroupHom {
public:
    GroupHom() = default;

    GroupHom(unsigned rank, std::size_t degree, std::vector<Permutation> generator_images)
        : rank_(rank), degree_(degree), images_(std::move(generator_images)) {
        if (images_.size() != rank_)
            throw DomainError("group hom: expected " + std::to_string(rank_) + " generator images, got " +
                              std::to_string(images_.size()));
        inverse_images_.reserve(rank_);
        for (const auto& p : images_) {
            if (p.degree() != degree_)
                throw DomainError("group hom: generator image degree mismatch");
            inverse_images_.push_back(p.inverse());
        }
    }

    unsigned rank() const { return rank_; }
    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& images() const { return images_; }

    const Permutation& letter_image(Letter l) const {
        return l.inverted() ? inverse_images_[l.generator()] : images_[l.generator()];
    }

    Permutation apply(const FreeWord& w) const {
        require_rank(w, rank_, "apply_hom");
        Permutation p = Permutation::identity(degree_);
        for (std::size_t i = 0; i < w.size(); ++i) p = p * letter_image(w.letter(i));
        return p;
    }

private:
    unsigned rank_ = 0;
    std::size_t degree_ = 0;
    std::vector<Permutation> images_;
    std::vector<Permutation> inverse_images_;
};

} // namespace beurling
