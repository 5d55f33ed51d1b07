#pragma once

#include <optional>
#include <vector>

#include "beurling/rational.hpp"

namespace beurling {

// Incremental exact Gaussian elimination over the Gaussian rationals, with
// combination tracking: every reduced row remembers how it was formed from
// the inserted vectors, so membership queries can return explicit
// coordinates.  Rows are kept fully reduced (rref) with unit pivots.
class RowSpace {
public:
    explicit RowSpace(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return inserted_; }
    std::size_t codim() const { return dim_ - rows_.size(); }

    // Returns true if the vector enlarged the span.
    bool insert(std::vector<Gaussian> v) {
        if (v.size() != dim_) throw DomainError("row dimension mismatch");
        std::vector<Gaussian> combo(inserted_ + 1);
        combo[inserted_] = Gaussian(1);
        ++inserted_;
        reduce_against_rows(v, combo);
        std::size_t p = first_nonzero(v);
        if (p == dim_) return false;

        Gaussian inv_pivot = Gaussian(1) / v[p];
        scale(v, inv_pivot);
        scale(combo, inv_pivot);
        // keep existing rows reduced against the new pivot
        for (auto& row : rows_) {
            if (row.v[p].is_zero()) continue;
            Gaussian c = row.v[p];
            axpy(row.v, -c, v);
            axpy_combo(row.combo, -c, combo);
        }
        std::size_t pos = 0;
        while (pos < rows_.size() && rows_[pos].pivot < p) ++pos;
        rows_.insert(rows_.begin() + pos, Row{std::move(v), std::move(combo), p});
        return true;
    }

    bool contains(std::vector<Gaussian> v) const {
        std::vector<Gaussian> combo;
        reduce_against_rows(v, combo);
        return first_nonzero(v) == dim_;
    }

    // Coordinates of the target over the *inserted* vectors, if it lies in
    // the span.  (Vectors that did not enlarge the span get coordinate 0.)
    std::optional<std::vector<Gaussian>> express(std::vector<Gaussian> v) const {
        if (v.size() != dim_) throw DomainError("row dimension mismatch");
        std::vector<Gaussian> combo(inserted_);
        for (const auto& row : rows_) {
            if (v[row.pivot].is_zero()) continue;
            Gaussian c = v[row.pivot];
            axpy(v, -c, row.v);
            for (std::size_t i = 0; i < row.combo.size(); ++i)
                if (!row.combo[i].is_zero()) combo[i] += c * row.combo[i];
        }
        if (first_nonzero(v) != dim_) return std::nullopt;
        return combo;
    }

    struct Row {
        std::vector<Gaussian> v;
        std::vector<Gaussian> combo;
        std::size_t pivot;
    };
    const std::vector<Row>& rows() const { return rows_; }

private:
    void reduce_against_rows(std::vector<Gaussian>& v, std::vector<Gaussian>& combo) const {
        for (const auto& row : rows_) {
            if (v[row.pivot].is_zero()) continue;
            Gaussian c = v[row.pivot];
            axpy(v, -c, row.v);
            if (!combo.empty())
                for (std::size_t i = 0; i < row.combo.size(); ++i)
                    if (!row.combo[i].is_zero()) {
                        if (combo.size() <= i) combo.resize(i + 1);
                        combo[i] += -c * row.combo[i];
                    }
        }
    }

    std::size_t first_nonzero(const std::vector<Gaussian>& v) const {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) return i;
        return dim_;
    }

    static void scale(std::vector<Gaussian>& v, const Gaussian& c) {
        for (auto& x : v)
            if (!x.is_zero()) x = x * c;
    }

    static void axpy(std::vector<Gaussian>& v, const Gaussian& c, const std::vector<Gaussian>& w) {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!w[i].is_zero()) v[i] += c * w[i];
    }

    static void axpy_combo(std::vector<Gaussian>& v, const Gaussian& c, const std::vector<Gaussian>& w) {
        if (v.size() < w.size()) v.resize(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!w[i].is_zero()) v[i] += c * w[i];
    }

    std::size_t dim_;
    std::size_t inserted_ = 0;
    std::vector<Row> rows_;
};

} // namespace beurling
