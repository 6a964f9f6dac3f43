#pragma once

#include <vector>

#include "qsub/cyclotomic.hpp"

namespace qsub {

// Incremental exact row reduction over Q(eps). Rows are inserted one at a
// time; each is reduced against the stored echelon rows (pivots normalized
// to 1) and kept only if it adds a new pivot.
class EchelonBasis {
 public:
  explicit EchelonBasis(size_t cols) : cols_(cols) {}

  // returns true when the row enlarges the span
  bool insert(std::vector<Cyclotomic> row) {
    if (row.size() != cols_)
      throw std::invalid_argument("row length mismatch in row reduction");
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Cyclotomic& lead = row[pivot_[r]];
      if (lead.is_zero()) continue;
      Cyclotomic factor = lead;  // pivot is 1
      for (size_t c = pivot_[r]; c < cols_; ++c)
        row[c] = row[c] - factor * rows_[r][c];
    }
    size_t p = 0;
    while (p < cols_ && row[p].is_zero()) ++p;
    if (p == cols_) return false;
    Cyclotomic inv = row[p].inverse();
    for (size_t c = p; c < cols_; ++c) row[c] = inv * row[c];
    // keep rows ordered by pivot column
    size_t at = 0;
    while (at < rows_.size() && pivot_[at] < p) ++at;
    rows_.insert(rows_.begin() + at, std::move(row));
    pivot_.insert(pivot_.begin() + at, p);
    return true;
  }

  size_t rank() const { return rows_.size(); }

 private:
  size_t cols_;
  std::vector<std::vector<Cyclotomic>> rows_;
  std::vector<size_t> pivot_;
};

}  // namespace qsub
