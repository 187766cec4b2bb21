// Incremental reduced row echelon basis over GF(q). Rows are inserted one at
// a time and reduced against the current basis, so rank computations can stop
// as soon as the rank saturates and never hold more rows than the rank.
#pragma once

#include <cstdint>
#include <vector>

#include "toric/field.hpp"

namespace toric {

class RowBasis {
 public:
  RowBasis(const Field& f, std::size_t cols) : f_(&f), cols_(cols) {}

  // Reduces `row` against the basis; if a nonzero residual remains it joins
  // the basis (pivot scaled to 1, other rows back-reduced). Returns whether
  // the rank grew.
  bool insert(std::vector<std::uint16_t> row);

  // Residual of `row` after reduction, without inserting.
  std::vector<std::uint16_t> reduce(std::vector<std::uint16_t> row) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  // Rows in pivot order; each has a leading 1 in its pivot column and zeros
  // in every other pivot column.
  const std::vector<std::vector<std::uint16_t>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  const Field* f_;
  std::size_t cols_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::uint16_t>> rows_;
};

// dst -= c * src (elementwise over GF(q)).
void row_axpy(const Field& f, std::vector<std::uint16_t>& dst, std::uint16_t c,
              const std::vector<std::uint16_t>& src);

}  // namespace toric
