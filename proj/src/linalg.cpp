#include "toric/linalg.hpp"

#include <algorithm>

namespace toric {

void row_axpy(const Field& f, std::vector<std::uint16_t>& dst, std::uint16_t c,
              const std::vector<std::uint16_t>& src) {
  if (c == 0) return;
  const std::uint16_t nc = f.rneg(c);
  const std::uint32_t lnc = f.log_raw(nc);
  for (std::size_t j = 0; j < dst.size(); ++j) {
    const std::uint16_t s = src[j];
    if (s == 0) continue;
    dst[j] = f.radd(dst[j], f.exp_raw(lnc + f.log_raw(s)));
  }
}

std::vector<std::uint16_t> RowBasis::reduce(std::vector<std::uint16_t> row) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint16_t c = row[pivots_[k]];
    if (c) row_axpy(*f_, row, c, rows_[k]);
  }
  return row;
}

bool RowBasis::insert(std::vector<std::uint16_t> row) {
  row = reduce(std::move(row));
  std::size_t pc = cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    if (row[j]) {
      pc = j;
      break;
    }
  if (pc == cols_) return false;
  const std::uint16_t scale = f_->rinv(row[pc]);
  if (scale != 1)
    for (auto& v : row) v = f_->rmul(v, scale);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint16_t c = rows_[k][pc];
    if (c) row_axpy(*f_, rows_[k], c, row);
  }
  // keep rows ordered by pivot column
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pc);
  std::size_t idx = (std::size_t)(pos - pivots_.begin());
  pivots_.insert(pos, pc);
  rows_.insert(rows_.begin() + idx, std::move(row));
  return true;
}

}  // namespace toric
