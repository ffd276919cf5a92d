#include "nforge/linalg.hpp"

#include <algorithm>

namespace nforge {

long rank_rational(RatMatrix m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  long rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    for (size_t i = row + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      const mpq_class f = m[i][col] / m[row][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

long rank_bareiss(IntMatrix m) {
  if (m.empty() || m[0].empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  mpz_class prev(1);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    // pivot: smallest nonzero magnitude keeps the minors modest
    size_t pivot = rows;
    for (size_t i = row; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      if (pivot == rows || mpz_cmpabs(m[i][col].get_mpz_t(), m[pivot][col].get_mpz_t()) < 0)
        pivot = i;
    }
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    for (size_t i = row + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j) {
        m[i][j] = (m[i][j] * m[row][col] - m[i][col] * m[row][j]) / prev;
      }
      m[i][col] = 0;
    }
    prev = m[row][col];
    ++row;
  }
  return static_cast<long>(row);
}

bool IncrementalRank::add_column(std::vector<mpq_class> col) {
  for (size_t b = 0; b < basis_.size(); ++b) {
    const long p = pivot_[b];
    if (col[p] == 0) continue;
    const mpq_class f = col[p] / basis_[b][p];
    for (size_t i = 0; i < col.size(); ++i) col[i] -= f * basis_[b][i];
  }
  long pivot = -1;
  for (size_t i = 0; i < col.size(); ++i)
    if (col[i] != 0) {
      pivot = static_cast<long>(i);
      break;
    }
  if (pivot < 0) return false;
  basis_.push_back(std::move(col));
  pivot_.push_back(pivot);
  return true;
}

}  // namespace nforge
