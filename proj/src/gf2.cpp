#include "gsx/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace gsx {

namespace {

constexpr std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }

template <typename Word>
int rank_small(std::span<const Word> rows) {
  // basis[b] is either zero or a vector whose highest set bit is b.
  constexpr int kBits = static_cast<int>(sizeof(Word) * 8);
  Word basis[kBits] = {};
  int rank = 0;
  for (Word r : rows) {
    while (r) {
      const int top = kBits - 1 - std::countl_zero(r);
      if (!basis[top]) {
        basis[top] = r;
        ++rank;
        break;
      }
      r ^= basis[top];
    }
  }
  return rank;
}

}  // namespace

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), data_(rows * words_for(cols), 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::size_t cols, const std::vector<std::vector<int>>& rows) {
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("Gf2Matrix::from_rows: ragged input");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, (rows[r][c] & 1) != 0);
  }
  return m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
  auto& w = data_[r * words_ + c / 64];
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  w = v ? (w | bit) : (w & ~bit);
}

void Gf2Matrix::flip(std::size_t r, std::size_t c) {
  data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64);
}

void Gf2Matrix::add_row(std::size_t dst, std::size_t src) {
  auto d = row(dst);
  auto s = row(src);
  for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = row(a);
  auto rb = row(b);
  std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

std::size_t row_reduce(Gf2Matrix& m) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t p = pivot_row;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, pivot_row);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != pivot_row && m.get(r, c)) m.add_row(r, pivot_row);
    ++pivot_row;
  }
  return pivot_row;
}

std::size_t gf2_rank(const Gf2Matrix& m) {
  Gf2Matrix scratch = m;
  return row_reduce(scratch);
}

std::size_t gf2_nullity(const Gf2Matrix& m) { return m.cols() - gf2_rank(m); }

int gf2_rank_words(std::span<const std::uint64_t> rows) { return rank_small(rows); }
int gf2_rank_words(std::span<const std::uint32_t> rows) { return rank_small(rows); }

}  // namespace gsx
