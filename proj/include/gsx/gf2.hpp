#ifndef GSX_GF2_HPP
#define GSX_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gsx {

/// Dense 0/1 matrix over GF(2), rows packed into 64-bit words.
///
/// Bit j of row i holds entry (i, j). Bits past `cols()` are always zero, so
/// whole-word XOR and comparison never see padding garbage.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix from_rows(std::size_t cols, const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool v);
  void flip(std::size_t r, std::size_t c);

  std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * words_, words_}; }
  std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * words_, words_}; }

  /// row(dst) ^= row(src)
  void add_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);

  Gf2Matrix transpose() const;

  bool operator==(const Gf2Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Reduced row echelon form, computed in place. Returns the rank.
std::size_t row_reduce(Gf2Matrix& m);

std::size_t gf2_rank(const Gf2Matrix& m);
std::size_t gf2_nullity(const Gf2Matrix& m);

/// Rank of a small matrix given as single-word rows. The hot path for
/// marginal dimensions, where blocks are at most 32 wide.
int gf2_rank_words(std::span<const std::uint64_t> rows);
int gf2_rank_words(std::span<const std::uint32_t> rows);

}  // namespace gsx

#endif  // GSX_GF2_HPP
