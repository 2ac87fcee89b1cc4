#include <doctest.h>

#include <random>
#include <set>

#include "gsx/gf2.hpp"

using namespace gsx;

namespace {

// Rank from the size of the row span, enumerated outright.
std::size_t span_rank(const std::vector<std::uint64_t>& rows) {
  std::set<std::uint64_t> span{0};
  for (std::uint64_t r : rows) {
    std::set<std::uint64_t> next = span;
    for (std::uint64_t s : span) next.insert(s ^ r);
    span = std::move(next);
  }
  std::size_t rank = 0;
  while ((std::size_t{1} << rank) < span.size()) ++rank;
  return rank;
}

}  // namespace

TEST_CASE("rank of small fixed matrices") {
  CHECK(gf2_rank(Gf2Matrix::identity(5)) == 5);
  CHECK(gf2_rank(Gf2Matrix(3, 4)) == 0);
  const Gf2Matrix m = Gf2Matrix::from_rows(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(gf2_rank(m) == 2);
  CHECK(gf2_nullity(m) == 1);
}

TEST_CASE("row_reduce yields reduced echelon form") {
  Gf2Matrix m = Gf2Matrix::from_rows(4, {{1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 0}});
  REQUIRE(row_reduce(m) == 2);
  // Each nonzero row has a leading one that is alone in its column.
  for (std::size_t r = 0; r < 2; ++r) {
    std::size_t lead = 0;
    while (lead < m.cols() && !m.get(r, lead)) ++lead;
    REQUIRE(lead < m.cols());
    for (std::size_t o = 0; o < m.rows(); ++o)
      if (o != r) CHECK_FALSE(m.get(o, lead));
  }
  for (std::size_t c = 0; c < 4; ++c) CHECK_FALSE(m.get(2, c));
}

TEST_CASE("padding bits stay clear") {
  Gf2Matrix m(2, 70);
  m.set(0, 69, true);
  m.set(1, 69, true);
  m.add_row(0, 1);
  m.flip(1, 69);
  CHECK(m == Gf2Matrix(2, 70));
  CHECK(m.transpose().rows() == 70);
}

TEST_CASE("rank agrees with span enumeration on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t rows = 1 + rng() % 10;
    const std::size_t cols = 1 + rng() % 12;
    Gf2Matrix m(rows, cols);
    std::vector<std::uint64_t> words(rows, 0);
    std::vector<std::uint32_t> small(rows, 0);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (rng() & 1) {
          m.set(r, c, true);
          words[r] |= std::uint64_t{1} << c;
          small[r] |= std::uint32_t{1} << c;
        }
    const std::size_t want = span_rank(words);
    REQUIRE(gf2_rank(m) == want);
    REQUIRE(gf2_rank(m.transpose()) == want);
    REQUIRE(static_cast<std::size_t>(gf2_rank_words(std::span<const std::uint64_t>(words))) == want);
    REQUIRE(static_cast<std::size_t>(gf2_rank_words(std::span<const std::uint32_t>(small))) == want);
    REQUIRE(gf2_nullity(m) == cols - want);
  }
}
