#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "sgcolor/counting.hpp"

namespace sgcolor::detail {

// Bit-set encoding of a list assignment over the union of all colors and
// their negations, so that β becomes an AND-and-popcount. Each vertex owns
// two rows: its list and the negated list.
class ListMasks {
 public:
  explicit ListMasks(const ListAssignment& lists) : n_(lists.vertex_count()) {
    std::vector<int> universe;
    for (const auto& l : lists.lists()) {
      for (int c : l) {
        universe.push_back(c);
        universe.push_back(-c);
      }
    }
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    words_ = std::max<std::size_t>(1, (universe.size() + 63) / 64);
    rows_.assign(static_cast<std::size_t>(n_) * 2 * words_, 0);
    has_zero_.assign(static_cast<std::size_t>(n_), 0);

    auto index_of = [&](int c) {
      return static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), c) - universe.begin());
    };
    for (int v = 0; v < n_; ++v) {
      for (int c : lists[v]) {
        set(row(v, false), index_of(c));
        set(row(v, true), index_of(-c));
        if (c == 0) has_zero_[static_cast<std::size_t>(v)] = 1;
      }
    }
  }

  std::size_t words() const { return words_; }
  bool has_zero(int v) const { return has_zero_[static_cast<std::size_t>(v)] != 0; }

  const std::uint64_t* row(int v, bool negated) const {
    return rows_.data() + (static_cast<std::size_t>(v) * 2 + (negated ? 1 : 0)) * words_;
  }

  // Intersects `acc` (words() entries) with a vertex row.
  void intersect(std::uint64_t* acc, int v, bool negated) const {
    const std::uint64_t* r = row(v, negated);
    for (std::size_t w = 0; w < words_; ++w) acc[w] &= r[w];
  }

  void assign(std::uint64_t* acc, int v, bool negated) const {
    const std::uint64_t* r = row(v, negated);
    std::copy(r, r + words_, acc);
  }

  std::uint64_t popcount(const std::uint64_t* acc) const {
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) total += static_cast<std::uint64_t>(std::popcount(acc[w]));
    return total;
  }

 private:
  std::uint64_t* row(int v, bool negated) {
    return rows_.data() + (static_cast<std::size_t>(v) * 2 + (negated ? 1 : 0)) * words_;
  }
  static void set(std::uint64_t* r, std::size_t bit) { r[bit / 64] |= std::uint64_t{1} << (bit % 64); }

  int n_;
  std::size_t words_ = 1;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint8_t> has_zero_;
};

// Running product of β values that stays in 64 bits until it cannot.
class Product {
 public:
  void times(std::uint64_t x) {
    if (big_) {
      *big_ *= x;
      return;
    }
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(small_, x, &r)) {
      big_ = Count(small_);
      *big_ *= x;
    } else {
      small_ = r;
    }
  }
  bool is_zero() const { return big_ ? big_->is_zero() : small_ == 0; }
  void add_to(Count& sum, bool negative) const {
    if (big_) {
      negative ? sum -= *big_ : sum += *big_;
    } else {
      negative ? sum -= small_ : sum += small_;
    }
  }

 private:
  std::uint64_t small_ = 1;
  std::optional<Count> big_;
};

}  // namespace sgcolor::detail
