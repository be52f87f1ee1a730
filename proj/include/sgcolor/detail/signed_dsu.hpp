#pragma once

#include <cstdint>
#include <vector>

namespace sgcolor::detail {

// Union-find over vertices that also tracks, for each vertex, the parity of
// negative edges on its path to the root, and for each root whether the
// component contains an unbalanced cycle. No path compression so that every
// union can be rolled back; union by size keeps finds logarithmic.
class SignedDsu {
 public:
  explicit SignedDsu(int n)
      : parent_(static_cast<std::size_t>(n)), parity_(static_cast<std::size_t>(n), 0),
        size_(static_cast<std::size_t>(n), 1), unbalanced_(static_cast<std::size_t>(n), 0) {
    for (int v = 0; v < n; ++v) parent_[static_cast<std::size_t>(v)] = v;
  }

  struct Root {
    int root;
    std::uint8_t parity;
  };

  Root find(int v) const {
    std::uint8_t p = 0;
    while (parent_[idx(v)] != v) {
      p ^= parity_[idx(v)];
      v = parent_[idx(v)];
    }
    return {v, p};
  }

  // Adds an edge whose endpoints must have equal labels (negative == false)
  // or opposite labels (negative == true).
  void unite(int u, int v, bool negative) {
    const Root ru = find(u);
    const Root rv = find(v);
    const std::uint8_t want = negative ? 1 : 0;
    if (ru.root == rv.root) {
      const bool conflict = (ru.parity ^ rv.parity) != want;
      if (conflict && !unbalanced_[idx(ru.root)]) {
        unbalanced_[idx(ru.root)] = 1;
        ++unbalanced_components_;
        history_.push_back({Op::MarkUnbalanced, ru.root, -1, 0});
      } else {
        history_.push_back({Op::Nothing, -1, -1, 0});
      }
      return;
    }
    Root big = ru;
    Root small = rv;
    if (size_[idx(big.root)] < size_[idx(small.root)]) std::swap(big, small);
    const std::uint8_t merged_flags = unbalanced_[idx(big.root)] + unbalanced_[idx(small.root)];
    parent_[idx(small.root)] = big.root;
    parity_[idx(small.root)] = static_cast<std::uint8_t>(ru.parity ^ rv.parity ^ want);
    size_[idx(big.root)] += size_[idx(small.root)];
    const std::uint8_t old_big_flag = unbalanced_[idx(big.root)];
    if (merged_flags == 2) --unbalanced_components_;
    unbalanced_[idx(big.root)] = merged_flags > 0 ? 1 : 0;
    history_.push_back({Op::Merge, big.root, small.root, old_big_flag});
    --components_;
  }

  void rollback() {
    const Step s = history_.back();
    history_.pop_back();
    switch (s.op) {
      case Op::Nothing:
        break;
      case Op::MarkUnbalanced:
        unbalanced_[idx(s.a)] = 0;
        --unbalanced_components_;
        break;
      case Op::Merge: {
        const bool small_flag = unbalanced_[idx(s.b)] != 0;
        if (s.old_flag && small_flag) ++unbalanced_components_;
        unbalanced_[idx(s.a)] = s.old_flag;
        size_[idx(s.a)] -= size_[idx(s.b)];
        parent_[idx(s.b)] = s.b;
        parity_[idx(s.b)] = 0;
        ++components_;
        break;
      }
    }
  }

  bool root_unbalanced(int root) const { return unbalanced_[idx(root)] != 0; }
  int vertex_count() const { return static_cast<int>(parent_.size()); }
  int component_count() const { return components_; }
  int unbalanced_components() const { return unbalanced_components_; }
  bool balanced() const { return unbalanced_components_ == 0; }

 private:
  enum class Op : std::uint8_t { Nothing, MarkUnbalanced, Merge };
  struct Step {
    Op op;
    int a;
    int b;
    std::uint8_t old_flag;
  };

  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  std::vector<int> parent_;
  std::vector<std::uint8_t> parity_;
  std::vector<int> size_;
  std::vector<std::uint8_t> unbalanced_;
  std::vector<Step> history_;
  int components_ = static_cast<int>(parent_.size());
  int unbalanced_components_ = 0;
};

}  // namespace sgcolor::detail
