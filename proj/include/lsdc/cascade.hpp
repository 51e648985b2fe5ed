#pragma once

// Fractional cascading over a binary tree of sorted catalogs.
//
// Every node v keeps an augmented list A(v): its own catalog merged with every
// other element of A(left) and A(right). One binary search in A(root) then
// yields, for any root-to-leaf path, the rank of the query in each node's own
// catalog and the rank in each child's augmented list in O(1) per level.
//
// Ranks are upper-bound ranks: the number of elements <= x.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace lsdc {

class CascadeTree {
 public:
  CascadeTree() = default;

  // `own(v)` returns node v's catalog; children of v are 2v and 2v+1 and a
  // node is a leaf when `is_leaf(v)`. Nodes are numbered from 1.
  template <class OwnFn, class LeafFn>
  void build(std::size_t node_slots, OwnFn own, LeafFn is_leaf) {
    nodes_.assign(node_slots, {});
    values_.clear();
    own_rank_.clear();
    left_rank_.clear();
    right_rank_.clear();
    if (node_slots > 1) build_node(1, own, is_leaf);
  }

  bool empty() const { return nodes_.size() <= 1; }

  std::uint32_t root_rank(double x) const { return rank_in(1, x); }

  // Rank of x in the augmented list of node v, by plain binary search.
  std::uint32_t rank_in(std::size_t v, double x) const {
    const auto a = augmented(v);
    return static_cast<std::uint32_t>(std::upper_bound(a.begin(), a.end(), x) - a.begin());
  }

  // Rank of x in v's own catalog, given its rank in A(v).
  std::uint32_t own_rank(std::size_t v, std::uint32_t aug_rank) const {
    return own_rank_[nodes_[v].rank_base + aug_rank];
  }

  // Rank of x in A(child) given its rank in A(v); `right` picks the child.
  std::uint32_t child_rank(std::size_t v, std::uint32_t aug_rank, bool right, double x) const {
    const std::size_t child = 2 * v + (right ? 1 : 0);
    const std::uint32_t sampled =
        (right ? right_rank_ : left_rank_)[nodes_[v].rank_base + aug_rank];
    const auto a = augmented(child);
    std::uint32_t r = sampled == 0 ? 0 : 2 * sampled - 1;
    while (r < a.size() && a[r] <= x) ++r;
    return r;
  }

  std::span<const double> augmented(std::size_t v) const {
    return {values_.data() + nodes_[v].offset, nodes_[v].size};
  }

  std::size_t total_size() const { return values_.size(); }

 private:
  // Values hold `size` entries per node, rank arrays `size + 1`.
  struct Node {
    std::size_t offset = 0;
    std::size_t rank_base = 0;
    std::uint32_t size = 0;
  };

  template <class OwnFn, class LeafFn>
  void build_node(std::size_t v, OwnFn& own, LeafFn& is_leaf) {
    std::span<const double> mine = own(v);
    if (is_leaf(v)) {
      place(v, mine, {}, {});
      return;
    }
    build_node(2 * v, own, is_leaf);
    build_node(2 * v + 1, own, is_leaf);
    std::vector<double> left_sample;
    std::vector<double> right_sample;
    const auto al = augmented(2 * v);
    const auto ar = augmented(2 * v + 1);
    for (std::size_t k = 0; k < al.size(); k += 2) left_sample.push_back(al[k]);
    for (std::size_t k = 0; k < ar.size(); k += 2) right_sample.push_back(ar[k]);
    place(v, mine, left_sample, right_sample);
  }

  void place(std::size_t v, std::span<const double> mine, std::span<const double> ls, std::span<const double> rs) {
    Node& node = nodes_[v];
    node.offset = values_.size();
    node.rank_base = own_rank_.size();
    node.size = static_cast<std::uint32_t>(mine.size() + ls.size() + rs.size());
    std::uint32_t own = 0;
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    auto emit_ranks = [&] {
      own_rank_.push_back(own);
      left_rank_.push_back(left);
      right_rank_.push_back(right);
    };
    emit_ranks();
    while (i < mine.size() || j < ls.size() || k < rs.size()) {
      const double a = i < mine.size() ? mine[i] : kNone;
      const double b = j < ls.size() ? ls[j] : kNone;
      const double c = k < rs.size() ? rs[k] : kNone;
      if (i < mine.size() && a <= b && a <= c) {
        values_.push_back(a);
        ++i;
        ++own;
      } else if (j < ls.size() && b <= c) {
        values_.push_back(b);
        ++j;
        ++left;
      } else {
        values_.push_back(c);
        ++k;
        ++right;
      }
      emit_ranks();
    }
  }

  static constexpr double kNone = std::numeric_limits<double>::infinity();

  std::vector<Node> nodes_;
  std::vector<double> values_;
  std::vector<std::uint32_t> own_rank_;
  std::vector<std::uint32_t> left_rank_;
  std::vector<std::uint32_t> right_rank_;
};

}  // namespace lsdc
