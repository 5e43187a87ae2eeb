#ifndef HIGLIM_STALLINGS_HPP
#define HIGLIM_STALLINGS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "word.hpp"

namespace higlim {

// Folded based graph of the subgroup generated by a tuple of words in
// F_ambient_rank.  Vertices are numbered canonically by a breadth-first
// sweep from the base vertex 0, labels explored in order, positive direction
// first, so two runs that fold the same subgroup produce identical graphs.
//
// Edges carry a generator label and a direction; next(v, k) follows the
// a_k-edge out of v and prev(v, k) follows it backwards.
class SubgroupGraph {
 public:
  // Builds the wedge of word loops at the base vertex, folds until no vertex
  // has two equally labeled edges on the same side, trims dead branches, and
  // renumbers canonically.  Identity generators are skipped.
  static SubgroupGraph fold(std::span<const Word> generators, std::uint32_t ambient_rank);
  static SubgroupGraph fold(const std::vector<Word>& generators, std::uint32_t ambient_rank);

  std::uint32_t ambient_rank() const { return ambient_rank_; }
  std::size_t vertex_count() const { return next_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  // Rank of the subgroup the graph represents: edges - vertices + 1.
  std::size_t subgroup_rank() const { return edge_count_ - vertex_count() + 1; }

  // Membership of w in the subgroup: trace the letters of w from the base;
  // the walk must never fall off the graph and must return to the base.
  bool contains(const Word& w) const;

  // The graph's own free basis: one word per edge outside the
  // breadth-first spanning tree, written as an element of the ambient group
  // (tree path in, the edge, tree path back).
  std::vector<Word> intrinsic_basis() const;

  // Rewrites w over the intrinsic basis: traces the walk of w and records
  // each crossing of a non-tree edge.  nullopt when w is not in the
  // subgroup.  Generator i of the result refers to intrinsic_basis()[i-1].
  std::optional<Word> trace_in_intrinsic_basis(const Word& w) const;

  // One line per positive edge, "v<tail> a<label> v<head>", sorted, after a
  // header with the counts.  Equal subgroups yield equal text.
  std::string adjacency_text() const;

 private:
  std::uint32_t ambient_rank_ = 0;
  std::size_t edge_count_ = 0;
  // next_[v][k-1] / prev_[v][k-1]: head of the a_k edge out of v / tail of
  // the a_k edge into v, or -1 when absent.
  std::vector<std::vector<std::int32_t>> next_, prev_;
  // Spanning tree in canonical order: for each non-base vertex, the word
  // spelled by the tree path from the base.  tree_edge_[v*rank + (k-1)]
  // marks the positive edge (v, k) as a tree edge.
  std::vector<Word> base_path_;
  std::vector<bool> tree_edge_;
  // intrinsic_index_[v*rank + (k-1)]: 1-based basis index of the non-tree
  // positive edge (v, k), or 0.
  std::vector<std::uint32_t> intrinsic_index_;

  void build_spanning_tree();
};

// Expression of `target` over the given subgroup basis: the returned word v
// satisfies substitute(basis, v) == target.  nullopt when target is not in
// the subgroup generated by `basis`.  When `basis` is not actually a free
// basis the expression is still valid, just not unique.
std::optional<Word> express_in_basis(std::span<const Word> basis, const Word& target,
                                     std::uint32_t ambient_rank);
std::optional<Word> express_in_basis(const std::vector<Word>& basis, const Word& target,
                                     std::uint32_t ambient_rank);

}  // namespace higlim

#endif
