#include "stallings.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <tuple>

#include "fmap.hpp"
#include "nielsen.hpp"

namespace higlim {

namespace {

struct RawEdge {
  int tail;
  std::uint32_t label;
  int head;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// One folding sweep: normalize edges through the union-find, drop
// duplicates, and merge the endpoints of any two edges that share a label
// and a tail (or a label and a head).  Returns true when a merge happened.
bool fold_pass(std::vector<RawEdge>& edges, UnionFind& uf) {
  for (RawEdge& e : edges) {
    e.tail = uf.find(e.tail);
    e.head = uf.find(e.head);
  }
  std::sort(edges.begin(), edges.end(), [](const RawEdge& a, const RawEdge& b) {
    return std::tie(a.label, a.tail, a.head) < std::tie(b.label, b.tail, b.head);
  });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const RawEdge& a, const RawEdge& b) {
                            return a.tail == b.tail && a.label == b.label && a.head == b.head;
                          }),
              edges.end());

  bool merged = false;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].label == edges[i - 1].label && edges[i].tail == edges[i - 1].tail)
      merged |= uf.unite(edges[i].head, edges[i - 1].head);
  }
  std::sort(edges.begin(), edges.end(), [](const RawEdge& a, const RawEdge& b) {
    return std::tie(a.label, a.head, a.tail) < std::tie(b.label, b.head, b.tail);
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].label == edges[i - 1].label && edges[i].head == edges[i - 1].head)
      merged |= uf.unite(edges[i].tail, edges[i - 1].tail);
  }
  return merged;
}

}  // namespace

SubgroupGraph SubgroupGraph::fold(const std::vector<Word>& generators,
                                  std::uint32_t ambient_rank) {
  return fold(std::span<const Word>(generators), ambient_rank);
}

SubgroupGraph SubgroupGraph::fold(std::span<const Word> generators,
                                  std::uint32_t ambient_rank) {
  if (ambient_rank > kMaxGeneratorIndex)
    throw ArgumentError("ambient rank exceeds the supported maximum");
  for (const Word& w : generators) {
    if (w.max_index() > ambient_rank)
      throw RankMismatchError("generator word uses a letter beyond the ambient rank");
  }

  // Wedge of loops: one chain of fresh vertices per generator, both ends at
  // the base.  Negative letters become positively oriented edges backwards.
  std::vector<RawEdge> edges;
  int fresh = 1;
  for (const Word& w : generators) {
    int at = 0;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      int to = (i + 1 == ls.size()) ? 0 : fresh++;
      if (ls[i].sign > 0)
        edges.push_back({at, ls[i].index, to});
      else
        edges.push_back({to, ls[i].index, at});
      at = to;
    }
  }

  UnionFind uf(static_cast<std::size_t>(fresh));
  while (fold_pass(edges, uf)) {
  }

  // Trim dead branches: repeatedly drop non-base vertices incident to at
  // most one edge.  Wedges of loops rarely produce these, but folding in
  // general can, and membership walks must not escape through them.
  std::vector<int> degree(fresh, 0);
  std::vector<bool> alive(fresh, false);
  std::vector<bool> edge_alive(edges.size(), true);
  for (const RawEdge& e : edges) {
    ++degree[e.tail];
    ++degree[e.head];
    alive[e.tail] = alive[e.head] = true;
  }
  alive[uf.find(0)] = true;
  for (bool trimmed = true; trimmed;) {
    trimmed = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!edge_alive[i]) continue;
      for (int v : {edges[i].tail, edges[i].head}) {
        if (v != uf.find(0) && degree[v] <= 1) {
          edge_alive[i] = false;
          --degree[edges[i].tail];
          --degree[edges[i].head];
          alive[v] = false;
          trimmed = true;
          break;
        }
      }
    }
  }

  // Provisional adjacency over surviving representatives.
  std::vector<int> number(fresh, -1);
  int live = 0;
  int base_rep = uf.find(0);
  number[base_rep] = live++;
  for (int v = 0; v < fresh; ++v)
    if (alive[v] && uf.find(v) == v && number[v] < 0) number[v] = live++;

  auto make_table = [&](int n) {
    return std::vector<std::vector<std::int32_t>>(
        n, std::vector<std::int32_t>(ambient_rank, -1));
  };
  auto next = make_table(live);
  auto prev = make_table(live);
  std::size_t edge_total = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!edge_alive[i]) continue;
    int t = number[edges[i].tail];
    int h = number[edges[i].head];
    std::uint32_t k = edges[i].label;
    detail::check(next[t][k - 1] == -1 && prev[h][k - 1] == -1,
                  "folding left an unresolved edge conflict");
    next[t][k - 1] = h;
    prev[h][k - 1] = t;
    ++edge_total;
  }

  // Canonical renumbering: breadth-first from the base, labels ascending,
  // positive direction before negative.
  std::vector<int> order(live, -1);
  std::deque<int> queue{0};
  order[0] = 0;
  int assigned = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (std::uint32_t k = 0; k < ambient_rank; ++k) {
      for (int w : {next[v][k], prev[v][k]}) {
        if (w >= 0 && order[w] < 0) {
          order[w] = assigned++;
          queue.push_back(w);
        }
      }
    }
  }
  detail::check(assigned == live, "folded graph is not connected");

  SubgroupGraph g;
  g.ambient_rank_ = ambient_rank;
  g.edge_count_ = edge_total;
  g.next_ = make_table(live);
  g.prev_ = make_table(live);
  for (int v = 0; v < live; ++v) {
    for (std::uint32_t k = 0; k < ambient_rank; ++k) {
      if (next[v][k] >= 0) g.next_[order[v]][k] = order[next[v][k]];
      if (prev[v][k] >= 0) g.prev_[order[v]][k] = order[prev[v][k]];
    }
  }
  g.build_spanning_tree();
  return g;
}

void SubgroupGraph::build_spanning_tree() {
  const std::size_t n = vertex_count();
  base_path_.assign(n, Word());
  tree_edge_.assign(n * ambient_rank_, false);
  intrinsic_index_.assign(n * ambient_rank_, 0);

  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (std::uint32_t k = 0; k < ambient_rank_; ++k) {
      if (int w = next_[v][k]; w >= 0 && !seen[w]) {
        seen[w] = true;
        tree_edge_[v * ambient_rank_ + k] = true;
        base_path_[w] = base_path_[v] * Word::generator(k + 1);
        queue.push_back(w);
      }
      if (int t = prev_[v][k]; t >= 0 && !seen[t]) {
        seen[t] = true;
        tree_edge_[t * ambient_rank_ + k] = true;
        base_path_[t] = base_path_[v] * Word::generator(k + 1, -1);
        queue.push_back(t);
      }
    }
  }

  std::uint32_t index = 0;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::uint32_t k = 0; k < ambient_rank_; ++k) {
      if (next_[v][k] >= 0 && !tree_edge_[v * ambient_rank_ + k])
        intrinsic_index_[v * ambient_rank_ + k] = ++index;
    }
  }
  detail::check(index == subgroup_rank(), "non-tree edge count must equal the subgroup rank");
}

bool SubgroupGraph::contains(const Word& w) const {
  if (w.max_index() > ambient_rank_)
    throw RankMismatchError("word uses a letter beyond the ambient rank");
  int at = 0;
  for (Letter x : w.letters()) {
    at = x.sign > 0 ? next_[at][x.index - 1] : prev_[at][x.index - 1];
    if (at < 0) return false;
  }
  return at == 0;
}

std::vector<Word> SubgroupGraph::intrinsic_basis() const {
  std::vector<Word> basis(subgroup_rank());
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    for (std::uint32_t k = 0; k < ambient_rank_; ++k) {
      if (std::uint32_t i = intrinsic_index_[v * ambient_rank_ + k]; i > 0) {
        int head = next_[v][k];
        basis[i - 1] = base_path_[v] * Word::generator(k + 1) * base_path_[head].inverse();
      }
    }
  }
  return basis;
}

std::optional<Word> SubgroupGraph::trace_in_intrinsic_basis(const Word& w) const {
  if (w.max_index() > ambient_rank_)
    throw RankMismatchError("word uses a letter beyond the ambient rank");
  std::vector<Letter> expr;
  int at = 0;
  for (Letter x : w.letters()) {
    int to = x.sign > 0 ? next_[at][x.index - 1] : prev_[at][x.index - 1];
    if (to < 0) return std::nullopt;
    int tail = x.sign > 0 ? at : to;
    if (std::uint32_t i = intrinsic_index_[tail * ambient_rank_ + (x.index - 1)]; i > 0)
      expr.push_back(Letter{i, x.sign});
    at = to;
  }
  if (at != 0) return std::nullopt;
  return Word(std::span<const Letter>(expr));
}

std::string SubgroupGraph::adjacency_text() const {
  std::ostringstream os;
  os << "rank " << ambient_rank_ << " vertices " << vertex_count() << " edges "
     << edge_count_ << " base v0\n";
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    for (std::uint32_t k = 0; k < ambient_rank_; ++k) {
      if (next_[v][k] >= 0)
        os << 'v' << v << " a" << (k + 1) << " v" << next_[v][k] << '\n';
    }
  }
  return os.str();
}

std::optional<Word> express_in_basis(const std::vector<Word>& basis, const Word& target,
                                     std::uint32_t ambient_rank) {
  return express_in_basis(std::span<const Word>(basis), target, ambient_rank);
}

std::optional<Word> express_in_basis(std::span<const Word> basis, const Word& target,
                                     std::uint32_t ambient_rank) {
  SubgroupGraph graph = SubgroupGraph::fold(basis, ambient_rank);
  std::optional<Word> target_expr = graph.trace_in_intrinsic_basis(target);
  if (!target_expr) return std::nullopt;

  // Rewrite from the graph's own basis back to the caller's words: the map
  // sending each caller word to its intrinsic expression is onto the
  // intrinsic free group, so it has a section, and pushing the traced
  // expression through the section yields a word over the caller's tuple.
  std::vector<Word> basis_exprs;
  basis_exprs.reserve(basis.size());
  for (const Word& b : basis) {
    std::optional<Word> e = graph.trace_in_intrinsic_basis(b);
    detail::check(e.has_value(), "subgroup generator fails to trace in its own graph");
    basis_exprs.push_back(*e);
  }
  FreeMap to_intrinsic = make_map(static_cast<std::uint32_t>(basis.size()),
                                  static_cast<std::uint32_t>(graph.subgroup_rank()),
                                  std::move(basis_exprs));
  FreeMap section = section_of_surjection(to_intrinsic);
  Word result = apply(section, *target_expr);
  detail::check(substitute(std::vector<Word>(basis.begin(), basis.end()), result) == target,
                "expression does not substitute back to the target");
  return result;
}

}  // namespace higlim
