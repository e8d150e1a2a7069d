#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ggm {

// Path and couple enumeration is exponential in the node count; relation
// machinery refuses to run past this bound.
inline constexpr int kMaxRelationNodes = 12;

// Undirected simple graph on nodes 1..d, identified with its edge set.
// Immutable after construction.
class Graph {
 public:
  explicit Graph(int d);
  Graph(int d, std::vector<std::pair<int, int>> edges);

  int node_count() const { return d_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int i, int j) const;
  // Sorted (i, j) pairs with i < j; the canonical edge order used everywhere
  // a delta assignment or serialization refers to "the k-th edge".
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::vector<int> neighbors(int i) const;

  static Graph empty(int d) { return Graph(d); }
  static Graph path(int d);
  static Graph cycle(int d);
  static Graph complete(int d);
  static Graph star(int d);  // node 1 is the hub

  bool operator==(const Graph&) const = default;

 private:
  void check_node(int i) const;
  int d_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<bool> adj_;  // d_ x d_, row-major, 0-based internally
};

// Directed graph on nodes 1..r. Self-loops are permitted on node 1 only
// (node 1 plays the distinguished role in quotient constructions).
class DiGraph {
 public:
  explicit DiGraph(int r);
  DiGraph(int r, std::vector<std::pair<int, int>> arcs);

  int node_count() const { return r_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  bool has_arc(int i, int j) const;
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  std::vector<int> successors(int i) const;

  bool operator==(const DiGraph&) const = default;

 private:
  int r_ = 0;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<bool> adj_;
};

// A walk i_0 -> i_1 -> ... -> i_{t+1} stored as its node sequence. For a
// path the nodes are distinct; for a cycle the last node repeats the first
// and the interior is distinct.
struct Path {
  std::vector<int> nodes;

  int length() const { return static_cast<int>(nodes.size()) - 1; }
  bool is_cycle() const { return nodes.size() >= 2 && nodes.front() == nodes.back(); }
  std::string to_string() const;

  auto operator<=>(const Path&) const = default;
};

// A conditional-independence query (ij|K): "is i independent of j given K".
// Canonical form keeps i < j and K sorted.
struct Couple {
  int i = 0;
  int j = 0;
  std::vector<int> given;

  Couple() = default;
  Couple(int i_, int j_, std::vector<int> k);

  void validate_for(int d) const;
  std::string to_string() const;  // "(1,3|{2,4})"

  auto operator<=>(const Couple&) const = default;
};

// A set of couples over a common node range.
using Relation = std::set<Couple>;

// True iff every path from A to B meets C. A, B nonempty; A, B, C pairwise
// disjoint subsets of 1..d.
bool separates(const Graph& g, const std::vector<int>& a, const std::vector<int>& c,
               const std::vector<int>& b);

// All ij-paths with exactly t interior nodes, every interior node drawn from
// k_allowed. Deterministic (lexicographic) order. t >= node count gives {}.
std::vector<Path> enumerate_paths(const Graph& g, int i, int j, int t,
                                  const std::vector<int>& k_allowed);

// All cycles through node 1 with exactly t interior nodes (t = 0 means the
// self-loop arc (1,1)).
std::vector<Path> enumerate_one_cycles(const DiGraph& h, int t);

// Quotient of g by a couple (ij|K): i and j merge into node 1, K keeps its
// ascending order as nodes 2..|K|+1. Edges incident to i feed node 1's
// out-arcs, edges incident to j feed its in-arcs, K-K edges become arc pairs
// and an ij edge becomes the self-loop on 1.
struct QuotientGraph {
  DiGraph graph;
  int merged_i = 0;                // original endpoints fused into node 1
  int merged_j = 0;
  std::vector<int> original_node;  // original_node[v] for v = 2..r; index 0,1 unused
};
QuotientGraph quotient_digraph(const Graph& g, const Couple& c);

// Every couple on 1..d exactly once, ordered by (i, j, K-bitmask).
std::vector<Couple> all_couples(int d);
// Streaming variant for callers that do not want the full vector.
void for_each_couple(int d, const std::function<void(const Couple&)>& fn);

Couple dual(const Couple& c, int d);
Relation dual(const Relation& rel, int d);

// All couples (ij|K) whose conditioning set K separates i from j in g.
Relation separation_relation(const Graph& g);

}  // namespace ggm
