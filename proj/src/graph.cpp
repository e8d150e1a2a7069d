#include "ggm/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace ggm {

namespace {

void check_range(int node, int d, const char* what) {
  if (node < 1 || node > d) {
    throw std::invalid_argument(std::string(what) + " node " + std::to_string(node) +
                                " out of range 1.." + std::to_string(d));
  }
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Graph::Graph(int d) : d_(d), adj_(static_cast<std::size_t>(d) * d, false) {
  if (d < 1) throw std::invalid_argument("graph needs at least one node");
}

Graph::Graph(int d, std::vector<std::pair<int, int>> edges) : Graph(d) {
  for (auto& [i, j] : edges) {
    check_range(i, d_, "edge");
    check_range(j, d_, "edge");
    if (i == j) throw std::invalid_argument("self-loop " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (adj_[static_cast<std::size_t>(i - 1) * d_ + (j - 1)]) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
    }
    adj_[static_cast<std::size_t>(i - 1) * d_ + (j - 1)] = true;
    adj_[static_cast<std::size_t>(j - 1) * d_ + (i - 1)] = true;
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

void Graph::check_node(int i) const { check_range(i, d_, "graph"); }

bool Graph::has_edge(int i, int j) const {
  check_node(i);
  check_node(j);
  if (i == j) return false;
  return adj_[static_cast<std::size_t>(i - 1) * d_ + (j - 1)];
}

std::vector<int> Graph::neighbors(int i) const {
  check_node(i);
  std::vector<int> out;
  for (int j = 1; j <= d_; ++j) {
    if (j != i && adj_[static_cast<std::size_t>(i - 1) * d_ + (j - 1)]) out.push_back(j);
  }
  return out;
}

Graph Graph::path(int d) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < d; ++i) e.emplace_back(i, i + 1);
  return Graph(d, std::move(e));
}

Graph Graph::cycle(int d) {
  if (d < 3) throw std::invalid_argument("cycle needs at least 3 nodes");
  auto e = path(d).edges();
  e.emplace_back(1, d);
  return Graph(d, std::move(e));
}

Graph Graph::complete(int d) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) e.emplace_back(i, j);
  return Graph(d, std::move(e));
}

Graph Graph::star(int d) {
  std::vector<std::pair<int, int>> e;
  for (int j = 2; j <= d; ++j) e.emplace_back(1, j);
  return Graph(d, std::move(e));
}

DiGraph::DiGraph(int r) : r_(r), adj_(static_cast<std::size_t>(r) * r, false) {
  if (r < 1) throw std::invalid_argument("digraph needs at least one node");
}

DiGraph::DiGraph(int r, std::vector<std::pair<int, int>> arcs) : DiGraph(r) {
  for (const auto& [i, j] : arcs) {
    check_range(i, r_, "arc");
    check_range(j, r_, "arc");
    if (i == j && i != 1) {
      throw std::invalid_argument("self-loop allowed only on node 1, got node " +
                                  std::to_string(i));
    }
    if (adj_[static_cast<std::size_t>(i - 1) * r_ + (j - 1)]) {
      throw std::invalid_argument("duplicate arc (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
    }
    adj_[static_cast<std::size_t>(i - 1) * r_ + (j - 1)] = true;
  }
  std::sort(arcs.begin(), arcs.end());
  arcs_ = std::move(arcs);
}

bool DiGraph::has_arc(int i, int j) const {
  check_range(i, r_, "arc");
  check_range(j, r_, "arc");
  return adj_[static_cast<std::size_t>(i - 1) * r_ + (j - 1)];
}

std::vector<int> DiGraph::successors(int i) const {
  check_range(i, r_, "arc");
  std::vector<int> out;
  for (int j = 1; j <= r_; ++j) {
    if (adj_[static_cast<std::size_t>(i - 1) * r_ + (j - 1)]) out.push_back(j);
  }
  return out;
}

std::string Path::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k) os << "->";
    os << nodes[k];
  }
  return os.str();
}

Couple::Couple(int i_, int j_, std::vector<int> k) : i(i_), j(j_), given(sorted_unique(std::move(k))) {
  if (i == j) throw std::invalid_argument("couple endpoints must differ");
  if (i > j) std::swap(i, j);
  for (int v : given) {
    if (v == i || v == j) {
      throw std::invalid_argument("conditioning set meets endpoints in couple " + to_string());
    }
  }
}

void Couple::validate_for(int d) const {
  check_range(i, d, "couple");
  check_range(j, d, "couple");
  for (int v : given) check_range(v, d, "couple");
}

std::string Couple::to_string() const {
  std::ostringstream os;
  os << "(" << i << "," << j << "|{";
  for (std::size_t k = 0; k < given.size(); ++k) {
    if (k) os << ",";
    os << given[k];
  }
  os << "})";
  return os.str();
}

bool separates(const Graph& g, const std::vector<int>& a, const std::vector<int>& c,
               const std::vector<int>& b) {
  const int d = g.node_count();
  if (a.empty() || b.empty()) throw std::invalid_argument("separation endpoints must be nonempty");
  std::vector<int> role(d + 1, 0);  // 1 = A, 2 = C, 3 = B
  auto mark = [&](const std::vector<int>& s, int tag) {
    for (int v : s) {
      check_range(v, d, "separation");
      if (role[v] != 0) throw std::invalid_argument("separation sets must be pairwise disjoint");
      role[v] = tag;
    }
  };
  mark(a, 1);
  mark(c, 2);
  mark(b, 3);

  // breadth-first reachability in g with C removed
  std::vector<bool> seen(d + 1, false);
  std::deque<int> frontier;
  for (int v : a) {
    seen[v] = true;
    frontier.push_back(v);
  }
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop_front();
    for (int w : g.neighbors(v)) {
      if (seen[w] || role[w] == 2) continue;
      if (role[w] == 3) return false;
      seen[w] = true;
      frontier.push_back(w);
    }
  }
  return true;
}

std::vector<Path> enumerate_paths(const Graph& g, int i, int j, int t,
                                  const std::vector<int>& k_allowed) {
  const int d = g.node_count();
  if (i == j) throw std::invalid_argument("use enumerate_one_cycles for i == j");
  check_range(i, d, "path");
  check_range(j, d, "path");
  if (t < 0) throw std::invalid_argument("path interior length must be nonnegative");
  if (t >= d) return {};

  std::vector<bool> allowed(d + 1, false);
  for (int v : k_allowed) {
    check_range(v, d, "path interior");
    if (v == i || v == j) throw std::invalid_argument("interior set must avoid the endpoints");
    allowed[v] = true;
  }

  std::vector<Path> out;
  std::vector<int> current{i};
  std::vector<bool> on_path(d + 1, false);
  on_path[i] = true;

  std::function<void(int, int)> extend = [&](int node, int interior_used) {
    if (interior_used == t) {
      if (g.has_edge(node, j)) {
        Path p;
        p.nodes = current;
        p.nodes.push_back(j);
        out.push_back(std::move(p));
      }
      return;
    }
    for (int w : g.neighbors(node)) {
      if (!allowed[w] || on_path[w]) continue;
      on_path[w] = true;
      current.push_back(w);
      extend(w, interior_used + 1);
      current.pop_back();
      on_path[w] = false;
    }
  };
  extend(i, 0);
  return out;
}

std::vector<Path> enumerate_one_cycles(const DiGraph& h, int t) {
  const int r = h.node_count();
  if (t < 0) throw std::invalid_argument("cycle interior length must be nonnegative");
  if (t >= r) return {};

  std::vector<Path> out;
  if (t == 0) {
    if (h.has_arc(1, 1)) out.push_back(Path{{1, 1}});
    return out;
  }
  std::vector<int> current{1};
  std::vector<bool> on_path(r + 1, false);
  on_path[1] = true;

  std::function<void(int, int)> extend = [&](int node, int interior_used) {
    if (interior_used == t) {
      if (h.has_arc(node, 1)) {
        Path p;
        p.nodes = current;
        p.nodes.push_back(1);
        out.push_back(std::move(p));
      }
      return;
    }
    for (int w : h.successors(node)) {
      if (w == 1 || on_path[w]) continue;
      on_path[w] = true;
      current.push_back(w);
      extend(w, interior_used + 1);
      current.pop_back();
      on_path[w] = false;
    }
  };
  extend(1, 0);
  return out;
}

QuotientGraph quotient_digraph(const Graph& g, const Couple& c) {
  c.validate_for(g.node_count());
  const auto& k = c.given;
  const int r = 1 + static_cast<int>(k.size());

  QuotientGraph q;
  q.merged_i = c.i;
  q.merged_j = c.j;
  q.original_node.assign(r + 1, 0);
  std::vector<std::pair<int, int>> arcs;
  for (int a = 0; a < static_cast<int>(k.size()); ++a) {
    const int label = a + 2;
    q.original_node[label] = k[a];
    if (g.has_edge(c.i, k[a])) arcs.emplace_back(1, label);
    if (g.has_edge(k[a], c.j)) arcs.emplace_back(label, 1);
    for (int b = a + 1; b < static_cast<int>(k.size()); ++b) {
      if (g.has_edge(k[a], k[b])) {
        arcs.emplace_back(label, b + 2);
        arcs.emplace_back(b + 2, label);
      }
    }
  }
  if (g.has_edge(c.i, c.j)) arcs.emplace_back(1, 1);
  q.graph = DiGraph(r, std::move(arcs));
  return q;
}

void for_each_couple(int d, const std::function<void(const Couple&)>& fn) {
  if (d < 2) throw std::invalid_argument("couples need at least two nodes");
  if (d > kMaxRelationNodes) {
    throw std::invalid_argument("couple enumeration capped at d <= " +
                                std::to_string(kMaxRelationNodes));
  }
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      std::vector<int> rest;
      for (int v = 1; v <= d; ++v) {
        if (v != i && v != j) rest.push_back(v);
      }
      const std::uint32_t subsets = 1u << rest.size();
      for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        std::vector<int> k;
        for (std::size_t b = 0; b < rest.size(); ++b) {
          if (mask & (1u << b)) k.push_back(rest[b]);
        }
        fn(Couple(i, j, std::move(k)));
      }
    }
  }
}

std::vector<Couple> all_couples(int d) {
  std::vector<Couple> out;
  for_each_couple(d, [&](const Couple& c) { out.push_back(c); });
  return out;
}

Couple dual(const Couple& c, int d) {
  c.validate_for(d);
  std::vector<bool> in_k(d + 1, false);
  for (int v : c.given) in_k[v] = true;
  std::vector<int> complement;
  for (int v = 1; v <= d; ++v) {
    if (v != c.i && v != c.j && !in_k[v]) complement.push_back(v);
  }
  return Couple(c.i, c.j, std::move(complement));
}

Relation dual(const Relation& rel, int d) {
  Relation out;
  for (const auto& c : rel) out.insert(dual(c, d));
  return out;
}

Relation separation_relation(const Graph& g) {
  Relation out;
  for_each_couple(g.node_count(), [&](const Couple& c) {
    if (separates(g, {c.i}, c.given, {c.j})) out.insert(c);
  });
  return out;
}

}  // namespace ggm
