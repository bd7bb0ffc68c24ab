#ifndef RAAG_GRAPH_HPP
#define RAAG_GRAPH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "raag/error.hpp"

namespace raag {

using VertexSet = std::vector<std::string>;  // kept sorted and unique

// Finite simplicial graph: no loops, no multi-edges. Immutable after
// construction; all operations below return new values, so graphs are safe to
// share across threads.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<std::string> vertices,
        std::vector<std::pair<std::string, std::string>> edges) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
      throw input_error("graph: duplicate vertex");
    verts_ = std::move(vertices);
    adj_.assign(verts_.size(), std::vector<char>(verts_.size(), 0));
    for (const auto& [a, b] : edges) {
      int i = index_of(a), j = index_of(b);
      if (i == j) throw input_error("graph: loop at vertex '" + a + "'");
      if (adj_[i][j]) throw input_error("graph: duplicate edge {" + a + "," + b + "}");
      adj_[i][j] = adj_[j][i] = 1;
    }
  }

  bool operator==(const Graph&) const = default;

  std::size_t num_vertices() const { return verts_.size(); }
  const std::vector<std::string>& vertices() const { return verts_; }

  bool has_vertex(const std::string& v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
  }

  int index_of(const std::string& v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v)
      throw input_error("graph: unknown vertex '" + v + "'");
    return static_cast<int>(it - verts_.begin());
  }

  const std::string& vertex(int i) const { return verts_[i]; }

  bool adjacent(int i, int j) const { return adj_[i][j] != 0; }
  bool adjacent(const std::string& a, const std::string& b) const {
    return adjacent(index_of(a), index_of(b));
  }

  std::size_t num_edges() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < verts_.size(); ++i)
      for (std::size_t j = i + 1; j < verts_.size(); ++j) n += adj_[i][j];
    return n;
  }

  // Edges normalized to lexicographic endpoint order, listed sorted.
  std::vector<std::pair<std::string, std::string>> edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < verts_.size(); ++i)
      for (std::size_t j = i + 1; j < verts_.size(); ++j)
        if (adj_[i][j]) out.emplace_back(verts_[i], verts_[j]);
    return out;
  }

 private:
  std::vector<std::string> verts_;
  std::vector<std::vector<char>> adj_;
};

inline void check_subset(const Graph& g, const VertexSet& x) {
  for (const auto& v : x)
    if (!g.has_vertex(v)) throw input_error("vertex set: unknown vertex '" + v + "'");
}

inline VertexSet normalized(VertexSet x) {
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& x_in) {
  VertexSet x = normalized(x_in);
  check_subset(g, x);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (g.adjacent(x[i], x[j])) edges.emplace_back(x[i], x[j]);
  return Graph(x, edges);
}

inline Graph complement(const Graph& g) {
  std::vector<std::pair<std::string, std::string>> edges;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(static_cast<int>(i), static_cast<int>(j)))
        edges.emplace_back(vs[i], vs[j]);
  return Graph(vs, edges);
}

inline VertexSet link(const Graph& g, const std::string& v) {
  int i = g.index_of(v);
  VertexSet out;
  for (std::size_t j = 0; j < g.num_vertices(); ++j)
    if (g.adjacent(i, static_cast<int>(j))) out.push_back(g.vertex(static_cast<int>(j)));
  return out;
}

inline VertexSet star(const Graph& g, const std::string& v) {
  VertexSet out = link(g, v);
  out.push_back(v);
  return normalized(out);
}

inline bool is_clique(const Graph& g, const VertexSet& x_in) {
  VertexSet x = normalized(x_in);
  check_subset(g, x);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (!g.adjacent(x[i], x[j])) return false;
  return true;
}

// All cliques of size exactly n, in lexicographic order.
inline std::vector<VertexSet> enumerate_cliques(const Graph& g, int n) {
  if (n < 1) throw input_error("enumerate_cliques: n must be >= 1");
  std::vector<VertexSet> out;
  VertexSet current;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(current.size()) == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i < g.num_vertices(); ++i) {
      bool ok = true;
      for (const auto& u : current)
        if (!g.adjacent(g.index_of(u), static_cast<int>(i))) { ok = false; break; }
      if (!ok) continue;
      current.push_back(g.vertex(static_cast<int>(i)));
      self(self, i + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

inline bool is_triangle_free(const Graph& g) {
  return enumerate_cliques(g, 3).empty();
}

// Witness for n-thick stars: per vertex, two n-cliques through it whose
// intersection is exactly that vertex.
struct ThickStarWitness {
  std::map<std::string, std::pair<VertexSet, VertexSet>> cliques;
};

inline std::optional<ThickStarWitness> find_n_thick_stars(const Graph& g, int n) {
  if (n < 1) throw input_error("n-thick stars: n must be >= 1");
  if (n == 1) return std::nullopt;  // two distinct 1-cliques cannot share a vertex
  auto cliques = enumerate_cliques(g, n);
  ThickStarWitness w;
  for (const auto& v : g.vertices()) {
    std::vector<const VertexSet*> through;
    for (const auto& c : cliques)
      if (std::binary_search(c.begin(), c.end(), v)) through.push_back(&c);
    bool found = false;
    for (std::size_t i = 0; i < through.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < through.size() && !found; ++j) {
        VertexSet inter;
        std::set_intersection(through[i]->begin(), through[i]->end(),
                              through[j]->begin(), through[j]->end(),
                              std::back_inserter(inter));
        if (inter == VertexSet{v}) {
          w.cliques[v] = {*through[i], *through[j]};
          found = true;
        }
      }
    }
    if (!found) return std::nullopt;
  }
  return w;
}

inline bool has_n_thick_stars(const Graph& g, int n) {
  return find_n_thick_stars(g, n).has_value();
}

// Cross-check variant: Link(v) contains two disjoint (n-1)-cliques for every v.
inline bool has_n_thick_stars_via_links(const Graph& g, int n) {
  if (n < 1) throw input_error("n-thick stars: n must be >= 1");
  if (n == 1) return false;
  for (const auto& v : g.vertices()) {
    Graph lk = induced_subgraph(g, link(g, v));
    auto cs = enumerate_cliques(lk, n - 1);
    bool found = false;
    for (std::size_t i = 0; i < cs.size() && !found; ++i)
      for (std::size_t j = i + 1; j < cs.size() && !found; ++j) {
        VertexSet inter;
        std::set_intersection(cs[i].begin(), cs[i].end(), cs[j].begin(), cs[j].end(),
                              std::back_inserter(inter));
        if (inter.empty()) found = true;
      }
    if (!found) return false;
  }
  return true;
}

using VertexAssignment = std::map<std::string, std::string>;

// Injective assignments small -> big realizing small as an induced subgraph.
// Backtracking over small's vertices sorted by decreasing degree; candidate
// images tried in identifier order, so output order is deterministic.
// limit == 0 means all.
inline std::vector<VertexAssignment> find_induced_embeddings(const Graph& small,
                                                             const Graph& big,
                                                             std::size_t limit = 0) {
  std::vector<int> order(small.num_vertices());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  auto degree = [&](int i) {
    int d = 0;
    for (std::size_t j = 0; j < small.num_vertices(); ++j)
      d += small.adjacent(i, static_cast<int>(j));
    return d;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return degree(a) > degree(b); });

  std::vector<VertexAssignment> out;
  std::vector<int> image(small.num_vertices(), -1);
  std::vector<char> used(big.num_vertices(), 0);
  auto place = [&](auto&& self, std::size_t k) -> bool {
    if (limit != 0 && out.size() >= limit) return true;
    if (k == order.size()) {
      VertexAssignment a;
      for (std::size_t i = 0; i < image.size(); ++i)
        a[small.vertex(static_cast<int>(i))] = big.vertex(image[i]);
      out.push_back(std::move(a));
      return limit != 0 && out.size() >= limit;
    }
    int v = order[k];
    for (std::size_t c = 0; c < big.num_vertices(); ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < k; ++p) {
        int u = order[p];
        if (small.adjacent(v, u) != big.adjacent(static_cast<int>(c), image[u])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[v] = static_cast<int>(c);
      used[c] = 1;
      bool done = self(self, k + 1);
      used[c] = 0;
      image[v] = -1;
      if (done) return true;
    }
    return false;
  };
  place(place, 0);
  return out;
}

inline bool graphs_isomorphic(const Graph& a, const Graph& b) {
  return a.num_vertices() == b.num_vertices() && a.num_edges() == b.num_edges() &&
         !find_induced_embeddings(a, b, 1).empty();
}

enum class NamedKind { path, cycle, complete, edgeless };

inline Graph named_graph(NamedKind kind, int n) {
  if (n < 1) throw input_error("named_graph: n must be >= 1");
  if (kind == NamedKind::cycle && n < 3) throw input_error("named_graph: cycle requires n >= 3");
  // Single-letter labels a..z for small graphs, v1.. beyond that.
  std::vector<std::string> vs;
  for (int i = 0; i < n; ++i)
    vs.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i))
                         : "v" + std::to_string(i + 1));
  std::vector<std::pair<std::string, std::string>> edges;
  switch (kind) {
    case NamedKind::path:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(vs[i], vs[i + 1]);
      break;
    case NamedKind::cycle:
      for (int i = 0; i < n; ++i) edges.emplace_back(vs[i], vs[(i + 1) % n]);
      break;
    case NamedKind::complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(vs[i], vs[j]);
      break;
    case NamedKind::edgeless:
      break;
  }
  return Graph(vs, edges);
}

inline NamedKind parse_named_kind(const std::string& s) {
  if (s == "path") return NamedKind::path;
  if (s == "cycle") return NamedKind::cycle;
  if (s == "complete") return NamedKind::complete;
  if (s == "edgeless") return NamedKind::edgeless;
  throw input_error("unknown graph kind '" + s + "'");
}

}  // namespace raag

#endif
