#include "cqsym/families.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cqsym {

MountainSpec MountainSpec::parse(const std::string& tags, int k) {
  MountainSpec s;
  s.k = k;
  for (char c : tags) {
    if (c == 'f' || c == 'F') s.cliques.push_back(CliqueTag::Full);
    else if (c == 'b' || c == 'B') s.cliques.push_back(CliqueTag::Bottomless);
    else throw InvalidParams(std::string("clique tag must be 'f' or 'b', got '") + c + "'");
  }
  s.validate();
  return s;
}

std::string MountainSpec::tags() const {
  std::string s;
  for (auto t : cliques) s += t == CliqueTag::Full ? 'f' : 'b';
  return s;
}

int MountainSpec::num_vertices() const {
  int n = 1;
  for (auto t : cliques) n += t == CliqueTag::Full ? k - 1 : k;
  return n;
}

int MountainSpec::num_full() const {
  return static_cast<int>(std::count(cliques.begin(), cliques.end(), CliqueTag::Full));
}

void MountainSpec::validate() const {
  if (k < 2) throw InvalidParams("clique size k must be at least 2");
  if (p() < 2) throw InvalidParams("a mountain needs at least 2 cliques");
  if (k < 3 && num_full() != p()) throw InvalidParams("bottomless cliques need k >= 3");
  if (num_vertices() > kMaxVertices) throw InvalidParams("mountain exceeds 64 vertices");
}

MountainSpec MountainSpec::reversed() const {
  MountainSpec r = *this;
  std::reverse(r.cliques.begin(), r.cliques.end());
  return r;
}

std::vector<Vertex> CliqueRange::upper() const {
  std::vector<Vertex> u;
  for (Vertex v = left + 1; v < right; ++v) u.push_back(v);
  return u;
}

int MountainGeometry::clique_of_upper(Vertex v) const {
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    if (v > cliques[i].left && v < cliques[i].right) return static_cast<int>(i);
  }
  return -1;
}

Mountain mixed_mountain(const MountainSpec& spec) {
  spec.validate();
  MountainGeometry geo;
  geo.spec = spec;
  geo.n = spec.num_vertices();
  std::vector<Edge> edges;
  Vertex left = 1;
  geo.lower.push_back(1);
  for (auto tag : spec.cliques) {
    Vertex right = left + (tag == CliqueTag::Full ? spec.k - 1 : spec.k);
    geo.cliques.push_back({tag, left, right});
    for (Vertex a = left; a <= right; ++a) {
      for (Vertex b = a + 1; b <= right; ++b) {
        if (tag == CliqueTag::Bottomless && a == left && b == right) continue;
        edges.emplace_back(a, b);
      }
    }
    for (Vertex u = left + 1; u < right; ++u) geo.upper.push_back(u);
    geo.lower.push_back(right);
    left = right;
  }
  geo.bottom = {1, geo.n};
  edges.push_back(geo.bottom);
  return {OrientedGraph(geo.n, std::move(edges)), std::move(geo)};
}

Mountain mountain(int p, int k) {
  if (p < 2 || k < 2) throw InvalidParams("mountain needs p >= 2 and k >= 2");
  return mixed_mountain({k, std::vector<CliqueTag>(p, CliqueTag::Full)});
}

Mountain bottomless_mountain(int p, int k) {
  if (p < 2 || k < 3) throw InvalidParams("bottomless mountain needs p >= 2 and k >= 3");
  return mixed_mountain({k, std::vector<CliqueTag>(p, CliqueTag::Bottomless)});
}

namespace {

Mountain exchange(const Mountain& m, int clique, CliqueTag first) {
  const auto& tags = m.geometry.spec.cliques;
  CliqueTag second = first == CliqueTag::Full ? CliqueTag::Bottomless : CliqueTag::Full;
  if (clique < 0 || clique + 1 >= static_cast<int>(tags.size()) || tags[clique] != first ||
      tags[clique + 1] != second) {
    throw InvalidSwapSite("no " + std::string(first == CliqueTag::Full ? "full/bottomless" : "bottomless/full") +
                          " pair at clique " + std::to_string(clique) + " of spec " + m.geometry.spec.tags());
  }
  MountainSpec s = m.geometry.spec;
  std::swap(s.cliques[clique], s.cliques[clique + 1]);
  return mixed_mountain(s);
}

}  // namespace

Mountain swap_graph(const Mountain& m, int clique) { return exchange(m, clique, CliqueTag::Full); }

Mountain unswap_graph(const Mountain& m, int clique) { return exchange(m, clique, CliqueTag::Bottomless); }

std::vector<MountainSpec> mixed_specs(int n) {
  std::vector<MountainSpec> out;
  for (int k = 2; k <= n; ++k) {
    std::vector<CliqueTag> cur;
    std::function<void(int)> rec = [&](int used) {
      if (used == n) {
        if (cur.size() >= 2) out.push_back({k, cur});
        return;
      }
      for (auto tag : {CliqueTag::Full, CliqueTag::Bottomless}) {
        if (tag == CliqueTag::Bottomless && k < 3) continue;
        int add = tag == CliqueTag::Full ? k - 1 : k;
        if (used + add > n) continue;
        cur.push_back(tag);
        rec(used + add);
        cur.pop_back();
      }
    };
    rec(1);
  }
  return out;
}

OrientedGraph natural_unit_interval(const std::vector<int>& h) {
  int n = static_cast<int>(h.size());
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    int hi = h[i - 1];
    if (hi < i || hi > n) {
      throw InvalidFunction("h(" + std::to_string(i) + ") = " + std::to_string(hi) + " outside [" +
                            std::to_string(i) + ", " + std::to_string(n) + "]");
    }
    if (i > 1 && hi < h[i - 2]) throw InvalidFunction("h must be nondecreasing");
    for (int j = i + 1; j <= hi; ++j) edges.emplace_back(i, j);
  }
  return OrientedGraph(n, std::move(edges));
}

std::vector<std::vector<int>> hessenberg_functions(int n, bool connected_only) {
  std::vector<std::vector<int>> out;
  std::vector<int> h;
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      out.push_back(h);
      return;
    }
    int lo = std::max(h.empty() ? 1 : h.back(), connected_only && i < n ? i + 1 : i);
    for (int v = lo; v <= n; ++v) {
      h.push_back(v);
      rec(i + 1);
      h.pop_back();
    }
  };
  if (n >= 1) rec(1);
  return out;
}

OrientedGraph oriented_star(int n, const std::vector<bool>& inward) {
  if (n < 1 || static_cast<int>(inward.size()) != n - 1) {
    throw InvalidParams("star on n vertices needs n-1 orientation flags");
  }
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back(inward[i - 1] ? Edge{i, n} : Edge{n, i});
  return OrientedGraph(n, std::move(edges));
}

OrientedGraph path_oriented(const std::vector<bool>& forward) {
  int n = static_cast<int>(forward.size()) + 1;
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back(forward[i - 1] ? Edge{i, i + 1} : Edge{i + 1, i});
  return OrientedGraph(n, std::move(edges));
}

namespace {

std::vector<OrientedGraph> sorted_unique(std::set<OrientedGraph> s) {
  return std::vector<OrientedGraph>(s.begin(), s.end());
}

// Every orientation of an undirected edge list that is acyclic, canonicalized.
void add_orientations(int n, const std::vector<Edge>& undirected, std::set<OrientedGraph>& out) {
  std::size_t m = undirected.size();
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < m; ++i) {
      auto [a, b] = undirected[i];
      e.push_back(mask >> i & 1 ? Edge{b, a} : Edge{a, b});
    }
    try {
      out.insert(canonical_form(OrientedGraph(n, std::move(e))));
    } catch (const InvalidGraph&) {
      // directed cycle
    }
  }
}

}  // namespace

std::vector<OrientedGraph> oriented_trees(int n) {
  if (n < 1) throw InvalidParams("trees need n >= 1");
  if (n > 9) throw SizeGuard("oriented_trees is limited to 9 vertices");
  std::set<OrientedGraph> out;
  if (n == 1) return {OrientedGraph(1, {})};
  // Pruefer sequences enumerate labeled trees; isomorphic copies collapse
  // after canonicalization.
  std::vector<int> seq(n - 2, 1);
  std::set<std::vector<Edge>> seen_shapes;
  while (true) {
    std::vector<int> degree(n + 1, 1);
    for (int x : seq) ++degree[x];
    std::vector<Edge> edges;
    for (int x : seq) {
      int leaf = 1;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
      --degree[leaf];
      --degree[x];
    }
    int u = 0, v = 0;
    for (int i = 1; i <= n; ++i) {
      if (degree[i] == 1) (u ? v : u) = i;
    }
    edges.emplace_back(u, v);
    // A labeling whose min-to-max orientation is already known is isomorphic
    // to a processed tree.
    auto shape = canonical_form(OrientedGraph(n, edges)).edges();
    if (seen_shapes.insert(shape).second) add_orientations(n, edges, out);
    int i = n - 3;
    while (i >= 0 && seq[i] == n) seq[i--] = 1;
    if (i < 0) break;
    ++seq[i];
  }
  return sorted_unique(std::move(out));
}

std::vector<OrientedGraph> cycle_acyclic_orientations(int n) {
  if (n < 3) throw InvalidParams("cycles need n >= 3");
  if (n > 20) throw SizeGuard("cycle_acyclic_orientations is limited to 20 vertices");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  std::set<OrientedGraph> out;
  add_orientations(n, edges, out);
  return sorted_unique(std::move(out));
}

namespace {

void check_dag_bound(int n, bool allow_large) {
  if (n < 1) throw InvalidParams("n must be positive");
  int limit = allow_large ? 8 : 7;
  if (n > limit) {
    throw SizeGuard("DAG enumeration at n = " + std::to_string(n) + " exceeds the limit of " +
                    std::to_string(limit) + (allow_large ? "" : " (8 needs the large-run flag)"));
  }
}

// Adds vertex n+1 as a sink whose in-neighbors are `in`.
OrientedGraph add_sink(const OrientedGraph& h, VertexMask in) {
  std::vector<Edge> e = h.edges();
  for (Vertex v = 1; v <= h.n(); ++v) {
    if (in & bit(v)) e.emplace_back(v, h.n() + 1);
  }
  return OrientedGraph(h.n() + 1, std::move(e));
}

// Each DAG on m vertices arises from one on m-1 vertices by adding a sink.
std::vector<OrientedGraph> extend_by_sink(const std::vector<OrientedGraph>& level, bool connected_only) {
  std::set<OrientedGraph> next;
  for (const auto& h : level) {
    for (VertexMask in = connected_only ? 1 : 0; in < (VertexMask{1} << h.n()); ++in) {
      OrientedGraph g = add_sink(h, in);
      if (connected_only && !g.is_connected()) continue;
      next.insert(canonical_form(g));
    }
  }
  return sorted_unique(std::move(next));
}

}  // namespace

std::vector<OrientedGraph> all_dags(int n, bool allow_large) {
  check_dag_bound(n, allow_large);
  std::vector<OrientedGraph> level{OrientedGraph(1, {})};
  for (int m = 2; m <= n; ++m) level = extend_by_sink(level, false);
  return level;
}

std::vector<OrientedGraph> all_connected_dags(int n, bool allow_large) {
  check_dag_bound(n, allow_large);
  if (n == 1) return {OrientedGraph(1, {})};
  return extend_by_sink(all_dags(n - 1, allow_large), true);
}

}  // namespace cqsym
