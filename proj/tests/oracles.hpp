#pragma once

// Brute-force reference implementations shared by the test binaries. None of
// these call into the library's algorithms beyond the basic containers.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cqsym/cqf.hpp"
#include "cqsym/graph.hpp"
#include "cqsym/qsym.hpp"

namespace oracle {

using namespace cqsym;

inline std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> p;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) p.emplace_back(i, j);
  return p;
}

inline bool acyclic(int n, const std::vector<Edge>& edges) {
  std::vector<int> indeg(n + 1, 0);
  for (auto [u, v] : edges) ++indeg[v];
  std::vector<int> ready;
  for (int v = 1; v <= n; ++v)
    if (!indeg[v]) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    int u = ready.back();
    ready.pop_back();
    ++seen;
    for (auto [a, b] : edges)
      if (a == u && --indeg[b] == 0) ready.push_back(b);
  }
  return seen == n;
}

// Every labeled DAG on n vertices: each vertex pair is absent, forward or
// backward, filtered for acyclicity.
inline std::vector<OrientedGraph> labeled_dags(int n) {
  auto pairs = all_pairs(n);
  std::vector<OrientedGraph> out;
  std::vector<int> state(pairs.size(), 0);
  while (true) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (state[i] == 1) e.push_back(pairs[i]);
      if (state[i] == 2) e.emplace_back(pairs[i].second, pairs[i].first);
    }
    if (acyclic(n, e)) out.emplace_back(n, e);
    std::size_t i = 0;
    while (i < state.size() && state[i] == 2) state[i++] = 0;
    if (i == state.size()) break;
    ++state[i];
  }
  return out;
}

// Every naturally labeled DAG on n vertices (one per edge subset). Each DAG
// is isomorphic to at least one of these.
inline std::vector<OrientedGraph> natural_dags(int n) {
  auto pairs = all_pairs(n);
  std::vector<OrientedGraph> out;
  for (unsigned long s = 0; s < (1ul << pairs.size()); ++s) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (s >> i & 1) e.push_back(pairs[i]);
    out.emplace_back(n, e);
  }
  return out;
}

inline bool connected(int n, const std::vector<Edge>& edges) {
  if (n <= 1) return true;
  std::vector<int> comp(n + 1);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (auto [u, v] : edges) comp[find(u)] = find(v);
  for (int v = 2; v <= n; ++v)
    if (find(v) != find(1)) return false;
  return true;
}

// Isomorphism classes of connected DAGs by checking every permutation.
inline std::vector<OrientedGraph> connected_dag_classes(int n) {
  std::set<std::vector<Edge>> seen;
  std::vector<OrientedGraph> reps;
  std::vector<int> perm(n);
  for (const auto& g : natural_dags(n)) {
    if (!connected(n, g.edges())) continue;
    std::vector<Edge> best;
    bool first = true;
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::vector<Edge> e;
      for (auto [u, v] : g.edges()) e.emplace_back(perm[u - 1], perm[v - 1]);
      std::sort(e.begin(), e.end());
      if (first || e < best) best = e;
      first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) reps.push_back(g);
  }
  return reps;
}

// X_G straight from the definition: every map V -> {1..n}, kept when proper
// and when its colors form an initial segment {1..k}.
inline QSymElement cqf(const OrientedGraph& g) {
  int n = g.n();
  QSymElement out(n);
  if (n == 0) return QSymElement::constant(1);
  std::map<std::vector<int>, std::vector<BigInt>> acc;
  std::vector<int> kappa(n, 1);
  while (true) {
    bool proper = true;
    int asc = 0;
    for (auto [u, v] : g.edges()) {
      if (kappa[u - 1] == kappa[v - 1]) proper = false;
      asc += kappa[u - 1] < kappa[v - 1];
    }
    if (proper) {
      std::vector<int> mult(n, 0);
      for (int c : kappa) ++mult[c - 1];
      int k = 0;
      while (k < n && mult[k]) ++k;
      bool prefix = std::all_of(mult.begin() + k, mult.end(), [](int m) { return m == 0; });
      if (prefix) {
        auto& poly = acc[std::vector<int>(mult.begin(), mult.begin() + k)];
        poly.resize(g.num_edges() + 1);
        poly[asc] += 1;
      }
    }
    int i = 0;
    while (i < n && kappa[i] == n) kappa[i++] = 1;
    if (i == n) break;
    ++kappa[i];
  }
  for (auto& [parts, c] : acc) out.add_term(Composition(parts), QPoly(c));
  return out;
}

// Chromatic polynomial at k by deletion-contraction on the underlying
// simple graph (adjacency sets).
inline long chromatic_at(std::vector<std::set<int>> adj, int k) {
  int n = static_cast<int>(adj.size());
  int u = -1, v = -1;
  for (int a = 0; a < n && u < 0; ++a)
    if (!adj[a].empty()) {
      u = a;
      v = *adj[a].begin();
    }
  if (u < 0) {
    long r = 1;
    for (int i = 0; i < n; ++i) r *= k;
    return r;
  }
  auto del = adj;
  del[u].erase(v);
  del[v].erase(u);
  // Contract v into u, then drop v.
  std::vector<std::set<int>> con(n - 1);
  auto idx = [&](int x) { return x < v ? x : x - 1; };
  for (int a = 0; a < n; ++a) {
    if (a == v) continue;
    for (int b : del[a]) {
      int aa = a, bb = b == v ? u : b;
      if (aa == bb) continue;
      con[idx(aa)].insert(idx(bb));
      con[idx(bb)].insert(idx(aa));
    }
  }
  for (int b : del[v]) {
    if (b == u) continue;
    con[idx(u)].insert(idx(b));
    con[idx(b)].insert(idx(u));
  }
  return chromatic_at(del, k) - chromatic_at(con, k);
}

inline std::vector<std::set<int>> undirected(const OrientedGraph& g) {
  std::vector<std::set<int>> adj(g.n());
  for (auto [u, v] : g.edges()) {
    adj[u - 1].insert(v - 1);
    adj[v - 1].insert(u - 1);
  }
  return adj;
}

inline bool reaches(const OrientedGraph& g, Vertex s, Vertex t) {
  std::vector<int> stack{s};
  std::vector<bool> seen(g.n() + 1, false);
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (auto [a, b] : g.edges()) {
      if (a != x || seen[b]) continue;
      if (b == t) return true;
      seen[b] = true;
      stack.push_back(b);
    }
  }
  return false;
}

inline int max_antichain_size(const OrientedGraph& g) {
  int n = g.n(), best = 0;
  for (unsigned s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (a != b && (s >> a & 1) && (s >> b & 1) && reaches(g, a + 1, b + 1)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

inline bool isomorphic(const OrientedGraph& a, const OrientedGraph& b) {
  if (a.n() != b.n() || a.num_edges() != b.num_edges()) return false;
  std::vector<int> perm(a.n());
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<Edge> e;
    for (auto [u, v] : a.edges()) e.emplace_back(perm[u - 1], perm[v - 1]);
    std::sort(e.begin(), e.end());
    if (e == b.edges()) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
