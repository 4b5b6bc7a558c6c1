#include "cqsym/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>

namespace cqsym {

namespace {

std::vector<Vertex> mask_to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

}  // namespace

OrientedGraph::OrientedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), out_(n, 0), in_(n, 0) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidGraph("vertex count " + std::to_string(n) + " outside [0, 64]");
  }
  for (auto [u, v] : edges_) {
    std::string e = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    if (u < 1 || u > n || v < 1 || v > n) throw InvalidGraph("edge " + e + " out of range");
    if (u == v) throw InvalidGraph("self-loop " + e);
    if ((out_[u - 1] | in_[u - 1]) & bit(v)) throw InvalidGraph("repeated or anti-parallel edge " + e);
    out_[u - 1] |= bit(v);
    in_[v - 1] |= bit(u);
  }
  std::sort(edges_.begin(), edges_.end());
  // Kahn's algorithm; leftover vertices sit on a directed cycle.
  std::vector<int> indeg(n);
  for (int v = 1; v <= n; ++v) indeg[v - 1] = std::popcount(in_[v - 1]);
  std::vector<Vertex> stack;
  for (int v = 1; v <= n; ++v) {
    if (!indeg[v - 1]) stack.push_back(v);
  }
  int seen = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    ++seen;
    for (Vertex w : mask_to_vertices(out_[u - 1])) {
      if (--indeg[w - 1] == 0) stack.push_back(w);
    }
  }
  if (seen != n) throw InvalidGraph("orientation has a directed cycle");
}

bool OrientedGraph::is_natural() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.first < e.second; });
}

bool OrientedGraph::is_connected() const {
  if (n_ <= 1) return true;
  VertexMask seen = bit(1), frontier = bit(1);
  while (frontier) {
    VertexMask next = 0;
    for (Vertex v : mask_to_vertices(frontier)) next |= neighbor_mask(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n_;
}

OrientedGraph OrientedGraph::relabeled(const std::vector<Vertex>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InvalidArgument("relabeling has wrong length");
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (auto [u, v] : edges_) e.emplace_back(perm[u - 1], perm[v - 1]);
  return OrientedGraph(n_, std::move(e));
}

std::vector<Vertex> OrientedGraph::natural_relabeling() const {
  std::vector<Vertex> perm(n_, 0);
  VertexMask placed = 0;
  for (int label = 1; label <= n_; ++label) {
    for (Vertex v = 1; v <= n_; ++v) {
      if (!(placed & bit(v)) && (in_[v - 1] & ~placed) == 0) {
        perm[v - 1] = label;
        placed |= bit(v);
        break;
      }
    }
  }
  return perm;
}

PosetClosure::PosetClosure(const OrientedGraph& g) : above_(g.n(), 0), below_(g.n(), 0) {
  auto perm = g.natural_relabeling();
  std::vector<Vertex> order(g.n());
  for (Vertex v = 1; v <= g.n(); ++v) order[perm[v - 1] - 1] = v;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexMask a = g.out_mask(*it);
    for (Vertex w : mask_to_vertices(g.out_mask(*it))) a |= above_[w - 1];
    above_[*it - 1] = a;
  }
  for (Vertex v : order) {
    VertexMask b = g.in_mask(v);
    for (Vertex w : mask_to_vertices(g.in_mask(v))) b |= below_[w - 1];
    below_[v - 1] = b;
  }
}

std::vector<Edge> PosetClosure::relation() const {
  std::vector<Edge> r;
  for (Vertex u = 1; u <= n(); ++u) {
    for (Vertex v : mask_to_vertices(above_[u - 1])) r.emplace_back(u, v);
  }
  return r;
}

bool ChainDecomposition::valid_for(const OrientedGraph& g) const {
  PosetClosure p(g);
  VertexMask covered = 0;
  for (const auto& c : chains) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 1 || c[i] > g.n() || (covered & bit(c[i]))) return false;
      covered |= bit(c[i]);
      if (i && !p.less(c[i - 1], c[i])) return false;
    }
  }
  return std::popcount(covered) == g.n();
}

SourcesSinks sources_and_sinks(const OrientedGraph& g) {
  SourcesSinks s;
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (!g.in_mask(v)) s.sources.push_back(v);
    if (!g.out_mask(v)) s.sinks.push_back(v);
  }
  return s;
}

OrientedGraph reverse(const OrientedGraph& g) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(v, u);
  return OrientedGraph(g.n(), std::move(e));
}

PosetClosure poset_closure(const OrientedGraph& g) { return PosetClosure(g); }

bool is_antichain(const PosetClosure& p, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j] || p.comparable(vs[i], vs[j])) return false;
    }
  }
  return true;
}

namespace {

// Maximum matching in the split graph: left copy u joined to right copy v
// whenever u < v in the poset. Kuhn's augmenting paths are plenty at n <= 64.
struct ComparabilityMatching {
  std::vector<Vertex> match_left;   // right partner of left u, 0 if none
  std::vector<Vertex> match_right;  // left partner of right v, 0 if none
};

ComparabilityMatching match_comparabilities(const PosetClosure& p) {
  int n = p.n();
  ComparabilityMatching m{std::vector<Vertex>(n, 0), std::vector<Vertex>(n, 0)};
  std::vector<char> visited;
  std::function<bool(Vertex)> augment = [&](Vertex u) {
    for (Vertex v : mask_to_vertices(p.above(u))) {
      if (visited[v - 1]) continue;
      visited[v - 1] = 1;
      if (!m.match_right[v - 1] || augment(m.match_right[v - 1])) {
        m.match_left[u - 1] = v;
        m.match_right[v - 1] = u;
        return true;
      }
    }
    return false;
  };
  for (Vertex u = 1; u <= n; ++u) {
    visited.assign(n, 0);
    augment(u);
  }
  return m;
}

}  // namespace

std::vector<Vertex> max_antichain(const OrientedGraph& g) {
  PosetClosure p(g);
  auto m = match_comparabilities(p);
  int n = g.n();
  // Konig: Z = vertices reachable from unmatched left vertices along
  // alternating paths. The antichain is {v : left v in Z, right v not in Z}.
  std::vector<char> zl(n, 0), zr(n, 0);
  std::vector<Vertex> queue;
  for (Vertex u = 1; u <= n; ++u) {
    if (!m.match_left[u - 1]) {
      zl[u - 1] = 1;
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.back();
    queue.pop_back();
    for (Vertex v : mask_to_vertices(p.above(u))) {
      if (zr[v - 1]) continue;
      zr[v - 1] = 1;
      Vertex w = m.match_right[v - 1];
      if (w && !zl[w - 1]) {
        zl[w - 1] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v) {
    if (zl[v - 1] && !zr[v - 1]) out.push_back(v);
  }
  return out;
}

ChainDecomposition min_chain_cover(const OrientedGraph& g) {
  PosetClosure p(g);
  auto m = match_comparabilities(p);
  ChainDecomposition d;
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (m.match_right[v - 1]) continue;  // has a predecessor in its chain
    std::vector<Vertex> chain;
    for (Vertex x = v; x; x = m.match_left[x - 1]) chain.push_back(x);
    d.chains.push_back(std::move(chain));
  }
  return d;
}

namespace {

bool is_source_sink_cover(const OrientedGraph& g, const ChainDecomposition& d) {
  for (const auto& c : d.chains) {
    int sources = 0, sinks = 0;
    for (Vertex v : c) {
      sources += !g.in_mask(v);
      sinks += !g.out_mask(v);
    }
    if (sources != 1 || sinks != 1) return false;
  }
  return true;
}

void require_source_sink_preconditions(const OrientedGraph& g) {
  auto ss = sources_and_sinks(g);
  auto ac = max_antichain(g);
  if (ss.sources.size() != ss.sinks.size() || ss.sources.size() != ac.size()) {
    throw ChainCoverNotFound("source/sink chain cover needs |sources| = |sinks| = |max antichain|; got " +
                             std::to_string(ss.sources.size()) + ", " +
                             std::to_string(ss.sinks.size()) + ", " + std::to_string(ac.size()));
  }
}

}  // namespace

ChainDecomposition source_sink_chain_cover_exhaustive(const OrientedGraph& g) {
  require_source_sink_preconditions(g);
  PosetClosure p(g);
  auto perm = g.natural_relabeling();
  std::vector<Vertex> order(g.n());
  for (Vertex v = 1; v <= g.n(); ++v) order[perm[v - 1] - 1] = v;
  std::size_t a = sources_and_sinks(g).sources.size();

  // Vertices arrive in a linear extension; sources open chains, all others
  // extend a chain whose current top lies below them.
  ChainDecomposition cur;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == order.size()) {
      if (cur.chains.size() != a) return false;
      return std::all_of(cur.chains.begin(), cur.chains.end(),
                         [&](const auto& c) { return !g.out_mask(c.back()); });
    }
    Vertex v = order[i];
    if (!g.in_mask(v)) {
      cur.chains.push_back({v});
      if (rec(i + 1)) return true;
      cur.chains.pop_back();
      return false;
    }
    for (auto& c : cur.chains) {
      if (!p.less(c.back(), v)) continue;
      c.push_back(v);
      if (rec(i + 1)) return true;
      c.pop_back();
    }
    return false;
  };
  if (!rec(0)) throw ChainCoverNotFound("no chain cover with one source and one sink per chain");
  return cur;
}

ChainDecomposition source_sink_chain_cover(const OrientedGraph& g) {
  require_source_sink_preconditions(g);
  ChainDecomposition d = min_chain_cover(g);
  if (is_source_sink_cover(g, d)) return d;
  return source_sink_chain_cover_exhaustive(g);
}

namespace {

// Column order for the canonical-form search: the in-neighbor label lists
// of the vertex receiving the next label. At the first difference the
// smaller label wins; a list extending the other wins, because the shorter
// one's next edge has a larger head.
bool column_less(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t k = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() > b.size();
}

OrientedGraph graph_from_columns(int n, const std::vector<std::vector<int>>& cols) {
  std::vector<Edge> e;
  for (int head = 1; head <= n; ++head) {
    for (int tail : cols[head - 1]) e.emplace_back(tail, head);
  }
  return OrientedGraph(n, std::move(e));
}

}  // namespace

OrientedGraph canonical_form(const OrientedGraph& g) {
  int n = g.n();
  if (n == 0) return g;
  std::vector<int> label(n, 0);  // 0 = unlabeled
  std::vector<std::vector<int>> cols(n), best;
  VertexMask labeled = 0;

  auto column_of = [&](Vertex v) {
    std::vector<int> c;
    for (Vertex w : mask_to_vertices(g.in_mask(v))) c.push_back(label[w - 1]);
    std::sort(c.begin(), c.end());
    return c;
  };

  // Returns -1/0/1 comparing cols[0..depth) to best[0..depth).
  auto prefix_cmp = [&](int depth) {
    for (int d = 0; d < depth; ++d) {
      if (cols[d] != best[d]) return column_less(cols[d], best[d]) ? -1 : 1;
    }
    return 0;
  };

  std::function<void(int)> rec = [&](int depth) {
    if (depth == n) {
      if (best.empty() || prefix_cmp(n) < 0) best = cols;
      return;
    }
    std::vector<Vertex> cands;
    std::vector<int> min_col;
    for (Vertex v = 1; v <= n; ++v) {
      if ((labeled & bit(v)) || (g.in_mask(v) & ~labeled)) continue;
      auto c = column_of(v);
      if (cands.empty() || column_less(c, min_col)) {
        cands = {v};
        min_col = std::move(c);
      } else if (c == min_col) {
        cands.push_back(v);
      }
    }
    cols[depth] = min_col;
    if (!best.empty() && prefix_cmp(depth + 1) > 0) return;
    // Twins (same in- and out-neighborhoods) are interchangeable.
    std::vector<Vertex> distinct;
    for (Vertex v : cands) {
      bool twin = std::any_of(distinct.begin(), distinct.end(), [&](Vertex w) {
        return (g.in_mask(v) & ~bit(w)) == (g.in_mask(w) & ~bit(v)) &&
               (g.out_mask(v) & ~bit(w)) == (g.out_mask(w) & ~bit(v));
      });
      if (!twin) distinct.push_back(v);
    }
    for (Vertex v : distinct) {
      label[v - 1] = depth + 1;
      labeled |= bit(v);
      cols[depth] = min_col;
      rec(depth + 1);
      label[v - 1] = 0;
      labeled &= ~bit(v);
    }
  };
  rec(0);
  return graph_from_columns(n, best);
}

OrientedGraph canonical_form_bruteforce(const OrientedGraph& g) {
  int n = g.n();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> best;
  do {
    bool natural = std::all_of(g.edges().begin(), g.edges().end(),
                               [&](const Edge& e) { return perm[e.first - 1] < perm[e.second - 1]; });
    if (!natural) continue;
    std::vector<std::vector<int>> cols(n);
    for (auto [u, v] : g.edges()) cols[perm[v - 1] - 1].push_back(perm[u - 1]);
    for (auto& c : cols) std::sort(c.begin(), c.end());
    bool better = best.empty();
    for (int d = 0; d < n && !better; ++d) {
      if (cols[d] != best[d]) {
        better = column_less(cols[d], best[d]);
        break;
      }
    }
    if (better) best = std::move(cols);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (n == 0) return g;
  return graph_from_columns(n, best);
}

std::vector<OrientedGraph> connected_components(const OrientedGraph& g) {
  std::vector<OrientedGraph> out;
  VertexMask assigned = 0;
  for (Vertex s = 1; s <= g.n(); ++s) {
    if (assigned & bit(s)) continue;
    VertexMask comp = bit(s), frontier = bit(s);
    while (frontier) {
      VertexMask next = 0;
      for (Vertex v : mask_to_vertices(frontier)) next |= g.neighbor_mask(v);
      frontier = next & ~comp;
      comp |= next;
    }
    assigned |= comp;
    auto members = mask_to_vertices(comp);
    std::vector<int> local(g.n() + 1, 0);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i) + 1;
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) {
      if (comp & bit(u)) e.emplace_back(local[u], local[v]);
    }
    out.emplace_back(static_cast<int>(members.size()), std::move(e));
  }
  return out;
}

OrientedGraph disjoint_union(const std::vector<OrientedGraph>& parts) {
  int offset = 0;
  std::vector<Edge> e;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges()) e.emplace_back(u + offset, v + offset);
    offset += p.n();
  }
  return OrientedGraph(offset, std::move(e));
}

bool is_total_order(const OrientedGraph& g) {
  VertexMask placed = 0;
  for (int step = 0; step < g.n(); ++step) {
    std::vector<Vertex> avail;
    for (Vertex v = 1; v <= g.n(); ++v) {
      if (!(placed & bit(v)) && !(g.in_mask(v) & ~placed)) avail.push_back(v);
    }
    if (avail.size() != 1) return false;
    placed |= bit(avail.front());
  }
  return true;
}

}  // namespace cqsym
