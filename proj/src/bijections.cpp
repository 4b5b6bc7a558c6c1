#include "cqsym/bijections.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace cqsym {

namespace {

int color(const Coloring& kappa, Vertex v) { return kappa[v - 1]; }

bool in_pair(int c, int a) { return c == a || c == a + 1; }

void check_palette(const Coloring& kappa, int palette) {
  if (palette < 1 || palette > 15) throw InvalidArgument("palette must be in 1..15");
  for (int c : kappa) {
    if (c > palette) {
      throw InvalidArgument("color " + std::to_string(c) + " exceeds palette " + std::to_string(palette));
    }
  }
}

std::string show(const Coloring& kappa) {
  std::string s = "[";
  for (std::size_t i = 0; i < kappa.size(); ++i) s += (i ? "," : "") + std::to_string(kappa[i]);
  return s + "]";
}

// Moves the upper vertex colored `marker` in each clique from slot i to slot
// s-1-i, keeping the other uppers in order.
void mirror_marked_upper(const MountainGeometry& geo, Coloring& kappa, int marker) {
  for (const auto& c : geo.cliques) {
    auto up = c.upper();
    int s = static_cast<int>(up.size());
    std::vector<int> vals;
    for (Vertex u : up) vals.push_back(color(kappa, u));
    auto it = std::find(vals.begin(), vals.end(), marker);
    if (it == vals.end()) continue;
    int i = static_cast<int>(it - vals.begin());
    vals.erase(it);
    vals.insert(vals.begin() + (s - 1 - i), marker);
    for (int j = 0; j < s; ++j) kappa[up[j] - 1] = vals[j];
  }
}

Coloring reflect_onto(const Mountain& m, const Mountain& target, const Coloring& kappa, int palette) {
  check_proper(m.graph, kappa);
  check_palette(kappa, palette);
  if (!in_L(m.graph, kappa, 1)) throw WrongClass("reflect needs a coloring in L_{1,2}");
  const int n = m.graph.n();
  Coloring out(n);
  for (Vertex i = 1; i <= n; ++i) {
    int c = color(kappa, n + 1 - i);
    out[i - 1] = c == 1 ? 2 : c == 2 ? 1 : palette + 3 - c;
  }
  const int p = m.geometry.spec.p();
  for (int t = 0; t < p; ++t) {
    auto up = m.geometry.cliques[t].upper();
    auto img = target.geometry.cliques[p - 1 - t].upper();
    std::vector<int> slots;
    for (int j = 0; j < static_cast<int>(up.size()); ++j) {
      if (color(kappa, up[j]) <= 2) slots.push_back(j);
    }
    std::vector<int> low, rest;
    for (Vertex u : img) (color(out, u) <= 2 ? low : rest).push_back(color(out, u));
    if (low.size() != slots.size()) throw InternalInconsistency("reflect lost an upper 1/2 entry");
    std::size_t li = 0, ri = 0, si = 0;
    for (int j = 0; j < static_cast<int>(img.size()); ++j) {
      bool slot = si < slots.size() && slots[si] == j;
      out[img[j] - 1] = slot ? low[li++] : rest[ri++];
      si += slot;
    }
  }
  return out;
}

void check_swap_site(const Mountain& m, int s) {
  const auto& tags = m.geometry.spec.cliques;
  if (s < 0 || s + 1 >= static_cast<int>(tags.size()) || tags[s] != CliqueTag::Full ||
      tags[s + 1] != CliqueTag::Bottomless) {
    throw InvalidSwapSite("no full/bottomless pair at clique " + std::to_string(s) + " of spec " +
                          m.geometry.spec.tags());
  }
}

// Position of each entry in sorted order.
std::vector<int> ranks(const std::vector<int>& xs) {
  std::vector<int> sorted = xs, r;
  std::sort(sorted.begin(), sorted.end());
  for (int x : xs) r.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()));
  return r;
}

Coloring swap_onto(const Mountain& m, const Mountain& target, int s, const Coloring& kappa) {
  check_swap_site(m, s);
  check_proper(m.graph, kappa);
  const auto& U = m.geometry.cliques[s];
  const auto& W = m.geometry.cliques[s + 1];
  std::vector<int> ucols, wcols;
  for (Vertex x : U.upper()) ucols.push_back(color(kappa, x));
  for (Vertex x : W.upper()) wcols.push_back(color(kappa, x));
  int cv = color(kappa, U.right);
  int i = special_vertex(ucols, wcols, cv);

  Coloring out = kappa;
  const auto& left = target.geometry.cliques[s];
  const auto& right = target.geometry.cliques[s + 1];
  out[left.right - 1] = wcols[i];

  std::vector<int> rem = wcols;
  rem.erase(rem.begin() + i);
  std::sort(rem.begin(), rem.end());
  auto ru = ranks(ucols);
  auto rup = right.upper();
  for (std::size_t j = 0; j < rup.size(); ++j) out[rup[j] - 1] = rem[ru[j]];

  std::vector<int> pool = ucols;
  pool.push_back(cv);
  std::sort(pool.begin(), pool.end());
  auto rw = ranks(wcols);
  auto lup = left.upper();
  for (std::size_t j = 0; j < lup.size(); ++j) out[lup[j] - 1] = pool[rw[j]];
  return out;
}

// Precomputed graphs for the L-automorphism of one mountain.
struct LAutoPlan {
  std::vector<Mountain> stages;  // stages[0] = m, then after each swap
  std::vector<int> sites;
  const Mountain* base = nullptr;

  explicit LAutoPlan(const Mountain& m) : base(&m) {
    if (!l_automorphism_applies(m.geometry.spec)) {
      throw PreconditionViolation("the L-automorphism needs full cliques followed by bottomless ones, got " +
                                  m.geometry.spec.tags());
    }
    const int p = m.geometry.spec.p(), full = m.geometry.spec.num_full();
    stages.push_back(m);
    // Bubble each full clique, rightmost first, past every bottomless one.
    for (int t = full - 1; t >= 0; --t) {
      for (int s = t; s < t + (p - full); ++s) {
        sites.push_back(s);
        stages.push_back(swap_graph(stages.back(), s));
      }
    }
  }

  Coloring apply(const Coloring& kappa, int a, int palette) const {
    const Mountain& m = *base;
    check_proper(m.graph, kappa);
    check_palette(kappa, palette);
    if (a < 1 || a + 1 > palette) throw InvalidA("need 1 <= a < palette");
    if (!in_L(m.graph, kappa, a)) throw WrongClass("coloring is not in L_{" + std::to_string(a) + "," + std::to_string(a + 1) + "}");
    Coloring cur = kappa;
    for (int b = a; b > 1; --b) cur = cycle_map(m, cur, b, palette);
    for (std::size_t i = 0; i < sites.size(); ++i) cur = swap_onto(stages[i], stages[i + 1], sites[i], cur);
    cur = reflect_onto(stages.back(), m, cur, palette);
    for (int j = 3; j < palette; ++j) {
      for (int i = j; i >= 3; --i) cur = psi(m, cur, i);
    }
    for (int b = 2; b <= a; ++b) cur = cycle_inverse(m, cur, b, palette);
    return cur;
  }
};

}  // namespace

bool in_L(const OrientedGraph& g, const Coloring& kappa, int a) {
  int x = kappa.front(), y = kappa.back();
  return g.n() >= 2 && x != y && in_pair(x, a) && in_pair(y, a);
}

bool ColoringClass::contains(const OrientedGraph& g, const Coloring& kappa) const {
  switch (tag) {
    case ClassTag::K:
      return !in_L(g, kappa, a);
    case ClassTag::L:
      return in_L(g, kappa, a);
    case ClassTag::MaxAscentWeight:
      return Composition(weight(kappa)) == alpha && ascent_count(g, kappa) == g.num_edges();
  }
  return false;
}

std::string ColoringClass::to_string() const {
  std::string pair = std::to_string(a) + "," + std::to_string(a + 1);
  switch (tag) {
    case ClassTag::K:
      return "K_{" + pair + "}";
    case ClassTag::L:
      return "L_{" + pair + "}";
    case ClassTag::MaxAscentWeight:
      return "K^{|E|}_" + alpha.to_string();
  }
  return "";
}

std::vector<ColoredComponent> colored_subgraph_components(const Mountain& m, const Coloring& kappa, int a) {
  const auto& g = m.graph;
  check_proper(g, kappa);
  const int n = g.n();
  VertexMask sel = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (in_pair(color(kappa, v), a)) sel |= bit(v);
  }
  std::vector<ColoredComponent> out;
  VertexMask seen = 0;
  int bottomless = 0;
  for (auto t : m.geometry.spec.cliques) bottomless += t == CliqueTag::Bottomless;
  const int cycle_len = m.geometry.spec.p() + 1 + bottomless;
  for (Vertex s = 1; s <= n; ++s) {
    if (!(sel & bit(s)) || (seen & bit(s))) continue;
    VertexMask comp = bit(s), frontier = bit(s);
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbor_mask(__builtin_ctzll(f) + 1);
      next &= sel & ~comp;
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    int size = std::popcount(comp), edges = 0, maxdeg = 0;
    for (VertexMask f = comp; f; f &= f - 1) {
      int d = std::popcount(g.neighbor_mask(__builtin_ctzll(f) + 1) & comp);
      edges += d;
      maxdeg = std::max(maxdeg, d);
    }
    edges /= 2;
    ColoredComponent c;
    if (edges == size - 1 && maxdeg <= 2) {
      // Walk from the smaller-labeled endpoint.
      Vertex start = 0;
      for (VertexMask f = comp; f && !start; f &= f - 1) {
        Vertex v = __builtin_ctzll(f) + 1;
        if (std::popcount(g.neighbor_mask(v) & comp) <= 1) start = v;
      }
      Vertex prev = 0, cur = start;
      while (cur) {
        c.vertices.push_back(cur);
        VertexMask nb = g.neighbor_mask(cur) & comp & ~(prev ? bit(prev) : 0);
        prev = cur;
        cur = nb ? __builtin_ctzll(nb) + 1 : 0;
      }
    } else if (edges == size && maxdeg == 2 && size == cycle_len && (comp & bit(1)) && (comp & bit(n))) {
      c.cycle = true;
      for (VertexMask f = comp; f; f &= f - 1) c.vertices.push_back(__builtin_ctzll(f) + 1);
    } else {
      throw StructureViolation("(" + std::to_string(a) + "," + std::to_string(a + 1) +
                               ")-colored component is neither a path nor the bottom cycle for " + show(kappa));
    }
    out.push_back(std::move(c));
  }
  return out;
}

Coloring psi(const Mountain& m, const Coloring& kappa, int a) {
  if (in_L(m.graph, kappa, a)) {
    throw WrongClass("psi needs a coloring in K_{" + std::to_string(a) + "," + std::to_string(a + 1) + "}");
  }
  Coloring out = kappa;
  for (const auto& c : colored_subgraph_components(m, kappa, a)) {
    if (c.cycle) throw StructureViolation("cycle component in a K-class coloring");
    if (c.vertices.size() % 2 == 0) continue;
    for (Vertex v : c.vertices) out[v - 1] = color(kappa, v) == a ? a + 1 : a;
  }
  return out;
}

Coloring cycle_map(const Mountain& m, const Coloring& kappa, int a, int palette) {
  if (a <= 1) throw InvalidA("cycle needs a > 1");
  check_proper(m.graph, kappa);
  check_palette(kappa, palette);
  if (!in_L(m.graph, kappa, a)) throw WrongClass("cycle needs a coloring in L_{" + std::to_string(a) + "," + std::to_string(a + 1) + "}");
  Coloring out = kappa;
  for (int& c : out) c = c == 1 ? palette + 1 : c;
  mirror_marked_upper(m.geometry, out, palette + 1);
  for (int& c : out) --c;
  return out;
}

Coloring cycle_inverse(const Mountain& m, const Coloring& kappa, int a, int palette) {
  if (a <= 1) throw InvalidA("cycle needs a > 1");
  check_proper(m.graph, kappa);
  check_palette(kappa, palette);
  if (!in_L(m.graph, kappa, a - 1)) throw WrongClass("cycle inverse needs a coloring in L_{" + std::to_string(a - 1) + "," + std::to_string(a) + "}");
  Coloring out = kappa;
  for (int& c : out) ++c;
  mirror_marked_upper(m.geometry, out, palette + 1);
  for (int& c : out) c = c == palette + 1 ? 1 : c;
  return out;
}

Coloring reflect_map(const Mountain& m, const Coloring& kappa, int palette) {
  return reflect_onto(m, mixed_mountain(m.geometry.spec.reversed()), kappa, palette);
}

int special_vertex(const std::vector<int>& u_colors, const std::vector<int>& w_colors, int v_color) {
  if (w_colors.size() != u_colors.size() + 1) throw MalformedInput("W needs exactly one more upper color than U");
  auto distinct = [&](const std::vector<int>& xs) {
    std::vector<int> s = xs;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end() && !std::binary_search(s.begin(), s.end(), v_color);
  };
  if (!distinct(u_colors) || !distinct(w_colors)) throw MalformedInput("upper colors must be distinct and differ from v");
  struct Entry {
    int color;
    bool from_w;
    int index;
  };
  std::vector<Entry> small, large;
  for (int i = 0; i < static_cast<int>(u_colors.size()); ++i) {
    (u_colors[i] < v_color ? small : large).push_back({u_colors[i], false, i});
  }
  int small_w = 0;
  for (int i = 0; i < static_cast<int>(w_colors.size()); ++i) {
    (w_colors[i] < v_color ? small : large).push_back({w_colors[i], true, i});
    small_w += w_colors[i] < v_color;
  }
  int small_u = static_cast<int>(small.size()) - small_w;
  std::vector<Entry> list;
  if (small_u < small_w) {
    list = small;
    std::sort(list.begin(), list.end(), [](const Entry& x, const Entry& y) {
      return x.color != y.color ? x.color > y.color : !x.from_w && y.from_w;
    });
  } else {
    list = large;
    std::sort(list.begin(), list.end(), [](const Entry& x, const Entry& y) {
      return x.color != y.color ? x.color < y.color : !x.from_w && y.from_w;
    });
  }
  int open = 0;
  for (const auto& e : list) {
    if (!e.from_w) ++open;
    else if (open > 0) --open;
    else return e.index;
  }
  throw InternalInconsistency("no unpaired W entry");
}

Coloring swap_map(const Mountain& m, int clique, const Coloring& kappa) {
  check_swap_site(m, clique);
  return swap_onto(m, swap_graph(m, clique), clique, kappa);
}

int phi_stat(const OrientedGraph& g, Vertex v) {
  PosetClosure p(g);
  int s = 0;
  for (VertexMask b = p.below(v); b; b &= b - 1) s += g.in_mask(__builtin_ctzll(b) + 1) != 0;
  return s;
}

PhiSetup phi_setup(const OrientedGraph& g) {
  if (!g.is_connected()) throw PreconditionViolation("phi needs a connected DAG");
  auto ss = sources_and_sinks(g);
  PhiSetup st;
  st.a = static_cast<int>(ss.sources.size());
  if (st.a < 2) throw PreconditionViolation("phi needs at least two sources");
  if (static_cast<int>(max_antichain(g).size()) != st.a) {
    throw PreconditionViolation("largest antichain is bigger than the source set");
  }
  PosetClosure p(g);
  VertexMask src = 0;
  for (Vertex s : ss.sources) src |= bit(s);
  int best = g.n() + 1;
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (std::popcount(p.below(v) & src) < 2) continue;
    st.s_vertices.push_back(v);
    int stat = std::popcount(p.below(v) & ~src);
    if (stat < best) {
      best = stat;
      st.witness_vertex = v;
    }
  }
  if (st.s_vertices.empty()) throw PreconditionViolation("S(G) is empty");
  st.k = best + 1;
  bool have = false;
  if (ss.sources.size() == ss.sinks.size()) {
    try {
      st.chains = source_sink_chain_cover(g);
      have = true;
    } catch (const ChainCoverNotFound&) {
    }
  }
  if (!have) st.chains = min_chain_cover(g);
  if (static_cast<int>(st.chains.size()) != st.a) throw InternalInconsistency("chain cover size differs from source count");
  const int n = g.n();
  std::vector<int> dom(st.k, 1), tgt{st.a};
  dom.push_back(st.a);
  dom.resize(n - st.a + 1, 1);
  tgt.resize(n - st.a + 1, 1);
  st.domain_weight = Composition(dom);
  st.target_weight = Composition(tgt);
  return st;
}

Coloring phi(const OrientedGraph& g, const PhiSetup& st, const Coloring& kappa) {
  check_proper(g, kappa);
  if (Composition(weight(kappa)) != st.domain_weight || ascent_count(g, kappa) != g.num_edges()) {
    throw WrongClass("phi needs weight " + st.domain_weight.to_string() + " with every edge ascending");
  }
  Coloring out = kappa;
  for (const auto& chain : st.chains.chains) {
    bool has_one = false;
    for (Vertex v : chain) has_one = has_one || color(kappa, v) == 1;
    if (has_one) continue;
    std::vector<int> cols;
    bool found = false;
    for (Vertex v : chain) {
      int c = color(kappa, v);
      if (c == st.k + 1 && !found) {
        c = 1;
        found = true;
      }
      cols.push_back(c);
    }
    if (!found) throw InternalInconsistency("chain without a vertex colored k+1");
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) throw InternalInconsistency("repeated color in a chain");
    for (std::size_t i = 0; i < chain.size(); ++i) out[chain[i] - 1] = cols[i];
  }
  return out;
}

Coloring phi_non_image_witness(const OrientedGraph& g, const PhiSetup& st) {
  const int n = g.n();
  auto lab = g.natural_relabeling();
  std::vector<Vertex> order(n);
  for (Vertex v = 1; v <= n; ++v) order[lab[v - 1] - 1] = v;
  PosetClosure p(g);
  Vertex w = st.witness_vertex;
  Coloring out(n, 0);
  int next = 2;
  for (Vertex v : order) {
    if (!g.in_mask(v)) out[v - 1] = 1;
    else if (p.less(v, w)) out[v - 1] = next++;
  }
  if (next != st.k + 1) throw InternalInconsistency("witness down-set has the wrong size");
  out[w - 1] = next++;
  for (Vertex v : order) {
    if (!out[v - 1]) out[v - 1] = next++;
  }
  return out;
}

bool l_automorphism_applies(const MountainSpec& spec) {
  auto t = spec.tags();
  return t.find("bf") == std::string::npos;
}

Coloring l_automorphism(const Mountain& m, const Coloring& kappa, int a, int palette) {
  return LAutoPlan(m).apply(kappa, a, palette);
}

std::uint64_t encode(const Coloring& kappa) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < kappa.size(); ++i) code |= static_cast<std::uint64_t>(kappa[i]) << (4 * i);
  return code;
}

Coloring decode(std::uint64_t code, int n) {
  Coloring k(n);
  for (int i = 0; i < n; ++i) k[i] = static_cast<int>(code >> (4 * i) & 15);
  return k;
}

BigInt palette_coloring_count(const OrientedGraph& g, int palette) {
  BigInt total = 0;
  auto f = cqf(g);
  for (const auto& [alpha, c] : f.terms()) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), palette, alpha.length());
    total += b * c.at_one();
  }
  return total;
}

MapId map_id_from_string(const std::string& s) {
  if (s == "psi") return MapId::Psi;
  if (s == "cycle") return MapId::Cycle;
  if (s == "reflect") return MapId::Reflect;
  if (s == "swap") return MapId::Swap;
  if (s == "phi") return MapId::Phi;
  if (s == "l-auto") return MapId::LAuto;
  throw InvalidArgument("unknown map '" + s + "' (psi, cycle, reflect, swap, phi, l-auto)");
}

std::string to_string(MapId id) {
  switch (id) {
    case MapId::Psi: return "psi";
    case MapId::Cycle: return "cycle";
    case MapId::Reflect: return "reflect";
    case MapId::Swap: return "swap";
    case MapId::Phi: return "phi";
    case MapId::LAuto: return "l-auto";
  }
  return "";
}

Json to_json(const MapReport& r) {
  return Json{{"map", r.map},
              {"graph", r.graph},
              {"palette", r.palette},
              {"a", r.a},
              {"domain_size", r.domain_size},
              {"image_size", r.image_size},
              {"target_size", r.target_size},
              {"proper", r.proper},
              {"ascent_preserved", r.ascent_preserved},
              {"in_target_class", r.in_target_class},
              {"content_ok", r.content_ok},
              {"content_effect", r.content_effect},
              {"injective", r.injective},
              {"surjective", r.surjective},
              {"round_trip", r.round_trip},
              {"non_image_found", r.non_image_found},
              {"counterexamples", r.counterexamples},
              {"passed", r.passed()}};
}

namespace {

std::vector<int> padded_weight(const Coloring& kappa, int palette) {
  auto w = weight(kappa);
  w.resize(palette, 0);
  return w;
}

class Harness {
 public:
  explicit Harness(MapReport& r) : r_(r) {}

  void fail(bool& flag, const std::string& what) {
    flag = false;
    if (r_.counterexamples.size() < 10) r_.counterexamples.push_back(what);
  }

  // Collects images and checks the per-coloring properties.
  template <class Map, class InTarget, class Content>
  std::vector<std::uint64_t> run(const OrientedGraph& src, const OrientedGraph& dst, const std::vector<Coloring>& domain,
                                 Map&& f, InTarget&& in_target, Content&& content) {
    std::vector<std::uint64_t> images;
    images.reserve(domain.size());
    for (const auto& kappa : domain) {
      Coloring img;
      try {
        img = f(kappa);
      } catch (const Error& e) {
        fail(r_.proper, show(kappa) + ": " + e.what());
        continue;
      }
      try {
        check_proper(dst, img);
      } catch (const ImproperColoring&) {
        fail(r_.proper, show(kappa) + " -> improper " + show(img));
        continue;
      }
      if (ascent_count(dst, img) != ascent_count(src, kappa)) {
        fail(r_.ascent_preserved, show(kappa) + " -> " + show(img) + " changes the ascent count");
      }
      if (!in_target(img)) fail(r_.in_target_class, show(kappa) + " -> " + show(img) + " leaves the target class");
      if (!content(kappa, img)) fail(r_.content_ok, show(kappa) + " -> " + show(img) + " has the wrong content");
      images.push_back(encode(img));
    }
    std::sort(images.begin(), images.end());
    std::size_t before = images.size();
    images.erase(std::unique(images.begin(), images.end()), images.end());
    r_.image_size = images.size();
    if (images.size() != before) fail(r_.injective, "two colorings share an image");
    return images;
  }

  void compare_target(const std::vector<std::uint64_t>& images, std::vector<std::uint64_t> target, bool expect_onto) {
    std::sort(target.begin(), target.end());
    r_.target_size = target.size();
    r_.surjective = images == target;
    if (expect_onto && !r_.surjective) {
      if (r_.counterexamples.size() < 10) r_.counterexamples.push_back("image differs from the target class");
    }
  }

 private:
  MapReport& r_;
};

std::vector<Coloring> palette_colorings(const OrientedGraph& g, int palette, const std::function<bool(const Coloring&)>& keep) {
  std::vector<Coloring> out;
  for_each_palette_coloring(g, palette, [&](const Coloring& k) {
    if (keep(k)) out.push_back(k);
  });
  return out;
}

std::vector<std::uint64_t> codes(const std::vector<Coloring>& ks) {
  std::vector<std::uint64_t> c;
  c.reserve(ks.size());
  for (const auto& k : ks) c.push_back(encode(k));
  return c;
}

}  // namespace

MapReport verify_map(MapId id, const Mountain& m, const VerifyParams& params) {
  if (id == MapId::Phi) return verify_phi(m.graph, params.max_colorings);
  const auto& g = m.graph;
  const int n = g.n();
  const int a = params.a;
  const int N = params.palette ? params.palette : std::max({m.geometry.spec.k + 1, a + 1, 3});
  if (n > 16 || N > 15) throw SizeGuard("colorings are packed for n <= 16 and palettes <= 15");
  if (a < 1 || a + 1 > N) throw InvalidA("need 1 <= a < palette");
  BigInt total = palette_coloring_count(g, N);
  if (total > BigInt(static_cast<unsigned long>(params.max_colorings))) {
    throw SizeGuard(std::to_string(n) + "-vertex mountain has " + total.get_str() + " colorings with palette " +
                    std::to_string(N) + ", above the bound " + std::to_string(params.max_colorings));
  }
  MapReport r;
  r.map = to_string(id);
  r.graph = m.geometry.spec.tags() + " k=" + std::to_string(m.geometry.spec.k);
  r.palette = N;
  r.a = a;
  Harness h(r);
  auto swap_content = [&](int x) {
    return [x, N](const Coloring& k, const Coloring& img) {
      auto w = padded_weight(k, N), v = padded_weight(img, N);
      std::swap(w[x - 1], w[x]);
      return w == v;
    };
  };
  auto inK = [&](int x) { return [&g, x](const Coloring& k) { return in_K(g, k, x); }; };
  auto inL = [&](int x) { return [&g, x](const Coloring& k) { return in_L(g, k, x); }; };

  switch (id) {
    case MapId::Psi: {
      auto domain = palette_colorings(g, N, inK(a));
      r.domain_size = domain.size();
      r.content_effect = "exchanges the multiplicities of " + std::to_string(a) + " and " + std::to_string(a + 1);
      auto f = [&](const Coloring& k) { return psi(m, k, a); };
      auto img = h.run(g, g, domain, f, inK(a), swap_content(a));
      for (const auto& k : domain) {
        try {
          if (psi(m, psi(m, k, a), a) != k) h.fail(r.round_trip, show(k) + ": psi is not an involution here");
        } catch (const Error& e) {
          h.fail(r.round_trip, show(k) + ": round trip threw: " + e.what());
        }
      }
      h.compare_target(img, codes(domain), true);
      break;
    }
    case MapId::Cycle: {
      if (a < 2) throw InvalidA("cycle needs a > 1");
      auto domain = palette_colorings(g, N, inL(a));
      r.domain_size = domain.size();
      r.content_effect = "rotates the content (c_1..c_N) to (c_2..c_N, c_1)";
      auto f = [&](const Coloring& k) { return cycle_map(m, k, a, N); };
      auto content = [N](const Coloring& k, const Coloring& img) {
        auto w = padded_weight(k, N), v = padded_weight(img, N);
        std::rotate(w.begin(), w.begin() + 1, w.end());
        return w == v;
      };
      auto img = h.run(g, g, domain, f, inL(a - 1), content);
      for (const auto& k : domain) {
        try {
          if (cycle_inverse(m, cycle_map(m, k, a, N), a, N) != k) h.fail(r.round_trip, show(k) + ": inverse does not recover");
        } catch (const Error& e) {
          h.fail(r.round_trip, show(k) + ": round trip threw: " + e.what());
        }
      }
      h.compare_target(img, codes(palette_colorings(g, N, inL(a - 1))), true);
      break;
    }
    case MapId::Reflect: {
      r.a = 1;
      Mountain rev = mixed_mountain(m.geometry.spec.reversed());
      const auto& rg = rev.graph;
      auto domain = palette_colorings(g, N, inL(1));
      r.domain_size = domain.size();
      r.content_effect = "exchanges c_1 and c_2 and reverses c_3..c_N";
      auto f = [&](const Coloring& k) { return reflect_onto(m, rev, k, N); };
      auto content = [N](const Coloring& k, const Coloring& img) {
        auto w = padded_weight(k, N), v = padded_weight(img, N);
        std::swap(w[0], w[1]);
        std::reverse(w.begin() + 2, w.end());
        return w == v;
      };
      auto in_rev = [&rg](const Coloring& k) { return in_L(rg, k, 1); };
      auto img = h.run(g, rg, domain, f, in_rev, content);
      for (const auto& k : domain) {
        try {
          if (reflect_onto(rev, m, reflect_onto(m, rev, k, N), N) != k) h.fail(r.round_trip, show(k) + ": reflecting back does not recover");
        } catch (const Error& e) {
          h.fail(r.round_trip, show(k) + ": round trip threw: " + e.what());
        }
      }
      h.compare_target(img, codes(palette_colorings(rg, N, in_rev)), true);
      break;
    }
    case MapId::Swap: {
      int s = params.clique;
      if (s < 0) {
        auto tags = m.geometry.spec.tags();
        auto pos = tags.find("fb");
        if (pos == std::string::npos) throw InvalidSwapSite("spec " + tags + " has no full/bottomless pair");
        s = static_cast<int>(pos);
      }
      check_swap_site(m, s);
      r.a = 0;
      r.graph += " site=" + std::to_string(s);
      Mountain tgt = swap_graph(m, s);
      auto domain = palette_colorings(g, N, [](const Coloring&) { return true; });
      r.domain_size = domain.size();
      r.content_effect = "preserves the content";
      auto f = [&](const Coloring& k) { return swap_onto(m, tgt, s, k); };
      auto content = [N](const Coloring& k, const Coloring& img) { return padded_weight(k, N) == padded_weight(img, N); };
      auto img = h.run(g, tgt.graph, domain, f, [](const Coloring&) { return true; }, content);
      h.compare_target(img, codes(palette_colorings(tgt.graph, N, [](const Coloring&) { return true; })), true);
      break;
    }
    case MapId::LAuto: {
      LAutoPlan plan(m);
      auto domain = palette_colorings(g, N, inL(a));
      r.domain_size = domain.size();
      r.content_effect = "exchanges the multiplicities of " + std::to_string(a) + " and " + std::to_string(a + 1);
      auto f = [&](const Coloring& k) { return plan.apply(k, a, N); };
      auto img = h.run(g, g, domain, f, inL(a), swap_content(a));
      h.compare_target(img, codes(domain), true);
      break;
    }
    case MapId::Phi:
      break;
  }
  return r;
}

MapReport verify_phi(const OrientedGraph& g, std::size_t max_colorings) {
  auto st = phi_setup(g);
  const int n = g.n();
  if (n > 16) throw SizeGuard("colorings are packed for n <= 16");
  // Weight classes hold at most n!/a! colorings.
  BigInt bound = 1;
  for (int i = st.a + 1; i <= n; ++i) bound *= i;
  if (bound > BigInt(static_cast<unsigned long>(max_colorings))) {
    throw SizeGuard("phi weight classes may exceed " + std::to_string(max_colorings) + " colorings");
  }
  MapReport r;
  r.map = "phi";
  r.graph = to_json(g).dump();
  r.palette = static_cast<int>(st.target_weight.length());
  r.a = st.a;
  r.content_effect = "weight " + st.domain_weight.to_string() + " -> " + st.target_weight.to_string();
  r.round_trip = true;
  Harness h(r);
  std::vector<Coloring> domain, target;
  for_each_coloring(g, st.domain_weight, [&](const Coloring& k, int asc) {
    if (asc == g.num_edges()) domain.push_back(k);
    return true;
  });
  for_each_coloring(g, st.target_weight, [&](const Coloring& k, int asc) {
    if (asc == g.num_edges()) target.push_back(k);
    return true;
  });
  r.domain_size = domain.size();
  ColoringClass tc{ClassTag::MaxAscentWeight, 1, st.target_weight};
  auto in_target = [&](const Coloring& k) { return tc.contains(g, k); };
  auto content = [&](const Coloring&, const Coloring& img) { return Composition(weight(img)) == st.target_weight; };
  auto img = h.run(g, g, domain, [&](const Coloring& k) { return phi(g, st, k); }, in_target, content);
  h.compare_target(img, codes(target), false);
  if (r.surjective) {
    if (r.counterexamples.size() < 10) r.counterexamples.push_back("phi is surjective");
  }
  auto w = phi_non_image_witness(g, st);
  bool w_ok = in_target(w);
  try {
    check_proper(g, w);
  } catch (const ImproperColoring&) {
    w_ok = false;
  }
  r.non_image_found = w_ok && !std::binary_search(img.begin(), img.end(), encode(w));
  if (!r.non_image_found) r.counterexamples.push_back("witness " + show(w) + " is not a non-image element");
  return r;
}

}  // namespace cqsym
