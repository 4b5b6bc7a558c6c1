#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cqsym/bijections.hpp"
#include "oracles.hpp"

using namespace cqsym;

namespace {

// Every map V -> {1..palette}, proper or not; callers filter.
template <class F>
void all_maps(int n, int palette, F&& f) {
  std::vector<int> k(n, 1);
  while (true) {
    f(k);
    int i = 0;
    while (i < n && k[i] == palette) k[i++] = 1;
    if (i == n) break;
    ++k[i];
  }
}

bool proper(const OrientedGraph& g, const std::vector<int>& k) {
  for (auto [u, v] : g.edges())
    if (k[u - 1] == k[v - 1]) return false;
  return true;
}

int asc(const OrientedGraph& g, const std::vector<int>& k) {
  int a = 0;
  for (auto [u, v] : g.edges()) a += k[u - 1] < k[v - 1];
  return a;
}

std::vector<int> content(const std::vector<int>& k, int palette) {
  std::vector<int> c(palette, 0);
  for (int x : k) ++c[x - 1];
  return c;
}

std::vector<Coloring> proper_colorings(const OrientedGraph& g, int palette) {
  std::vector<Coloring> out;
  all_maps(g.n(), palette, [&](const std::vector<int>& k) {
    if (proper(g, k)) out.push_back(k);
  });
  return out;
}

bool bottom_pair(const std::vector<int>& k, int a) {
  int x = k.front(), y = k.back();
  return (x == a && y == a + 1) || (x == a + 1 && y == a);
}

Mountain spec(const std::string& tags, int k) { return mixed_mountain(MountainSpec::parse(tags, k)); }

}  // namespace

TEST_CASE("colored subgraph components") {
  auto edge = mountain(2, 2);
  CHECK(colored_subgraph_components(edge, {3, 4, 5}, 1).empty());
  auto m23 = mountain(2, 3);
  for (const auto& k : proper_colorings(m23.graph, 5)) {
    for (int a = 1; a <= 4; ++a) {
      auto comps = colored_subgraph_components(m23, k, a);
      int covered = 0;
      for (const auto& c : comps) {
        covered += static_cast<int>(c.vertices.size());
        if (!c.cycle) {
          for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) CHECK(m23.graph.adjacent(c.vertices[i], c.vertices[i + 1]));
        } else {
          CHECK(bottom_pair(k, a));
          CHECK(c.vertices.size() == 3u);
        }
      }
      int expected = 0;
      for (int x : k) expected += x == a || x == a + 1;
      CHECK(covered == expected);
    }
  }
  // Two vertices colored a, a+1 joined by an edge form one path.
  auto two = colored_subgraph_components(spec("bb", 3), {3, 1, 2, 4, 5, 6, 7}, 1);
  REQUIRE(two.size() == 1);
  CHECK(two[0].vertices == std::vector<Vertex>{2, 3});
}

TEST_CASE("psi") {
  auto m = mountain(2, 3);
  // Vertex 3 colored 1 is isolated among colors {1, 2}: recolored 2.
  CHECK(psi(m, {3, 4, 1, 5, 6}, 1) == Coloring{3, 4, 2, 5, 6});
  // Even path 2-3 colored (1, 2) stays.
  CHECK(psi(m, {3, 1, 2, 4, 5}, 1) == Coloring{3, 1, 2, 4, 5});
  CHECK_THROWS_AS(psi(m, {1, 3, 4, 5, 2}, 1), WrongClass);
  for (const auto& k : proper_colorings(m.graph, 7)) {
    for (int a = 1; a <= 6; ++a) {
      if (bottom_pair(k, a)) continue;
      auto img = psi(m, k, a);
      CHECK(psi(m, img, a) == k);
      CHECK(proper(m.graph, img));
      CHECK(asc(m.graph, img) == asc(m.graph, k));
      auto c = content(k, 7), d = content(img, 7);
      std::swap(c[a - 1], c[a]);
      CHECK(c == d);
    }
  }
}

TEST_CASE("cycle maps L_{2,3} into L_{1,2} and inverts") {
  auto m = mountain(2, 3);
  const int N = 7;
  std::set<Coloring> images;
  int domain = 0;
  for (const auto& k : proper_colorings(m.graph, N)) {
    if (!bottom_pair(k, 2)) continue;
    ++domain;
    auto img = cycle_map(m, k, 2, N);
    CHECK(bottom_pair(img, 1));
    CHECK(proper(m.graph, img));
    CHECK(asc(m.graph, img) == asc(m.graph, k));
    CHECK(cycle_inverse(m, img, 2, N) == k);
    images.insert(img);
  }
  int target = 0;
  for (const auto& k : proper_colorings(m.graph, N)) target += bottom_pair(k, 1);
  CHECK(domain > 0);
  CHECK(static_cast<int>(images.size()) == domain);
  CHECK(domain == target);
  CHECK_THROWS_AS(cycle_map(m, {1, 3, 4, 5, 2}, 1, N), InvalidA);
  CHECK_THROWS_AS(cycle_map(m, {1, 3, 4, 5, 2}, 2, N), WrongClass);
}

TEST_CASE("reflect") {
  const int N = 7;
  auto m = mountain(2, 3);
  for (const auto& k : proper_colorings(m.graph, N)) {
    if (!bottom_pair(k, 1)) continue;
    auto img = reflect_map(m, k, N);
    CHECK(bottom_pair(img, 1));
    CHECK(reflect_map(m, img, N) == k);
    CHECK(asc(m.graph, img) == asc(m.graph, k));
  }
  auto b = bottomless_mountain(2, 3);
  int checked = 0;
  for (const auto& k : proper_colorings(b.graph, 6)) {
    if (!bottom_pair(k, 1)) continue;
    auto img = reflect_map(b, k, 6);
    CHECK(proper(b.graph, img));
    CHECK(asc(b.graph, img) == asc(b.graph, k));
    ++checked;
  }
  CHECK(checked > 0);
  // Mixed: lands on the reversed spec and reflects back.
  auto fb = spec("fb", 3), bf = spec("bf", 3);
  for (const auto& k : proper_colorings(fb.graph, 5)) {
    if (!bottom_pair(k, 1)) continue;
    auto img = reflect_map(fb, k, 5);
    CHECK(proper(bf.graph, img));
    CHECK(asc(bf.graph, img) == asc(fb.graph, k));
    CHECK(reflect_map(bf, img, 5) == k);
  }
}

TEST_CASE("special vertex") {
  // U uppers (7,3,9,6), v colored 5, W uppers (1,8,3,9,4): w5 (index 4).
  CHECK(special_vertex({7, 3, 9, 6}, {1, 8, 3, 9, 4}, 5) == 4);
  // No small U entries: the largest small W entry is first and unpaired.
  CHECK(special_vertex({7}, {1, 3}, 5) == 1);
  CHECK_THROWS_AS(special_vertex({1, 2}, {3, 4}, 5), MalformedInput);
  CHECK_THROWS_AS(special_vertex({1}, {3, 3}, 5), MalformedInput);
  CHECK_THROWS_AS(special_vertex({5}, {3, 4}, 5), MalformedInput);
  // Exactly one branch applies, and the result lies on that side of v.
  for (int k = 3; k <= 4; ++k) {
    const int colors = 8;
    all_maps(k - 2, colors, [&](const std::vector<int>& uu) {
      all_maps(k - 1, colors, [&](const std::vector<int>& ww) {
        for (int v = 1; v <= colors; ++v) {
          std::set<int> su(uu.begin(), uu.end()), sw(ww.begin(), ww.end());
          if (su.size() != uu.size() || sw.size() != ww.size() || su.count(v) || sw.count(v)) continue;
          int su_n = 0, sw_n = 0, lu_n = 0, lw_n = 0;
          for (int x : uu) (x < v ? su_n : lu_n)++;
          for (int x : ww) (x < v ? sw_n : lw_n)++;
          CHECK((su_n < sw_n) != (lu_n < lw_n));
          int i = special_vertex(uu, ww, v);
          CHECK((ww[i] < v) == (su_n < sw_n));
        }
      });
    });
  }
}

TEST_CASE("swap preserves content and ascents bijectively") {
  for (int k = 3; k <= 4; ++k) {
    auto fb = spec("fb", k);
    auto bf = swap_graph(fb, 0);
    const int N = k == 3 ? 6 : 5;
    std::map<std::pair<std::vector<int>, int>, int> src, dst;
    std::set<Coloring> images;
    auto all = proper_colorings(fb.graph, N);
    for (const auto& c : all) {
      auto img = swap_map(fb, 0, c);
      CHECK(proper(bf.graph, img));
      CHECK(asc(bf.graph, img) == asc(fb.graph, c));
      CHECK(content(img, N) == content(c, N));
      images.insert(img);
      ++src[{content(c, N), asc(fb.graph, c)}];
    }
    for (const auto& c : proper_colorings(bf.graph, N)) ++dst[{content(c, N), asc(bf.graph, c)}];
    CHECK(images.size() == all.size());
    CHECK(src == dst);
  }
  CHECK_THROWS_AS(swap_map(spec("bf", 3), 0, Coloring(6, 1)), InvalidSwapSite);
  CHECK_THROWS_AS(swap_map(spec("fb", 3), 0, Coloring(6, 1)), ImproperColoring);
}

TEST_CASE("phi") {
  OrientedGraph fig2(3, {{1, 3}, {2, 3}});
  auto st = phi_setup(fig2);
  CHECK(st.a == 2);
  CHECK(st.s_vertices == std::vector<Vertex>{3});
  CHECK(phi_stat(fig2, 3) == 0);
  CHECK(st.k == 1);
  CHECK(st.domain_weight == Composition{1, 2});
  CHECK(st.target_weight == Composition{2, 1});
  auto r = verify_phi(fig2);
  CHECK(r.domain_size == 0);
  CHECK(r.target_size == 1);
  CHECK(r.injective);
  CHECK_FALSE(r.surjective);
  CHECK(r.non_image_found);

  // Chains {1,3} and {2,4} with a cross edge 1 -> 4. A chain holding color 1
  // is untouched.
  OrientedGraph g(4, {{1, 3}, {1, 4}, {2, 4}});
  auto s = phi_setup(g);
  REQUIRE(s.k == 1);
  CHECK(phi(g, s, {1, 2, 2, 3}) == Coloring{1, 1, 2, 3});
  for_each_coloring(g, s.domain_weight, [&](const Coloring& k, int a) {
    if (a != g.num_edges()) return true;
    auto img = phi(g, s, k);
    for (const auto& chain : s.chains.chains) {
      bool has_one = false;
      for (Vertex v : chain) has_one = has_one || k[v - 1] == 1;
      if (has_one)
        for (Vertex v : chain) CHECK(img[v - 1] == k[v - 1]);
    }
    return true;
  });

  CHECK_THROWS_AS(phi_setup(OrientedGraph(3, {{1, 2}, {2, 3}})), PreconditionViolation);
  CHECK_THROWS_AS(phi_setup(OrientedGraph(4, {{1, 3}, {2, 4}})), PreconditionViolation);

  // Non-image witness for every connected DAG with two or more sources on
  // at most 5 vertices whose largest antichain is its source set.
  int checked = 0;
  for (int n = 3; n <= 5; ++n) {
    for (const auto& h : oracle::connected_dag_classes(n)) {
      auto ss = sources_and_sinks(h);
      if (ss.sources.size() < 2 || static_cast<std::size_t>(oracle::max_antichain_size(h)) != ss.sources.size()) continue;
      auto rep = verify_phi(h);
      CHECK(rep.passed());
      CHECK(rep.injective);
      CHECK_FALSE(rep.surjective);
      CHECK(rep.non_image_found);
      // The witness colors the minimal S(G) vertex k+1, while every domain
      // coloring gives it a larger color.
      auto su = phi_setup(h);
      auto w = phi_non_image_witness(h, su);
      CHECK(w[su.witness_vertex - 1] == su.k + 1);
      CHECK(asc(h, w) == h.num_edges());
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("L-automorphism swaps content within L classes") {
  const int N = 5;
  for (auto m : {mountain(2, 3), bottomless_mountain(2, 3), spec("fb", 3)}) {
    auto all = proper_colorings(m.graph, N);
    for (int a = 1; a < N; ++a) {
      std::set<Coloring> images;
      int domain = 0;
      for (const auto& k : all) {
        if (!bottom_pair(k, a)) continue;
        ++domain;
        auto img = l_automorphism(m, k, a, N);
        CHECK(bottom_pair(img, a));
        CHECK(proper(m.graph, img));
        CHECK(asc(m.graph, img) == asc(m.graph, k));
        auto c = content(k, N), d = content(img, N);
        std::swap(c[a - 1], c[a]);
        CHECK(c == d);
        images.insert(img);
      }
      CHECK(static_cast<int>(images.size()) == domain);
    }
  }
  CHECK_THROWS_AS(l_automorphism(spec("bf", 3), Coloring(6, 1), 1, 4), PreconditionViolation);
}

TEST_CASE("psi and the L-automorphism together certify symmetry") {
  auto m = mountain(2, 3);
  const int N = 5;
  auto all = proper_colorings(m.graph, N);
  for (int a = 1; a < N; ++a) {
    std::map<std::pair<std::vector<int>, int>, int> before, after;
    for (const auto& k : all) {
      auto img = bottom_pair(k, a) ? l_automorphism(m, k, a, N) : psi(m, k, a);
      auto c = content(k, N);
      std::swap(c[a - 1], c[a]);
      ++before[{c, asc(m.graph, k)}];
      ++after[{content(img, N), asc(m.graph, img)}];
    }
    CHECK(before == after);
  }
  CHECK(is_symmetric(oracle::cqf(m.graph)));
}

TEST_CASE("verify_map reports") {
  auto r = verify_map(MapId::Psi, mountain(2, 2), {1, 0, -1, 10'000'000});
  CHECK(r.passed());
  CHECK(r.round_trip);
  CHECK(r.ascent_preserved);
  CHECK(r.injective);
  auto s = verify_map(MapId::Swap, spec("fb", 3), {});
  CHECK(s.passed());
  CHECK(s.injective);
  CHECK(s.surjective);
  for (auto id : {MapId::Cycle, MapId::Reflect, MapId::LAuto}) {
    auto x = verify_map(id, spec("ffb", 3), {2, 4, -1, 10'000'000});
    CHECK(x.passed());
    CHECK(x.domain_size > 0);
  }
  CHECK_THROWS_AS(verify_map(MapId::Psi, mountain(3, 4), {1, 10, -1, 1000}), SizeGuard);
  CHECK(map_id_from_string("l-auto") == MapId::LAuto);
  CHECK_THROWS_AS(map_id_from_string("nope"), InvalidArgument);
  CHECK(to_json(r)["passed"] == true);
}

TEST_CASE("palette coloring counts") {
  for (const auto& g : oracle::connected_dag_classes(4)) {
    for (int N = 1; N <= 4; ++N) {
      CHECK(palette_coloring_count(g, N) == oracle::chromatic_at(oracle::undirected(g), N));
      std::size_t c = 0;
      for_each_palette_coloring(g, N, [&](const Coloring&) { ++c; });
      CHECK(BigInt(static_cast<unsigned long>(c)) == palette_coloring_count(g, N));
    }
  }
  Coloring k{1, 15, 3};
  CHECK(decode(encode(k), 3) == k);
}
