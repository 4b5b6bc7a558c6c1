#pragma once

#include <cstdint>
#include <vector>

#include "cqsym/composition.hpp"
#include "cqsym/graph.hpp"
#include "cqsym/qsym.hpp"

namespace cqsym {

// colors[v-1] is the color of vertex v; colors start at 1.
using Coloring = std::vector<int>;

// Throws ImproperColoring on a wrong length, a color < 1 or a monochromatic edge.
void check_proper(const OrientedGraph& g, const Coloring& kappa);
int ascent_count(const OrientedGraph& g, const Coloring& kappa);
// Multiplicities of colors 1..max color.
std::vector<int> weight(const Coloring& kappa);

// Calls visit(kappa, ascents) for every proper coloring of weight alpha, in
// lexicographic order of the color vector. Returning false from visit stops
// the enumeration.
template <class Visit>
void for_each_coloring(const OrientedGraph& g, const Composition& alpha, Visit&& visit);

QPoly coefficient(const OrientedGraph& g, const Composition& alpha);

// Full degree-n CQF. Runs a dynamic program over color classes (each class an
// independent set, each step adding the ascents from earlier classes), split
// across `workers` threads by the first part of the composition.
QSymElement cqf(const OrientedGraph& g, int workers = 1);
// Same element assembled from coefficient() over all compositions of n.
QSymElement cqf_by_enumeration(const OrientedGraph& g);

// Proper colorings of weight alpha in which every edge ascends. n <= 10.
std::vector<Coloring> max_ascent_colorings(const OrientedGraph& g, const Composition& alpha);

QSymElement cqf_disjoint_union(const std::vector<OrientedGraph>& parts);

// cqf(reverse(g)) == q^|E| cqf(g)(q^{-1}).
bool reversal_identity_check(const OrientedGraph& g);

template <class Visit>
void for_each_coloring(const OrientedGraph& g, const Composition& alpha, Visit&& visit) {
  const int n = g.n();
  if (alpha.weight() != n) {
    throw InvalidArgument("composition " + alpha.to_string() + " does not have weight " +
                          std::to_string(n));
  }
  const int k = alpha.length();
  std::vector<int> budget(alpha.parts());
  Coloring kappa(n, 0);
  bool stop = false;
  auto rec = [&](auto& self, Vertex v, int asc) -> void {
    if (v > n) {
      if (!visit(static_cast<const Coloring&>(kappa), asc)) stop = true;
      return;
    }
    VertexMask earlier = v == 1 ? 0 : (~VertexMask{0} >> (kMaxVertices - (v - 1)));
    VertexMask ins = g.in_mask(v) & earlier, outs = g.out_mask(v) & earlier;
    for (int c = 1; c <= k && !stop; ++c) {
      if (!budget[c - 1]) continue;
      int gained = 0;
      bool ok = true;
      for (VertexMask m = ins; m && ok; m &= m - 1) {
        int cu = kappa[__builtin_ctzll(m)];
        ok = cu != c;
        gained += cu < c;
      }
      for (VertexMask m = outs; m && ok; m &= m - 1) {
        int cu = kappa[__builtin_ctzll(m)];
        ok = cu != c;
        gained += c < cu;
      }
      if (!ok) continue;
      --budget[c - 1];
      kappa[v - 1] = c;
      self(self, v + 1, asc + gained);
      kappa[v - 1] = 0;
      ++budget[c - 1];
    }
  };
  rec(rec, 1, 0);
}

}  // namespace cqsym
