#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cqsym/cqf.hpp"
#include "cqsym/families.hpp"
#include "cqsym/json_io.hpp"

namespace cqsym {

class WrongClass : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidA : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class MalformedInput : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class PreconditionViolation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// The (a, a+1)-colored subgraph was neither a union of paths nor the cycle
// through the bottom edge.
class StructureViolation : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

enum class ClassTag { K, L, MaxAscentWeight };

// K_{a,a+1}: the (a,a+1)-colored subgraph avoids the bottom edge (1, n).
// L_{a,a+1}: it contains it. MaxAscentWeight: weight alpha and |E| ascents.
struct ColoringClass {
  ClassTag tag = ClassTag::K;
  int a = 1;
  Composition alpha;

  bool contains(const OrientedGraph& g, const Coloring& kappa) const;
  std::string to_string() const;
};

bool in_L(const OrientedGraph& g, const Coloring& kappa, int a);
inline bool in_K(const OrientedGraph& g, const Coloring& kappa, int a) { return !in_L(g, kappa, a); }

struct ColoredComponent {
  std::vector<Vertex> vertices;  // path order from the smaller end, or sorted for the cycle
  bool cycle = false;
};

std::vector<ColoredComponent> colored_subgraph_components(const Mountain& m, const Coloring& kappa, int a);

// Swaps a and a+1 on every odd component. kappa must lie in K_{a,a+1}.
Coloring psi(const Mountain& m, const Coloring& kappa, int a);

// L_{a,a+1} -> L_{a-1,a} with colors drawn from 1..palette. Color 1 becomes
// palette+1, the upper vertex carrying it moves from the i-th to the i-th
// from the right slot of its clique, then every color drops by one.
Coloring cycle_map(const Mountain& m, const Coloring& kappa, int a, int palette);
// L_{a-1,a} -> L_{a,a+1}.
Coloring cycle_inverse(const Mountain& m, const Coloring& kappa, int a, int palette);

// L_{1,2}(m) -> L_{1,2}(mixed_mountain(m.spec.reversed())). Mirrors the
// vertices, exchanges 1 and 2, maps x -> palette+3-x for x >= 3, then puts the
// upper 1/2 entries of every clique back in their original slots.
Coloring reflect_map(const Mountain& m, const Coloring& kappa, int palette);

// Index (0-based) of the special vertex among W's uppers. u_colors has k-2
// entries, w_colors k-1, neither containing v_color nor repeating.
int special_vertex(const std::vector<int>& u_colors, const std::vector<int>& w_colors, int v_color);

// Coloring of swap_graph(m, clique) for a proper coloring of m.
Coloring swap_map(const Mountain& m, int clique, const Coloring& kappa);

struct PhiSetup {
  int a = 0;  // number of sources
  int k = 0;
  ChainDecomposition chains;
  std::vector<Vertex> s_vertices;  // S(G)
  Vertex witness_vertex = 0;       // first vertex of S(G) with minimal stat
  Composition domain_weight;       // (1^k, a, 1^{n-k-a})
  Composition target_weight;       // (a, 1^{n-a})
};

// Requires a connected DAG with at least two sources whose largest antichain
// is its source set. Uses a source-sink chain cover when one exists, and a
// minimum chain cover otherwise. Throws PreconditionViolation.
PhiSetup phi_setup(const OrientedGraph& g);
int phi_stat(const OrientedGraph& g, Vertex v);
Coloring phi(const OrientedGraph& g, const PhiSetup& setup, const Coloring& kappa);
// A target coloring outside the image: sources 1, the nonsources below the
// witness vertex 2..k, the witness k+1, the rest above.
Coloring phi_non_image_witness(const OrientedGraph& g, const PhiSetup& setup);

// Ascent-preserving automorphism of L_{a,a+1} exchanging the multiplicities of
// a and a+1. The clique tags must be full cliques followed by bottomless ones.
Coloring l_automorphism(const Mountain& m, const Coloring& kappa, int a, int palette);
bool l_automorphism_applies(const MountainSpec& spec);

// Colors 1..15 packed four bits per vertex; n <= 16.
std::uint64_t encode(const Coloring& kappa);
Coloring decode(std::uint64_t code, int n);

// Every proper coloring with colors in 1..palette, in lexicographic order.
template <class Visit>
void for_each_palette_coloring(const OrientedGraph& g, int palette, Visit&& visit);
// Number of such colorings, from the CQF: sum of C(palette, len alpha) at q = 1.
BigInt palette_coloring_count(const OrientedGraph& g, int palette);

enum class MapId { Psi, Cycle, Reflect, Swap, Phi, LAuto };
MapId map_id_from_string(const std::string& s);
std::string to_string(MapId id);

struct VerifyParams {
  int a = 1;
  int palette = 0;  // 0: max(k + 1, a + 1, 3)
  int clique = -1;  // swap site; -1: first valid
  std::size_t max_colorings = 10'000'000;
};

struct MapReport {
  std::string map;
  std::string graph;
  int palette = 0;
  int a = 0;
  std::size_t domain_size = 0;
  std::size_t image_size = 0;
  std::size_t target_size = 0;
  bool proper = true;
  bool ascent_preserved = true;
  bool in_target_class = true;
  bool content_ok = true;
  bool injective = true;
  bool surjective = true;
  bool round_trip = true;  // involution or explicit inverse recovers the input
  bool non_image_found = false;
  std::string content_effect;
  std::vector<std::string> counterexamples;

  // Every property the map claims held.
  bool passed() const { return counterexamples.empty(); }
};

Json to_json(const MapReport& r);

MapReport verify_map(MapId id, const Mountain& m, const VerifyParams& params);
MapReport verify_phi(const OrientedGraph& g, std::size_t max_colorings = 10'000'000);

template <class Visit>
void for_each_palette_coloring(const OrientedGraph& g, int palette, Visit&& visit) {
  const int n = g.n();
  Coloring kappa(n, 0);
  auto rec = [&](auto& self, Vertex v) -> void {
    if (v > n) {
      visit(static_cast<const Coloring&>(kappa));
      return;
    }
    VertexMask earlier = v == 1 ? 0 : (~VertexMask{0} >> (kMaxVertices - (v - 1)));
    VertexMask nb = g.neighbor_mask(v) & earlier;
    for (int c = 1; c <= palette; ++c) {
      bool ok = true;
      for (VertexMask x = nb; x && ok; x &= x - 1) ok = kappa[__builtin_ctzll(x)] != c;
      if (!ok) continue;
      kappa[v - 1] = c;
      self(self, v + 1);
    }
    kappa[v - 1] = 0;
  };
  rec(rec, 1);
}

}  // namespace cqsym
