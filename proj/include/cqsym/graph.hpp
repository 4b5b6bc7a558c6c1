#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cqsym/errors.hpp"

namespace cqsym {

// Vertices are labeled 1..n; an edge (u, v) is oriented u -> v.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline VertexMask bit(Vertex v) { return VertexMask{1} << (v - 1); }

// An acyclically oriented simple graph. Construction rejects self-loops,
// repeated or anti-parallel edges, and directed cycles, so every instance is
// a DAG. Edges are kept sorted lexicographically.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  OrientedGraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  VertexMask out_mask(Vertex v) const { return out_[v - 1]; }
  VertexMask in_mask(Vertex v) const { return in_[v - 1]; }
  VertexMask neighbor_mask(Vertex v) const { return out_[v - 1] | in_[v - 1]; }
  bool adjacent(Vertex u, Vertex v) const { return neighbor_mask(u) & bit(v); }
  bool has_edge(Vertex u, Vertex v) const { return out_mask(u) & bit(v); }

  // Every edge goes from a smaller to a larger label.
  bool is_natural() const;
  bool is_connected() const;
  // perm[v-1] is the new label of v.
  OrientedGraph relabeled(const std::vector<Vertex>& perm) const;
  // One natural relabeling (smallest available vertex first).
  std::vector<Vertex> natural_relabeling() const;

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  friend bool operator<(const OrientedGraph& a, const OrientedGraph& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.edges_ < b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> out_, in_;
};

// Strict order of the DAG viewed as a poset: u < v iff a directed path u -> v.
class PosetClosure {
 public:
  explicit PosetClosure(const OrientedGraph& g);

  int n() const { return static_cast<int>(above_.size()); }
  bool less(Vertex u, Vertex v) const { return above_[u - 1] & bit(v); }
  bool comparable(Vertex u, Vertex v) const { return less(u, v) || less(v, u); }
  VertexMask above(Vertex v) const { return above_[v - 1]; }
  VertexMask below(Vertex v) const { return below_[v - 1]; }
  std::vector<Edge> relation() const;

 private:
  std::vector<VertexMask> above_, below_;
};

struct ChainDecomposition {
  // Each chain lists its vertices in increasing poset order.
  std::vector<std::vector<Vertex>> chains;

  std::size_t size() const { return chains.size(); }
  // Disjoint, covering, and every chain totally ordered.
  bool valid_for(const OrientedGraph& g) const;
};

struct SourcesSinks {
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
};

SourcesSinks sources_and_sinks(const OrientedGraph& g);
OrientedGraph reverse(const OrientedGraph& g);
PosetClosure poset_closure(const OrientedGraph& g);

bool is_antichain(const PosetClosure& p, const std::vector<Vertex>& vs);
// Maximum antichain and minimum chain cover via maximum bipartite matching on
// the comparability relation (Dilworth/Konig).
std::vector<Vertex> max_antichain(const OrientedGraph& g);
ChainDecomposition min_chain_cover(const OrientedGraph& g);

class ChainCoverNotFound : public Error {
 public:
  using Error::Error;
};

// Minimum chain cover whose every chain holds exactly one source and one
// sink. Requires |sources| == |sinks| == |max antichain|; throws
// ChainCoverNotFound when no such cover exists.
ChainDecomposition source_sink_chain_cover(const OrientedGraph& g);
// The exhaustive search used when the matching-based cover does not qualify.
ChainDecomposition source_sink_chain_cover_exhaustive(const OrientedGraph& g);

// Canonical representative of the digraph-isomorphism class: among all
// natural relabelings, the one whose edge list sorted by (head, tail) is
// lexicographically minimal. Returned with edges in the usual (tail, head)
// order.
OrientedGraph canonical_form(const OrientedGraph& g);
// Reference implementation over every permutation; used as a test oracle.
OrientedGraph canonical_form_bruteforce(const OrientedGraph& g);

// Components of the underlying undirected graph, each relabeled 1..k keeping
// the relative order of the original labels. Ordered by smallest vertex.
std::vector<OrientedGraph> connected_components(const OrientedGraph& g);
OrientedGraph disjoint_union(const std::vector<OrientedGraph>& parts);

// Poset has a unique linear extension (a Hamiltonian directed path).
bool is_total_order(const OrientedGraph& g);

}  // namespace cqsym
