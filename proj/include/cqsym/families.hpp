#pragma once

#include <string>
#include <vector>

#include "cqsym/graph.hpp"

namespace cqsym {

class InvalidParams : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidSwapSite : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidFunction : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

enum class CliqueTag { Full, Bottomless };

// A full clique is a k-clique; a bottomless clique is a (k+1)-clique minus
// the edge between its two lower vertices.
struct MountainSpec {
  int k = 2;
  std::vector<CliqueTag> cliques;

  // "ffb" style: one letter per clique, f = full, b = bottomless.
  static MountainSpec parse(const std::string& tags, int k);
  std::string tags() const;
  int p() const { return static_cast<int>(cliques.size()); }
  int num_vertices() const;
  int num_full() const;
  // Throws InvalidParams.
  void validate() const;
  MountainSpec reversed() const;

  friend bool operator==(const MountainSpec&, const MountainSpec&) = default;
};

struct CliqueRange {
  CliqueTag tag;
  Vertex left;   // left lower vertex
  Vertex right;  // right lower vertex; uppers are left+1 .. right-1
  std::vector<Vertex> upper() const;
};

struct MountainGeometry {
  MountainSpec spec;
  int n = 0;
  std::vector<CliqueRange> cliques;
  std::vector<Vertex> lower;
  std::vector<Vertex> upper;
  Edge bottom{0, 0};

  // Index of the clique whose uppers contain v, or -1 for lower vertices.
  int clique_of_upper(Vertex v) const;
};

struct Mountain {
  OrientedGraph graph;
  MountainGeometry geometry;
};

// Vertices are labeled left to right; every clique's uppers sit strictly
// between its lower endpoints; the bottom edge is (1, n).
Mountain mixed_mountain(const MountainSpec& spec);
Mountain mountain(int p, int k);
Mountain bottomless_mountain(int p, int k);

// Exchanges the full clique at `clique` with the bottomless clique right
// after it. unswap_graph is the inverse (bottomless then full).
Mountain swap_graph(const Mountain& m, int clique);
Mountain unswap_graph(const Mountain& m, int clique);

// All valid specs with exactly n vertices (p >= 2).
std::vector<MountainSpec> mixed_specs(int n);

// Edges {(i, j) : i < j <= h(i)}; h nondecreasing with i <= h(i) <= n.
OrientedGraph natural_unit_interval(const std::vector<int>& h);
// Every valid h of length n, lexicographically. With connected_only, only
// those with h(i) > i for i < n.
std::vector<std::vector<int>> hessenberg_functions(int n, bool connected_only = false);

// Leaves 1..n-1 and center n; inward[i] orients leaf i+1 toward the center.
OrientedGraph oriented_star(int n, const std::vector<bool>& inward);
// Path on bits.size()+1 vertices; bit i orients i+1 -> i+2 when true.
OrientedGraph path_oriented(const std::vector<bool>& forward);

// Isomorphism classes (canonical forms, sorted).
std::vector<OrientedGraph> oriented_trees(int n);
std::vector<OrientedGraph> cycle_acyclic_orientations(int n);

// Every connected DAG on n vertices up to isomorphism, as sorted canonical
// forms. n <= 7 unless allow_large (n <= 8).
std::vector<OrientedGraph> all_connected_dags(int n, bool allow_large = false);
// Every DAG (connected or not) on n vertices up to isomorphism.
std::vector<OrientedGraph> all_dags(int n, bool allow_large = false);

}  // namespace cqsym
