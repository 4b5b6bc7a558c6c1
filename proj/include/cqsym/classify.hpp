#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cqsym/json_io.hpp"

namespace cqsym {

inline const std::string kTagUnitInterval = "unit-interval-relabeling";
inline const std::string kTagMixedMountain = "mixed-mountain";
inline const std::string kTagOther = "other";

struct ClassificationRecord {
  OrientedGraph graph;  // canonical form
  int n = 0;
  int num_edges = 0;
  bool symmetric = false;
  std::optional<bool> e_positive;   // iff symmetric
  std::optional<bool> palindromic;  // iff symmetric; centered at |E|/2
  std::vector<std::string> tags;
  std::optional<std::pair<Composition, Composition>> witness;  // iff not symmetric
};

Json to_json(const ClassificationRecord& r);
ClassificationRecord record_from_json(const Json& j);

// Canonical forms of the connected natural unit interval graphs and of every
// mixed mountain graph on n vertices.
class FamilyIndex {
 public:
  explicit FamilyIndex(int n);
  std::vector<std::string> tags(const OrientedGraph& canonical) const;

 private:
  std::set<OrientedGraph> unit_interval_, mixed_;
};

ClassificationRecord classify_graph(const OrientedGraph& g, const FamilyIndex& index);

// Hex SHA-256 of the canonical graph JSON.
std::string cache_key(const OrientedGraph& canonical);

// One record per file: <dir>/n<N>/<key>.json, written through a temporary
// file and an atomic rename.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::filesystem::path path_for(int n, const std::string& key) const;
  std::optional<std::string> load(int n, const std::string& key) const;
  void store(int n, const std::string& key, const std::string& text) const;

 private:
  std::filesystem::path dir_;
};

struct ClassifyOptions {
  int min_n = 1;
  int max_n = 6;
  int workers = 1;
  bool unsafe_large = false;  // allow n = 8
  std::optional<std::filesystem::path> cache_dir;
  int recheck_every = 0;  // recompute every r-th cache hit; 0 = never
};

struct ClassifySummary {
  std::size_t records = 0;
  std::size_t symmetric = 0;
  std::size_t symmetric_untagged = 0;
  std::size_t cache_hits = 0;
  std::size_t rechecked = 0;
  std::size_t recheck_mismatches = 0;
  std::vector<std::size_t> per_n_records;    // index n
  std::vector<std::size_t> per_n_symmetric;  // index n
};

// Emits one record per connected DAG up to isomorphism, in increasing n and
// canonical order, as compact JSON lines. Throws SizeGuard past n = 7 unless
// unsafe_large.
ClassifySummary classify_all(const ClassifyOptions& opt, const std::function<void(const std::string&)>& emit);

}  // namespace cqsym
