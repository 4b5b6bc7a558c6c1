#pragma once

#include <string>
#include <vector>

#include "cqsym/json_io.hpp"

namespace cqsym {

class UnknownTheorem : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct TheoremParams {
  int max_n = 0;         // 0: the per-theorem default
  int max_vertices = 10;  // bound for mountain families
  std::string spec;       // thm-swap: clique tags; empty sweeps every spec
  int k = 0;
  int workers = 1;
  bool unsafe_large = false;
};

struct TheoremReport {
  std::string id;
  std::string statement;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;
  bool passed() const { return counterexamples.empty() && checked > 0; }
};

Json to_json(const TheoremReport& r);

struct TheoremInfo {
  std::string id;
  std::string statement;
  int default_max_n;
};
const std::vector<TheoremInfo>& theorem_catalog();

TheoremReport verify_theorem(const std::string& id, const TheoremParams& params);

}  // namespace cqsym
