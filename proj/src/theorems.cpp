#include "cqsym/theorems.hpp"

#include <atomic>
#include <thread>

#include "cqsym/cqf.hpp"
#include "cqsym/families.hpp"

namespace cqsym {

namespace {

struct Entry {
  OrientedGraph g;
  QSymElement f;
  bool symmetric = false;
};

std::vector<Entry> sweep(const std::vector<OrientedGraph>& graphs, int workers) {
  std::vector<Entry> out(graphs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < graphs.size();) {
      out[i].g = graphs[i];
      out[i].f = cqf(graphs[i]);
      out[i].symmetric = is_symmetric(out[i].f);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, workers); ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<OrientedGraph> connected_up_to(int max_n, bool unsafe_large) {
  std::vector<OrientedGraph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto d = all_connected_dags(n, unsafe_large);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

std::string show(const OrientedGraph& g) { return to_json(g).dump(); }

void note(TheoremReport& r, const std::string& s) {
  if (r.counterexamples.size() < 20) r.counterexamples.push_back(s);
}

bool naturally_oriented_cycle(const OrientedGraph& g) {
  auto s = sources_and_sinks(g);
  return s.sources.size() == 1 && s.sinks.size() == 1 && g.has_edge(s.sources[0], s.sinks[0]);
}

void check_symmetric_family(TheoremReport& r, const std::vector<std::pair<std::string, OrientedGraph>>& items, int workers) {
  std::vector<OrientedGraph> gs;
  for (const auto& [_, g] : items) gs.push_back(g);
  auto e = sweep(gs, workers);
  for (std::size_t i = 0; i < e.size(); ++i) {
    ++r.checked;
    if (!e[i].symmetric) note(r, items[i].first + " is not symmetric");
    else if (!is_e_positive(e[i].f)) note(r, items[i].first + " is not e-positive");
  }
}

}  // namespace

Json to_json(const TheoremReport& r) {
  return Json{{"id", r.id},
              {"statement", r.statement},
              {"checked", r.checked},
              {"counterexamples", r.counterexamples},
              {"passed", r.passed()}};
}

const std::vector<TheoremInfo>& theorem_catalog() {
  static const std::vector<TheoremInfo> c{
      {"lemma-rev", "X_G is symmetric iff X_{G^rev} is, and X_{G^rev}(q) = q^|E| X_G(1/q)", 5},
      {"lemma-sources-sinks", "different numbers of sources and sinks force a nonsymmetric CQF", 6},
      {"lemma-antichain", "an antichain larger than the source set forces a nonsymmetric CQF", 6},
      {"thm-qsym", "a product of CQFs is symmetric iff every factor is", 4},
      {"thm-dag", "connected DAGs with at least two sources have nonsymmetric CQFs", 6},
      {"cor-hampath", "a symmetric connected DAG has a directed Hamiltonian path", 6},
      {"cor-trees", "an oriented tree is symmetric iff it is a directed path", 7},
      {"cor-cycles", "an acyclic cycle orientation is symmetric iff it is naturally oriented", 7},
      {"thm-mountain", "mountain graphs have symmetric, e-positive CQFs", 0},
      {"thm-bottomless", "bottomless mountain graphs have symmetric, e-positive CQFs", 0},
      {"thm-mixed", "mixed mountain graphs have symmetric, e-positive CQFs", 0},
      {"thm-swap", "swapping a clique with the bottomless clique to its right keeps the CQF", 0},
  };
  return c;
}

TheoremReport verify_theorem(const std::string& id, const TheoremParams& params) {
  const TheoremInfo* info = nullptr;
  for (const auto& t : theorem_catalog())
    if (t.id == id) info = &t;
  if (!info) {
    std::string known;
    for (const auto& t : theorem_catalog()) known += (known.empty() ? "" : ", ") + t.id;
    throw UnknownTheorem("unknown theorem id '" + id + "' (known: " + known + ")");
  }
  TheoremReport r;
  r.id = id;
  r.statement = info->statement;
  const int max_n = params.max_n > 0 ? params.max_n : info->default_max_n;
  const int maxv = params.max_vertices;

  if (id == "lemma-rev" || id == "lemma-sources-sinks" || id == "lemma-antichain" || id == "thm-dag" ||
      id == "cor-hampath") {
    auto entries = sweep(connected_up_to(max_n, params.unsafe_large), params.workers);
    for (const auto& e : entries) {
      auto ss = sources_and_sinks(e.g);
      if (id == "lemma-rev") {
        ++r.checked;
        auto rev = reverse(e.g);
        if (!reversal_identity_check(e.g)) note(r, show(e.g) + ": reversal identity fails");
        if (is_symmetric(cqf(rev)) != e.symmetric) note(r, show(e.g) + ": reversal changes symmetry");
      } else if (id == "lemma-sources-sinks") {
        if (ss.sources.size() == ss.sinks.size()) continue;
        ++r.checked;
        if (e.symmetric) note(r, show(e.g) + " is symmetric");
      } else if (id == "lemma-antichain") {
        if (max_antichain(e.g).size() <= ss.sources.size()) continue;
        ++r.checked;
        if (e.symmetric) note(r, show(e.g) + " is symmetric");
      } else if (id == "thm-dag") {
        if (ss.sources.size() < 2) continue;
        ++r.checked;
        if (e.symmetric) note(r, show(e.g) + " is symmetric");
      } else {
        if (!e.symmetric) continue;
        ++r.checked;
        if (!is_total_order(e.g)) note(r, show(e.g) + " is symmetric without a Hamiltonian path");
      }
    }
  } else if (id == "thm-qsym") {
    auto entries = sweep(connected_up_to(max_n, false), params.workers);
    for (const auto& a : entries) {
      for (const auto& b : entries) {
        ++r.checked;
        bool prod = is_symmetric(quasi_shuffle(a.f, b.f));
        if (prod != (a.symmetric && b.symmetric)) note(r, show(a.g) + " x " + show(b.g));
      }
    }
  } else if (id == "cor-trees") {
    std::vector<OrientedGraph> trees;
    for (int n = 1; n <= max_n; ++n) {
      auto t = oriented_trees(n);
      trees.insert(trees.end(), t.begin(), t.end());
    }
    for (const auto& e : sweep(trees, params.workers)) {
      ++r.checked;
      if (e.symmetric != is_total_order(e.g)) note(r, show(e.g));
    }
  } else if (id == "cor-cycles") {
    std::vector<OrientedGraph> cycles;
    for (int n = 3; n <= max_n; ++n) {
      auto c = cycle_acyclic_orientations(n);
      cycles.insert(cycles.end(), c.begin(), c.end());
    }
    for (const auto& e : sweep(cycles, params.workers)) {
      ++r.checked;
      if (e.symmetric != naturally_oriented_cycle(e.g)) note(r, show(e.g));
    }
  } else if (id == "thm-mountain" || id == "thm-bottomless") {
    bool full = id == "thm-mountain";
    std::vector<std::pair<std::string, OrientedGraph>> items;
    for (int p = 2; p <= maxv; ++p) {
      for (int k = full ? 2 : 3; k <= maxv; ++k) {
        int n = full ? p * (k - 1) + 1 : 1 + p * k;
        if (n > maxv) continue;
        auto m = full ? mountain(p, k) : bottomless_mountain(p, k);
        items.emplace_back(m.geometry.spec.tags() + " k=" + std::to_string(k), m.graph);
      }
    }
    check_symmetric_family(r, items, params.workers);
  } else if (id == "thm-mixed") {
    std::vector<std::pair<std::string, OrientedGraph>> items;
    for (int n = 3; n <= maxv; ++n) {
      for (const auto& s : mixed_specs(n)) items.emplace_back(s.tags() + " k=" + std::to_string(s.k), mixed_mountain(s).graph);
    }
    check_symmetric_family(r, items, params.workers);
  } else if (id == "thm-swap") {
    std::vector<Mountain> ms;
    if (!params.spec.empty()) {
      ms.push_back(mixed_mountain(MountainSpec::parse(params.spec, params.k)));
    } else {
      for (int n = 3; n <= maxv; ++n)
        for (const auto& s : mixed_specs(n)) ms.push_back(mixed_mountain(s));
    }
    for (const auto& m : ms) {
      auto tags = m.geometry.spec.tags();
      for (std::size_t s = 0; s + 1 < tags.size(); ++s) {
        if (tags[s] != 'f' || tags[s + 1] != 'b') continue;
        ++r.checked;
        auto sw = swap_graph(m, static_cast<int>(s));
        if (cqf(m.graph) != cqf(sw.graph)) note(r, tags + " k=" + std::to_string(m.geometry.spec.k) + " site " + std::to_string(s));
      }
    }
  }
  return r;
}

}  // namespace cqsym
