#include "cqsym/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cqsym/bijections.hpp"
#include "cqsym/classify.hpp"
#include "cqsym/cqf.hpp"
#include "cqsym/families.hpp"
#include "cqsym/theorems.hpp"

namespace cqsym {

namespace {

int to_int(const std::string& s, const std::string& what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidArgument("bad " + what + ": '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

std::vector<int> int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  for (const auto& t : split(s, ',')) out.push_back(to_int(t, what));
  return out;
}

struct Globals {
  bool json = false;
  int workers = 1;
  std::string cache_dir;
  std::size_t max_colorings = 10'000'000;
};

// A graph given as JSON, a JSON file, a family shorthand, or family flags.
struct Selector {
  std::string graph;
  std::string family;
  int p = 0;
  int k = 0;
  std::string spec;
  std::string h;

  void add_to(CLI::App* sub) {
    // Frees -h so that --h can carry the Hessenberg function.
    sub->set_help_flag("--help", "print this help message and exit");
    sub->add_option("--graph", graph,
                    "graph JSON, a JSON file, or mountain:P:K, bottomless:P:K, mixed:SPEC:K, nui:H1,H2,...");
    sub->add_option("--family", family, "mountain | bottomless | mixed | nui")
        ->check(CLI::IsMember({"mountain", "bottomless", "mixed", "nui"}));
    sub->add_option("--p", p, "number of cliques");
    sub->add_option("--k", k, "clique size");
    sub->add_option("--spec", spec, "clique tags such as fbfb");
    sub->add_option("--h", h, "Hessenberg function such as 2,3,3");
  }
};

struct Selected {
  OrientedGraph graph;
  std::optional<Mountain> mountain;
  std::vector<int> h;
};

Selected build_family(const std::string& family, int p, int k, const std::string& spec, const std::string& h) {
  Selected s;
  if (family == "mountain") {
    s.mountain = mountain(p, k);
  } else if (family == "bottomless") {
    s.mountain = bottomless_mountain(p, k);
  } else if (family == "mixed") {
    if (spec.empty()) throw InvalidArgument("--family mixed needs --spec");
    s.mountain = mixed_mountain(MountainSpec::parse(spec, k));
  } else if (family == "nui") {
    if (h.empty()) throw InvalidArgument("--family nui needs --h");
    s.h = int_list(h, "Hessenberg function");
    s.graph = natural_unit_interval(s.h);
    return s;
  } else {
    throw InvalidArgument("unknown family '" + family + "'");
  }
  s.graph = s.mountain->graph;
  return s;
}

Selected select(const Selector& sel) {
  if (!sel.family.empty()) {
    if (!sel.graph.empty()) throw InvalidArgument("--graph and --family are exclusive");
    return build_family(sel.family, sel.p, sel.k, sel.spec, sel.h);
  }
  if (sel.graph.empty()) throw InvalidArgument("no graph given: use --graph or --family");
  const std::string& g = sel.graph;
  if (!g.empty() && g.front() != '{' && g.find(':') != std::string::npos && !std::filesystem::exists(g)) {
    auto f = split(g, ':');
    if (f[0] == "nui" && f.size() == 2) return build_family("nui", 0, 0, "", f[1]);
    if (f[0] == "mixed" && f.size() == 3) return build_family("mixed", 0, to_int(f[2], "k"), f[1], "");
    if ((f[0] == "mountain" || f[0] == "bottomless") && f.size() == 3)
      return build_family(f[0], to_int(f[1], "p"), to_int(f[2], "k"), "", "");
    throw InvalidArgument("bad family shorthand '" + g + "'");
  }
  std::string text = g;
  if (g.empty() || g.front() != '{') {
    std::ifstream in(g);
    if (!in) throw InvalidArgument("cannot read graph file '" + g + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidArgument("graph input is not valid JSON");
  if (j.contains("graph")) j = j["graph"];
  Selected s;
  try {
    s.graph = graph_from_json(j);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed graph JSON: ") + e.what());
  }
  return s;
}

Json geometry_json(const MountainGeometry& geo) {
  Json cliques = Json::array();
  for (const auto& c : geo.cliques) cliques.push_back({c.left, c.right});
  return Json{{"lower", geo.lower},
              {"upper", geo.upper},
              {"cliques", cliques},
              {"tags", geo.spec.tags()},
              {"k", geo.spec.k},
              {"bottom", {geo.bottom.first, geo.bottom.second}}};
}

void print_json(std::ostream& out, const Json& j, const Globals& g) { out << (g.json ? j.dump() : j.dump(2)) << "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_compute(const Selector& sel, const Globals& glob, std::ostream& out) {
  auto s = select(sel);
  auto f = cqf(s.graph, glob.workers);
  auto witness = nonsymmetry_witness(f);
  bool pal = is_palindromic(f, s.graph.num_edges());
  std::optional<SymExpansion> e;
  if (!witness) e = e_expand(f);
  bool epos = e && is_e_positive(f);

  if (glob.json) {
    Json j = cqf_envelope(s.graph, f);
    j["symmetric"] = !witness;
    if (witness) {
      j["witness"] = Json::array({witness->first.parts(), witness->second.parts()});
    } else {
      j["e_expansion"] = to_json(*e);
      j["e_positive"] = epos;
    }
    j["palindromic"] = pal;
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "graph: " << to_json(s.graph).dump() << "\n";
  out << "edges: " << s.graph.num_edges() << "\n";
  for (const auto& [alpha, c] : f.terms()) out << "  M" << alpha.to_string() << ": " << c.to_string() << "\n";
  if (witness) {
    out << "symmetric: no (M" << witness->first.to_string() << " and M" << witness->second.to_string()
        << " differ)\n";
  } else {
    out << "symmetric: yes\n";
    for (const auto& [lambda, c] : e->terms) out << "  e" << lambda.to_string() << ": " << c.to_string() << "\n";
    out << "e-positive: " << yes_no(epos) << "\n";
  }
  out << "palindromic: " << yes_no(pal) << "\n";
  return kExitOk;
}

int cmd_family(const Selector& sel, int list_n, const Globals& glob, std::ostream& out) {
  if (list_n > 0) {
    Json specs = Json::array();
    for (const auto& s : mixed_specs(list_n)) specs.push_back({{"spec", s.tags()}, {"k", s.k}});
    print_json(out, specs, glob);
    return kExitOk;
  }
  auto s = select(sel);
  Json j{{"graph", to_json(s.graph)}};
  if (s.mountain) j["geometry"] = geometry_json(s.mountain->geometry);
  if (!s.h.empty()) j["h"] = s.h;
  print_json(out, j, glob);
  return kExitOk;
}

struct VerifyArgs {
  std::string theorem;
  std::string map;
  int a = 1;
  int palette = 0;
  int clique = -1;
  int max_n = 0;
  int max_vertices = 10;
  bool unsafe_large = false;
  bool list = false;
};

int cmd_verify(const VerifyArgs& v, const Selector& sel, const Globals& glob, std::ostream& out) {
  if (v.list) {
    Json cat = Json::array();
    for (const auto& t : theorem_catalog()) cat.push_back({{"id", t.id}, {"statement", t.statement}});
    if (glob.json) {
      out << cat.dump() << "\n";
    } else {
      for (const auto& t : theorem_catalog()) out << t.id << "  " << t.statement << "\n";
    }
    return kExitOk;
  }
  if (v.theorem.empty() == v.map.empty()) throw InvalidArgument("give either a theorem id or --map");
  if (!v.map.empty()) {
    MapId id = map_id_from_string(v.map);
    auto s = select(sel);
    MapReport r;
    if (id == MapId::Phi) {
      r = verify_phi(s.graph, glob.max_colorings);
    } else {
      if (!s.mountain) throw WrongClass("--map " + v.map + " needs a mountain family graph");
      VerifyParams p;
      p.a = v.a;
      p.palette = v.palette;
      p.clique = v.clique;
      p.max_colorings = glob.max_colorings;
      r = verify_map(id, *s.mountain, p);
    }
    print_json(out, to_json(r), glob);
    return r.passed() ? kExitOk : kExitFailed;
  }
  TheoremParams p;
  p.max_n = v.max_n;
  p.max_vertices = v.max_vertices;
  p.spec = sel.spec;
  p.k = sel.k;
  p.workers = glob.workers;
  p.unsafe_large = v.unsafe_large;
  auto r = verify_theorem(v.theorem, p);
  if (glob.json) {
    out << to_json(r).dump() << "\n";
  } else {
    out << (r.passed() ? "PASS " : "FAIL ") << r.id << ": " << r.statement << " (" << r.checked << " checked)\n";
    for (const auto& c : r.counterexamples) out << "  counterexample: " << c << "\n";
  }
  return r.passed() ? kExitOk : kExitFailed;
}

struct ClassifyArgs {
  int min_n = 1;
  int max_n = 6;
  bool unsafe_large = false;
  int recheck = 0;
};

int cmd_classify(const ClassifyArgs& c, const Globals& glob, std::ostream& out, std::ostream& err) {
  ClassifyOptions opt;
  opt.min_n = c.min_n;
  opt.max_n = c.max_n;
  opt.workers = glob.workers;
  opt.unsafe_large = c.unsafe_large;
  opt.recheck_every = c.recheck;
  if (!glob.cache_dir.empty()) opt.cache_dir = glob.cache_dir;
  std::vector<std::string> untagged;
  auto sum = classify_all(opt, [&](const std::string& line) {
    out << line << "\n";
    auto j = Json::parse(line);
    if (j["symmetric"] == true && j["tags"] == Json::array({kTagOther})) untagged.push_back(j["graph"].dump());
  });
  Json per_n = Json::array();
  for (int n = c.min_n; n <= c.max_n; ++n)
    per_n.push_back({{"n", n}, {"records", sum.per_n_records[n]}, {"symmetric", sum.per_n_symmetric[n]}});
  Json summary{{"records", sum.records},
               {"symmetric", sum.symmetric},
               {"symmetric_untagged", sum.symmetric_untagged},
               {"cache_hits", sum.cache_hits},
               {"rechecked", sum.rechecked},
               {"recheck_mismatches", sum.recheck_mismatches},
               {"per_n", per_n}};
  if (glob.json) {
    err << summary.dump() << "\n";
  } else {
    err << "records " << sum.records << ", symmetric " << sum.symmetric << ", symmetric untagged "
        << sum.symmetric_untagged << ", cache hits " << sum.cache_hits << ", rechecked " << sum.rechecked
        << ", recheck mismatches " << sum.recheck_mismatches << "\n";
    for (int n = c.min_n; n <= c.max_n; ++n)
      err << "  n=" << n << ": " << sum.per_n_records[n] << " classes, " << sum.per_n_symmetric[n] << " symmetric\n";
  }
  for (const auto& g : untagged) err << "untagged symmetric class: " << g << "\n";
  if (sum.recheck_mismatches > 0) err << "cache recheck found " << sum.recheck_mismatches << " mismatching records\n";
  return sum.recheck_mismatches == 0 && untagged.empty() ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chromatic quasisymmetric functions of oriented graphs", "cqf"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals glob;
  app.add_flag("--json", glob.json, "compact JSON output");
  app.add_option("--workers", glob.workers, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--cache-dir", glob.cache_dir, "classification cache directory");
  app.add_option("--max-colorings", glob.max_colorings, "enumeration bound for map verification");

  Selector sel;
  auto* compute = app.add_subcommand("compute", "CQF, symmetry, e-expansion and palindromicity of one graph");
  sel.add_to(compute);

  ClassifyArgs cls;
  auto* classify = app.add_subcommand("classify", "classify every connected DAG up to isomorphism");
  classify->add_option("--max-n", cls.max_n, "largest vertex count")->check(CLI::PositiveNumber);
  classify->add_option("--min-n", cls.min_n, "smallest vertex count")->check(CLI::PositiveNumber);
  classify->add_flag("--unsafe-large", cls.unsafe_large, "allow n = 8");
  classify->add_option("--recheck", cls.recheck, "recompute every R-th cache hit")->check(CLI::NonNegativeNumber);

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "check a theorem over a bounded range, or a coloring map");
  verify->add_option("theorem", ver.theorem, "theorem id (see --list)");
  verify->add_option("--map", ver.map, "psi | cycle | reflect | swap | phi | l-auto");
  verify->add_option("--a", ver.a, "color a");
  verify->add_option("--palette", ver.palette, "number of colors; 0 picks a default");
  verify->add_option("--clique", ver.clique, "swap site, 0-based");
  verify->add_option("--max-n", ver.max_n, "vertex bound for graph sweeps");
  verify->add_option("--max-vertices", ver.max_vertices, "vertex bound for family sweeps");
  verify->add_flag("--unsafe-large", ver.unsafe_large, "allow sweeps past n = 7");
  verify->add_flag("--list", ver.list, "list theorem ids");
  sel.add_to(verify);

  int list_n = 0;
  auto* family = app.add_subcommand("family", "build a family graph with its geometry");
  family->add_option("--list", list_n, "list every mixed spec on N vertices");
  sel.add_to(family);

  for (auto* sub : {compute, classify, verify, family}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(sel, glob, out);
    if (*classify) return cmd_classify(cls, glob, out, err);
    if (*verify) return cmd_verify(ver, sel, glob, out);
    if (*family) return cmd_family(sel, list_n, glob, out);
  } catch (const SizeGuard& e) {
    err << "size guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace cqsym
