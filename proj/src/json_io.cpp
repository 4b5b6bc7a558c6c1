#include "cqsym/json_io.hpp"

namespace cqsym {

Json to_json(const BigInt& x) {
  if (x.fits_slong_p()) return Json(static_cast<long>(x.get_si()));
  return Json(x.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<unsigned long>()));
  if (j.is_string()) {
    BigInt x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("bad integer string " + j.dump());
    return x;
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

Json to_json(const QPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

QPoly qpoly_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial must be an array");
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(bigint_from_json(x));
  return QPoly(std::move(c));
}

namespace {

std::vector<int> parts_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("index must be an array");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidArgument("index entries must be integers");
    parts.push_back(x.get<int>());
  }
  return parts;
}

int degree_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("terms") || !j["terms"].is_array()) {
    throw InvalidArgument("expected {\"degree\", \"terms\"}");
  }
  return j["degree"].get<int>();
}

}  // namespace

Json to_json(const QSymElement& f) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : f.terms()) terms.push_back({{"index", alpha.parts()}, {"poly", to_json(c)}});
  return {{"degree", f.degree()}, {"terms", terms}};
}

QSymElement qsym_from_json(const Json& j) {
  QSymElement f(degree_from_json(j));
  for (const auto& t : j["terms"]) f.add_term(Composition(parts_from_json(t.at("index"))), qpoly_from_json(t.at("poly")));
  return f;
}

Json to_json(const SymExpansion& f) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms) terms.push_back({{"index", lambda.parts()}, {"poly", to_json(c)}});
  return {{"degree", f.degree}, {"terms", terms}};
}

SymExpansion sym_from_json(const Json& j) {
  SymExpansion f;
  f.degree = degree_from_json(j);
  for (const auto& t : j["terms"]) {
    Partition lambda(parts_from_json(t.at("index")));
    if (lambda.weight() != f.degree) throw InvalidArgument("partition weight differs from degree");
    QPoly c = qpoly_from_json(t.at("poly"));
    if (!c.is_zero()) f.terms[lambda] += c;
  }
  return f;
}

Json to_json(const OrientedGraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", edges}};
}

OrientedGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw InvalidGraph("graph JSON needs an integer \"n\"");
  }
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InvalidGraph("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw InvalidGraph("edge must be a pair of integers: " + e.dump());
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return OrientedGraph(j["n"].get<int>(), std::move(edges));
}

Json cqf_envelope(const OrientedGraph& g, const QSymElement& f) {
  Json j = to_json(f);
  j["graph"] = to_json(g);
  j["num_edges"] = g.num_edges();
  return j;
}

}  // namespace cqsym
