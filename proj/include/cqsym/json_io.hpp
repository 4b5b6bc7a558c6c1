#pragma once

#include <json.hpp>

#include "cqsym/graph.hpp"
#include "cqsym/qsym.hpp"

namespace cqsym {

using Json = nlohmann::json;

// Coefficients that fit in 64 bits are written as JSON integers, larger ones
// as decimal strings. Readers accept both.
Json to_json(const BigInt& x);
BigInt bigint_from_json(const Json& j);

Json to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);

// {"degree": n, "terms": [{"index": [parts...], "poly": [c0, c1, ...]}, ...]}
// with terms sorted lexicographically by index.
Json to_json(const QSymElement& f);
QSymElement qsym_from_json(const Json& j);
Json to_json(const SymExpansion& f);
SymExpansion sym_from_json(const Json& j);

// {"n": int, "edges": [[u, v], ...]}, 1-based, edges sorted.
Json to_json(const OrientedGraph& g);
OrientedGraph graph_from_json(const Json& j);

// The QSymElement object extended with "graph" and "num_edges".
Json cqf_envelope(const OrientedGraph& g, const QSymElement& f);

}  // namespace cqsym
