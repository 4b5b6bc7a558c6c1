#include "cqsym/cqf.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>
#include <unordered_map>

namespace cqsym {

void check_proper(const OrientedGraph& g, const Coloring& kappa) {
  if (static_cast<int>(kappa.size()) != g.n()) {
    throw ImproperColoring("coloring has " + std::to_string(kappa.size()) + " entries, graph has " +
                           std::to_string(g.n()) + " vertices");
  }
  for (int c : kappa) {
    if (c < 1) throw ImproperColoring("colors must be positive");
  }
  for (auto [u, v] : g.edges()) {
    if (kappa[u - 1] == kappa[v - 1]) {
      throw ImproperColoring("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") is monochromatic");
    }
  }
}

int ascent_count(const OrientedGraph& g, const Coloring& kappa) {
  check_proper(g, kappa);
  int asc = 0;
  for (auto [u, v] : g.edges()) asc += kappa[u - 1] < kappa[v - 1];
  return asc;
}

std::vector<int> weight(const Coloring& kappa) {
  int top = kappa.empty() ? 0 : *std::max_element(kappa.begin(), kappa.end());
  std::vector<int> w(top, 0);
  for (int c : kappa) {
    if (c < 1) throw ImproperColoring("colors must be positive");
    ++w[c - 1];
  }
  return w;
}

QPoly coefficient(const OrientedGraph& g, const Composition& alpha) {
  std::vector<std::uint64_t> counts(g.num_edges() + 1, 0);
  for_each_coloring(g, alpha, [&](const Coloring&, int asc) {
    ++counts[asc];
    return true;
  });
  return QPoly::from_counts(counts);
}

namespace {

using Counts = std::vector<std::uint64_t>;
using Layer = std::unordered_map<VertexMask, Counts>;

class ClassDp {
 public:
  explicit ClassDp(const OrientedGraph& g) : g_(g), n_(g.n()), width_(g.num_edges() + 1) {
    full_ = n_ == kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
  }

  // All compositions whose first part is `first`.
  QSymElement::Terms run(int first) {
    QSymElement::Terms out;
    Layer start;
    start.emplace(0, Counts(width_, 0));
    start[0][0] = 1;
    std::vector<int> prefix;
    extend(start, first, prefix, out);
    return out;
  }

 private:
  bool independent(VertexMask s) const {
    for (VertexMask m = s; m; m &= m - 1) {
      if (g_.out_mask(std::countr_zero(m) + 1) & s) return false;
    }
    return true;
  }

  // Ascents created when the class `add` gets a larger color than every
  // vertex in `done`.
  int gained(VertexMask done, VertexMask add) const {
    int a = 0;
    for (VertexMask m = add; m; m &= m - 1) a += std::popcount(g_.in_mask(std::countr_zero(m) + 1) & done);
    return a;
  }

  void extend(const Layer& layer, int part, std::vector<int>& prefix, QSymElement::Terms& out) {
    Layer next;
    for (const auto& [done, counts] : layer) {
      VertexMask rest = full_ & ~done;
      // Independent subsets of `rest` of size `part`.
      for (VertexMask s = rest; s; s = (s - 1) & rest) {
        if (std::popcount(s) != part || !independent(s)) continue;
        int shift = gained(done, s);
        auto [it, inserted] = next.try_emplace(done | s, Counts());
        if (inserted) it->second.assign(width_, 0);
        for (int i = 0; i + shift < width_; ++i) it->second[i + shift] += counts[i];
      }
    }
    if (next.empty()) return;
    prefix.push_back(part);
    int covered = 0;
    for (int p : prefix) covered += p;
    if (covered == n_) {
      QPoly c = QPoly::from_counts(next.begin()->second);
      if (!c.is_zero()) out.emplace(Composition(prefix), std::move(c));
    } else {
      for (int p = 1; p <= n_ - covered; ++p) extend(next, p, prefix, out);
    }
    prefix.pop_back();
  }

  const OrientedGraph& g_;
  int n_;
  int width_;
  VertexMask full_;
};

}  // namespace

QSymElement cqf(const OrientedGraph& g, int workers) {
  const int n = g.n();
  if (n == 0) return QSymElement::constant(1);
  if (n > 20) throw SizeGuard("cqf is limited to 20 vertices");
  workers = std::clamp(workers, 1, n);
  std::vector<QSymElement::Terms> parts(n);
  std::atomic<int> next_first{1};
  auto work = [&] {
    ClassDp dp(g);
    for (int first; (first = next_first.fetch_add(1)) <= n;) parts[first - 1] = dp.run(first);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  QSymElement out(n);
  for (auto& terms : parts) {
    for (auto& [alpha, c] : terms) out.add_term(alpha, c);
  }
  return out;
}

QSymElement cqf_by_enumeration(const OrientedGraph& g) {
  if (g.n() == 0) return QSymElement::constant(1);
  QSymElement out(g.n());
  for (const auto& alpha : compositions_of(g.n())) out.add_term(alpha, coefficient(g, alpha));
  return out;
}

std::vector<Coloring> max_ascent_colorings(const OrientedGraph& g, const Composition& alpha) {
  if (g.n() > 10) throw SizeGuard("max_ascent_colorings is limited to 10 vertices");
  std::vector<Coloring> out;
  for_each_coloring(g, alpha, [&](const Coloring& kappa, int asc) {
    if (asc == g.num_edges()) out.push_back(kappa);
    return true;
  });
  return out;
}

QSymElement cqf_disjoint_union(const std::vector<OrientedGraph>& parts) {
  QSymElement prod = QSymElement::constant(1);
  for (const auto& g : parts) prod = quasi_shuffle(prod, cqf(g));
  return prod;
}

bool reversal_identity_check(const OrientedGraph& g) {
  QSymElement forward = cqf(g);
  QSymElement flipped(forward.degree());
  for (const auto& [alpha, c] : forward.terms()) flipped.add_term(alpha, c.reversed(g.num_edges()));
  return cqf(reverse(g)) == flipped;
}

}  // namespace cqsym
