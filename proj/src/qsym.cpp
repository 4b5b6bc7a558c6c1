#include "cqsym/qsym.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace cqsym {

QSymElement::QSymElement(int degree) : degree_(degree) {
  if (degree < 0) throw InvalidArgument("negative degree");
}

QSymElement::QSymElement(int degree, Terms terms) : QSymElement(degree) {
  for (auto& [alpha, c] : terms) add_term(alpha, c);
}

QSymElement QSymElement::monomial(const Composition& alpha, QPoly coeff) {
  QSymElement e(alpha.weight());
  e.add_term(alpha, coeff);
  return e;
}

QSymElement QSymElement::constant(const BigInt& c) {
  QSymElement e(0);
  e.add_term(Composition{}, QPoly(std::vector<BigInt>{c}));
  return e;
}

QPoly QSymElement::coefficient(const Composition& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? QPoly{} : it->second;
}

void QSymElement::add_term(const Composition& alpha, const QPoly& c) {
  if (alpha.weight() != degree_) {
    throw InvalidArgument("composition " + alpha.to_string() + " has weight " +
                          std::to_string(alpha.weight()) + ", element has degree " +
                          std::to_string(degree_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void QSymElement::check_degree(int other) const {
  if (other != degree_) {
    throw InvalidArgument("degree mismatch: " + std::to_string(degree_) + " vs " +
                          std::to_string(other));
  }
}

QSymElement& QSymElement::operator+=(const QSymElement& other) {
  check_degree(other.degree_);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& other) {
  check_degree(other.degree_);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
  return *this;
}

QSymElement& QSymElement::operator*=(const QPoly& scalar) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = it->second * scalar;
    if (it->second.is_zero()) it = terms_.erase(it);
    else ++it;
  }
  return *this;
}

NotSymmetric::NotSymmetric(Composition a, Composition b)
    : Error("not symmetric: coefficients of M" + a.to_string() + " and M" + b.to_string() +
            " differ"),
      witness_(std::move(a), std::move(b)) {}

std::map<Composition, BigInt> quasi_shuffle(const Composition& alpha, const Composition& beta) {
  const auto& a = alpha.parts();
  const auto& b = beta.parts();
  std::map<std::vector<int>, unsigned long> counts;
  std::vector<int> cur;
  cur.reserve(a.size() + b.size());
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == a.size() && j == b.size()) {
      ++counts[cur];
      return;
    }
    if (i < a.size()) {
      cur.push_back(a[i]);
      rec(i + 1, j);
      cur.pop_back();
    }
    if (j < b.size()) {
      cur.push_back(b[j]);
      rec(i, j + 1);
      cur.pop_back();
    }
    if (i < a.size() && j < b.size()) {
      cur.push_back(a[i] + b[j]);
      rec(i + 1, j + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  std::map<Composition, BigInt> out;
  for (auto& [parts, n] : counts) out.emplace(Composition(parts), BigInt(n));
  return out;
}

QSymElement quasi_shuffle(const QSymElement& a, const QSymElement& b) {
  QSymElement out(a.degree() + b.degree());
  for (const auto& [alpha, ca] : a.terms()) {
    for (const auto& [beta, cb] : b.terms()) {
      QPoly prod = ca * cb;
      for (const auto& [gamma, mult] : quasi_shuffle(alpha, beta)) out.add_term(gamma, prod * mult);
    }
  }
  return out;
}

std::optional<std::pair<Composition, Composition>> nonsymmetry_witness(const QSymElement& f) {
  // Every nonzero coefficient must match all rearrangements of its index;
  // rearrangement classes with no stored term are uniformly zero.
  std::map<Partition, bool> checked;
  for (const auto& [alpha, c] : f.terms()) {
    Partition lambda = alpha.underlying_partition();
    if (checked.count(lambda)) continue;
    checked.emplace(lambda, true);
    for (const auto& beta : rearrangements(lambda)) {
      if (f.coefficient(beta) != c) return std::make_pair(alpha, beta);
    }
  }
  return std::nullopt;
}

bool is_symmetric(const QSymElement& f) { return !nonsymmetry_witness(f).has_value(); }

SymExpansion collapse_to_monomial_symmetric(const QSymElement& f) {
  if (auto w = nonsymmetry_witness(f)) throw NotSymmetric(w->first, w->second);
  SymExpansion m;
  m.degree = f.degree();
  for (const auto& [alpha, c] : f.terms()) m.terms.emplace(alpha.underlying_partition(), c);
  return m;
}

QSymElement monomial_symmetric_to_qsym(const SymExpansion& m) {
  QSymElement f(m.degree);
  for (const auto& [lambda, c] : m.terms) {
    for (const auto& alpha : rearrangements(lambda)) f.add_term(alpha, c);
  }
  return f;
}

QSymElement elementary_in_monomial(const Partition& lambda) {
  QSymElement prod = QSymElement::constant(1);
  for (int part : lambda.parts()) {
    prod = quasi_shuffle(prod, QSymElement::monomial(Composition(std::vector<int>(part, 1))));
  }
  return prod;
}

const std::map<Partition, SymExpansion>& elementary_table(int degree) {
  static std::mutex mu;
  static std::map<int, std::map<Partition, SymExpansion>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;
  std::map<Partition, SymExpansion> table;
  for (const auto& lambda : partitions_of(degree)) {
    table.emplace(lambda, collapse_to_monomial_symmetric(elementary_in_monomial(lambda)));
  }
  return cache.emplace(degree, std::move(table)).first->second;
}

SymExpansion e_expand(const QSymElement& f) {
  SymExpansion residual = collapse_to_monomial_symmetric(f);
  const auto& table = elementary_table(f.degree());
  SymExpansion result;
  result.degree = f.degree();
  // e_lambda = m_{lambda'} + (terms strictly below lambda' in dominance, hence
  // lexicographically smaller), so peeling the lexicographically largest
  // residual term is exact integer back-substitution.
  while (!residual.terms.empty()) {
    auto top = std::prev(residual.terms.end());
    Partition mu = top->first;
    QPoly c = top->second;
    Partition lambda = mu.conjugate();
    const SymExpansion& e = table.at(lambda);
    auto diag = e.terms.find(mu);
    if (diag == e.terms.end() || diag->second != QPoly{1}) {
      throw InternalInconsistency("e" + lambda.to_string() + " lacks unit leading term m" +
                                  mu.to_string());
    }
    result.terms.emplace(lambda, c);
    for (const auto& [nu, coeff] : e.terms) {
      QPoly& slot = residual.terms[nu];
      slot -= coeff * c;
      if (slot.is_zero()) residual.terms.erase(nu);
    }
    if (residual.terms.count(mu)) {
      throw InternalInconsistency("e-expansion residue did not clear m" + mu.to_string());
    }
  }
  return result;
}

bool is_e_positive(const QSymElement& f) {
  for (const auto& [lambda, c] : e_expand(f).terms) {
    if (!c.nonnegative()) return false;
  }
  return true;
}

bool is_palindromic(const QSymElement& f, int num_edges, PalindromeCenter center) {
  if (num_edges < 0) throw InvalidArgument("num_edges must be nonnegative");
  for (const auto& [alpha, p] : f.terms()) {
    const auto& c = p.coeffs();
    std::size_t lo = 0, hi = 0;
    if (center == PalindromeCenter::HalfEdges) {
      if (p.degree() > num_edges) return false;
      hi = static_cast<std::size_t>(num_edges);
    } else {
      while (c[lo] == 0) ++lo;
      hi = c.size() - 1;
    }
    for (std::size_t i = lo; i <= hi; ++i) {
      if (p.coeff(i) != p.coeff(lo + hi - i)) return false;
    }
  }
  return true;
}

bool is_lyndon(const Composition& alpha) {
  const auto& w = alpha.parts();
  if (w.empty()) return false;
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::vector<int> rot(w.begin() + r, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + r);
    if (!(w < rot)) return false;
  }
  return true;
}

std::vector<Composition> lyndon_words(int weight) {
  if (weight < 1) throw InvalidArgument("Lyndon weight must be at least 1");
  std::vector<Composition> out;
  for (auto& alpha : compositions_of(weight)) {
    if (is_lyndon(alpha)) out.push_back(alpha);
  }
  return out;
}

QSymElement hazewinkel_lambda(int n, const Composition& alpha) {
  if (n < 1) throw InvalidArgument("hazewinkel_lambda needs n >= 1");
  if (!is_lyndon(alpha)) throw InvalidArgument(alpha.to_string() + " is not a Lyndon word");
  // Lower Hessenberg matrix: entry (i, j) = M_{(i-j+1) alpha} for j <= i and
  // entry (t, t+1) = t. Expanding along the last row:
  //   D_i = sum_{j=1}^{i} (-1)^{i-j} M_{(i-j+1)alpha} (prod_{t=j}^{i-1} t) D_{j-1}.
  std::vector<QSymElement> det;
  det.push_back(QSymElement::constant(1));
  for (int i = 1; i <= n; ++i) {
    QSymElement d(i * alpha.weight());
    for (int j = 1; j <= i; ++j) {
      BigInt scale = 1;
      for (int t = j; t <= i - 1; ++t) scale *= t;
      if ((i - j) % 2) scale = -scale;
      QSymElement term = quasi_shuffle(QSymElement::monomial(alpha.scaled(i - j + 1)), det[j - 1]);
      term *= QPoly(std::vector<BigInt>{scale});
      d += term;
    }
    det.push_back(std::move(d));
  }
  BigInt factorial = 1;
  for (int t = 2; t <= n; ++t) factorial *= t;
  QSymElement out(det[n].degree());
  for (const auto& [gamma, c] : det[n].terms()) out.add_term(gamma, c.divexact(factorial));
  return out;
}

}  // namespace cqsym
