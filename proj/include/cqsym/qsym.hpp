#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cqsym/composition.hpp"
#include "cqsym/errors.hpp"
#include "cqsym/qpoly.hpp"

namespace cqsym {

// A homogeneous element of QSym[q] of a fixed degree, stored in the monomial
// quasisymmetric basis. Since a composition of n has at most n parts, the
// finite map is exact in infinitely many variables. Degree 0 holds constants
// under the empty composition.
class QSymElement {
 public:
  using Terms = std::map<Composition, QPoly>;

  explicit QSymElement(int degree = 0);
  QSymElement(int degree, Terms terms);

  static QSymElement monomial(const Composition& alpha, QPoly coeff = QPoly{1});
  static QSymElement constant(const BigInt& c);

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QPoly coefficient(const Composition& alpha) const;

  // Adds c to the coefficient of M_alpha; zero results are dropped.
  void add_term(const Composition& alpha, const QPoly& c);

  QSymElement& operator+=(const QSymElement& other);
  QSymElement& operator-=(const QSymElement& other);
  QSymElement& operator*=(const QPoly& scalar);
  friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
  friend QSymElement operator-(QSymElement a, const QSymElement& b) { return a -= b; }

  friend bool operator==(const QSymElement& a, const QSymElement& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void check_degree(int other) const;
  int degree_;
  Terms terms_;
};

// Coefficient vector of a symmetric function in a basis indexed by
// partitions (m_lambda or e_lambda depending on the producer).
struct SymExpansion {
  int degree = 0;
  std::map<Partition, QPoly> terms;

  friend bool operator==(const SymExpansion&, const SymExpansion&) = default;
};

// Thrown when an operation requires a symmetric input. Carries the two
// rearranged compositions whose coefficients disagree.
class NotSymmetric : public Error {
 public:
  NotSymmetric(Composition a, Composition b);
  const std::pair<Composition, Composition>& witness() const { return witness_; }

 private:
  std::pair<Composition, Composition> witness_;
};

// M_alpha * M_beta as a multiset of compositions (overlapping shuffles).
std::map<Composition, BigInt> quasi_shuffle(const Composition& alpha, const Composition& beta);
QSymElement quasi_shuffle(const QSymElement& a, const QSymElement& b);

bool is_symmetric(const QSymElement& f);
std::optional<std::pair<Composition, Composition>> nonsymmetry_witness(const QSymElement& f);

// m_lambda coordinates of a symmetric f. Throws NotSymmetric otherwise.
SymExpansion collapse_to_monomial_symmetric(const QSymElement& f);
// Inverse of collapse: expands sum c_lambda m_lambda back into the M basis.
QSymElement monomial_symmetric_to_qsym(const SymExpansion& m);

QSymElement elementary_in_monomial(const Partition& lambda);
// m_lambda coordinates of e_lambda (cached per degree, thread-safe).
const std::map<Partition, SymExpansion>& elementary_table(int degree);

SymExpansion e_expand(const QSymElement& f);
bool is_e_positive(const QSymElement& f);

enum class PalindromeCenter {
  // coeff_i == coeff_{num_edges - i} for every M_alpha coefficient.
  HalfEdges,
  // Each coefficient is symmetric about the midpoint of its own support.
  OwnSupport,
};

bool is_palindromic(const QSymElement& f, int num_edges,
                    PalindromeCenter center = PalindromeCenter::HalfEdges);

// Lyndon compositions of the given weight, lexicographically sorted.
std::vector<Composition> lyndon_words(int weight);
bool is_lyndon(const Composition& alpha);

// Hazewinkel's generator lambda_n(M_alpha): the lower Hessenberg determinant
// with entries M_{k alpha} and superdiagonal 1..n-1, divided exactly by n!.
QSymElement hazewinkel_lambda(int n, const Composition& alpha);

}  // namespace cqsym
