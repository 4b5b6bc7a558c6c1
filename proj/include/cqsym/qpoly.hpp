#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cqsym {

using BigInt = mpz_class;

// Univariate polynomial in q with arbitrary-precision integer coefficients.
// coeffs()[i] is the coefficient of q^i; trailing zeros are always trimmed,
// so the zero polynomial has no coefficients at all.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<long> coeffs);
  explicit QPoly(std::vector<BigInt> coeffs);
  static QPoly from_counts(const std::vector<std::uint64_t>& counts);
  static QPoly monomial(std::size_t power, const BigInt& coeff = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t power) const;
  BigInt at_one() const;
  bool nonnegative() const;

  // q^window * p(1/q); requires degree() <= window.
  QPoly reversed(std::size_t window) const;

  // Divides every coefficient by d, throwing NonIntegralDivision when some
  // coefficient is not a multiple of d.
  QPoly divexact(const BigInt& d) const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const BigInt& scalar);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const BigInt& s) { return a *= s; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace cqsym
