#include "cqsym/qpoly.hpp"

#include <sstream>

#include "cqsym/errors.hpp"

namespace cqsym {

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::from_counts(const std::vector<std::uint64_t>& counts) {
  std::vector<BigInt> c;
  c.reserve(counts.size());
  for (std::uint64_t v : counts) {
    BigInt b;
    // mpz_class has no portable uint64_t constructor.
    mpz_import(b.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    c.push_back(std::move(b));
  }
  return QPoly(std::move(c));
}

QPoly QPoly::monomial(std::size_t power, const BigInt& coeff) {
  std::vector<BigInt> c(power + 1);
  c[power] = coeff;
  return QPoly(std::move(c));
}

BigInt QPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

BigInt QPoly::at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool QPoly::nonnegative() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) < 0) return false;
  }
  return true;
}

QPoly QPoly::reversed(std::size_t window) const {
  if (degree() > static_cast<long>(window)) {
    throw InvalidArgument("reversal window smaller than polynomial degree");
  }
  if (is_zero()) return {};
  std::vector<BigInt> c(window + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[window - i] = coeffs_[i];
  return QPoly(std::move(c));
}

QPoly QPoly::divexact(const BigInt& d) const {
  if (d == 0) throw InvalidArgument("division by zero");
  std::vector<BigInt> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), d.get_mpz_t())) {
      throw NonIntegralDivision("coefficient " + coeffs_[i].get_str() + " of q^" +
                                std::to_string(i) + " is not divisible by " + d.get_str());
    }
    mpz_divexact(c[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
  }
  return QPoly(std::move(c));
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(c));
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << "q";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace cqsym
