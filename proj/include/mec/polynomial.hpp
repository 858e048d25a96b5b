#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mec/numeric.hpp"

namespace mec {

/// P(m) with exact rational coefficients; represents the size function
/// f(K, m) = P(m) * m!. coefficients()[i] multiplies m^i.
class SizePolynomial {
 public:
  /// The constant 1 (f = m!, the null core).
  SizePolynomial() : coefficients_{Rational(1)} {}
  explicit SizePolynomial(std::vector<Rational> coefficients);
  SizePolynomial(std::initializer_list<long> coefficients);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  const Rational& coefficient(std::size_t i) const;
  std::size_t degree() const { return coefficients_.size() - 1; }
  bool is_zero() const { return coefficients_.size() == 1 && coefficients_[0] == 0; }
  bool is_integral() const;

  /// P(x) at a rational point (no factorial).
  Rational at(const Rational& x) const;

  SizePolynomial& operator+=(const SizePolynomial& o);
  SizePolynomial& operator*=(const SizePolynomial& o);
  SizePolynomial& operator*=(const Rational& c);
  friend SizePolynomial operator+(SizePolynomial a, const SizePolynomial& b) { return a += b; }
  friend SizePolynomial operator*(SizePolynomial a, const SizePolynomial& b) { return a *= b; }
  friend SizePolynomial operator*(SizePolynomial a, const Rational& c) { return a *= c; }

  friend bool operator==(const SizePolynomial& a, const SizePolynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

/// The linear polynomial m + c.
SizePolynomial linear(long c);

/// P(m + k) as a polynomial in m.
SizePolynomial translate(const SizePolynomial& poly, std::size_t k);

/// Q with Q(m) m! = P(m+k) (m+k)!, i.e. Q(m) = P(m+k) (m+1)(m+2)...(m+k).
SizePolynomial shift(const SizePolynomial& poly, std::size_t k);

/// P(m) * m!; throws InvariantError unless P(m) is a positive integer.
BigCount evaluate(const SizePolynomial& poly, std::size_t m);

/// "(c_d*m^d + ... + c_1*m + c_0) * m!"; throws InvariantError on
/// non-integral coefficients.
std::string format_polynomial(const SizePolynomial& poly);

}  // namespace mec
