#include "mec/polynomial.hpp"

#include <algorithm>

#include "mec/errors.hpp"

namespace mec {

SizePolynomial::SizePolynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

SizePolynomial::SizePolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coefficients_.emplace_back(c);
  trim();
}

void SizePolynomial::trim() {
  for (Rational& c : coefficients_) c.canonicalize();
  while (coefficients_.size() > 1 && coefficients_.back() == 0) coefficients_.pop_back();
  if (coefficients_.empty()) coefficients_.emplace_back(0);
}

const Rational& SizePolynomial::coefficient(std::size_t i) const {
  static const Rational zero(0);
  return i < coefficients_.size() ? coefficients_[i] : zero;
}

bool SizePolynomial::is_integral() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

Rational SizePolynomial::at(const Rational& x) const {
  Rational acc(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

SizePolynomial& SizePolynomial::operator+=(const SizePolynomial& o) {
  if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coefficients_.size(); ++i) coefficients_[i] += o.coefficients_[i];
  trim();
  return *this;
}

SizePolynomial& SizePolynomial::operator*=(const SizePolynomial& o) {
  std::vector<Rational> out(coefficients_.size() + o.coefficients_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    for (std::size_t j = 0; j < o.coefficients_.size(); ++j) out[i + j] += coefficients_[i] * o.coefficients_[j];
  coefficients_ = std::move(out);
  trim();
  return *this;
}

SizePolynomial& SizePolynomial::operator*=(const Rational& c) {
  for (Rational& x : coefficients_) x *= c;
  trim();
  return *this;
}

SizePolynomial linear(long c) { return SizePolynomial{c, 1}; }

SizePolynomial translate(const SizePolynomial& poly, std::size_t k) {
  // Horner in the shifted variable: P(m+k) = (...(c_d (m+k) + c_{d-1})(m+k) ...)
  const SizePolynomial step = linear(static_cast<long>(k));
  const auto& c = poly.coefficients();
  SizePolynomial acc(std::vector<Rational>{c.back()});
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc *= step;
    acc += SizePolynomial(std::vector<Rational>{c[i]});
  }
  return acc;
}

SizePolynomial shift(const SizePolynomial& poly, std::size_t k) {
  SizePolynomial out = translate(poly, k);
  for (std::size_t i = 1; i <= k; ++i) out *= linear(static_cast<long>(i));
  return out;
}

BigCount evaluate(const SizePolynomial& poly, std::size_t m) {
  const Rational value = poly.at(Rational(static_cast<unsigned long>(m)));
  if (value.get_den() != 1)
    throw InvariantError("size polynomial is not integral at m=" + std::to_string(m));
  if (value <= 0) throw InvariantError("size polynomial is not positive at m=" + std::to_string(m));
  return value.get_num() * factorial(m);
}

std::string format_polynomial(const SizePolynomial& poly) {
  if (!poly.is_integral()) throw InvariantError("format_polynomial: non-integral coefficient");
  const auto& c = poly.coefficients();
  std::string body;
  for (std::size_t i = c.size(); i-- > 0;) {
    const BigCount& coef = c[i].get_num();
    if (coef == 0 && !(i == 0 && body.empty())) continue;
    BigCount magnitude = abs(coef);
    if (body.empty()) {
      if (coef < 0) body += "-";
    } else {
      body += coef < 0 ? " - " : " + ";
    }
    if (i == 0) {
      body += magnitude.get_str();
    } else {
      if (magnitude != 1) body += magnitude.get_str() + "*";
      body += "m";
      if (i > 1) body += "^" + std::to_string(i);
    }
  }
  return "(" + body + ") * m!";
}

}  // namespace mec
