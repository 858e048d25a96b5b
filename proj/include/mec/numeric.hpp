#pragma once

#include <cstddef>

#include <gmpxx.h>

namespace mec {

/// Arbitrary-precision nonnegative count (class sizes reach p!).
using BigCount = mpz_class;
using Rational = mpq_class;

inline BigCount factorial(std::size_t n) {
  BigCount r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigCount binomial(std::size_t n, std::size_t k) {
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace mec
