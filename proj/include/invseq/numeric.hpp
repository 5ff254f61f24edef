#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace invseq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Integer& value) { return value.get_str(); }

inline std::string to_string(const Rational& value) { return value.get_str(); }

inline Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

}  // namespace invseq
