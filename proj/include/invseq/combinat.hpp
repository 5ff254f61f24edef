#pragma once

// Closed-form counts of commitment words and the succession-rule
// multiplicities built from them. Exact integers only.

#include "invseq/numeric.hpp"

namespace invseq::combinat {

inline Integer catalan(long b) {
  if (b < 0) return 0;
  return binomial(2 * b, b) / (b + 1);
}

/// Surjective words of length k on {1..b} avoiding 212, 112 and 213.
/// a_{0,0} = 1 (empty word on the empty alphabet); zero outside 0 <= b <= k.
inline Integer words_R1R2(long k, long b) {
  if (k == 0 && b == 0) return 1;
  if (b < 1 || b > k) return 0;
  return binomial(k - 1, k - b) * catalan(b);
}

/// Surjective words of length k on {1..b} avoiding 111, 212, 112 and 213.
/// Each letter occurs at most twice, so the count vanishes for k > 2b.
inline Integer words_R1R3(long k, long b) {
  if (k == 0 && b == 0) return 1;
  if (b < 1 || b > k) return 0;
  return binomial(b, k - b) * catalan(b);
}

/// m_{l,b} = sum_{k=b}^{l} a_{k,b} = C(l,b) C_b.
inline Integer multiplicity_m(long l, long b) {
  if (b < 0 || b > l) return 0;
  return binomial(l, b) * catalan(b);
}

/// w_{l,b} = d_{l-1,b} + d_{l,b} = C(b+1, l-b) C_b; zero outside ceil((l-1)/2) <= b <= l.
inline Integer multiplicity_w(long l, long b) {
  if (b < 0 || b > l) return 0;
  return binomial(b + 1, l - b) * catalan(b);
}

}  // namespace invseq::combinat
