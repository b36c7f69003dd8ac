#pragma once

#include <cstdint>

#include "partperm/error.hpp"

namespace partperm {

using Count = std::uint64_t;

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "count overflow in addition");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "count overflow in multiplication");
  return r;
}

inline Count checked_sub(Count a, Count b) {
  if (b > a) throw Error(ErrorKind::Overflow, "count underflow in subtraction");
  return a - b;
}

/// C(n, k); zero when k < 0 or k > n.
inline Count binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count r = 1;
  for (long long i = 1; i <= k; ++i) {
    // r * (n - k + i) is always divisible by i at this point.
    r = checked_mul(r, static_cast<Count>(n - k + i)) / static_cast<Count>(i);
  }
  return r;
}

inline Count factorial(int n) {
  Count r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, static_cast<Count>(i));
  return r;
}

/// n! / k!, the size of the set of partial permutations of length n with k holes.
inline Count falling_ratio(int n, int k) {
  Count r = 1;
  for (int i = k + 1; i <= n; ++i) r = checked_mul(r, static_cast<Count>(i));
  return r;
}

inline Count catalan(int n) {
  if (n < 0) return 0;
  return binomial(2LL * n, n) / static_cast<Count>(n + 1);
}

}  // namespace partperm
