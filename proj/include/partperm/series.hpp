#pragma once

#include <cstdint>
#include <vector>

namespace partperm {

/// Truncated formal power series with exact int64 coefficients. Every
/// series carries its order N: coefficients of x^0..x^N are kept, higher
/// ones are discarded by each operation. Arithmetic overflow throws.
class Series {
 public:
  explicit Series(int order);
  Series(int order, std::vector<std::int64_t> coeffs);

  static Series constant(std::int64_t c, int order);
  static Series x(int order);

  int order() const noexcept { return order_; }
  std::int64_t operator[](int i) const;
  const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series scaled(std::int64_t s) const;
  /// Multiplicative inverse; requires constant term +1 or -1.
  Series inverse() const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  int order_;
  std::vector<std::int64_t> c_;
};

/// Catalan generating function C(x) = sum C_n x^n, built from the
/// convolution recurrence C_{n+1} = sum C_i C_{n-i}.
Series catalan_series(int order);

}  // namespace partperm
