#include "partperm/series.hpp"

#include <algorithm>

#include "partperm/error.hpp"

namespace partperm {

namespace {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "series coefficient overflow");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "series coefficient overflow");
  return r;
}

void same_order(const Series& a, const Series& b) {
  if (a.order() != b.order()) invalid_input("series truncation orders differ");
}

}  // namespace

Series::Series(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1, 0) {
  if (order < 0) invalid_input("negative series order");
}

Series::Series(int order, std::vector<std::int64_t> coeffs) : Series(order) {
  for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
}

Series Series::constant(std::int64_t c, int order) {
  Series s(order);
  s.c_[0] = c;
  return s;
}

Series Series::x(int order) {
  Series s(order);
  if (order >= 1) s.c_[1] = 1;
  return s;
}

std::int64_t Series::operator[](int i) const {
  if (i < 0 || i > order_) invalid_input("coefficient index beyond truncation order");
  return c_[i];
}

Series Series::operator+(const Series& o) const {
  same_order(*this, o);
  Series r(order_);
  for (int i = 0; i <= order_; ++i) r.c_[i] = add(c_[i], o.c_[i]);
  return r;
}

Series Series::operator-(const Series& o) const {
  return *this + o.scaled(-1);
}

Series Series::operator*(const Series& o) const {
  same_order(*this, o);
  Series r(order_);
  for (int i = 0; i <= order_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= order_; ++j) r.c_[i + j] = add(r.c_[i + j], mul(c_[i], o.c_[j]));
  }
  return r;
}

Series Series::scaled(std::int64_t s) const {
  Series r(order_);
  for (int i = 0; i <= order_; ++i) r.c_[i] = mul(c_[i], s);
  return r;
}

Series Series::inverse() const {
  const std::int64_t c0 = c_[0];
  if (c0 != 1 && c0 != -1) invalid_input("series inverse needs constant term +-1");
  Series r(order_);
  r.c_[0] = c0;  // 1/c0 == c0 for c0 = +-1
  for (int n = 1; n <= order_; ++n) {
    std::int64_t acc = 0;
    for (int i = 1; i <= n; ++i) acc = add(acc, mul(c_[i], r.c_[n - i]));
    r.c_[n] = mul(-acc, c0);
  }
  return r;
}

Series catalan_series(int order) {
  Series s(order);
  std::vector<std::int64_t> c(static_cast<std::size_t>(order) + 1, 0);
  c[0] = 1;
  for (int n = 0; n < order; ++n) {
    std::int64_t acc = 0;
    for (int i = 0; i <= n; ++i) acc = add(acc, mul(c[i], c[n - i]));
    c[n + 1] = acc;
  }
  return Series(order, std::move(c));
}

}  // namespace partperm
