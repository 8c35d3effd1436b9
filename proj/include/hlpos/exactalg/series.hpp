#pragma once

#include "hlpos/exactalg/multipoly.hpp"

#include <cstddef>
#include <vector>

namespace hlpos::exactalg {

// Power series in a formal variable (alpha) truncated after degree `order`,
// with MultiPoly coefficients. Alpha never enters the MultiPoly term maps.
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(EnvPtr env, std::size_t order);
  TruncSeries(std::size_t order, std::vector<MultiPoly> coeffs);

  static TruncSeries constant(EnvPtr env, std::size_t order, MultiPoly c);
  // c0 + c1 * alpha
  static TruncSeries linear(EnvPtr env, std::size_t order, MultiPoly c0, MultiPoly c1);

  std::size_t order() const { return order_; }
  const EnvPtr& env() const { return env_; }
  const MultiPoly& operator[](std::size_t k) const { return c_.at(k); }
  const std::vector<MultiPoly>& coeffs() const { return c_; }
  bool is_zero() const;

  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  TruncSeries& operator*=(const TruncSeries& rhs);
  TruncSeries& operator*=(const MultiPoly& c);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const MultiPoly& c) { return a *= c; }
  bool operator==(const TruncSeries&) const = default;

  // Multiplicative inverse up to `order`; the constant coefficient must be a
  // nonzero rational, otherwise std::domain_error.
  TruncSeries inverse() const;

  TruncSeries eval_t(const Rational& t0) const;

 private:
  void check_compatible(const TruncSeries& rhs) const;

  EnvPtr env_;
  std::size_t order_ = 0;
  std::vector<MultiPoly> c_;
};

TruncSeries series_mul(const TruncSeries& s, const TruncSeries& u);
TruncSeries series_inverse(const TruncSeries& s);

}  // namespace hlpos::exactalg
