#include "hlpos/exactalg/series.hpp"

#include <stdexcept>

namespace hlpos::exactalg {

TruncSeries::TruncSeries(EnvPtr env, std::size_t order)
    : env_(env), order_(order), c_(order + 1, MultiPoly(env)) {}

TruncSeries::TruncSeries(std::size_t order, std::vector<MultiPoly> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (c_.size() > order + 1) throw std::invalid_argument("series has coefficients beyond its order");
  for (const auto& c : c_) {
    if (c.env()) {
      env_ = env_ ? common_env(MultiPoly(env_), c) : c.env();
    }
  }
  c_.resize(order + 1, MultiPoly(env_));
}

TruncSeries TruncSeries::constant(EnvPtr env, std::size_t order, MultiPoly c) {
  TruncSeries s(env, order);
  s.c_[0] = std::move(c);
  return s;
}

TruncSeries TruncSeries::linear(EnvPtr env, std::size_t order, MultiPoly c0, MultiPoly c1) {
  TruncSeries s(env, order);
  s.c_[0] = std::move(c0);
  if (order >= 1) s.c_[1] = std::move(c1);
  return s;
}

bool TruncSeries::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void TruncSeries::check_compatible(const TruncSeries& rhs) const {
  if (order_ != rhs.order_) {
    throw std::invalid_argument("series truncation orders differ: " + std::to_string(order_) + " vs " +
                                std::to_string(rhs.order_));
  }
  if (env_ && rhs.env_) common_env(MultiPoly(env_), MultiPoly(rhs.env_));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  if (c_.empty()) return *this = rhs;
  if (rhs.c_.empty()) return *this;
  check_compatible(rhs);
  if (!env_) env_ = rhs.env_;
  for (std::size_t k = 0; k <= order_; ++k) c_[k] += rhs.c_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  if (rhs.c_.empty()) return *this;
  if (c_.empty()) *this = TruncSeries(rhs.env_, rhs.order_);
  check_compatible(rhs);
  if (!env_) env_ = rhs.env_;
  for (std::size_t k = 0; k <= order_; ++k) c_[k] -= rhs.c_[k];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.c_.empty() || b.c_.empty()) return TruncSeries();
  a.check_compatible(b);
  TruncSeries out(a.env_ ? a.env_ : b.env_, a.order_);
  for (std::size_t i = 0; i <= a.order_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.order_; ++j) {
      if (!b.c_[j].is_zero()) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& rhs) { return *this = *this * rhs; }

TruncSeries& TruncSeries::operator*=(const MultiPoly& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

TruncSeries TruncSeries::inverse() const {
  if (c_.empty() || !c_[0].is_constant() || c_[0].is_zero()) {
    throw std::domain_error("series inverse needs a nonzero rational constant term");
  }
  const Rational inv0 = Rational(1) / c_[0].constant_term();
  TruncSeries out(env_, order_);
  out.c_[0] = MultiPoly(env_, inv0);
  for (std::size_t k = 1; k <= order_; ++k) {
    MultiPoly acc(env_);
    for (std::size_t j = 1; j <= k; ++j) {
      if (!c_[j].is_zero()) acc += c_[j] * out.c_[k - j];
    }
    out.c_[k] = acc * (-inv0);
  }
  return out;
}

TruncSeries TruncSeries::eval_t(const Rational& t0) const {
  TruncSeries out = *this;
  for (auto& x : out.c_) x = x.eval_t(t0);
  return out;
}

TruncSeries series_mul(const TruncSeries& s, const TruncSeries& u) { return s * u; }
TruncSeries series_inverse(const TruncSeries& s) { return s.inverse(); }

}  // namespace hlpos::exactalg
