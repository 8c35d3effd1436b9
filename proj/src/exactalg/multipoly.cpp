#include "hlpos/exactalg/multipoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hlpos::exactalg {

VarEnv::VarEnv(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > Monomial::kMaxVars) {
    throw std::invalid_argument("at most 7 variables are supported, got " + std::to_string(names_.size()));
  }
}

std::string VarEnv::describe() const {
  std::string s = "[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) s += ",";
    s += names_[i];
  }
  return s + "]";
}

EnvPtr make_env(std::vector<std::string> names) {
  return std::make_shared<const VarEnv>(std::move(names));
}

EnvPtr standard_env(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, EnvPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    std::vector<std::string> names{"t"};
    for (std::size_t i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
    slot = make_env(std::move(names));
  }
  return slot;
}

EnvPtr common_env(const MultiPoly& lhs, const MultiPoly& rhs) {
  const EnvPtr& a = lhs.env();
  const EnvPtr& b = rhs.env();
  if (a == b) return a;
  if (!a) return b;
  if (!b) return a;
  if (*a == *b) return a;
  throw std::invalid_argument("environment mismatch: " + a->describe() + " vs " + b->describe());
}

namespace {

bool descending(const Term& x, const Term& y) { return x.mono > y.mono; }

// Sorts descending and merges equal monomials, dropping zero sums.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), descending);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      sum += terms[j].coeff;
      ++j;
    }
    if (sgn(sum) != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

MultiPoly::MultiPoly(EnvPtr env) : env_(std::move(env)) {}

MultiPoly::MultiPoly(EnvPtr env, Rational constant) : env_(std::move(env)) {
  if (sgn(constant) != 0) terms_.push_back({Monomial(), canonical(std::move(constant))});
}

MultiPoly::MultiPoly(EnvPtr env, std::vector<Term> terms) : env_(std::move(env)), terms_(std::move(terms)) {
  normalize();
}

MultiPoly MultiPoly::variable(EnvPtr env, std::size_t var, unsigned power) {
  if (!env || var >= env->arity()) throw std::invalid_argument("variable index outside environment");
  return monomial(std::move(env), Monomial::variable(var, power), Rational(1));
}

MultiPoly MultiPoly::monomial(EnvPtr env, Monomial mono, Rational coeff) {
  MultiPoly p(std::move(env));
  if (sgn(coeff) != 0) p.terms_.push_back({mono, std::move(coeff)});
  p.normalize();
  return p;
}

void MultiPoly::normalize() {
  for (auto& t : terms_) t.coeff.canonicalize();
  canonicalize(terms_);
  if (!env_ && !is_constant()) throw std::invalid_argument("non-constant polynomial needs an environment");
  if (env_) {
    for (const auto& t : terms_) {
      for (std::size_t v = env_->arity(); v < Monomial::kMaxVars; ++v) {
        if (t.mono.exponent(v) != 0) throw std::invalid_argument("monomial uses a variable outside the environment");
      }
    }
  }
}

void MultiPoly::bind_env(const MultiPoly& other) { env_ = common_env(*this, other); }

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial()); }

Rational MultiPoly::coefficient(Monomial mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, Monomial m) { return t.mono > m; });
  return (it != terms_.end() && it->mono == mono) ? it->coeff : Rational(0);
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
  return d;
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  bind_env(rhs);
  if (rhs.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->mono > b->mono)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono > a->mono) {
      merged.push_back(*b++);
    } else {
      Rational s = a->coeff + b->coeff;
      if (sgn(s) != 0) merged.push_back({a->mono, std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this += -rhs; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  MultiPoly out(common_env(lhs, rhs));
  if (lhs.terms_.empty() || rhs.terms_.empty()) return out;
  std::vector<Term> prod;
  prod.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (const auto& x : lhs.terms_) {
    for (const auto& y : rhs.terms_) prod.push_back({x.mono * y.mono, x.coeff * y.coeff});
  }
  canonicalize(prod);
  out.terms_ = std::move(prod);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  const Rational f = canonical(c);
  for (auto& t : terms_) t.coeff *= f;
  return *this;
}

bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
  common_env(lhs, rhs);
  return lhs.terms_ == rhs.terms_;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rational& value) const {
  if (env_ && var >= env_->arity()) throw std::invalid_argument("variable index outside environment");
  std::vector<Term> out;
  out.reserve(terms_.size());
  const Rational x = canonical(value);
  std::vector<Rational> powers{Rational(1)};
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exponent(var);
    while (powers.size() <= e) powers.push_back(powers.back() * x);
    out.push_back({t.mono.without(var), t.coeff * powers[e]});
  }
  return MultiPoly(env_, std::move(out));
}

Rational MultiPoly::evaluate(std::span<const Rational> values) const {
  const std::size_t arity = env_ ? env_->arity() : 0;
  if (values.size() != arity) throw std::invalid_argument("evaluate: wrong number of values");
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational term = t.coeff;
    for (std::size_t v = 0; v < arity; ++v) {
      for (unsigned k = 0; k < t.mono.exponent(v); ++k) term *= canonical(values[v]);
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::permute_variables(std::span<const std::size_t> perm) const {
  const std::size_t arity = env_ ? env_->arity() : 0;
  if (perm.size() != arity) throw std::invalid_argument("permutation arity mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::vector<unsigned> e(arity);
  for (const auto& t : terms_) {
    for (std::size_t v = 0; v < arity; ++v) e[perm[v]] = t.mono.exponent(v);
    out.push_back({Monomial::from_exponents(e), t.coeff});
  }
  return MultiPoly(env_, std::move(out));
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  const EnvPtr env = common_env(*this, divisor);
  // Remainder kept in an ordered map so each elimination step costs
  // O(|divisor| log |remainder|) instead of a full merge.
  std::map<Monomial, Rational, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace(t.mono, t.coeff);
  const Term& lead = divisor.leading_term();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!top->first.divisible_by(lead.mono)) return std::nullopt;
    const Monomial qm = top->first / lead.mono;
    const Rational qc = top->second / lead.coeff;
    for (const auto& d : divisor.terms_) {
      const Monomial m = qm * d.mono;
      auto [it, inserted] = rem.try_emplace(m, 0);
      it->second -= qc * d.coeff;
      if (sgn(it->second) == 0) rem.erase(it);
    }
    quotient.push_back({qm, qc});
  }
  return MultiPoly(env, std::move(quotient));
}

bool MultiPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return sgn(t.coeff) >= 0; });
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  const std::size_t arity = env_ ? env_->arity() : 0;
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += terms_[i].coeff.get_str();
    for (std::size_t v = 0; v < arity; ++v) {
      out += " * " + env_->name(v) + "^" + std::to_string(terms_[i].mono.exponent(v));
    }
  }
  return out;
}

std::string MultiPoly::pretty() const {
  if (terms_.empty()) return "0";
  const std::size_t arity = env_ ? env_->arity() : 0;
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    Rational c = t.coeff;
    if (i == 0) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    bool first = true;
    if (c != 1 || t.mono.is_one()) {
      os << c.get_str();
      first = false;
    }
    for (std::size_t v = 0; v < arity; ++v) {
      const unsigned e = t.mono.exponent(v);
      if (e == 0) continue;
      if (!first) os << "*";
      os << env_->name(v);
      if (e > 1) os << "^" << e;
      first = false;
    }
  }
  return os.str();
}

MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, ArithOp op) {
  switch (op) {
    case ArithOp::add: return p + q;
    case ArithOp::sub: return p - q;
    case ArithOp::mul: return p * q;
  }
  throw std::invalid_argument("unknown arithmetic op");
}

}  // namespace hlpos::exactalg
