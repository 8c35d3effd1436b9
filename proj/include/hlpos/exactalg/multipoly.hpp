#pragma once

#include "hlpos/exactalg/monomial.hpp"
#include "hlpos/exactalg/rational.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hlpos::exactalg {

// Ordered variable names shared by all polynomials of one computation.
// Variable 0 is conventionally `t`; `standard_env(n)` builds (t, a1, ..., an).
class VarEnv {
 public:
  explicit VarEnv(std::vector<std::string> names);

  std::size_t arity() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::string describe() const;

  bool operator==(const VarEnv&) const = default;

 private:
  std::vector<std::string> names_;
};

using EnvPtr = std::shared_ptr<const VarEnv>;

EnvPtr make_env(std::vector<std::string> names);
// (t, a1, ..., an); cached, so repeated calls return the same pointer.
EnvPtr standard_env(std::size_t n);

struct Term {
  Monomial mono;
  Rational coeff;

  bool operator==(const Term&) const = default;
};

// Sparse polynomial with rational coefficients. Terms are kept in strictly
// descending graded-lex order with no zero coefficients, so two polynomials
// are equal iff their term vectors are equal.
//
// A polynomial without an environment is a bare constant; it combines with
// polynomials of any environment. Two polynomials bound to different
// environments cannot be combined.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(EnvPtr env);
  MultiPoly(EnvPtr env, Rational constant);
  MultiPoly(EnvPtr env, std::vector<Term> terms);  // normalizes

  static MultiPoly variable(EnvPtr env, std::size_t var, unsigned power = 1);
  static MultiPoly monomial(EnvPtr env, Monomial mono, Rational coeff);

  const EnvPtr& env() const { return env_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the unit monomial.
  Rational constant_term() const;
  Rational coefficient(Monomial mono) const;
  // Leading term in graded-lex order; undefined for zero.
  const Term& leading_term() const { return terms_.front(); }
  unsigned degree_in(std::size_t var) const;
  unsigned total_degree() const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const Rational& c) { return lhs *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly rhs) { return rhs *= c; }

  // Structural equality; environments must agree unless one side is an
  // unbound constant.
  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs);

  // Substitutes a rational value for one variable (the variable stays in the
  // environment with exponent zero everywhere).
  MultiPoly substitute(std::size_t var, const Rational& value) const;
  // Substitution t -> t0 (variable 0).
  MultiPoly eval_t(const Rational& t0) const { return substitute(0, t0); }
  // Full numeric evaluation; values.size() must equal the arity.
  Rational evaluate(std::span<const Rational> values) const;

  // Relabels variables: variable v becomes perm[v]. perm must be a
  // permutation of 0..arity-1.
  MultiPoly permute_variables(std::span<const std::size_t> perm) const;

  // Exact quotient, or nullopt when `divisor` does not divide *this.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  // True iff every coefficient is >= 0.
  bool has_nonnegative_coefficients() const;

  // Deterministic form `c * t^e0 * a1^e1 * ... * an^en` joined by " + ",
  // terms in canonical order; "0" for the zero polynomial.
  std::string to_string() const;
  // Compact human-readable form, e.g. "a1^2 - t*a1*a2 + 1/2".
  std::string pretty() const;

 private:
  void normalize();
  void bind_env(const MultiPoly& other);

  EnvPtr env_;
  std::vector<Term> terms_;
};

// Resolves the environment two operands share; throws std::invalid_argument
// with both environment descriptions when they differ.
EnvPtr common_env(const MultiPoly& lhs, const MultiPoly& rhs);

enum class ArithOp { add, sub, mul };
MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, ArithOp op);

}  // namespace hlpos::exactalg
