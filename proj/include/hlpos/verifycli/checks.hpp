#pragma once

#include "hlpos/combinat/partition.hpp"
#include "hlpos/exactalg/rational.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlpos::verifycli {

using exactalg::Rational;

// Bad check name or parameters; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Rational> default_t_samples();  // 0, 1/4, 1/2, 3/4
std::vector<Rational> parse_t_samples(const std::string& text);

// Unset fields fall back to per-check defaults (see check_defaults()).
struct CheckParams {
  std::optional<int> n;
  std::optional<combinat::Partition> lambda;
  std::optional<int> max_size;
  std::optional<int> max_length;
  std::vector<Rational> t_samples = default_t_samples();
  // Degree budget: r for Pieri checks, k and l for commutation, k for the
  // t = 0 reduction.
  std::optional<int> alpha_degree;
  bool mutate = false;  // yang-baxter only
};

struct Certificate {
  std::string check;
  nlohmann::json parameters;  // resolved values actually used
  bool pass = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  nlohmann::json witness;  // null on pass; first counterexample otherwise
  double elapsed_ms = 0;
  std::string tool_version;
};

const std::vector<std::string>& check_names();

// Throws UsageError for an unknown check or inconsistent parameters.
// Mathematical failures are reported in the certificate, never thrown.
Certificate run_check(const std::string& name, const CheckParams& params);

// Copy of `params` without the fields `name` does not take; campaign-wide
// defaults go through this so that, say, a global n skips yang-baxter.
CheckParams applicable_params(const std::string& name, CheckParams params);

// Throws UsageError exactly when run_check would, without running anything.
void validate_check(const std::string& name, const CheckParams& params);

std::string tool_version();

}  // namespace hlpos::verifycli
