#include "hlpos/verifycli/checks.hpp"

#include "hlpos/exactalg/sparse_operator.hpp"
#include "hlpos/extvertex/pi.hpp"
#include "hlpos/plactic/subset.hpp"
#include "hlpos/sixvertex/r_matrix.hpp"
#include "hlpos/sixvertex/theta.hpp"
#include "hlpos/sixvertex/transfer.hpp"
#include "hlpos/symfunc/basic.hpp"
#include "hlpos/symfunc/hall_littlewood.hpp"
#include "hlpos/symfunc/pieri.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#ifndef HLPOS_VERSION
#define HLPOS_VERSION "unknown"
#endif

namespace hlpos::verifycli {

using combinat::Partition;
using exactalg::MultiPoly;
using exactalg::standard_env;
using json = nlohmann::json;
using PolyOperator = exactalg::SparseOperator<MultiPoly>;

std::string tool_version() { return HLPOS_VERSION; }

std::vector<Rational> default_t_samples() { return {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)}; }

std::vector<Rational> parse_t_samples(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(exactalg::parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError("bad t sample '" + item + "': " + e.what());
    }
    if (out.back() < 0 || out.back() >= 1) throw UsageError("t samples must lie in [0, 1)");
  }
  if (out.empty()) throw UsageError("empty t sample list");
  return out;
}

namespace {

// Per-check defaults: n range, partition size bound, degree budget.
struct Defaults {
  int n_lo, n_hi;
  int max_size;  // < 0: the check takes no partition
  int alpha_degree;  // < 0: the check takes no degree
};

const std::map<std::string, Defaults>& defaults_table() {
  static const std::map<std::string, Defaults> table{
      {"hl-equality", {1, 5, 5, -1}},
      {"schur-degeneration", {1, 5, 5, -1}},
      {"pieri", {4, 4, 3, 3}},
      {"yang-baxter", {0, 0, -1, -1}},
      {"commutation", {1, 4, -1, 4}},
      {"plactic-positivity", {1, 4, 4, -1}},
      {"theta-vs-pi", {1, 4, 4, -1}},
      {"hl-positivity", {1, 4, 4, -1}},
      {"stochastic-corollary", {1, 4, 4, -1}},
      {"t0-plactic-reduction", {1, 4, -1, 3}},
      {"pieri-operator", {1, 3, 3, 2}},
  };
  return table;
}

constexpr int kMaxN = 6;
constexpr int kBivariateOrderCap = 3;

struct Resolved {
  std::string check;
  std::vector<int> ns;
  std::optional<Partition> lambda;
  int max_size = 0;
  std::optional<int> max_length;
  int alpha_degree = 0;
  std::vector<Rational> t_samples;
  bool mutate = false;
  bool uses_partitions = false;

  std::vector<Partition> grid(int n) const {
    if (lambda) {
      if (static_cast<int>(lambda->length()) > n) return {};
      return {*lambda};
    }
    return combinat::partitions_up_to(max_size, std::min(n, max_length.value_or(n)));
  }
};

Resolved resolve(const std::string& name, const CheckParams& p) {
  const auto it = defaults_table().find(name);
  if (it == defaults_table().end()) throw UsageError("unknown check '" + name + "'");
  const Defaults& d = it->second;
  Resolved r;
  r.check = name;
  r.uses_partitions = d.max_size >= 0;
  r.t_samples = p.t_samples;
  if (r.t_samples.empty()) throw UsageError("empty t sample list");
  r.mutate = p.mutate;
  if (p.mutate && name != "yang-baxter") throw UsageError("--mutate only applies to yang-baxter");
  if (name == "yang-baxter") {
    if (p.n || p.lambda || p.max_size || p.max_length || p.alpha_degree) {
      throw UsageError("yang-baxter takes no n, partition or degree parameters");
    }
    return r;
  }
  if (p.n) {
    if (*p.n < 1 || *p.n > kMaxN) throw UsageError("n must be between 1 and " + std::to_string(kMaxN));
    r.ns = {*p.n};
  } else {
    for (int n = d.n_lo; n <= d.n_hi; ++n) r.ns.push_back(n);
  }
  if (!r.uses_partitions && (p.lambda || p.max_size || p.max_length)) {
    throw UsageError(name + " takes no partition parameters");
  }
  if (r.uses_partitions) {
    if (p.lambda && (p.max_size || p.max_length)) {
      throw UsageError("give either --lambda or --max-size/--max-length, not both");
    }
    r.lambda = p.lambda;
    if (p.lambda && p.n && static_cast<int>(p.lambda->length()) > *p.n) {
      throw UsageError("lambda = " + p.lambda->to_string() + " has more than n parts");
    }
    r.max_size = p.max_size.value_or(d.max_size);
    if (r.max_size < 0 || r.max_size > 8) throw UsageError("max-size must be between 0 and 8");
    r.max_length = p.max_length;
    if (p.max_length && *p.max_length < 0) throw UsageError("max-length must be nonnegative");
  }
  if (d.alpha_degree < 0 && p.alpha_degree) throw UsageError(name + " takes no degree budget");
  r.alpha_degree = p.alpha_degree.value_or(d.alpha_degree);
  if (d.alpha_degree >= 0 && (r.alpha_degree < 0 || r.alpha_degree > 8)) {
    throw UsageError("alpha-degree must be between 0 and 8");
  }
  return r;
}

json resolved_json(const Resolved& r) {
  json j = json::object();
  std::vector<std::string> ts;
  for (const auto& t : r.t_samples) ts.push_back(exactalg::to_string(t));
  j["t_samples"] = ts;
  if (r.check == "yang-baxter") {
    j["mutate"] = r.mutate;
    return j;
  }
  j["n"] = r.ns;
  if (r.uses_partitions) {
    if (r.lambda) {
      j["lambda"] = r.lambda->to_string();
    } else {
      j["max_size"] = r.max_size;
      j["max_length"] = r.max_length ? json(*r.max_length) : json(nullptr);
    }
  }
  if (defaults_table().at(r.check).alpha_degree >= 0) j["alpha_degree"] = r.alpha_degree;
  return j;
}

// Counts cases and keeps the first counterexample.
class Recorder {
 public:
  explicit Recorder(const Resolved& r) : r_(r) {}

  void pass() { ++cases_; }
  void fail(json witness) {
    ++cases_;
    ++failures_;
    if (witness_.is_null()) witness_ = std::move(witness);
  }
  void expect(bool ok, const std::function<json()>& witness) { ok ? pass() : fail(witness()); }

  // Command line reproducing a single failing instance.
  std::string replay(std::optional<int> n, const std::optional<Partition>& lambda, std::optional<int> degree = {},
                     const std::optional<Rational>& t = {}) const {
    std::string s = "hlpos verify " + r_.check;
    if (n) s += " --n " + std::to_string(*n);
    if (lambda) s += " --lambda " + (lambda->length() == 0 ? std::string("0") : lambda->to_string());
    if (degree) s += " --alpha-degree " + std::to_string(*degree);
    if (t) s += " --t-samples " + exactalg::to_string(*t);
    if (r_.mutate) s += " --mutate";
    return s;
  }

  std::size_t cases() const { return cases_; }
  std::size_t failures() const { return failures_; }
  json witness() const { return witness_; }

 private:
  const Resolved& r_;
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  json witness_;
};

std::string vlabel(std::size_t v, int n) { return sixvertex::vstate_to_string(static_cast<sixvertex::VState>(v), n); }

// Witness for two operators that should agree.
json operator_mismatch(const PolyOperator& got, const PolyOperator& want, int n, const std::string& got_name,
                       const std::string& want_name) {
  json w;
  if (const auto d = exactalg::first_difference(got, want)) {
    w["basis_in"] = vlabel(d->second, n);
    w["basis_out"] = vlabel(d->first, n);
    w[got_name] = got.entry(d->first, d->second).pretty();
    w[want_name] = want.entry(d->first, d->second).pretty();
  }
  return w;
}

json with(json base, const json& extra) {
  for (const auto& [k, v] : extra.items()) base[k] = v;
  return base;
}

MultiPoly ratfunc_to_poly(const exactalg::RatFuncT& f, const exactalg::EnvPtr& env) {
  if (!f.is_polynomial()) throw std::logic_error("multiplicity is not polynomial in t");
  return (f.num() * exactalg::UPoly(Rational(1) / f.den().leading())).to_multipoly(env);
}

void run_hl_equality(const Resolved& r, Recorder& rec, bool schur) {
  for (int n : r.ns) {
    for (const auto& lambda : r.grid(n)) {
      const auto tableau = symfunc::hl_tableau_sum(lambda, n);
      const auto sym = symfunc::hl_symmetrization(lambda, n);
      if (!schur) {
        rec.expect(tableau == sym, [&] {
          return json{{"n", n}, {"lambda", lambda.to_string()}, {"difference", (tableau - sym).pretty()},
                      {"replay", rec.replay(n, lambda)}};
        });
        continue;
      }
      const auto s = symfunc::schur_jacobi_trudi(lambda, n);
      const auto t0 = tableau.eval_t(0);
      const auto s0 = sym.eval_t(0);
      rec.expect(t0 == s && s0 == s, [&] {
        return json{{"n", n}, {"lambda", lambda.to_string()}, {"tableau_minus_schur", (t0 - s).pretty()},
                    {"symmetrization_minus_schur", (s0 - s).pretty()}, {"replay", rec.replay(n, lambda)}};
      });
    }
  }
}

void run_pieri(const Resolved& r, Recorder& rec) {
  for (int n : r.ns) {
    auto env = standard_env(static_cast<std::size_t>(n));
    for (const auto& lambda : r.grid(n)) {
      const auto& p = symfunc::hl_polynomial(lambda, n);
      for (int k = 1; k <= r.alpha_degree; ++k) {
        const auto base = json{{"n", n}, {"lambda", lambda.to_string()}, {"r", k},
                               {"replay", rec.replay(n, lambda, k)}};
        // horizontal: P_lambda g_r = sum phi P_mu, and the triangular solve
        // recovers exactly the phi's
        const auto lhs_h = p * symfunc::g_poly(k, n);
        const auto solve_h = symfunc::expand_in_hl_basis(lhs_h, n);
        MultiPoly rhs_h(env);
        bool coeffs_ok = true;
        for (const auto& mu : combinat::horizontal_strips_above(lambda, k, n)) {
          const auto phi = symfunc::pieri_phi(lambda, mu);
          rhs_h += phi.to_multipoly(env) * symfunc::hl_polynomial(mu, n);
          const auto it = solve_h.find(mu);
          coeffs_ok = coeffs_ok && (it == solve_h.end() ? phi.is_zero() : it->second == phi);
        }
        for (const auto& [mu, c] : solve_h) coeffs_ok = coeffs_ok && combinat::is_horizontal_strip(lambda, mu);
        rec.expect(lhs_h == rhs_h && coeffs_ok, [&] {
          return with(base, {{"kind", "horizontal"}, {"difference", (lhs_h - rhs_h).pretty()},
                             {"triangular_solve_agrees", coeffs_ok}});
        });
        // vertical: P_lambda e_r = sum psi' P_mu
        const auto lhs_v = p * symfunc::elementary_e(k, n);
        const auto solve_v = symfunc::expand_in_hl_basis(lhs_v, n);
        MultiPoly rhs_v(env);
        coeffs_ok = true;
        for (const auto& mu : combinat::vertical_strips_above(lambda, k, n)) {
          const auto psi = symfunc::pieri_psi_prime(lambda, mu);
          rhs_v += ratfunc_to_poly(psi, env) * symfunc::hl_polynomial(mu, n);
          const auto it = solve_v.find(mu);
          coeffs_ok = coeffs_ok && (it == solve_v.end() ? psi.is_zero() : exactalg::RatFuncT(it->second) == psi);
        }
        for (const auto& [mu, c] : solve_v) coeffs_ok = coeffs_ok && combinat::is_vertical_strip(lambda, mu);
        rec.expect(lhs_v == rhs_v && coeffs_ok, [&] {
          return with(base, {{"kind", "vertical"}, {"difference", (lhs_v - rhs_v).pretty()},
                             {"triangular_solve_agrees", coeffs_ok}});
        });
      }
    }
  }
}

void run_yang_baxter(const Resolved& r, Recorder& rec) {
  const auto report = sixvertex::yang_baxter_check(r.mutate);
  rec.expect(report.holds, [&] {
    json w{{"differing_entries", report.differing_entries}, {"difference", report.difference},
           {"replay", rec.replay({}, {})}};
    if (report.witness) {
      // V x V x V basis, factor f colored 1 iff bit f-1 is set
      w["basis_in"] = vlabel(report.witness->second, 3);
      w["basis_out"] = vlabel(report.witness->first, 3);
    }
    return w;
  });
}

void run_commutation(const Resolved& r, Recorder& rec) {
  const int order = std::min(r.alpha_degree, kBivariateOrderCap);
  for (int n : r.ns) {
    for (int k = 1; k <= r.alpha_degree; ++k) {
      for (int l = 1; l < k; ++l) {
        const auto c = exactalg::commutator(sixvertex::transfer_Tk(k, n), sixvertex::transfer_Tk(l, n));
        rec.expect(c.is_zero(), [&] {
          return json{{"n", n}, {"k", k}, {"l", l}, {"nonzero_entries", c.nonzeros()},
                      {"replay", rec.replay(n, {}, k)}};
        });
      }
    }
    const auto tilde = sixvertex::transfer_T_tilde(n, static_cast<std::size_t>(order));
    for (int j = 0; j <= order; ++j) {
      const auto tj = sixvertex::constant_series(sixvertex::transfer_Tk(j, n), static_cast<std::size_t>(order));
      const auto c = exactalg::commutator(tilde, tj);
      rec.expect(c.is_zero(), [&] {
        return json{{"n", n}, {"beta_degree", j}, {"alpha_order", order}, {"nonzero_entries", c.nonzeros()},
                    {"replay", rec.replay(n, {}, r.alpha_degree)}};
      });
    }
  }
}

void run_plactic_positivity(const Resolved& r, Recorder& rec) {
  for (int n : r.ns) {
    for (const auto& lambda : r.grid(n)) {
      const auto op = plactic::plactic_schur_operator(lambda, n);
      const auto tab = plactic::plactic_schur_tableau_operator(lambda, n);
      for (std::size_t s = 0; s < op.cols(); ++s) {
        const auto& col = op.column(s);
        const auto bad = std::find_if(col.begin(), col.end(),
                                      [](const auto& e) { return !e.second.has_nonnegative_coefficients(); });
        const bool agrees = col == tab.column(s);
        rec.expect(bad == col.end() && agrees, [&] {
          json w{{"n", n}, {"lambda", lambda.to_string()},
                 {"subset", plactic::subset_to_string(static_cast<plactic::SubsetState>(s), n)},
                 {"agrees_with_tableau_sum", agrees}, {"replay", rec.replay(n, lambda)}};
          if (bad != col.end()) {
            w["image"] = plactic::subset_to_string(bad->first, n);
            w["coefficient"] = bad->second.pretty();
          }
          return w;
        });
      }
    }
  }
}

// theta_P throws when the image is not polynomial in t; that is a failed
// instance, not an abort.
const PolyOperator* theta_or_fail(const Partition& lambda, int n, Recorder& rec) {
  try {
    return &sixvertex::theta_P(lambda, n);
  } catch (const std::logic_error& e) {
    rec.fail({{"n", n}, {"lambda", lambda.to_string()}, {"error", e.what()}, {"replay", rec.replay(n, lambda)}});
    return nullptr;
  }
}

void run_theta_vs_pi(const Resolved& r, Recorder& rec) {
  for (int n : r.ns) {
    for (const auto& lambda : r.grid(n)) {
      const auto* theta = theta_or_fail(lambda, n, rec);
      if (!theta) continue;
      const auto& pi = extvertex::pi_lambda_cached(lambda, n);
      rec.expect(*theta == pi, [&] {
        return with(operator_mismatch(*theta, pi, n, "theta", "pi"),
                    {{"n", n}, {"lambda", lambda.to_string()}, {"replay", rec.replay(n, lambda)}});
      });
    }
  }
}

void run_hl_positivity(const Resolved& r, Recorder& rec) {
  for (int n : r.ns) {
    for (const auto& lambda : r.grid(n)) {
      const auto* theta = theta_or_fail(lambda, n, rec);
      if (!theta) continue;
      for (const auto& t0 : r.t_samples) {
        std::optional<std::pair<std::size_t, std::size_t>> bad;
        MultiPoly value;
        for (std::size_t v = 0; v < theta->cols() && !bad; ++v) {
          for (const auto& [row, c] : theta->column(v)) {
            value = c.eval_t(t0);
            if (!value.has_nonnegative_coefficients()) {
              bad = std::pair{static_cast<std::size_t>(row), v};
              break;
            }
          }
        }
        rec.expect(!bad, [&] {
          return json{{"n", n},
                      {"lambda", lambda.to_string()},
                      {"t", exactalg::to_string(t0)},
                      {"basis_in", vlabel(bad->second, n)},
                      {"basis_out", vlabel(bad->first, n)},
                      {"entry", value.pretty()},
                      {"replay", rec.replay(n, lambda, {}, t0)}};
        });
      }
    }
  }
}

void run_stochastic(const Resolved& r, Recorder& rec) {
  for (int n : r.ns) {
    for (const auto& lambda : r.grid(n)) {
      const auto* theta = theta_or_fail(lambda, n, rec);
      if (!theta) continue;
      const auto& p = symfunc::hl_polynomial(lambda, n);
      const auto sums = theta->column_sums();
      const auto bad = std::find_if(sums.begin(), sums.end(), [&](const MultiPoly& s) { return !(s == p); });
      rec.expect(bad == sums.end(), [&] {
        return json{{"n", n},
                    {"lambda", lambda.to_string()},
                    {"basis_in", vlabel(static_cast<std::size_t>(bad - sums.begin()), n)},
                    {"column_sum_minus_P", (*bad - p).pretty()},
                    {"replay", rec.replay(n, lambda)}};
      });
    }
  }
}

void run_t0_reduction(const Resolved& r, Recorder& rec) {
  for (int n : r.ns) {
    for (int k = 1; k <= r.alpha_degree; ++k) {
      const auto at0 = sixvertex::transfer_Tk(k, n).transform([](const MultiPoly& c) { return c.eval_t(0); });
      const auto h = plactic::h_r_operator(k, n);
      rec.expect(at0 == h, [&] {
        return with(operator_mismatch(at0, h, n, "T_k_at_t0", "H_k"),
                    {{"n", n}, {"k", k}, {"replay", rec.replay(n, {}, k)}});
      });
    }
  }
}

void run_pieri_operator(const Resolved& r, Recorder& rec) {
  for (int n : r.ns) {
    const auto t_alpha = sixvertex::transfer_T(n, static_cast<std::size_t>(r.alpha_degree));
    for (const auto& lambda : r.grid(n)) {
      const auto& pi = extvertex::pi_lambda_cached(lambda, n);
      for (int k = 0; k <= r.alpha_degree; ++k) {
        const auto lhs = exactalg::compose(sixvertex::transfer_Tk(k, n), pi);
        const auto rhs = extvertex::pieri_operator_rhs(lambda, k, n);
        rec.expect(lhs == rhs, [&] {
          return with(operator_mismatch(lhs, rhs, n, "T_r_Pi", "phi_sum"),
                      {{"n", n}, {"lambda", lambda.to_string()}, {"r", k}, {"replay", rec.replay(n, lambda, k)}});
        });
      }
      const auto order = static_cast<std::size_t>(r.alpha_degree);
      const auto lhs = exactalg::compose(t_alpha, sixvertex::constant_series(pi, order));
      const auto rhs = extvertex::pieri_series_rhs(lambda, n, order);
      rec.expect(lhs == rhs, [&] {
        json w{{"n", n}, {"lambda", lambda.to_string()}, {"kind", "series"}, {"alpha_order", order},
               {"replay", rec.replay(n, lambda, r.alpha_degree)}};
        if (const auto d = exactalg::first_difference(lhs, rhs)) {
          w["basis_in"] = vlabel(d->second, n);
          w["basis_out"] = vlabel(d->first, n);
        }
        return w;
      });
    }
  }
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "hl-equality",   "schur-degeneration", "pieri",        "yang-baxter",
      "commutation",   "plactic-positivity", "theta-vs-pi",  "hl-positivity",
      "stochastic-corollary", "t0-plactic-reduction", "pieri-operator"};
  return names;
}

CheckParams applicable_params(const std::string& name, CheckParams params) {
  const auto it = defaults_table().find(name);
  if (it == defaults_table().end()) throw UsageError("unknown check '" + name + "'");
  if (name == "yang-baxter") params.n.reset();
  if (name != "yang-baxter") params.mutate = false;
  if (it->second.max_size < 0) {
    params.lambda.reset();
    params.max_size.reset();
    params.max_length.reset();
  }
  if (it->second.alpha_degree < 0) params.alpha_degree.reset();
  return params;
}

void validate_check(const std::string& name, const CheckParams& params) { resolve(name, params); }

Certificate run_check(const std::string& name, const CheckParams& params) {
  const Resolved r = resolve(name, params);
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(r);
  try {
    if (name == "hl-equality") run_hl_equality(r, rec, false);
    else if (name == "schur-degeneration") run_hl_equality(r, rec, true);
    else if (name == "pieri") run_pieri(r, rec);
    else if (name == "yang-baxter") run_yang_baxter(r, rec);
    else if (name == "commutation") run_commutation(r, rec);
    else if (name == "plactic-positivity") run_plactic_positivity(r, rec);
    else if (name == "theta-vs-pi") run_theta_vs_pi(r, rec);
    else if (name == "hl-positivity") run_hl_positivity(r, rec);
    else if (name == "stochastic-corollary") run_stochastic(r, rec);
    else if (name == "t0-plactic-reduction") run_t0_reduction(r, rec);
    else if (name == "pieri-operator") run_pieri_operator(r, rec);
  } catch (const std::exception& e) {
    // An internal invariant broke mid-check (e.g. a conservation assertion).
    rec.fail({{"error", e.what()}});
  }
  Certificate c;
  c.check = name;
  c.parameters = resolved_json(r);
  c.cases = rec.cases();
  c.failures = rec.failures();
  c.pass = c.failures == 0;
  c.witness = rec.witness();
  c.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  c.tool_version = tool_version();
  return c;
}

}  // namespace hlpos::verifycli
