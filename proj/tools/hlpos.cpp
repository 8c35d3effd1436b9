#include "hlpos/exactalg/parallel.hpp"
#include "hlpos/extvertex/model.hpp"
#include "hlpos/extvertex/pi.hpp"
#include "hlpos/sixvertex/theta.hpp"
#include "hlpos/sixvertex/transfer.hpp"
#include "hlpos/verifycli/campaign.hpp"
#include "hlpos/verifycli/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace vc = hlpos::verifycli;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "hlpos: cannot write " << path << '\n';
    return kExitUsage;
  }
  out << text;
  return 0;
}

int emit_report(const std::vector<vc::Certificate>& certs, const std::string& format, const std::string& path) {
  const std::string text = format == "text" ? vc::report_text(certs) : vc::report_json(certs).dump(2) + "\n";
  if (const int rc = emit(text, path)) return rc;
  const bool all = std::all_of(certs.begin(), certs.end(), [](const vc::Certificate& c) { return c.pass; });
  return all ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Hall-Littlewood positivity via vertex models", "hlpos"};
  app.require_subcommand(1);
  app.set_version_flag("--version", vc::tool_version());

  // verify
  auto* verify = app.add_subcommand("verify", "Run one check and print a certificate report");
  std::string check;
  int n = 0, max_size = -1, max_length = -1, alpha_degree = -1, threads = 0;
  std::string lambda, t_samples, format = "json", out_path;
  bool mutate = false;
  verify->add_option("check", check, "Check name")->required()->check(CLI::IsMember(vc::check_names()));
  verify->add_option("--n", n, "Number of variables (default: the check's range)");
  verify->add_option("--lambda", lambda, "Single partition, e.g. 3,2,1 (0 for the empty one)");
  verify->add_option("--max-size", max_size, "Largest |lambda| in the partition grid");
  verify->add_option("--max-length", max_length, "Longest lambda in the partition grid");
  verify->add_option("--t-samples", t_samples, "Comma-separated rationals in [0,1), e.g. 0,1/4,1/2,3/4");
  verify->add_option("--alpha-degree", alpha_degree, "Degree budget in the spectral parameter");
  verify->add_option("--threads", threads, "OpenMP threads (0: runtime default)");
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "Write the report here instead of stdout");
  verify->add_flag("--mutate", mutate, "yang-baxter: perturb one weight to exercise failure detection");

  // campaign
  auto* campaign = app.add_subcommand("campaign", "Run every check listed in a config file");
  std::string config_path, campaign_format = "json", campaign_out;
  campaign->add_option("--config", config_path, "Campaign file")->required();
  campaign->add_option("--format", campaign_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  campaign->add_option("--out", campaign_out, "Write the report here instead of stdout");

  // dump
  auto* dump = app.add_subcommand("dump", "Print an operator as JSON");
  std::string what, dump_lambda, dump_out;
  int dump_n = 0, dump_k = 1;
  dump->add_option("operator", what, "theta | pi | tk | h")->required()->check(CLI::IsMember({"theta", "pi", "tk", "h"}));
  dump->add_option("--n", dump_n, "Number of variables")->required()->check(CLI::Range(1, 6));
  dump->add_option("--lambda", dump_lambda, "Partition for theta and pi");
  dump->add_option("--k", dump_k, "Degree for tk")->check(CLI::Range(0, 8));
  dump->add_option("--out", dump_out, "Write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) {
      vc::CheckParams p;
      if (verify->count("--n")) p.n = n;
      if (verify->count("--lambda")) p.lambda = hlpos::combinat::Partition::parse(lambda);
      if (verify->count("--max-size")) p.max_size = max_size;
      if (verify->count("--max-length")) p.max_length = max_length;
      if (verify->count("--t-samples")) p.t_samples = vc::parse_t_samples(t_samples);
      if (verify->count("--alpha-degree")) p.alpha_degree = alpha_degree;
      p.mutate = mutate;
      vc::validate_check(check, p);
      if (threads > 0) hlpos::exactalg::set_thread_count(threads);
      return emit_report({vc::run_check(check, p)}, format, out_path);
    }
    if (*campaign) {
      const auto c = vc::load_campaign(config_path);
      return emit_report(vc::run_campaign(c), campaign_format, campaign_out);
    }
    // dump
    using hlpos::sixvertex::vstate_to_string;
    auto vlabel = [&](std::size_t v) { return vstate_to_string(static_cast<hlpos::sixvertex::VState>(v), dump_n); };
    nlohmann::json doc;
    if (what == "h") {
      auto wlabel = [&](std::size_t w) {
        return hlpos::extvertex::wstate_to_string(static_cast<hlpos::extvertex::WState>(w), dump_n);
      };
      doc = vc::operator_json(hlpos::extvertex::transfer_H(dump_n).full(), wlabel, wlabel);
    } else if (what == "tk") {
      doc = vc::operator_json(hlpos::sixvertex::transfer_Tk(dump_k, dump_n), vlabel, vlabel);
    } else {
      if (!dump->count("--lambda")) throw vc::UsageError("dump " + what + " needs --lambda");
      const auto lam = hlpos::combinat::Partition::parse(dump_lambda);
      if (static_cast<int>(lam.length()) > dump_n) throw vc::UsageError("lambda has more than n parts");
      const auto& op = what == "theta" ? hlpos::sixvertex::theta_P(lam, dump_n)
                                       : hlpos::extvertex::pi_lambda_cached(lam, dump_n);
      doc = vc::operator_json(op, vlabel, vlabel);
    }
    return emit(doc.dump(2) + "\n", dump_out);
  } catch (const vc::UsageError& e) {
    std::cerr << "hlpos: " << e.what() << '\n';
    return kExitUsage;
  } catch (const vc::ConfigError& e) {
    std::cerr << "hlpos: config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hlpos: " << e.what() << '\n';
    return kExitUsage;
  }
}
