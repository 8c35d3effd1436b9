#include "hlpos/verifycli/report.hpp"

#include <cstdio>
#include <sstream>

namespace hlpos::verifycli {

using json = nlohmann::json;

json certificate_json(const Certificate& c) {
  return json{{"check", c.check},
              {"parameters", c.parameters},
              {"verdict", c.pass ? "pass" : "fail"},
              {"cases", c.cases},
              {"failures", c.failures},
              {"witness", c.witness},
              {"elapsed_ms", c.elapsed_ms},
              {"tool_version", c.tool_version}};
}

json report_json(const std::vector<Certificate>& certificates) {
  json certs = json::array();
  std::size_t passed = 0;
  for (const auto& c : certificates) {
    certs.push_back(certificate_json(c));
    passed += c.pass;
  }
  return json{{"schema", kReportSchema},
              {"tool_version", tool_version()},
              {"summary", {{"checks", certificates.size()}, {"passed", passed}, {"failed", certificates.size() - passed}}},
              {"certificates", certs}};
}

std::string report_text(const std::vector<Certificate>& certificates) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : certificates) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", c.elapsed_ms);
    out << (c.pass ? "PASS " : "FAIL ") << c.check << "  " << c.parameters.dump() << "  cases=" << c.cases
        << " failures=" << c.failures << " time=" << ms << "ms\n";
    if (!c.pass) out << "     witness: " << c.witness.dump() << '\n';
    passed += c.pass;
  }
  out << passed << '/' << certificates.size() << " checks passed\n";
  return out.str();
}

json operator_json(const exactalg::SparseOperator<exactalg::MultiPoly>& op,
                   const std::function<std::string(std::size_t)>& in_label,
                   const std::function<std::string(std::size_t)>& out_label) {
  json entries = json::array();
  for (std::size_t j = 0; j < op.cols(); ++j) {
    for (const auto& [row, c] : op.column(j)) {
      entries.push_back({{"basis_in", in_label(j)}, {"basis_out", out_label(row)}, {"coefficient", c.pretty()}});
    }
  }
  return entries;
}

}  // namespace hlpos::verifycli
