#pragma once

#include "hlpos/exactalg/sparse_operator.hpp"
#include "hlpos/exactalg/multipoly.hpp"
#include "hlpos/verifycli/checks.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace hlpos::verifycli {

inline constexpr const char* kReportSchema = "hlpos-report/1";

nlohmann::json certificate_json(const Certificate& c);
// {"schema", "tool_version", "summary", "certificates"}; keys sorted, so
// identical runs differ only in elapsed_ms.
nlohmann::json report_json(const std::vector<Certificate>& certificates);
std::string report_text(const std::vector<Certificate>& certificates);

// Nonzero entries as {"basis_in", "basis_out", "coefficient"} in column
// order, rows ascending within a column.
nlohmann::json operator_json(const exactalg::SparseOperator<exactalg::MultiPoly>& op,
                             const std::function<std::string(std::size_t)>& in_label,
                             const std::function<std::string(std::size_t)>& out_label);

}  // namespace hlpos::verifycli
