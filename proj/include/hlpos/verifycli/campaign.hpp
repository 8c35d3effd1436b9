#pragma once

#include "hlpos/verifycli/checks.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hlpos::verifycli {

// Malformed campaign file; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CampaignItem {
  std::string check;
  CheckParams params;
};

// Items run in file order; that order is also the report order.
struct Campaign {
  std::vector<CampaignItem> items;
  int threads = 0;  // OpenMP threads per kernel; 0 keeps the runtime default
  int workers = 1;  // campaign items in flight at once
};

// Format: '#' comments and blank lines are ignored. "key = value" lines
// before the first section are campaign-wide: threads, workers, and any
// check parameter, which then serves as the default for every section.
// Each "[check-name]" section adds one item; the same check may appear
// several times. Check parameter keys: n, lambda, max-size, max-length,
// t-samples, alpha-degree, mutate.
Campaign parse_campaign(std::istream& in);
Campaign load_campaign(const std::string& path);

// Runs every item with a pool of `workers` threads and returns the
// certificates in item order.
std::vector<Certificate> run_campaign(const Campaign& campaign);

}  // namespace hlpos::verifycli
