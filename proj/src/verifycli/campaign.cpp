#include "hlpos/verifycli/campaign.hpp"

#include "hlpos/exactalg/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <thread>

namespace hlpos::verifycli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw ConfigError(key + " needs an integer, got '" + value + "'");
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  throw ConfigError(key + " needs true or false, got '" + value + "'");
}

void apply_key(CheckParams& p, const std::string& key, const std::string& value) {
  if (key == "n") {
    p.n = parse_int(key, value);
  } else if (key == "lambda") {
    try {
      p.lambda = combinat::Partition::parse(value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("bad lambda '" + value + "': " + e.what());
    }
  } else if (key == "max-size") {
    p.max_size = parse_int(key, value);
  } else if (key == "max-length") {
    p.max_length = parse_int(key, value);
  } else if (key == "t-samples") {
    try {
      p.t_samples = parse_t_samples(value);
    } catch (const UsageError& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "alpha-degree") {
    p.alpha_degree = parse_int(key, value);
  } else if (key == "mutate") {
    p.mutate = parse_bool(key, value);
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

}  // namespace

Campaign parse_campaign(std::istream& in) {
  Campaign c;
  CheckParams globals;
  // Keys are applied to each section after the globals, so remember them.
  std::vector<std::vector<std::pair<std::string, std::string>>> section_keys;
  std::string line;
  int line_no = 0;
  auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where() + "unterminated section header");
      const std::string name = trim(line.substr(1, line.size() - 2));
      const auto& names = check_names();
      if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw ConfigError(where() + "unknown check '" + name + "'");
      }
      c.items.push_back({name, {}});
      section_keys.emplace_back();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where() + "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (c.items.empty()) {
        if (key == "threads") {
          c.threads = parse_int(key, value);
        } else if (key == "workers") {
          c.workers = parse_int(key, value);
          if (c.workers < 1) throw ConfigError("workers must be at least 1");
        } else {
          apply_key(globals, key, value);
        }
      } else {
        if (key == "threads" || key == "workers") throw ConfigError(key + " is campaign-wide");
        CheckParams probe;
        apply_key(probe, key, value);  // validate now for the line number
        section_keys.back().emplace_back(key, value);
      }
    } catch (const ConfigError& e) {
      throw ConfigError(where() + e.what());
    }
  }
  for (std::size_t i = 0; i < c.items.size(); ++i) {
    CheckParams p = applicable_params(c.items[i].check, globals);
    // A partition or grid given in a section replaces the global choice.
    const auto& keys = section_keys[i];
    auto has = [&](const char* k) {
      return std::any_of(keys.begin(), keys.end(), [&](const auto& kv) { return kv.first == k; });
    };
    if (has("lambda")) {
      p.max_size.reset();
      p.max_length.reset();
    }
    if (has("max-size") || has("max-length")) p.lambda.reset();
    for (const auto& [k, v] : keys) apply_key(p, k, v);
    try {
      validate_check(c.items[i].check, p);
    } catch (const UsageError& e) {
      throw ConfigError("[" + c.items[i].check + "]: " + e.what());
    }
    c.items[i].params = std::move(p);
  }
  return c;
}

Campaign load_campaign(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  return parse_campaign(in);
}

std::vector<Certificate> run_campaign(const Campaign& campaign) {
  if (campaign.threads > 0) exactalg::set_thread_count(campaign.threads);
  std::vector<Certificate> out(campaign.items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < campaign.items.size(); i = next++) {
      out[i] = run_check(campaign.items[i].check, campaign.items[i].params);
    }
  };
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(campaign.workers, 1)),
                                             std::max<std::size_t>(campaign.items.size(), 1));
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();  // join before handing out the results
  return out;
}

}  // namespace hlpos::verifycli
