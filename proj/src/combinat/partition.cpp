#include "hlpos/combinat/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hlpos::combinat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trimmed(text);
  if (text.empty()) return Partition();
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view field = trimmed(text.substr(pos, comma - pos));
    int value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(std::size_t len) const {
  if (len < parts_.size()) throw std::invalid_argument("padding shorter than partition length");
  std::vector<int> out = parts_;
  out.resize(len, 0);
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_) {
    for (int i = 0; i < p; ++i) ++out[i];
  }
  return Partition(std::move(out));
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 0; i < mu.length(); ++i) {
    if (mu[i] > lambda[i]) return false;
  }
  return true;
}

bool is_horizontal_strip(const Partition& mu, const Partition& lambda) {
  const std::size_t len = std::max(mu.length(), lambda.length()) + 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (lambda[i] < mu[i]) return false;
    if (mu[i] < lambda[i + 1]) return false;
  }
  return true;
}

bool is_vertical_strip(const Partition& mu, const Partition& lambda) {
  if (!contains(lambda, mu)) return false;
  for (int i = 0; i < lambda.length(); ++i) {
    if (lambda[i] - mu[i] > 1) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int k, int max_length) {
  std::vector<Partition> out;
  if (k < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_length >= 0 && static_cast<int>(cur.size()) >= max_length) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size, int max_length) {
  std::vector<Partition> out;
  for (int k = 0; k <= max_size; ++k) {
    auto ps = partitions_of(k, max_length);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

namespace {

// Each row i may grow by g_i with bounds given by `cap(i)`; sum of growths is r.
template <class Cap>
std::vector<Partition> grow_rows(const Partition& lambda, int r, int rows, Cap cap) {
  std::vector<Partition> out;
  std::vector<int> nu = lambda.padded(static_cast<std::size_t>(rows));
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == rows) {
      if (remaining == 0) out.emplace_back(nu);
      return;
    }
    const int hi = std::min(remaining, cap(i, nu));
    for (int g = hi; g >= 0; --g) {
      nu[i] = lambda[i] + g;
      rec(i + 1, remaining - g);
    }
    nu[i] = lambda[i];
  };
  rec(0, r);
  return out;
}

}  // namespace

std::vector<Partition> horizontal_strips_above(const Partition& lambda, int r, int max_length) {
  if (r < 0) return {};
  int rows = lambda.length() + 1;
  if (max_length >= 0) rows = std::min(rows, max_length);
  if (rows < lambda.length()) return {};
  // row i (i >= 1) can grow up to lambda_{i-1} - lambda_i; row 0 freely
  return grow_rows(lambda, r, rows, [&](int i, const std::vector<int>&) {
    return i == 0 ? r : lambda[i - 1] - lambda[i];
  });
}

std::vector<Partition> vertical_strips_above(const Partition& lambda, int r, int max_length) {
  if (r < 0) return {};
  int rows = lambda.length() + r;
  if (max_length >= 0) rows = std::min(rows, max_length);
  if (rows < lambda.length()) return {};
  return grow_rows(lambda, r, rows, [&](int i, const std::vector<int>& nu) {
    if (i == 0) return 1;
    return (lambda[i] + 1 <= nu[i - 1]) ? 1 : 0;
  });
}

std::vector<Partition> horizontal_strips_below(const Partition& lambda) {
  std::vector<Partition> out;
  const int len = lambda.length();
  std::vector<int> mu(len, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == len) {
      out.emplace_back(mu);
      return;
    }
    for (int v = lambda[i]; v >= lambda[i + 1]; --v) {
      mu[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace hlpos::combinat
