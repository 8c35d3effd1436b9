#include "hlpos/combinat/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace hlpos::combinat {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (r.empty()) throw std::invalid_argument("empty row inside a tableau");
    if (i > 0 && r.size() > rows_[i - 1].size()) throw std::invalid_argument("row lengths must weakly decrease");
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] < 1) throw std::invalid_argument("tableau entries must be positive");
      if (j > 0 && r[j] < r[j - 1]) throw std::invalid_argument("rows must weakly increase");
      if (i > 0 && r[j] <= rows_[i - 1][j]) throw std::invalid_argument("columns must strictly increase");
    }
  }
}

Tableau Tableau::parse(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t slash = std::min(text.find('/', pos), text.size());
    const std::string_view row = text.substr(pos, slash - pos);
    if (!row.empty()) rows.push_back(parse_word(row));
    pos = slash + 1;
  }
  return Tableau(std::move(rows));
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

int Tableau::size() const { return shape().size(); }

int Tableau::max_entry() const {
  int m = 0;
  for (const auto& r : rows_) m = std::max(m, r.back());
  return m;
}

std::vector<int> Tableau::column(std::size_t j) const {
  std::vector<int> c;
  for (const auto& r : rows_) {
    if (j < r.size()) c.push_back(r[j]);
  }
  return c;
}

std::vector<int> Tableau::content(int n) const {
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (const auto& r : rows_) {
    for (int x : r) {
      if (x > n) throw std::invalid_argument("tableau entry exceeds the alphabet size");
      ++c[x - 1];
    }
  }
  return c;
}

std::string Tableau::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += "/";
    s += word_to_string(rows_[i]);
  }
  return s;
}

Tableau gt_to_tableau(const GTArray& g) {
  const int n = g.depth();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const auto& lv = g.level(j);
    for (int i = 0; i < j; ++i) {
      const int prev = (j > 1 && i < j - 1) ? g.level(j - 1)[i] : 0;
      rows[i].insert(rows[i].end(), static_cast<std::size_t>(lv[i] - prev), j);
    }
  }
  return Tableau(std::move(rows));
}

GTArray tableau_to_gt(const Tableau& t, int n) {
  if (t.max_entry() > n) throw std::invalid_argument("tableau entry exceeds depth");
  if (t.shape().length() > n) throw std::invalid_argument("tableau has more rows than the depth");
  std::vector<std::vector<int>> levels(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    auto& lv = levels[j - 1];
    lv.assign(static_cast<std::size_t>(j), 0);
    for (std::size_t i = 0; i < t.rows().size() && i < lv.size(); ++i) {
      const auto& r = t.rows()[i];
      lv[i] = static_cast<int>(std::upper_bound(r.begin(), r.end(), j) - r.begin());
    }
  }
  return GTArray(std::move(levels));
}

Word reading_word(const Tableau& t) {
  Word w;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

std::string word_to_string(const Word& w) {
  const bool digits = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x < 10; });
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!digits && i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

Word parse_word(std::string_view text) {
  Word w;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c < '1' || c > '9') throw std::invalid_argument("malformed word '" + std::string(text) + "'");
      w.push_back(c - '0');
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
    int v = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size() || v < 1) {
      throw std::invalid_argument("malformed word '" + std::string(text) + "'");
    }
    w.push_back(v);
    pos = comma + 1;
  }
  return w;
}

}  // namespace hlpos::combinat
