#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hlpos::combinat {

// Weakly decreasing sequence of nonnegative integers with trailing zeros
// stripped. Out-of-range parts read as zero, so a Partition can stand in for
// any of its zero-padded forms.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are nonnegative and weakly
  // decreasing (trailing zeros allowed).
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // "3,2,1"; "" and "0" give the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  // 0-based part, zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::vector<int> padded(std::size_t len) const;

  Partition conjugate() const;
  // Multiplicity of part value k (k >= 1).
  int multiplicity(int k) const;

  // Comma-separated parts; "0" for the empty partition.
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

inline Partition conjugate(const Partition& p) { return p.conjugate(); }

// True iff mu is contained in lambda and lambda/mu has at most one box per
// column: lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
bool is_horizontal_strip(const Partition& mu, const Partition& lambda);
// True iff lambda/mu has at most one box per row.
bool is_vertical_strip(const Partition& mu, const Partition& lambda);
bool contains(const Partition& lambda, const Partition& mu);

// All partitions of k with at most max_length parts, in decreasing
// lexicographic order ((k) first). max_length < 0 means unbounded.
std::vector<Partition> partitions_of(int k, int max_length = -1);
// Partitions of every size 0..max_size, grouped by size.
std::vector<Partition> partitions_up_to(int max_size, int max_length = -1);

// All nu with nu/lambda a horizontal (resp. vertical) strip of r boxes and
// length(nu) <= max_length (unbounded when negative), in decreasing lex order.
std::vector<Partition> horizontal_strips_above(const Partition& lambda, int r, int max_length = -1);
std::vector<Partition> vertical_strips_above(const Partition& lambda, int r, int max_length = -1);
// All mu with lambda/mu a horizontal strip (of any size).
std::vector<Partition> horizontal_strips_below(const Partition& lambda);

}  // namespace hlpos::combinat
