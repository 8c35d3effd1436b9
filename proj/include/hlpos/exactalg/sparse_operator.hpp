#pragma once

#include "hlpos/exactalg/parallel.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hlpos::exactalg {

// Sparse linear map between finite bases, stored column by column: column j
// lists the images of input basis vector j as (output index, coefficient)
// pairs, sorted by output index, with no zero coefficients. Coeff must be a
// ring element with a default-constructed zero, +=, *, == and is_zero().
template <class Coeff>
class SparseOperator {
 public:
  using Index = std::uint32_t;
  using Entry = std::pair<Index, Coeff>;
  using Column = std::vector<Entry>;

  SparseOperator() = default;
  SparseOperator(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static SparseOperator identity(std::size_t dim, const Coeff& one) {
    SparseOperator op(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) op.columns_[j] = {{static_cast<Index>(j), one}};
    return op;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const Column& column(std::size_t j) const { return columns_.at(j); }
  const std::vector<Column>& columns() const { return columns_; }

  // Sorts, merges repeated rows and drops zeros.
  void set_column(std::size_t j, Column col) {
    std::sort(col.begin(), col.end(),
              [](const Entry& x, const Entry& y) { return x.first < y.first; });
    Column merged;
    merged.reserve(col.size());
    for (auto& [row, c] : col) {
      if (row >= rows_) throw std::out_of_range("operator row index out of range");
      if (!merged.empty() && merged.back().first == row) {
        merged.back().second += c;
      } else {
        merged.emplace_back(row, std::move(c));
      }
    }
    std::erase_if(merged, [](const Entry& e) { return e.second.is_zero(); });
    columns_.at(j) = std::move(merged);
  }

  const Coeff* find(std::size_t row, std::size_t col) const {
    const Column& c = columns_.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const Entry& e, std::size_t r) { return e.first < r; });
    return (it != c.end() && it->first == row) ? &it->second : nullptr;
  }

  Coeff entry(std::size_t row, std::size_t col) const {
    const Coeff* c = find(row, col);
    return c ? *c : Coeff{};
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  template <class F>
  auto transform(F&& f) const -> SparseOperator<std::invoke_result_t<F, const Coeff&>> {
    using Out = std::invoke_result_t<F, const Coeff&>;
    SparseOperator<Out> out(rows_, cols());
    for (std::size_t j = 0; j < cols(); ++j) {
      typename SparseOperator<Out>::Column col;
      col.reserve(columns_[j].size());
      for (const auto& [row, c] : columns_[j]) col.emplace_back(row, f(c));
      out.set_column(j, std::move(col));
    }
    return out;
  }

  SparseOperator& operator+=(const SparseOperator& rhs) { return combine(rhs, false); }
  SparseOperator& operator-=(const SparseOperator& rhs) { return combine(rhs, true); }
  friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) { return a += b; }
  friend SparseOperator operator-(SparseOperator a, const SparseOperator& b) { return a -= b; }

  template <class Scalar>
  SparseOperator scaled(const Scalar& s) const {
    return transform([&](const Coeff& c) { return c * s; });
  }

  bool operator==(const SparseOperator&) const = default;

  bool is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(),
                       [](const Column& c) { return c.empty(); });
  }

  // Sum of each column's coefficients.
  std::vector<Coeff> column_sums() const {
    std::vector<Coeff> sums(cols());
    for (std::size_t j = 0; j < cols(); ++j) {
      for (const auto& [row, c] : columns_[j]) sums[j] += c;
    }
    return sums;
  }

 private:
  SparseOperator& combine(const SparseOperator& rhs, bool subtract) {
    if (rows_ != rhs.rows_ || cols() != rhs.cols()) {
      throw std::invalid_argument("operator shape mismatch");
    }
    for (std::size_t j = 0; j < cols(); ++j) {
      Column col = columns_[j];
      for (const auto& [row, c] : rhs.columns_[j]) {
        if (subtract) {
          Coeff neg{};
          neg -= c;
          col.emplace_back(row, std::move(neg));
        } else {
          col.emplace_back(row, c);
        }
      }
      set_column(j, std::move(col));
    }
    return *this;
  }

  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

// (lhs o rhs): apply rhs first. Columns of the result are independent and
// are assembled in parallel under Exec::parallel.
template <class Coeff>
SparseOperator<Coeff> compose(const SparseOperator<Coeff>& lhs, const SparseOperator<Coeff>& rhs,
                              Exec exec = Exec::parallel) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("operator composition shape mismatch");
  SparseOperator<Coeff> out(lhs.rows(), rhs.cols());
  std::vector<typename SparseOperator<Coeff>::Column> cols(rhs.cols());
  for_each_index(rhs.cols(), exec, [&](std::size_t j) {
    std::vector<Coeff> acc(lhs.rows());
    std::vector<bool> touched(lhs.rows(), false);
    for (const auto& [mid, b] : rhs.column(j)) {
      for (const auto& [row, a] : lhs.column(mid)) {
        acc[row] += a * b;
        touched[row] = true;
      }
    }
    auto& col = cols[j];
    for (std::size_t r = 0; r < acc.size(); ++r) {
      if (touched[r] && !acc[r].is_zero()) {
        col.emplace_back(static_cast<typename SparseOperator<Coeff>::Index>(r), std::move(acc[r]));
      }
    }
  });
  for (std::size_t j = 0; j < cols.size(); ++j) out.set_column(j, std::move(cols[j]));
  return out;
}

// Applies an operator to a sparse vector given as (index, coefficient) pairs.
template <class Coeff>
typename SparseOperator<Coeff>::Column apply(const SparseOperator<Coeff>& op,
                                             const typename SparseOperator<Coeff>::Column& v) {
  SparseOperator<Coeff> vec(op.cols(), 1);
  vec.set_column(0, v);
  return compose(op, vec, Exec::serial).column(0);
}

template <class Coeff>
SparseOperator<Coeff> commutator(const SparseOperator<Coeff>& a, const SparseOperator<Coeff>& b,
                                 Exec exec = Exec::parallel) {
  return compose(a, b, exec) - compose(b, a, exec);
}

// First differing entry of two same-shaped operators, as (row, col).
template <class Coeff>
std::optional<std::pair<std::size_t, std::size_t>> first_difference(
    const SparseOperator<Coeff>& a, const SparseOperator<Coeff>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("operator shape mismatch");
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (a.column(j) == b.column(j)) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const Coeff* x = a.find(i, j);
      const Coeff* y = b.find(i, j);
      if ((x == nullptr) != (y == nullptr) || (x && !(*x == *y))) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

namespace reference {

// Dense triple loop over explicit entry lookups. Slow; kept as the
// independent serial oracle for the column-parallel compose().
template <class Coeff>
SparseOperator<Coeff> compose(const SparseOperator<Coeff>& lhs, const SparseOperator<Coeff>& rhs) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("operator composition shape mismatch");
  SparseOperator<Coeff> out(lhs.rows(), rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    typename SparseOperator<Coeff>::Column col;
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
      Coeff sum{};
      for (std::size_t k = 0; k < lhs.cols(); ++k) {
        const Coeff* a = lhs.find(i, k);
        const Coeff* b = rhs.find(k, j);
        if (a && b) sum += (*a) * (*b);
      }
      if (!sum.is_zero()) col.emplace_back(static_cast<typename SparseOperator<Coeff>::Index>(i), std::move(sum));
    }
    out.set_column(j, std::move(col));
  }
  return out;
}

}  // namespace reference
}  // namespace hlpos::exactalg
