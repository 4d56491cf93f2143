/*
 *   Copyright 2026 The operad_lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OPERAD_LAB_SPARSE_MATRIX_HPP
#define OPERAD_LAB_SPARSE_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "operad_lab/scalar.hpp"

namespace operad_lab {

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Scalar value;
};

/// Triplet storage in canonical (row, col) order with no zeros and no
/// duplicate positions, so == is structural.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols, Field f) : rows_(rows), cols_(cols), field_(f) {}

  /// Sums duplicates and drops zeros.
  static SparseMatrix from_entries(std::size_t rows, std::size_t cols, Field f, std::vector<MatrixEntry> entries) {
    SparseMatrix m(rows, cols, f);
    for (const auto& e : entries) {
      if (e.row >= rows || e.col >= cols) {
        throw std::out_of_range("matrix entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                                ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
      }
      if (!(e.value.field() == f)) throw field_mismatch("matrix entry over " + e.value.field().name() + " in " + f.name() + " matrix");
    }
    std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
      return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    for (auto& e : entries) {
      if (!m.entries_.empty() && m.entries_.back().row == e.row && m.entries_.back().col == e.col) {
        m.entries_.back().value += e.value;
      } else {
        m.entries_.push_back(std::move(e));
      }
    }
    std::erase_if(m.entries_, [](const MatrixEntry& e) { return e.value.is_zero(); });
    return m;
  }

  static SparseMatrix identity(std::size_t n, Field f) {
    std::vector<MatrixEntry> es;
    for (std::size_t i = 0; i < n; ++i) es.push_back({i, i, f.one()});
    return from_entries(n, n, f, std::move(es));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }
  const std::vector<MatrixEntry>& entries() const noexcept { return entries_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  SparseMatrix transpose() const {
    std::vector<MatrixEntry> es;
    es.reserve(entries_.size());
    for (const auto& e : entries_) es.push_back({e.col, e.row, e.value});
    return from_entries(cols_, rows_, field_, std::move(es));
  }

  SparseMatrix operator-() const {
    SparseMatrix m = *this;
    for (auto& e : m.entries_) e.value = -e.value;
    return m;
  }

  SparseMatrix scaled(const Scalar& c) const {
    std::vector<MatrixEntry> es = entries_;
    for (auto& e : es) e.value *= c;
    return from_entries(rows_, cols_, field_, std::move(es));
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("matrix product shape mismatch " + std::to_string(a.cols_) + " vs " +
                                  std::to_string(b.rows_));
    }
    if (!(a.field_ == b.field_)) throw field_mismatch("matrix product across fields");
    std::vector<std::vector<const MatrixEntry*>> b_rows(b.rows_);
    for (const auto& e : b.entries_) b_rows[e.row].push_back(&e);
    std::vector<MatrixEntry> out;
    for (const auto& e : a.entries_) {
      for (const MatrixEntry* f : b_rows[e.col]) out.push_back({e.row, f->col, e.value * f->value});
    }
    return from_entries(a.rows_, b.cols_, a.field_, std::move(out));
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_)) return false;
    if (a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
      const auto& x = a.entries_[k];
      const auto& y = b.entries_[k];
      if (x.row != y.row || x.col != y.col || !(x.value == y.value)) return false;
    }
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_{};
  std::vector<MatrixEntry> entries_;
};

namespace detail {

struct ModPArith {
  using value_type = std::uint64_t;
  std::uint64_t p;
  value_type convert(const Scalar& s) const { return s.residue(); }
  static bool is_zero(value_type a) { return a == 0; }
  value_type mul(value_type a, value_type b) const { return a * b % p; }
  value_type inv(value_type a) const { return mod_inverse(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(p)); }
  /// a - c*b
  value_type sub_mul(value_type a, value_type c, value_type b) const { return (a + p - c * b % p) % p; }
};

struct RationalArith {
  using value_type = rational;
  value_type convert(const Scalar& s) const { return s.as_rational(); }
  static bool is_zero(const value_type& a) { return a == 0; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return 1 / a; }
  value_type sub_mul(const value_type& a, const value_type& c, const value_type& b) const { return a - c * b; }
};

template <class Arith>
std::size_t dense_rank(const SparseMatrix& m, const Arith& ar) {
  using T = typename Arith::value_type;
  std::vector<std::vector<T>> a(m.rows(), std::vector<T>(m.cols(), T{0}));
  for (const auto& e : m.entries()) a[e.row][e.col] = ar.convert(e.value);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && Arith::is_zero(a[piv][c])) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    T inv = ar.inv(a[rank][c]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (Arith::is_zero(a[r][c])) continue;
      T factor = ar.mul(a[r][c], inv);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!Arith::is_zero(a[rank][k])) a[r][k] = ar.sub_mul(a[r][k], factor, a[rank][k]);
      }
    }
    ++rank;
  }
  return rank;
}

/// Incremental row reduction against a pivot table keyed by leading column.
template <class Arith>
std::size_t sparse_rank(const SparseMatrix& m, const Arith& ar) {
  using T = typename Arith::value_type;
  using Row = std::vector<std::pair<std::size_t, T>>;
  std::vector<Row> rows(m.rows());
  for (const auto& e : m.entries()) rows[e.row].emplace_back(e.col, ar.convert(e.value));
  // sparse rows reduce faster when the shortest go first
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.size() < b.size(); });
  std::map<std::size_t, Row> pivots;  // leading entry normalized to 1
  Row scratch;
  for (Row& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        T inv = ar.inv(row.front().second);
        for (auto& [c, v] : row) v = ar.mul(v, inv);
        std::size_t lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      const Row& p = it->second;
      T factor = row.front().second;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < p.size()) {
        if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
          scratch.push_back(std::move(row[i++]));
        } else if (i == row.size() || p[j].first < row[i].first) {
          scratch.emplace_back(p[j].first, ar.sub_mul(T{0}, factor, p[j].second));
          ++j;
        } else {
          T v = ar.sub_mul(row[i].second, factor, p[j].second);
          if (!Arith::is_zero(v)) scratch.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      row.swap(scratch);
    }
  }
  return pivots.size();
}

template <class Arith>
std::size_t rank_with(const SparseMatrix& m, const Arith& ar) {
  if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return 0;
  double density = static_cast<double>(m.nnz()) / (static_cast<double>(m.rows()) * static_cast<double>(m.cols()));
  return density > 0.25 ? dense_rank(m, ar) : sparse_rank(m, ar);
}

}  // namespace detail

/// Exact rank over the matrix field. Dense elimination above 25% fill.
inline std::size_t rank(const SparseMatrix& m) {
  for (const auto& e : m.entries()) {
    if (!(e.value.field() == m.field())) throw field_mismatch("mixed fields inside one matrix");
  }
  if (m.field().is_rational()) return detail::rank_with(m, detail::RationalArith{});
  return detail::rank_with(m, detail::ModPArith{m.field().modulus()});
}

inline std::size_t kernel_dim(const SparseMatrix& m) {
  std::size_t r = rank(m);
  if (r > m.cols() || r > m.rows()) throw std::logic_error("rank exceeds matrix dimensions");
  return m.cols() - r;
}

/// a == b or a == -b. Shapes must agree.
inline bool equal_up_to_global_sign(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  if (!(a.field() == b.field())) throw field_mismatch("sign comparison across fields");
  return a == b || a == -b;
}

/// +1, -1 when a == ±b, 0 otherwise; +1 for two zero matrices.
inline int global_sign(const SparseMatrix& a, const SparseMatrix& b) {
  if (a == b) return 1;
  if (a == -b) return -1;
  return 0;
}

}  // namespace operad_lab

#endif  // OPERAD_LAB_SPARSE_MATRIX_HPP
