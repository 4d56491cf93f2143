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

#ifndef OPERAD_LAB_SHIFT_HPP
#define OPERAD_LAB_SHIFT_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "operad_lab/element.hpp"
#include "operad_lab/errors.hpp"
#include "operad_lab/operad.hpp"

namespace operad_lab {

/// Strictly increasing tuple of positive integers; empty is X_0.
class OrderedSubset {
 public:
  OrderedSubset() = default;

  explicit OrderedSubset(std::vector<long long> entries) : a_(std::move(entries)) {
    for (std::size_t k = 0; k < a_.size(); ++k) {
      if (a_[k] < 1 || (k > 0 && a_[k] <= a_[k - 1])) {
        throw std::invalid_argument("not a strictly increasing positive tuple: " + to_string());
      }
    }
  }

  std::size_t size() const noexcept { return a_.size(); }
  bool empty() const noexcept { return a_.empty(); }
  const std::vector<long long>& entries() const noexcept { return a_; }
  /// 1-based.
  long long operator()(std::size_t i) const { return a_.at(i - 1); }
  long long last() const noexcept { return a_.empty() ? 0 : a_.back(); }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t k = 0; k < a_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(a_[k]);
    }
    return s + "}";
  }

  friend std::ostream& operator<<(std::ostream& os, const OrderedSubset& x) { return os << x.to_string(); }
  friend bool operator==(const OrderedSubset&, const OrderedSubset&) = default;
  friend bool operator<(const OrderedSubset& a, const OrderedSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.a_ < b.a_;
  }

 private:
  std::vector<long long> a_;
};

/// X ⊕ p, or X itself when some a_i + p <= 0.
inline OrderedSubset shift_add(const OrderedSubset& x, long long p) {
  std::vector<long long> out;
  out.reserve(x.size());
  for (long long v : x.entries()) {
    if (v + p <= 0) return x;
    out.push_back(v + p);
  }
  return OrderedSubset(std::move(out));
}

namespace detail {

/// ⊕ as used inside composition, where the guard must never fire.
inline std::vector<long long> shifted_entries(const std::vector<long long>& v, long long p) {
  std::vector<long long> out;
  out.reserve(v.size());
  for (long long a : v) {
    if (a + p <= 0) throw std::logic_error("shift guard fired inside composition");
    out.push_back(a + p);
  }
  return out;
}

}  // namespace detail

/// X ∘_i Y = (a_1..a_{i-1}, Y⊕(a_i-1), (a_{i+1}..a_p)⊕(b_q-1)), with b_q = 0
/// for Y = X_0.
inline OrderedSubset compose_shift(const OrderedSubset& x, std::size_t i, const OrderedSubset& y) {
  detail::check_slot(i, x.size(), "compose_shift");
  const auto& a = x.entries();
  std::vector<long long> out(a.begin(), a.begin() + static_cast<long>(i - 1));
  auto mid = detail::shifted_entries(y.entries(), x(i) - 1);
  out.insert(out.end(), mid.begin(), mid.end());
  auto tail = detail::shifted_entries(std::vector<long long>(a.begin() + static_cast<long>(i), a.end()), y.last() - 1);
  out.insert(out.end(), tail.begin(), tail.end());
  return OrderedSubset(std::move(out));
}

/// Block formula: the i-th block is Y_i ⊕ (a_i + Σ_{j<i} last(Y_j) - i).
inline OrderedSubset gamma_shift(const OrderedSubset& x, const std::vector<OrderedSubset>& ys) {
  if (ys.size() != x.size()) {
    throw arity_error("gamma_shift: " + std::to_string(ys.size()) + " inputs for length " + std::to_string(x.size()));
  }
  std::vector<long long> out;
  long long lasts = 0;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    auto block = detail::shifted_entries(ys[i - 1].entries(), x(i) + lasts - static_cast<long long>(i));
    out.insert(out.end(), block.begin(), block.end());
    lasts += ys[i - 1].last();
  }
  return OrderedSubset(std::move(out));
}

/// (a_1..a_{i-1}, a_{i+1}-1..a_n-1)
inline OrderedSubset face_shift(const OrderedSubset& x, std::size_t i) {
  detail::check_slot(i, x.size(), "face_shift");
  std::vector<long long> out;
  for (std::size_t k = 1; k <= x.size(); ++k) {
    if (k < i) out.push_back(x(k));
    if (k > i) out.push_back(x(k) - 1);
  }
  return OrderedSubset(std::move(out));
}

/// (a_1..a_i, a_i+1, a_{i+1}+1..a_n+1)
inline OrderedSubset degeneracy_shift(const OrderedSubset& x, std::size_t i) {
  detail::check_slot(i, x.size(), "degeneracy_shift");
  std::vector<long long> out;
  for (std::size_t k = 1; k <= x.size(); ++k) {
    out.push_back(k <= i ? x(k) : x(k) + 1);
    if (k == i) out.push_back(x(k) + 1);
  }
  return OrderedSubset(std::move(out));
}

/// The shift operad, treated as connected with 1_0 = X_0.
class ShiftOperad {
 public:
  using basis_type = OrderedSubset;

  explicit ShiftOperad(Field f = Field::rationals()) : field_(f) {}
  ShiftOperad(const ShiftOperad&) = delete;
  ShiftOperad& operator=(const ShiftOperad&) = delete;

  std::string name() const { return "shift"; }
  Field field() const { return field_; }
  std::size_t arity(const OrderedSubset& x) const noexcept { return x.size(); }
  std::string format_basis(const OrderedSubset& x) const { return x.to_string(); }
  Scalar counit_basis(const OrderedSubset&) const { return field_.one(); }

  Element<ShiftOperad> compose_basis(const OrderedSubset& b, std::size_t i, const OrderedSubset& c) const {
    return Element<ShiftOperad>::basis(*this, compose_shift(b, i, c));
  }

  Element<ShiftOperad> element(const OrderedSubset& x) const { return Element<ShiftOperad>::basis(*this, x); }
  Element<ShiftOperad> one() const { return element(OrderedSubset({1})); }
  Element<ShiftOperad> zero_unit() const { return element(OrderedSubset{}); }
  Element<ShiftOperad> mult() const { return element(OrderedSubset({1, 2})); }

  /// Length-n subsets of {1..bound} in lexicographic order.
  std::vector<OrderedSubset> basis(std::size_t n, long long bound) const {
    std::vector<OrderedSubset> out;
    if (static_cast<long long>(n) > bound) return out;
    std::vector<long long> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = static_cast<long long>(k + 1);
    while (true) {
      out.emplace_back(c);
      std::size_t k = n;
      while (k > 0 && c[k - 1] == bound - static_cast<long long>(n - k)) --k;
      if (k == 0) break;
      ++c[k - 1];
      for (std::size_t u = k; u < n; ++u) c[u] = c[u - 1] + 1;
    }
    return out;
  }

 private:
  Field field_;
};

static_assert(OperadInstance<ShiftOperad>);

}  // namespace operad_lab

#endif  // OPERAD_LAB_SHIFT_HPP
