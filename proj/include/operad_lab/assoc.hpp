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

#ifndef OPERAD_LAB_ASSOC_HPP
#define OPERAD_LAB_ASSOC_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "operad_lab/element.hpp"
#include "operad_lab/errors.hpp"
#include "operad_lab/operad.hpp"

namespace operad_lab {

/// One-line word of a bijection of {1..n}. The empty word stands for 1_K.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (int v : word_) {
      if (v < 1 || static_cast<std::size_t>(v) > word_.size() || seen[v]) {
        throw std::invalid_argument("not a permutation word: " + to_string());
      }
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  const std::vector<int>& word() const noexcept { return word_; }
  /// 1-based.
  int operator()(std::size_t i) const { return word_.at(i - 1); }

  Permutation inverse() const {
    std::vector<int> inv(word_.size());
    for (std::size_t k = 0; k < word_.size(); ++k) inv[word_[k] - 1] = static_cast<int>(k + 1);
    return Permutation(std::move(inv));
  }

  /// Digits when n <= 9, comma-separated otherwise, "()" for 1_K.
  std::string to_string() const {
    if (word_.empty()) return "()";
    std::string s;
    bool commas = word_.size() > 9;
    for (std::size_t k = 0; k < word_.size(); ++k) {
      if (commas && k) s += ',';
      s += std::to_string(word_[k]);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.word_ < b.word_;
  }

 private:
  std::vector<int> word_;
};

/// The permutation order-isomorphic to a word of distinct integers.
inline Permutation standardize(const std::vector<long long>& u) {
  std::vector<std::size_t> idx(u.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return u[a] < u[b]; });
  std::vector<int> w(u.size());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (r > 0 && u[idx[r]] == u[idx[r - 1]]) {
      throw std::invalid_argument("standardize: repeated letter " + std::to_string(u[idx[r]]));
    }
    w[idx[r]] = static_cast<int>(r + 1);
  }
  return Permutation(std::move(w));
}

inline Permutation standardize(const std::vector<int>& u) {
  return standardize(std::vector<long long>(u.begin(), u.end()));
}

/// Block method: cut {1..n+l-1} into blocks (block i has l letters), list the
/// blocks in τ^{-1} order with block i rearranged by σ^{-1}, and invert.
/// l = 0 (σ = 1_K) is allowed and gives the face.
inline Permutation compose_blocks(const Permutation& tau, std::size_t i, const Permutation& sigma) {
  const std::size_t n = tau.size(), l = sigma.size();
  detail::check_slot(i, n, "compose_blocks");
  auto block = [&](std::size_t k) {
    std::vector<int> b;
    if (k < i) {
      b.push_back(static_cast<int>(k));
    } else if (k == i) {
      for (std::size_t u = 0; u < l; ++u) b.push_back(static_cast<int>(i + u));
    } else {
      b.push_back(static_cast<int>(k + l - 1));
    }
    return b;
  };
  Permutation tau_inv = tau.inverse();
  Permutation sigma_inv = sigma.inverse();
  std::vector<int> w;
  w.reserve(n + l);
  for (std::size_t v = 1; v <= n; ++v) {
    std::size_t k = static_cast<std::size_t>(tau_inv(v));
    std::vector<int> b = block(k);
    if (k == i) {
      for (std::size_t u = 1; u <= l; ++u) w.push_back(b[sigma_inv(u) - 1]);
    } else {
      w.insert(w.end(), b.begin(), b.end());
    }
  }
  return Permutation(std::move(w)).inverse();
}

/// Closed formula: letters outside the inserted block keep their value or
/// move up by l-1; the block holds τ(i)-1+σ(·).
inline Permutation compose_formula(const Permutation& tau, std::size_t i, const Permutation& sigma) {
  const std::size_t n = tau.size(), l = sigma.size();
  detail::check_slot(i, n, "compose_formula");
  const int ti = tau(i);
  const int lift = static_cast<int>(l) - 1;
  auto outside = [&](int v) { return v < ti ? v : v + lift; };
  std::vector<int> w;
  w.reserve(n + l - 1);
  for (std::size_t j = 1; j < i; ++j) w.push_back(outside(tau(j)));
  for (std::size_t j = 1; j <= l; ++j) w.push_back(ti - 1 + sigma(j));
  for (std::size_t j = i + 1; j <= n; ++j) w.push_back(outside(tau(j)));
  return Permutation(std::move(w));
}

/// Delete position i and standardize.
inline Permutation face_assoc(const Permutation& tau, std::size_t i) {
  detail::check_slot(i, tau.size(), "face_assoc");
  std::vector<int> u;
  for (std::size_t j = 1; j <= tau.size(); ++j) {
    if (j != i) u.push_back(tau(j));
  }
  return standardize(u);
}

inline Permutation concat(const Permutation& tau, const Permutation& sigma) {
  std::vector<int> w = tau.word();
  for (int v : sigma.word()) w.push_back(v + static_cast<int>(tau.size()));
  return Permutation(std::move(w));
}

/// Σ_{i=0..n} st(σ_1..σ_i) ⊗ st(σ_{i+1}..σ_n).
inline std::vector<std::pair<Permutation, Permutation>> mr_coproduct(const Permutation& sigma) {
  std::vector<std::pair<Permutation, Permutation>> out;
  const auto& w = sigma.word();
  for (std::size_t i = 0; i <= w.size(); ++i) {
    out.emplace_back(standardize(std::vector<int>(w.begin(), w.begin() + static_cast<long>(i))),
                     standardize(std::vector<int>(w.begin() + static_cast<long>(i), w.end())));
  }
  return out;
}

/// Ass(n) = K[Σ_n], composition by the closed formula.
class AssocOperad {
 public:
  using basis_type = Permutation;

  explicit AssocOperad(Field f = Field::rationals()) : field_(f) {}
  AssocOperad(const AssocOperad&) = delete;
  AssocOperad& operator=(const AssocOperad&) = delete;

  std::string name() const { return "assoc"; }
  Field field() const { return field_; }
  std::size_t arity(const Permutation& p) const noexcept { return p.size(); }
  std::string format_basis(const Permutation& p) const { return p.to_string(); }
  Scalar counit_basis(const Permutation&) const { return field_.one(); }

  Element<AssocOperad> compose_basis(const Permutation& b, std::size_t i, const Permutation& c) const {
    return Element<AssocOperad>::basis(*this, compose_formula(b, i, c));
  }

  Element<AssocOperad> element(const Permutation& p) const { return Element<AssocOperad>::basis(*this, p); }
  Element<AssocOperad> one() const { return element(Permutation::identity(1)); }
  Element<AssocOperad> zero_unit() const { return element(Permutation{}); }
  Element<AssocOperad> mult() const { return element(Permutation::identity(2)); }

  /// Σ_n in lexicographic order.
  std::vector<Permutation> basis(std::size_t n) const {
    std::vector<Permutation> out;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
      out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
  }

 private:
  Field field_;
};

static_assert(OperadInstance<AssocOperad>);

}  // namespace operad_lab

#endif  // OPERAD_LAB_ASSOC_HPP
