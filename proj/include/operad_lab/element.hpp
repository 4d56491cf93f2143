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

#ifndef OPERAD_LAB_ELEMENT_HPP
#define OPERAD_LAB_ELEMENT_HPP

#include <array>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "operad_lab/errors.hpp"
#include "operad_lab/scalar.hpp"

namespace operad_lab {

inline Scalar sign_scalar(const Field& f, long long exponent) {
  return (exponent % 2 == 0) ? f.one() : -f.one();
}

/// An arity-homogeneous linear combination of basis objects of one operad.
/// Holds a non-owning pointer to its operad, which must outlive it.
template <class Op>
class Element {
 public:
  using basis_type = typename Op::basis_type;
  using term_map = std::map<basis_type, Scalar>;

  /// The zero element of the given arity.
  Element(const Op& op, std::size_t arity) : op_(&op), arity_(arity) {}

  static Element basis(const Op& op, const basis_type& b) { return basis(op, b, op.field().one()); }

  static Element basis(const Op& op, const basis_type& b, const Scalar& c) {
    Element e(op, op.arity(b));
    e.add_term(b, c);
    return e;
  }

  const Op& operad() const noexcept { return *op_; }
  std::size_t arity() const noexcept { return arity_; }
  /// |x| = arity - 1
  long long degree() const noexcept { return static_cast<long long>(arity_) - 1; }
  Field field() const { return op_->field(); }
  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coeff(const basis_type& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? field().zero() : it->second;
  }

  void add_term(const basis_type& b, const Scalar& c) {
    if (op_->arity(b) != arity_) {
      throw arity_error("basis " + op_->format_basis(b) + " has arity " + std::to_string(op_->arity(b)) +
                        ", element has arity " + std::to_string(arity_));
    }
    if (!(c.field() == field())) throw field_mismatch("coefficient over " + c.field().name() + " in " + field().name() + " element");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    check_compatible(o);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }

  Element& operator-=(const Element& o) {
    check_compatible(o);
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }

  Element& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    return *this;
  }

  Element operator-() const {
    Element e = *this;
    for (auto& [b, c] : e.terms_) c = -c;
    return e;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.op_ == b.op_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  void check_compatible(const Element& o) const {
    if (op_ != o.op_) throw std::invalid_argument("elements of different operads");
    if (arity_ != o.arity_) {
      throw arity_error("arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(o.arity_));
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Element& x) { return os << x.to_string(); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : terms_) {
      std::string coeff = c.to_short_string();
      bool negative = !coeff.empty() && coeff.front() == '-';
      if (!first) out += negative ? " - " : " + ";
      else if (negative) out += "-";
      if (negative) coeff.erase(0, 1);
      if (coeff != "1") out += coeff + "*";
      out += op_->format_basis(b);
      first = false;
    }
    return out;
  }

 private:
  const Op* op_;
  std::size_t arity_;
  term_map terms_;
};

/// A homogeneous element of O^{⊗K}: one arity per factor.
template <class Op, std::size_t K>
class Tensor {
 public:
  using basis_type = typename Op::basis_type;
  using key_type = std::array<basis_type, K>;
  using term_map = std::map<key_type, Scalar>;

  explicit Tensor(const Op& op) : op_(&op) {}

  const Op& operad() const noexcept { return *op_; }
  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const key_type& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }

  Tensor& operator-=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }

  Tensor& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend bool operator==(const Tensor& a, const Tensor& b) { return a.op_ == b.op_ && a.terms_ == b.terms_; }

  friend std::ostream& operator<<(std::ostream& os, const Tensor& t) { return os << t.to_string(); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) out += " + ";
      if (!c.is_one()) out += "(" + c.to_short_string() + ")*";
      for (std::size_t f = 0; f < K; ++f) {
        if (f) out += "⊗";
        out += op_->format_basis(k[f]);
      }
      first = false;
    }
    return out;
  }

 private:
  const Op* op_;
  term_map terms_;
};

template <class Op>
Tensor<Op, 2> tensor(const Element<Op>& a, const Element<Op>& b) {
  if (&a.operad() != &b.operad()) throw std::invalid_argument("elements of different operads");
  Tensor<Op, 2> t(a.operad());
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) t.add_term({x, y}, cx * cy);
  }
  return t;
}

/// Applies a linear map to factor k. f(basis, key) returns the image Element
/// and may read the other factors of key (for Koszul signs).
template <class Op, std::size_t K, class F>
Tensor<Op, K> map_factor(const Tensor<Op, K>& t, std::size_t k, F f) {
  Tensor<Op, K> out(t.operad());
  for (const auto& [key, c] : t.terms()) {
    Element<Op> image = f(key[k], key);
    for (const auto& [b, cb] : image.terms()) {
      auto nk = key;
      nk[k] = b;
      out.add_term(nk, c * cb);
    }
  }
  return out;
}

/// Replaces factor k by a two-factor tensor g(basis), giving K+1 factors.
template <class Op, std::size_t K, class G>
Tensor<Op, K + 1> expand_factor(const Tensor<Op, K>& t, std::size_t k, G g) {
  Tensor<Op, K + 1> out(t.operad());
  for (const auto& [key, c] : t.terms()) {
    Tensor<Op, 2> image = g(key[k]);
    for (const auto& [pair, cp] : image.terms()) {
      typename Tensor<Op, K + 1>::key_type nk;
      for (std::size_t u = 0, v = 0; u < K; ++u) {
        if (u == k) {
          nk[v++] = pair[0];
          nk[v++] = pair[1];
        } else {
          nk[v++] = key[u];
        }
      }
      out.add_term(nk, c * cp);
    }
  }
  return out;
}

}  // namespace operad_lab

#endif  // OPERAD_LAB_ELEMENT_HPP
