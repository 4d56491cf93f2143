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

#ifndef OPERAD_LAB_OPERAD_HPP
#define OPERAD_LAB_OPERAD_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "operad_lab/element.hpp"
#include "operad_lab/errors.hpp"
#include "operad_lab/scalar.hpp"

namespace operad_lab {

/// What a concrete connected multiplicative operad provides. Elements keep a
/// pointer to their operad, so instances should stay put once built.
template <class Op>
concept OperadInstance = requires(const Op& op, const typename Op::basis_type& b, std::size_t i) {
  typename Op::basis_type;
  { op.name() } -> std::convertible_to<std::string>;
  { op.field() } -> std::convertible_to<Field>;
  { op.arity(b) } -> std::convertible_to<std::size_t>;
  { op.compose_basis(b, i, b) } -> std::convertible_to<Element<Op>>;
  { op.one() } -> std::convertible_to<Element<Op>>;
  { op.zero_unit() } -> std::convertible_to<Element<Op>>;
  { op.mult() } -> std::convertible_to<Element<Op>>;
  { op.counit_basis(b) } -> std::convertible_to<Scalar>;
  { op.format_basis(b) } -> std::convertible_to<std::string>;
};

namespace detail {

template <class Op>
void same_operad(const Element<Op>& a, const Element<Op>& b) {
  if (&a.operad() != &b.operad()) throw std::invalid_argument("elements of different operads");
}

inline void check_slot(std::size_t i, std::size_t arity, const char* what) {
  if (i < 1 || i > arity) {
    throw arity_error(std::string(what) + ": slot " + std::to_string(i) + " outside 1.." + std::to_string(arity));
  }
}

}  // namespace detail

/// x ∘_i y, bilinear.
template <OperadInstance Op>
Element<Op> compose(const Element<Op>& x, std::size_t i, const Element<Op>& y) {
  detail::same_operad(x, y);
  detail::check_slot(i, x.arity(), "compose");
  const Op& op = x.operad();
  Element<Op> out(op, x.arity() + y.arity() - 1);
  for (const auto& [b, cb] : x.terms()) {
    for (const auto& [c, cc] : y.terms()) {
      Element<Op> t = op.compose_basis(b, i, c);
      t *= cb * cc;
      out += t;
    }
  }
  return out;
}

/// γ(x; y_1..y_n) as (..((x ∘_n y_n) ∘_{n-1} y_{n-1})..) ∘_1 y_1.
template <OperadInstance Op>
Element<Op> gamma(const Element<Op>& x, const std::vector<Element<Op>>& ys) {
  if (ys.size() != x.arity()) {
    throw arity_error("gamma: " + std::to_string(ys.size()) + " inputs for arity " + std::to_string(x.arity()));
  }
  Element<Op> r = x;
  for (std::size_t k = ys.size(); k >= 1; --k) {
    detail::same_operad(x, ys[k - 1]);
    r = compose(r, k, ys[k - 1]);
  }
  return r;
}

/// F_i(x) = x ∘_i 1_0.
template <OperadInstance Op>
Element<Op> face(const Element<Op>& x, std::size_t i) {
  detail::check_slot(i, x.arity(), "face");
  return compose(x, i, x.operad().zero_unit());
}

/// Sum of coefficients against the arity-0 counit; zero off arity 0.
template <OperadInstance Op>
Scalar counit(const Element<Op>& x) {
  Scalar s = x.field().zero();
  if (x.arity() != 0) return s;
  for (const auto& [b, c] : x.terms()) s += c * x.operad().counit_basis(b);
  return s;
}

/// D_i(x) = x ∘_i m; on arity 0, D^0 = counit · 1_O and i is ignored.
template <OperadInstance Op>
Element<Op> degeneracy(const Element<Op>& x, std::size_t i) {
  if (x.arity() == 0) return counit(x) * x.operad().one();
  detail::check_slot(i, x.arity(), "degeneracy");
  return compose(x, i, x.operad().mult());
}

/// x(y_1..y_n) with y_i = 1_O for i in S and 1_0 otherwise. S is 1-based.
template <OperadInstance Op>
Element<Op> subset_restriction(const Element<Op>& x, const std::vector<std::size_t>& S) {
  std::vector<bool> keep(x.arity() + 1, false);
  for (std::size_t s : S) {
    detail::check_slot(s, x.arity(), "subset_restriction");
    keep[s] = true;
  }
  const Op& op = x.operad();
  std::vector<Element<Op>> ys;
  ys.reserve(x.arity());
  for (std::size_t i = 1; i <= x.arity(); ++i) ys.push_back(keep[i] ? op.one() : op.zero_unit());
  return gamma(x, ys);
}

/// ∂x = Σ (-1)^i F_i x; zero on arity 0.
template <OperadInstance Op>
Element<Op> boundary(const Element<Op>& x) {
  if (x.arity() == 0) return Element<Op>(x.operad(), 0);
  Element<Op> out(x.operad(), x.arity() - 1);
  for (std::size_t i = 1; i <= x.arity(); ++i) out += sign_scalar(x.field(), i) * face(x, i);
  return out;
}

/// d(x) = (-1)^{|x|} m∘_1 x + m∘_2 x + Σ_i (-1)^i x∘_i m.
template <OperadInstance Op>
Element<Op> coboundary(const Element<Op>& x) {
  const Op& op = x.operad();
  Element<Op> m = op.mult();
  Element<Op> out = sign_scalar(x.field(), x.degree()) * compose(m, 1, x);
  out += compose(m, 2, x);
  for (std::size_t i = 1; i <= x.arity(); ++i) out += sign_scalar(x.field(), i) * compose(x, i, m);
  return out;
}

namespace detail {

template <OperadInstance Op>
Element<Op> brace_unchecked(const Element<Op>& p, const std::vector<Element<Op>>& qs) {
  const Op& op = p.operad();
  const std::size_t r = p.arity();
  const std::size_t n = qs.size();
  long long total = static_cast<long long>(r);
  for (const auto& q : qs) {
    same_operad(p, q);
    total += q.degree();
  }
  if (total < 0) throw arity_error("brace: negative result arity");
  Element<Op> out(op, static_cast<std::size_t>(total));
  if (n == 0) return p;
  std::vector<std::size_t> slots(n);
  std::iota(slots.begin(), slots.end(), std::size_t{1});
  Element<Op> unit = op.one();
  while (true) {
    std::vector<Element<Op>> ys(r, unit);
    long long eps = 0, deg_before = 0;
    for (std::size_t j = 0; j < n; ++j) {
      ys[slots[j] - 1] = qs[j];
      // inputs strictly left of q_j's block
      long long i_j = static_cast<long long>(slots[j] - 1 - j) + deg_before;
      eps += qs[j].degree() * (total - i_j);
      deg_before += static_cast<long long>(qs[j].arity());
    }
    out += sign_scalar(p.field(), eps) * gamma(p, ys);
    // next increasing n-subset of {1..r}
    std::size_t k = n;
    while (k > 0 && slots[k - 1] == r - n + k) --k;
    if (k == 0) break;
    ++slots[k - 1];
    for (std::size_t u = k; u < n; ++u) slots[u] = slots[u - 1] + 1;
  }
  return out;
}

}  // namespace detail

/// p{q_1..q_n}: signed sum over order-preserving slot choices.
template <OperadInstance Op>
Element<Op> brace(const Element<Op>& p, const std::vector<Element<Op>>& qs) {
  if (qs.size() > p.arity()) {
    throw arity_error("brace: " + std::to_string(qs.size()) + " insertions into arity " + std::to_string(p.arity()));
  }
  return detail::brace_unchecked(p, qs);
}

/// As brace, but zero when there are more insertions than inputs.
template <OperadInstance Op>
Element<Op> brace_or_zero(const Element<Op>& p, const std::vector<Element<Op>>& qs) {
  if (qs.size() > p.arity()) {
    long long total = static_cast<long long>(p.arity());
    for (const auto& q : qs) total += q.degree();
    return Element<Op>(p.operad(), static_cast<std::size_t>(std::max<long long>(total, 0)));
  }
  return detail::brace_unchecked(p, qs);
}

/// p ⊙ q = (-1)^{s(r-1)} m{p, q}.
template <OperadInstance Op>
Element<Op> odot(const Element<Op>& p, const Element<Op>& q) {
  long long r = static_cast<long long>(p.arity()), s = static_cast<long long>(q.arity());
  return sign_scalar(p.field(), s * (r - 1)) * brace(p.operad().mult(), {p, q});
}

/// p • q = (-1)^{(|q|+1)(|p|+1)} γ(m; p, q).
template <OperadInstance Op>
Element<Op> dot(const Element<Op>& p, const Element<Op>& q) {
  long long r = static_cast<long long>(p.arity()), s = static_cast<long long>(q.arity());
  return sign_scalar(p.field(), r * s) * gamma(p.operad().mult(), {p, q});
}

namespace detail {

template <OperadInstance Op>
Element<Op> repeated_face(Element<Op> x, std::size_t count, bool first) {
  for (std::size_t k = 0; k < count; ++k) x = face(x, first ? 1 : x.arity());
  return x;
}

}  // namespace detail

/// Alexander–Whitney coproduct, extended linearly from basis objects:
/// Δb = 1_0⊗b + Σ_{0<j<n} (F_{j+1}..F_n b)⊗(F_1^j b) + b⊗1_0, and
/// Δb = counit(b)·1_0⊗1_0 in arity 0.
template <OperadInstance Op>
Tensor<Op, 2> aw_coproduct(const Element<Op>& x) {
  const Op& op = x.operad();
  Tensor<Op, 2> out(op);
  Element<Op> z = op.zero_unit();
  for (const auto& [b, c] : x.terms()) {
    Element<Op> e = Element<Op>::basis(op, b, c);
    const std::size_t n = x.arity();
    if (n == 0) {
      Tensor<Op, 2> t = tensor(z, z);
      t *= c * op.counit_basis(b);
      out += t;
      continue;
    }
    out += tensor(z, e);
    Element<Op> unit_e = Element<Op>::basis(op, b);
    for (std::size_t j = 1; j < n; ++j) {
      Element<Op> front = detail::repeated_face(unit_e, n - j, false);
      Element<Op> back = detail::repeated_face(unit_e, j, true);
      Tensor<Op, 2> t = tensor(front, back);
      t *= c;
      out += t;
    }
    out += tensor(e, z);
  }
  return out;
}

/// (counit ⊗ id) or (id ⊗ counit) applied to a two-factor tensor.
template <OperadInstance Op>
Element<Op> contract_counit(const Tensor<Op, 2>& t, std::size_t factor, std::size_t result_arity) {
  const Op& op = t.operad();
  Element<Op> out(op, result_arity);
  for (const auto& [key, c] : t.terms()) {
    const auto& kept = key[1 - factor];
    const auto& eaten = key[factor];
    if (op.arity(eaten) != 0) continue;
    if (op.arity(kept) != result_arity) continue;
    out.add_term(kept, c * op.counit_basis(eaten));
  }
  return out;
}

namespace detail {

inline std::vector<std::size_t> multi_positions(std::size_t arity, const std::vector<std::size_t>& slots,
                                                const std::vector<std::size_t>& arities) {
  if (slots.size() != arities.size()) throw arity_error("multi-index: slots and arities differ in length");
  std::size_t sum = std::accumulate(arities.begin(), arities.end(), std::size_t{0});
  if (sum != arity) {
    throw arity_error("multi-index: arities sum to " + std::to_string(sum) + ", element has arity " +
                      std::to_string(arity));
  }
  std::vector<std::size_t> pos;
  std::size_t offset = 0;
  for (std::size_t r = 0; r < slots.size(); ++r) {
    if (slots[r] < 1 || slots[r] > arities[r]) {
      throw arity_error("multi-index: slot " + std::to_string(slots[r]) + " outside block of size " +
                        std::to_string(arities[r]));
    }
    pos.push_back(slots[r] + offset);
    offset += arities[r];
  }
  return pos;
}

}  // namespace detail

/// Inserts 1_0 at positions j_r + Σ_{u<r} t_u, highest position first.
template <OperadInstance Op>
Element<Op> multi_face(const Element<Op>& x, const std::vector<std::size_t>& slots,
                       const std::vector<std::size_t>& arities) {
  auto pos = detail::multi_positions(x.arity(), slots, arities);
  Element<Op> r = x;
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) r = face(r, *it);
  return r;
}

/// Inserts m at positions j_r + Σ_{u<r} t_u, highest position first.
template <OperadInstance Op>
Element<Op> multi_degeneracy(const Element<Op>& x, const std::vector<std::size_t>& slots,
                             const std::vector<std::size_t>& arities) {
  auto pos = detail::multi_positions(x.arity(), slots, arities);
  Element<Op> r = x;
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) r = degeneracy(r, *it);
  return r;
}

/// ε_s = Σ_r t_r (s - r), r 1-based.
inline long long multi_sign_exponent(const std::vector<std::size_t>& arities) {
  long long s = static_cast<long long>(arities.size()), eps = 0;
  for (std::size_t r = 0; r < arities.size(); ++r) {
    eps += static_cast<long long>(arities[r]) * (s - static_cast<long long>(r + 1));
  }
  return eps;
}

}  // namespace operad_lab

#endif  // OPERAD_LAB_OPERAD_HPP
