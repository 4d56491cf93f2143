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

#ifndef OPERAD_LAB_ENDO_HPP
#define OPERAD_LAB_ENDO_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "operad_lab/element.hpp"
#include "operad_lab/errors.hpp"
#include "operad_lab/operad.hpp"

namespace operad_lab {

/// Finite-dimensional unital associative algebra: e_a e_b = Σ_k c(a,b,k) e_k.
class FinAlgebra {
 public:
  /// mul is laid out [a][b][k], k fastest. Throws unless associative and unital.
  FinAlgebra(Field f, std::size_t dim, std::vector<Scalar> mul, std::vector<Scalar> unit, std::string name = "custom")
      : field_(f), dim_(dim), mul_(std::move(mul)), unit_(std::move(unit)), name_(std::move(name)) {
    if (dim_ == 0) throw std::invalid_argument("algebra dimension must be at least 1");
    if (mul_.size() != dim_ * dim_ * dim_) {
      throw std::invalid_argument("structure constants: expected " + std::to_string(dim_ * dim_ * dim_) +
                                  " entries, got " + std::to_string(mul_.size()));
    }
    if (unit_.size() != dim_) throw std::invalid_argument("unit: expected " + std::to_string(dim_) + " coordinates");
    for (const auto& s : mul_) {
      if (!(s.field() == f)) throw field_mismatch("structure constant over " + s.field().name());
    }
    for (const auto& s : unit_) {
      if (!(s.field() == f)) throw field_mismatch("unit coordinate over " + s.field().name());
    }
    check_axioms();
    for (std::size_t k = 0; k < dim_; ++k) {
      if (!unit_[k].is_zero()) {
        counit_index_ = k;
        break;
      }
    }
  }

  /// "field" (K), "dual" (K[x]/(x^2)), "m2" (2x2 matrices, basis E11 E12 E21 E22),
  /// "upper" (upper triangular 2x2, basis E11 E12 E22).
  static FinAlgebra preset(std::string_view name, Field f) {
    auto z = f.zero(), o = f.one();
    if (name == "field") return FinAlgebra(f, 1, {o}, {o}, "field");
    if (name == "dual") {
      std::vector<Scalar> mul(8, z);
      auto at = [](std::size_t a, std::size_t b, std::size_t k) { return (a * 2 + b) * 2 + k; };
      mul[at(0, 0, 0)] = o;
      mul[at(0, 1, 1)] = o;
      mul[at(1, 0, 1)] = o;
      return FinAlgebra(f, 2, std::move(mul), {o, z}, "dual");
    }
    if (name == "m2" || name == "upper") {
      std::vector<std::pair<int, int>> units = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
      if (name == "upper") units = {{0, 0}, {0, 1}, {1, 1}};
      const std::size_t d = units.size();
      std::vector<Scalar> mul(d * d * d, z);
      std::vector<Scalar> unit(d, z);
      for (std::size_t a = 0; a < d; ++a) {
        if (units[a].first == units[a].second) unit[a] = o;
        for (std::size_t b = 0; b < d; ++b) {
          if (units[a].second != units[b].first) continue;
          std::pair<int, int> prod{units[a].first, units[b].second};
          for (std::size_t k = 0; k < d; ++k) {
            if (units[k] == prod) mul[(a * d + b) * d + k] = o;
          }
        }
      }
      return FinAlgebra(f, d, std::move(mul), std::move(unit), std::string(name));
    }
    throw parse_error("unknown algebra preset '" + std::string(name) + "' (field, dual, m2, upper)");
  }

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::string& name() const noexcept { return name_; }
  const Scalar& c(std::size_t a, std::size_t b, std::size_t k) const { return mul_[(a * dim_ + b) * dim_ + k]; }
  const std::vector<Scalar>& structure_constants() const noexcept { return mul_; }
  const std::vector<Scalar>& unit() const noexcept { return unit_; }
  /// First nonzero coordinate of 1_A; the counit reads this coordinate.
  std::size_t counit_index() const noexcept { return counit_index_; }

  std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    std::vector<Scalar> out(dim_, field_.zero());
    for (std::size_t a = 0; a < dim_; ++a) {
      if (x[a].is_zero()) continue;
      for (std::size_t b = 0; b < dim_; ++b) {
        if (y[b].is_zero()) continue;
        Scalar xy = x[a] * y[b];
        for (std::size_t k = 0; k < dim_; ++k) out[k] += xy * c(a, b, k);
      }
    }
    return out;
  }

  std::vector<Scalar> basis_vector(std::size_t a) const {
    std::vector<Scalar> v(dim_, field_.zero());
    v.at(a) = field_.one();
    return v;
  }

 private:
  void check_axioms() const {
    for (std::size_t a = 0; a < dim_; ++a) {
      auto ea = basis_vector(a);
      if (multiply(unit_, ea) != ea || multiply(ea, unit_) != ea) {
        throw std::invalid_argument("unit law fails on basis element " + std::to_string(a + 1));
      }
      for (std::size_t b = 0; b < dim_; ++b) {
        auto ab = multiply(ea, basis_vector(b));
        for (std::size_t k = 0; k < dim_; ++k) {
          auto ek = basis_vector(k);
          if (multiply(ab, ek) != multiply(ea, multiply(basis_vector(b), ek))) {
            throw std::invalid_argument("multiplication is not associative on (" + std::to_string(a + 1) + "," +
                                        std::to_string(b + 1) + "," + std::to_string(k + 1) + ")");
          }
        }
      }
    }
  }

  Field field_;
  std::size_t dim_;
  std::vector<Scalar> mul_;
  std::vector<Scalar> unit_;
  std::string name_;
  std::size_t counit_index_ = 0;
};

/// Dense coefficients of f: A^{⊗n} → A. Flat index ((i_1 d + i_2) d + .. + i_n) d + j;
/// arity 0 holds the d coordinates of f().
class MultiMap {
 public:
  MultiMap(Field f, std::size_t dim, std::size_t arity)
      : field_(f), dim_(dim), arity_(arity), t_(power(dim, arity + 1), f.zero()) {}

  MultiMap(Field f, std::size_t dim, std::size_t arity, std::vector<Scalar> coeffs)
      : field_(f), dim_(dim), arity_(arity), t_(std::move(coeffs)) {
    if (t_.size() != power(dim, arity + 1)) {
      throw std::invalid_argument("multimap: expected " + std::to_string(power(dim, arity + 1)) + " coefficients");
    }
  }

  static std::size_t power(std::size_t d, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t k = 0; k < e; ++k) r *= d;
    return r;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return t_.size(); }
  const std::vector<Scalar>& coeffs() const noexcept { return t_; }
  Scalar& operator[](std::size_t flat) { return t_[flat]; }
  const Scalar& operator[](std::size_t flat) const { return t_[flat]; }

  std::size_t index(const std::vector<std::size_t>& inputs, std::size_t out) const {
    std::size_t flat = 0;
    for (std::size_t v : inputs) flat = flat * dim_ + v;
    return flat * dim_ + out;
  }

  /// Decodes the input part of a flat index of arity n (without the output digit).
  static std::vector<std::size_t> digits(std::size_t flat_inputs, std::size_t dim, std::size_t n) {
    std::vector<std::size_t> in(n);
    for (std::size_t k = n; k-- > 0;) {
      in[k] = flat_inputs % dim;
      flat_inputs /= dim;
    }
    return in;
  }

  /// f(e_{i_1},..,e_{i_n}) as a coordinate vector.
  std::vector<Scalar> value(std::size_t flat_inputs) const {
    return std::vector<Scalar>(t_.begin() + static_cast<long>(flat_inputs * dim_),
                               t_.begin() + static_cast<long>((flat_inputs + 1) * dim_));
  }

  void add_value(std::size_t flat_inputs, const std::vector<Scalar>& v, const Scalar& c) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!v[j].is_zero()) t_[flat_inputs * dim_ + j] += c * v[j];
    }
  }

  bool is_zero() const {
    for (const auto& s : t_) {
      if (!s.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const MultiMap& a, const MultiMap& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.t_ == b.t_;
  }

 private:
  Field field_;
  std::size_t dim_;
  std::size_t arity_;
  std::vector<Scalar> t_;
};

namespace detail {

inline void check_map(const FinAlgebra& alg, const MultiMap& f) {
  if (f.dim() != alg.dim()) {
    throw std::invalid_argument("multimap of dimension " + std::to_string(f.dim()) + " on algebra of dimension " +
                                std::to_string(alg.dim()));
  }
  if (!(f.field() == alg.field())) throw field_mismatch("multimap over " + f.field().name());
}

}  // namespace detail

/// (f ∘_i g)(a..) = f(a_1..a_{i-1}, g(a_i..a_{i+m-1}), ..).
inline MultiMap compose_endo(const FinAlgebra& alg, const MultiMap& f, std::size_t i, const MultiMap& g) {
  detail::check_map(alg, f);
  detail::check_map(alg, g);
  detail::check_slot(i, f.arity(), "compose_endo");
  const std::size_t d = alg.dim(), n = f.arity(), m = g.arity();
  const std::size_t out_arity = n + m - 1;
  MultiMap h(alg.field(), d, out_arity);
  const std::size_t count = MultiMap::power(d, out_arity);
  for (std::size_t flat = 0; flat < count; ++flat) {
    auto in = MultiMap::digits(flat, d, out_arity);
    std::size_t g_in = 0;
    for (std::size_t u = 0; u < m; ++u) g_in = g_in * d + in[i - 1 + u];
    std::vector<std::size_t> f_in(in.begin(), in.begin() + static_cast<long>(i - 1));
    f_in.push_back(0);
    f_in.insert(f_in.end(), in.begin() + static_cast<long>(i - 1 + m), in.end());
    for (std::size_t k = 0; k < d; ++k) {
      const Scalar& gk = g[g_in * d + k];
      if (gk.is_zero()) continue;
      f_in[i - 1] = k;
      std::size_t f_flat = 0;
      for (std::size_t v : f_in) f_flat = f_flat * d + v;
      h.add_value(flat, f.value(f_flat), gk);
    }
  }
  return h;
}

/// (d_H f)(a_1..a_{n+1}) = a_1 f(a_2..) + Σ_{k=1}^{n} (-1)^k f(..a_k a_{k+1}..)
///                         + (-1)^{n+1} f(a_1..a_n) a_{n+1}, from n = 0.
inline MultiMap hochschild_classical(const FinAlgebra& alg, const MultiMap& f) {
  detail::check_map(alg, f);
  const std::size_t d = alg.dim(), n = f.arity();
  const Field& F = alg.field();
  MultiMap h(F, d, n + 1);
  const std::size_t count = MultiMap::power(d, n + 1);
  auto flat_of = [d](const std::vector<std::size_t>& v, std::size_t from, std::size_t to) {
    std::size_t r = 0;
    for (std::size_t u = from; u < to; ++u) r = r * d + v[u];
    return r;
  };
  for (std::size_t flat = 0; flat < count; ++flat) {
    auto a = MultiMap::digits(flat, d, n + 1);
    h.add_value(flat, alg.multiply(alg.basis_vector(a[0]), f.value(flat_of(a, 1, n + 1))), F.one());
    for (std::size_t k = 1; k <= n; ++k) {
      Scalar sgn = sign_scalar(F, static_cast<long long>(k));
      std::vector<std::size_t> in(a.begin(), a.begin() + static_cast<long>(k - 1));
      in.push_back(0);
      in.insert(in.end(), a.begin() + static_cast<long>(k + 1), a.end());
      for (std::size_t p = 0; p < d; ++p) {
        const Scalar& cp = alg.c(a[k - 1], a[k], p);
        if (cp.is_zero()) continue;
        in[k - 1] = p;
        h.add_value(flat, f.value(flat_of(in, 0, n)), sgn * cp);
      }
    }
    h.add_value(flat, alg.multiply(f.value(flat_of(a, 0, n)), alg.basis_vector(a[n])),
                sign_scalar(F, static_cast<long long>(n + 1)));
  }
  return h;
}

/// (f ∪ g)(a_1..a_{r+s}) = f(a_1..a_r) g(a_{r+1}..a_{r+s}).
inline MultiMap cup_classical(const FinAlgebra& alg, const MultiMap& f, const MultiMap& g) {
  detail::check_map(alg, f);
  detail::check_map(alg, g);
  const std::size_t d = alg.dim(), r = f.arity(), s = g.arity();
  MultiMap h(alg.field(), d, r + s);
  const std::size_t rows_f = MultiMap::power(d, r), rows_g = MultiMap::power(d, s);
  for (std::size_t x = 0; x < rows_f; ++x) {
    auto fx = f.value(x);
    for (std::size_t y = 0; y < rows_g; ++y) h.add_value(x * rows_g + y, alg.multiply(fx, g.value(y)), alg.field().one());
  }
  return h;
}

/// Elementary tensor E_{I,j}: e_I ↦ e_j, other basis tensors ↦ 0. 0-based.
struct EndoBasis {
  std::vector<std::size_t> inputs;
  std::size_t output = 0;

  friend bool operator==(const EndoBasis&, const EndoBasis&) = default;
  friend bool operator<(const EndoBasis& a, const EndoBasis& b) {
    if (a.inputs.size() != b.inputs.size()) return a.inputs.size() < b.inputs.size();
    if (a.inputs != b.inputs) return a.inputs < b.inputs;
    return a.output < b.output;
  }
};

/// Multilinear maps on A with elementary-tensor basis. Arity 0 is A-valued.
class EndoOperad {
 public:
  using basis_type = EndoBasis;

  explicit EndoOperad(FinAlgebra alg) : alg_(std::move(alg)) {}
  EndoOperad(const EndoOperad&) = delete;
  EndoOperad& operator=(const EndoOperad&) = delete;

  std::string name() const { return "endo:" + alg_.name(); }
  Field field() const { return alg_.field(); }
  const FinAlgebra& algebra() const noexcept { return alg_; }
  std::size_t arity(const EndoBasis& b) const noexcept { return b.inputs.size(); }

  /// E[i1,i2>j], 1-based.
  std::string format_basis(const EndoBasis& b) const {
    std::string s = "E[";
    for (std::size_t k = 0; k < b.inputs.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(b.inputs[k] + 1);
    }
    return s + ">" + std::to_string(b.output + 1) + "]";
  }

  /// Reads coordinate counit_index() of an arity-0 value, scaled so 1_A ↦ 1.
  Scalar counit_basis(const EndoBasis& b) const {
    if (!b.inputs.empty() || b.output != alg_.counit_index()) return field().zero();
    return field().one() / alg_.unit()[alg_.counit_index()];
  }

  Element<EndoOperad> compose_basis(const EndoBasis& b, std::size_t i, const EndoBasis& c) const {
    detail::check_slot(i, b.inputs.size(), "compose");
    Element<EndoOperad> out(*this, b.inputs.size() + c.inputs.size() - 1);
    if (b.inputs[i - 1] != c.output) return out;
    EndoBasis r;
    r.inputs.assign(b.inputs.begin(), b.inputs.begin() + static_cast<long>(i - 1));
    r.inputs.insert(r.inputs.end(), c.inputs.begin(), c.inputs.end());
    r.inputs.insert(r.inputs.end(), b.inputs.begin() + static_cast<long>(i), b.inputs.end());
    r.output = b.output;
    out.add_term(r, field().one());
    return out;
  }

  /// id_A
  Element<EndoOperad> one() const {
    Element<EndoOperad> e(*this, 1);
    for (std::size_t k = 0; k < alg_.dim(); ++k) e.add_term({{k}, k}, field().one());
    return e;
  }

  /// 1_A as an arity-0 map.
  Element<EndoOperad> zero_unit() const {
    Element<EndoOperad> e(*this, 0);
    for (std::size_t k = 0; k < alg_.dim(); ++k) e.add_term({{}, k}, alg_.unit()[k]);
    return e;
  }

  /// μ_A
  Element<EndoOperad> mult() const {
    Element<EndoOperad> e(*this, 2);
    const std::size_t d = alg_.dim();
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t k = 0; k < d; ++k) e.add_term({{a, b}, k}, alg_.c(a, b, k));
      }
    }
    return e;
  }

  /// All d^{n+1} elementary tensors of arity n, in flat-index order.
  std::vector<EndoBasis> basis(std::size_t n) const {
    const std::size_t d = alg_.dim();
    std::vector<EndoBasis> out;
    const std::size_t count = MultiMap::power(d, n);
    for (std::size_t flat = 0; flat < count; ++flat) {
      auto in = MultiMap::digits(flat, d, n);
      for (std::size_t j = 0; j < d; ++j) out.push_back({in, j});
    }
    return out;
  }

  MultiMap to_multimap(const Element<EndoOperad>& x) const {
    MultiMap f(field(), alg_.dim(), x.arity());
    for (const auto& [b, c] : x.terms()) f[f.index(b.inputs, b.output)] += c;
    return f;
  }

  Element<EndoOperad> from_multimap(const MultiMap& f) const {
    detail::check_map(alg_, f);
    Element<EndoOperad> e(*this, f.arity());
    const std::size_t d = alg_.dim();
    for (std::size_t flat = 0; flat < f.size(); ++flat) {
      if (f[flat].is_zero()) continue;
      e.add_term({MultiMap::digits(flat / d, d, f.arity()), flat % d}, f[flat]);
    }
    return e;
  }

 private:
  FinAlgebra alg_;
};

static_assert(OperadInstance<EndoOperad>);

}  // namespace operad_lab

#endif  // OPERAD_LAB_ENDO_HPP
