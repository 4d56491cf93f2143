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

#ifndef OPERAD_LAB_IO_HPP
#define OPERAD_LAB_IO_HPP

#include <cctype>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "operad_lab/assoc.hpp"
#include "operad_lab/cohomology.hpp"
#include "operad_lab/endo.hpp"
#include "operad_lab/errors.hpp"
#include "operad_lab/shift.hpp"

namespace operad_lab {

using json = nlohmann::ordered_json;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline long long parse_ll(std::string_view s, std::string_view context) {
  s = trim(s);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw parse_error("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return v;
}

inline std::vector<long long> parse_list(std::string_view s, std::string_view context) {
  std::vector<long long> out;
  s = trim(s);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    out.push_back(parse_ll(s.substr(start, comma - start), context));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

/// "4312", "10,2,...", or "()" for 1_K.
inline Permutation parse_permutation(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = detail::trim(s.substr(1, s.size() - 2));
  if (s.empty()) return Permutation{};
  std::vector<int> w;
  if (s.find(',') != std::string_view::npos) {
    for (long long v : detail::parse_list(s, text)) w.push_back(static_cast<int>(v));
  } else {
    for (char ch : s) {
      if (ch < '1' || ch > '9') throw parse_error("bad permutation '" + std::string(text) + "'");
      w.push_back(ch - '0');
    }
  }
  try {
    return Permutation(std::move(w));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

/// "{1,3,4}", "1,3,4", or "{}" for X_0.
inline OrderedSubset parse_subset(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
  try {
    return OrderedSubset(detail::parse_list(s, text));
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const parse_error*>(&e)) throw;
    throw parse_error(e.what());
  }
}

/// "E[1,2>1]" (1-based), "E[>1]" in arity 0.
inline EndoBasis parse_endo_basis(std::string_view text, std::size_t dim) {
  std::string_view s = detail::trim(text);
  if (s.size() < 4 || s.substr(0, 2) != "E[" || s.back() != ']') {
    throw parse_error("bad endo basis '" + std::string(text) + "' (expected E[i1,..,in>j])");
  }
  s = s.substr(2, s.size() - 3);
  std::size_t gt = s.find('>');
  if (gt == std::string_view::npos) throw parse_error("missing '>' in '" + std::string(text) + "'");
  EndoBasis b;
  auto check = [&](long long v) {
    if (v < 1 || static_cast<std::size_t>(v) > dim) {
      throw parse_error("index " + std::to_string(v) + " outside 1.." + std::to_string(dim) + " in '" + std::string(text) + "'");
    }
    return static_cast<std::size_t>(v - 1);
  };
  for (long long v : detail::parse_list(s.substr(0, gt), text)) b.inputs.push_back(check(v));
  b.output = check(detail::parse_ll(s.substr(gt + 1), text));
  return b;
}

inline Permutation parse_basis(const AssocOperad&, std::string_view s) { return parse_permutation(s); }
inline OrderedSubset parse_basis(const ShiftOperad&, std::string_view s) { return parse_subset(s); }
inline EndoBasis parse_basis(const EndoOperad& op, std::string_view s) { return parse_endo_basis(s, op.algebra().dim()); }

/// Sums such as "2*4312 - 1/2*3421 + 1234". Sign characters split terms only
/// outside brackets.
template <OperadInstance Op>
Element<Op> parse_element(const Op& op, std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.empty()) throw parse_error("empty element");
  std::vector<std::pair<bool, std::string_view>> pieces;
  int depth = 0;
  std::size_t start = 0;
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    start = 1;
  }
  for (std::size_t k = start; k < s.size(); ++k) {
    char ch = s[k];
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') --depth;
    if (depth == 0 && (ch == '+' || ch == '-') && k > start) {
      std::string_view before = detail::trim(s.substr(start, k - start));
      if (!before.empty() && before.back() != '*' && before.back() != '/') {
        pieces.emplace_back(negative, before);
        negative = ch == '-';
        start = k + 1;
      }
    }
  }
  pieces.emplace_back(negative, detail::trim(s.substr(start)));
  std::optional<Element<Op>> out;
  for (auto [neg, piece] : pieces) {
    if (piece.empty()) throw parse_error("empty term in '" + std::string(text) + "'");
    Scalar c = op.field().one();
    std::string_view basis_text = piece;
    if (auto star = piece.find('*'); star != std::string_view::npos) {
      c = op.field().parse_scalar(piece.substr(0, star));
      basis_text = piece.substr(star + 1);
    }
    if (neg) c = -c;
    auto b = parse_basis(op, basis_text);
    if (!out) out.emplace(op, op.arity(b));
    try {
      out->add_term(b, c);
    } catch (const arity_error& e) {
      throw parse_error(std::string("inhomogeneous element: ") + e.what());
    }
  }
  return *out;
}

inline json basis_to_json(const AssocOperad&, const Permutation& p) { return p.word(); }
inline json basis_to_json(const ShiftOperad&, const OrderedSubset& x) { return x.entries(); }
inline json basis_to_json(const EndoOperad&, const EndoBasis& b) {
  json in = json::array();
  for (auto v : b.inputs) in.push_back(v + 1);
  return json{{"in", in}, {"out", b.output + 1}};
}

inline Permutation basis_from_json(const AssocOperad&, const json& j) {
  try {
    return Permutation(j.get<std::vector<int>>());
  } catch (const std::exception& e) {
    throw parse_error(std::string("permutation: ") + e.what());
  }
}

inline OrderedSubset basis_from_json(const ShiftOperad&, const json& j) {
  try {
    return OrderedSubset(j.get<std::vector<long long>>());
  } catch (const std::exception& e) {
    throw parse_error(std::string("ordered subset: ") + e.what());
  }
}

inline EndoBasis basis_from_json(const EndoOperad& op, const json& j) {
  EndoBasis b;
  const std::size_t d = op.algebra().dim();
  try {
    for (long long v : j.at("in").get<std::vector<long long>>()) {
      if (v < 1 || static_cast<std::size_t>(v) > d) throw parse_error("input index out of range");
      b.inputs.push_back(static_cast<std::size_t>(v - 1));
    }
    long long out = j.at("out").get<long long>();
    if (out < 1 || static_cast<std::size_t>(out) > d) throw parse_error("output index out of range");
    b.output = static_cast<std::size_t>(out - 1);
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception& e) {
    throw parse_error(std::string("endo basis: ") + e.what());
  }
  return b;
}

inline Scalar scalar_from_json(const Field& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (j.is_string()) return f.parse_scalar(j.get<std::string>());
  throw parse_error("scalar must be a string or an integer");
}

template <OperadInstance Op>
json element_to_json(const Element<Op>& x) {
  const Op& op = x.operad();
  json terms = json::array();
  for (const auto& [b, c] : x.terms()) terms.push_back(json{{"basis", basis_to_json(op, b)}, {"coeff", c.to_string()}});
  return json{{"operad", op.name()}, {"arity", x.arity()}, {"terms", terms}};
}

template <OperadInstance Op>
Element<Op> element_from_json(const Op& op, const json& j) {
  try {
    if (j.contains("operad") && j.at("operad").get<std::string>() != op.name()) {
      throw parse_error("element of operad '" + j.at("operad").get<std::string>() + "', expected '" + op.name() + "'");
    }
    Element<Op> x(op, j.at("arity").get<std::size_t>());
    for (const auto& t : j.at("terms")) x.add_term(basis_from_json(op, t.at("basis")), scalar_from_json(op.field(), t.at("coeff")));
    return x;
  } catch (const parse_error&) {
    throw;
  } catch (const arity_error&) {
    throw;
  } catch (const json::exception& e) {
    throw parse_error(std::string("element JSON: ") + e.what());
  }
}

template <OperadInstance Op>
json tensor_to_json(const Tensor<Op, 2>& t) {
  const Op& op = t.operad();
  json terms = json::array();
  for (const auto& [k, c] : t.terms()) {
    terms.push_back(json{{"left", basis_to_json(op, k[0])}, {"right", basis_to_json(op, k[1])}, {"coeff", c.to_string()}});
  }
  return json{{"operad", op.name()}, {"terms", terms}};
}

/// {"dim": d, "unit": [..], "mul": [[[..]]]}, mul[a][b][k] the coefficient of e_k in e_a e_b.
inline FinAlgebra algebra_from_json(const json& j, const Field& f, std::string name = "custom") {
  try {
    std::size_t d = j.at("dim").get<std::size_t>();
    std::vector<Scalar> unit;
    for (const auto& u : j.at("unit")) unit.push_back(scalar_from_json(f, u));
    std::vector<Scalar> mul;
    const json& m = j.at("mul");
    if (m.size() != d) throw parse_error("mul must have dim rows");
    for (const auto& row : m) {
      if (row.size() != d) throw parse_error("mul must be dim x dim x dim");
      for (const auto& cell : row) {
        if (cell.size() != d) throw parse_error("mul must be dim x dim x dim");
        for (const auto& c : cell) mul.push_back(scalar_from_json(f, c));
      }
    }
    return FinAlgebra(f, d, std::move(mul), std::move(unit), std::move(name));
  } catch (const json::exception& e) {
    throw parse_error(std::string("algebra JSON: ") + e.what());
  }
}

inline json algebra_to_json(const FinAlgebra& a) {
  const std::size_t d = a.dim();
  json unit = json::array();
  for (const auto& u : a.unit()) unit.push_back(u.to_short_string());
  json mul = json::array();
  for (std::size_t x = 0; x < d; ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < d; ++y) {
      json cell = json::array();
      for (std::size_t k = 0; k < d; ++k) cell.push_back(a.c(x, y, k).to_short_string());
      row.push_back(cell);
    }
    mul.push_back(row);
  }
  return json{{"dim", d}, {"unit", unit}, {"mul", mul}};
}

inline json multimap_to_json(const MultiMap& f) {
  json c = json::array();
  for (const auto& s : f.coeffs()) c.push_back(s.to_short_string());
  return json{{"arity", f.arity()}, {"coeffs", c}};
}

inline MultiMap multimap_from_json(const json& j, const FinAlgebra& a) {
  try {
    std::vector<Scalar> c;
    for (const auto& v : j.at("coeffs")) c.push_back(scalar_from_json(a.field(), v));
    return MultiMap(a.field(), a.dim(), j.at("arity").get<std::size_t>(), std::move(c));
  } catch (const json::exception& e) {
    throw parse_error(std::string("multimap JSON: ") + e.what());
  }
}

inline json betti_to_json(const BettiResult& r) {
  return json{{"degrees", r.degrees}, {"dims", r.dims}, {"ranks", r.ranks}, {"field", r.field}, {"warnings", r.warnings}};
}

}  // namespace operad_lab

#endif  // OPERAD_LAB_IO_HPP
