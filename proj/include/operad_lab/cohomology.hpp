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

#ifndef OPERAD_LAB_COHOMOLOGY_HPP
#define OPERAD_LAB_COHOMOLOGY_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "operad_lab/assoc.hpp"
#include "operad_lab/endo.hpp"
#include "operad_lab/errors.hpp"
#include "operad_lab/operad.hpp"
#include "operad_lab/parallel.hpp"
#include "operad_lab/shift.hpp"
#include "operad_lab/sparse_matrix.hpp"

namespace operad_lab {

enum class Differential { boundary, coboundary, hochschild };

inline std::string to_string(Differential k) {
  switch (k) {
    case Differential::boundary: return "boundary";
    case Differential::coboundary: return "coboundary";
    case Differential::hochschild: return "hochschild";
  }
  return "?";
}

/// A finite window [lo, hi] of the chain complex (O, ∂) or cochain complex (O, d).
/// The classical Hochschild kind needs an EndoOperad.
template <class Op>
struct ComplexSpec {
  const Op* op = nullptr;
  Differential kind = Differential::boundary;
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::function<std::vector<typename Op::basis_type>(std::size_t)> basis_of;
  std::size_t max_columns = 20000;
  std::vector<std::string> notes;

  /// Degree reached by the differential leaving degree n, or -1 when ∂ leaves degree 0.
  long long target(std::size_t n) const {
    if (kind == Differential::boundary) return static_cast<long long>(n) - 1;
    return static_cast<long long>(n) + 1;
  }
};

inline ComplexSpec<AssocOperad> assoc_complex(const AssocOperad& op, Differential kind, std::size_t lo, std::size_t hi) {
  if (kind == Differential::hochschild) throw std::invalid_argument("the classical differential needs an endo operad");
  ComplexSpec<AssocOperad> s{&op, kind, lo, hi, [&op](std::size_t n) { return op.basis(n); }, 20000, {}};
  return s;
}

/// Entries are bounded by `bound`; for d the bound grows by one per degree above lo,
/// so that every image lands inside the next window.
inline ComplexSpec<ShiftOperad> shift_complex(const ShiftOperad& op, Differential kind, std::size_t lo, std::size_t hi,
                                              long long bound) {
  if (kind == Differential::hochschild) throw std::invalid_argument("the classical differential needs an endo operad");
  ComplexSpec<ShiftOperad> s{&op, kind, lo, hi, {}, 20000, {}};
  if (kind == Differential::boundary) {
    s.basis_of = [&op, bound](std::size_t n) { return op.basis(n, bound); };
    s.notes.push_back("truncated to entries <= " + std::to_string(bound));
  } else {
    s.basis_of = [&op, bound, lo](std::size_t n) {
      return op.basis(n, bound + static_cast<long long>(n) - static_cast<long long>(lo));
    };
    s.notes.push_back("truncated to entries <= " + std::to_string(bound) + " + (degree - " + std::to_string(lo) + ")");
  }
  return s;
}

inline ComplexSpec<EndoOperad> endo_complex(const EndoOperad& op, Differential kind, std::size_t lo, std::size_t hi) {
  ComplexSpec<EndoOperad> s{&op, kind, lo, hi, [&op](std::size_t n) { return op.basis(n); }, 20000, {}};
  if (kind == Differential::boundary) s.notes.push_back("the boundary of an endo complex mixes A-valued arity 0");
  return s;
}

/// Matrix of the classical coboundary Hom(A^{⊗n}, A) → Hom(A^{⊗n+1}, A) in flat-index bases.
inline SparseMatrix hochschild_matrix(const FinAlgebra& alg, std::size_t n, std::size_t max_columns = 20000) {
  const std::size_t d = alg.dim();
  const std::size_t cols = MultiMap::power(d, n + 1), rows = MultiMap::power(d, n + 2);
  if (cols > max_columns) throw limit_error("degree " + std::to_string(n) + " has " + std::to_string(cols) + " basis maps");
  std::vector<MatrixEntry> es;
  for (std::size_t c = 0; c < cols; ++c) {
    MultiMap f(alg.field(), d, n);
    f[c] = alg.field().one();
    MultiMap g = hochschild_classical(alg, f);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!g[r].is_zero()) es.push_back({r, c, g[r]});
    }
  }
  return SparseMatrix::from_entries(rows, cols, alg.field(), std::move(es));
}

/// Matrix of the differential leaving degree n; columns follow basis_of(n), rows basis_of(target).
template <OperadInstance Op>
SparseMatrix differential_matrix(const ComplexSpec<Op>& spec, std::size_t n) {
  const Op& op = *spec.op;
  if (spec.kind == Differential::hochschild) {
    if constexpr (std::is_same_v<Op, EndoOperad>) {
      return hochschild_matrix(op.algebra(), n, spec.max_columns);
    } else {
      throw std::invalid_argument("the classical differential needs an endo operad");
    }
  }
  auto cols = spec.basis_of(n);
  if (cols.size() > spec.max_columns) {
    throw limit_error("degree " + std::to_string(n) + " has " + std::to_string(cols.size()) + " basis objects (cap " +
                      std::to_string(spec.max_columns) + ")");
  }
  long long t = spec.target(n);
  if (t < 0) return SparseMatrix(0, cols.size(), op.field());
  auto rows = spec.basis_of(static_cast<std::size_t>(t));
  if (rows.size() > spec.max_columns) {
    throw limit_error("degree " + std::to_string(t) + " has " + std::to_string(rows.size()) + " basis objects (cap " +
                      std::to_string(spec.max_columns) + ")");
  }
  std::map<typename Op::basis_type, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], r);
  std::vector<MatrixEntry> es;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto x = Element<Op>::basis(op, cols[c]);
    auto image = spec.kind == Differential::boundary ? boundary(x) : coboundary(x);
    for (const auto& [b, coeff] : image.terms()) {
      auto it = row_of.find(b);
      if (it == row_of.end()) {
        throw std::logic_error("image basis " + op.format_basis(b) + " outside the degree-" + std::to_string(t) + " window");
      }
      es.push_back({it->second, c, coeff});
    }
  }
  return SparseMatrix::from_entries(rows.size(), cols.size(), op.field(), std::move(es));
}

struct BettiResult {
  std::vector<std::size_t> degrees;
  std::vector<std::size_t> dims;
  /// Rank of the differential leaving each degree.
  std::vector<std::size_t> ranks;
  std::string field;
  std::vector<std::string> warnings;
};

/// dim H_n = dim ker(out of n) − rank(into n), differentials taken exactly,
/// including the ones just outside [lo, hi].
template <OperadInstance Op>
BettiResult betti(const ComplexSpec<Op>& spec) {
  if (spec.hi < spec.lo) throw std::invalid_argument("degree range is empty");
  const Op& op = *spec.op;
  BettiResult res;
  res.field = op.field().name();
  res.warnings = spec.notes;
  // degrees whose outgoing rank is needed: lo-1 (cochain) or hi+1 (chain) plus the window
  std::vector<std::size_t> needed;
  bool cochain = spec.kind != Differential::boundary;
  if (cochain && spec.lo > 0) needed.push_back(spec.lo - 1);
  for (std::size_t n = spec.lo; n <= spec.hi; ++n) needed.push_back(n);
  if (!cochain) needed.push_back(spec.hi + 1);
  struct Info {
    std::size_t dim = 0, rank = 0;
  };
  auto infos = parallel_map<Info>(needed.size(), [&](std::size_t k) {
    SparseMatrix m = differential_matrix(spec, needed[k]);
    return Info{m.cols(), operad_lab::rank(m)};
  });
  std::map<std::size_t, Info> by_degree;
  for (std::size_t k = 0; k < needed.size(); ++k) by_degree[needed[k]] = infos[k];
  for (std::size_t n = spec.lo; n <= spec.hi; ++n) {
    const Info& here = by_degree.at(n);
    std::size_t incoming = 0;
    if (cochain && n > 0) incoming = by_degree.at(n - 1).rank;
    if (!cochain) incoming = by_degree.at(n + 1).rank;
    res.degrees.push_back(n);
    res.dims.push_back(here.dim - here.rank - incoming);
    res.ranks.push_back(here.rank);
  }
  return res;
}

}  // namespace operad_lab

#endif  // OPERAD_LAB_COHOMOLOGY_HPP
