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

#ifndef OPERAD_LAB_RANDOM_HPP
#define OPERAD_LAB_RANDOM_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "operad_lab/assoc.hpp"
#include "operad_lab/endo.hpp"
#include "operad_lab/shift.hpp"

namespace operad_lab {

/// mt19937_64 plus a modulo draw, so streams match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  static std::uint64_t hash(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  /// Independent stream for one trial of one named check.
  static Rng for_trial(std::uint64_t seed, std::string_view check, std::uint64_t trial) {
    return Rng(mix(mix(seed) ^ hash(check)) ^ mix(trial + 1));
  }

  std::uint64_t next() { return gen_(); }

  /// Uniform in [lo, hi].
  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t k = v.size(); k > 1; --k) std::swap(v[k - 1], v[index(k)]);
  }

 private:
  std::mt19937_64 gen_;
};

inline Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<int> w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = static_cast<int>(k + 1);
  rng.shuffle(w);
  return Permutation(std::move(w));
}

/// n distinct entries from {1..bound}, sorted.
inline OrderedSubset random_subset(Rng& rng, std::size_t n, long long bound) {
  std::vector<long long> pool(static_cast<std::size_t>(bound));
  for (long long k = 0; k < bound; ++k) pool[static_cast<std::size_t>(k)] = k + 1;
  rng.shuffle(pool);
  pool.resize(n);
  std::sort(pool.begin(), pool.end());
  return OrderedSubset(std::move(pool));
}

/// Per-operad random basis objects and the arity ceiling used by the suites.
template <class Op>
struct Sampler;

template <>
struct Sampler<AssocOperad> {
  const AssocOperad& op;
  std::size_t max_arity = 7;
  Permutation basis(Rng& rng, std::size_t n) const { return random_permutation(rng, n); }
};

template <>
struct Sampler<ShiftOperad> {
  const ShiftOperad& op;
  std::size_t max_arity = 6;
  long long max_entry = 12;
  OrderedSubset basis(Rng& rng, std::size_t n) const { return random_subset(rng, n, max_entry); }
};

template <>
struct Sampler<EndoOperad> {
  const EndoOperad& op;
  std::size_t max_arity = 4;
  EndoBasis basis(Rng& rng, std::size_t n) const {
    const std::size_t d = op.algebra().dim();
    EndoBasis b;
    for (std::size_t k = 0; k < n; ++k) b.inputs.push_back(rng.index(d));
    b.output = rng.index(d);
    return b;
  }
};

/// 1 to 3 terms with coefficients in [-3, 3] \ {0}. With unit_line, arity 0
/// draws a multiple of 1_0.
template <class Op>
Element<Op> random_element(const Sampler<Op>& s, Rng& rng, std::size_t n, bool unit_line = false) {
  const Op& op = s.op;
  const Field f = op.field();
  auto coeff = [&] {
    long long c = rng.uniform(1, 3);
    return f.from_int(rng.uniform(0, 1) ? c : -c);
  };
  if (n == 0 && unit_line) return coeff() * op.zero_unit();
  Element<Op> x(op, n);
  std::size_t terms = static_cast<std::size_t>(rng.uniform(1, 3));
  for (std::size_t k = 0; k < terms; ++k) x.add_term(s.basis(rng, n), coeff());
  if (x.is_zero()) x.add_term(s.basis(rng, n), f.one());
  return x;
}

}  // namespace operad_lab

#endif  // OPERAD_LAB_RANDOM_HPP
