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

// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <array>
#include <functional>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "operad_lab/operad_lab.hpp"
#include "oracles.hpp"

using namespace operad_lab;

namespace {

struct Line {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

/// Folds the named checks of a report into a line; every check must exist.
void absorb(Line& line, const Report& rep, const std::string& tag, const std::vector<std::pair<std::string, std::string>>& names,
            std::size_t min_trials) {
  for (const auto& [suite, name] : names) {
    const CheckResult* c = rep.find(suite, name);
    if (!c) {
      line.require(false, tag + ": missing check " + name);
      continue;
    }
    line.require(c->trials >= min_trials, tag + ": " + name + " ran only " + std::to_string(c->trials) + " trials");
    line.require(c->passed(), tag + ": " + name + " failed " + std::to_string(c->failures) + "/" + std::to_string(c->trials));
  }
}

template <class Op>
Report run_suite(const Op& op, const std::string& suite, std::size_t trials) {
  return verify(op, VerifyOptions{42, trials, suite});
}

Permutation P(const std::string& s) { return parse_permutation(s); }

const std::vector<std::pair<std::string, std::string>> kSimplicial = {
    {"simplicial", "F_iF_j=F_{j-1}F_i (i<j)"},   {"simplicial", "D_iD_j=D_{j+1}D_i (i<=j)"},
    {"simplicial", "F_iD_j mixed relations"},     {"simplicial", "F_iF_j=F_jF_{i+1} (i>=j)"},
    {"simplicial", "D_iD_j=D_jD_{i-1} (j<i)"}};

const std::vector<std::pair<std::string, std::string>> kChain = {
    {"chain", "boundary^2=0"}, {"chain", "coboundary^2=0"}, {"chain", "boundary∘d=-d∘boundary"}};

const std::vector<std::pair<std::string, std::string>> kCoalgebra = {
    {"coalgebra", "coassociativity"}, {"coalgebra", "left counit"}, {"coalgebra", "right counit"},
    {"coalgebra", "coderivation"}};

Line criterion1() {
  Line l;
  const Field q = Field::rationals();
  AssocOperad op(q);
  l.require(compose_blocks(P("4312"), 1, P("231")) == P("564312"), "blocks ∘1");
  l.require(compose_formula(P("4312"), 1, P("231")) == P("564312"), "formula ∘1");
  l.require(compose_blocks(P("4312"), 2, P("231")) == P("645312"), "blocks ∘2");
  l.require(compose_formula(P("4312"), 2, P("231")) == P("645312"), "formula ∘2");
  l.require(standardize(std::vector<int>{2, 9, 1, 8, 4, 7}) == P("261534"), "std(291847)");
  l.require(standardize(std::vector<int>{3, 7, 4, 5}) == P("1423"), "st(3745)");
  const char* faces[] = {"312", "312", "321", "321"};
  for (std::size_t i = 1; i <= 4; ++i) {
    l.require(face(op.element(P("4312")), i) == op.element(P(faces[i - 1])), "face " + std::to_string(i) + " of 4312");
  }
  Tensor<AssocOperad, 2> expected(op);
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"()", "3124"}, {"1", "123"}, {"21", "12"}, {"312", "1"}, {"3124", "()"}}) {
    expected.add_term({P(a), P(b)}, q.one());
  }
  l.require(aw_coproduct(op.element(P("3124"))) == expected, "coproduct of 3124");
  ShiftOperad sh(q);
  auto M = sh.mult();
  auto M3 = sh.element(OrderedSubset({1, 2, 3}));
  l.require(compose(M, 1, M) == M3 && compose(M, 2, M) == M3, "M∘1M = M∘2M = (1,2,3)");
  return l;
}

Line criterion2() {
  Line l;
  AssocOperad op(Field::rationals());
  auto rep = run_suite(op, "coincidence", 500);
  const CheckResult* ex = rep.find("coincidence", "blocks=formula exhaustive (n,l<=4)");
  l.require(ex && ex->trials == 3927, "exhaustive case count");
  absorb(l, rep, "assoc",
         {{"coincidence", "blocks=formula exhaustive (n,l<=4)"}, {"coincidence", "blocks=formula random (n,l<=6)"}},
         0);
  const CheckResult* rnd = rep.find("coincidence", "blocks=formula random (n,l<=6)");
  l.require(rnd && rnd->trials >= 10000, "random case count");
  return l;
}

struct Operads {
  Field q = Field::rationals();
  AssocOperad assoc{q};
  ShiftOperad shift{q};
  EndoOperad ground{FinAlgebra::preset("field", Field::rationals())};
  EndoOperad dual{FinAlgebra::preset("dual", Field::prime(3))};
  EndoOperad upper{FinAlgebra::preset("upper", Field::prime(7))};
};

template <class Fn>
void each_operad(Operads& ops, Fn fn) {
  fn(ops.assoc);
  fn(ops.shift);
  fn(ops.ground);
  fn(ops.dual);
  fn(ops.upper);
}

Line suite_criterion(Operads& ops, const std::string& suite, const std::vector<std::pair<std::string, std::string>>& names,
                     std::size_t trials) {
  Line l;
  each_operad(ops, [&](const auto& op) {
    auto rep = run_suite(op, suite, trials);
    absorb(l, rep, op.name(), names, trials);
    if (suite == "coalgebra") {
      if (const CheckResult* c = rep.find("coalgebra", "coderivation")) {
        l.notes.push_back(op.name() + " coderivation sign pattern exists: " +
                          (c->info.value("pattern_exists", false) ? std::string("yes") : std::string("no")));
      }
    }
  });
  return l;
}

Line criterion6() {
  Line l;
  AssocOperad op(Field::rationals());
  auto rep = run_suite(op, "brace", 300);
  absorb(l, rep, "assoc",
         {{"brace", "dot=(-1)^{rs} odot"},
          {"brace", "d derivation of odot"},
          {"brace", "boundary derivation of odot"},
          {"brace", "brace boundary relation"},
          {"brace", "higher pre-Jacobi (s,r<=2)"}},
         300);
  return l;
}

Line criterion7() {
  Line l;
  AssocOperad op(Field::rationals());
  auto rep = run_suite(op, "coincidence", 500);
  const CheckResult* ex = rep.find("coincidence", "aw=mr exhaustive (n<=5)");
  l.require(ex && ex->trials == 153, "exhaustive MR count");
  absorb(l, rep, "assoc",
         {{"coincidence", "aw=mr exhaustive (n<=5)"},
          {"coincidence", "aw=mr random (n<=7)"},
          {"coincidence", "odot=concat exhaustive (n<=5)"},
          {"coincidence", "odot=concat random (n<=7)"}},
         153);
  for (auto [preset, field] : std::vector<std::pair<const char*, Field>>{
           {"field", Field::rationals()}, {"dual", Field::prime(3)}, {"m2", Field::prime(5)}}) {
    EndoOperad e(FinAlgebra::preset(preset, field));
    auto r = run_suite(e, "coincidence", 500);
    absorb(l, r, e.name(), {{"coincidence", "odot=classical cup"}, {"coincidence", "operadic d = ±classical d_H (n<=3)"}}, 4);
  }
  return l;
}

Line criterion8() {
  Line l;
  struct Case {
    const char* preset;
    Field field;
    oracle::Algebra ref;
    std::size_t hi;
    std::vector<std::size_t> expected;
  };
  std::vector<Case> cases = {{"field", Field::prime(3), oracle::ground(3), 3, {1, 0, 0, 0}},
                             {"dual", Field::prime(3), oracle::dual_numbers(3), 3, {2, 1, 1, 1}},
                             {"m2", Field::prime(5), oracle::matrices2(5), 2, {1, 0, 0}}};
  for (const auto& c : cases) {
    EndoOperad op(FinAlgebra::preset(c.preset, c.field));
    auto b = betti(endo_complex(op, Differential::hochschild, 0, c.hi));
    l.require(oracle::hochschild_dims(c.ref, c.hi) == c.expected, std::string(c.preset) + ": oracle disagrees with target");
    l.require(b.dims == c.expected, std::string(c.preset) + ": dims");
    auto spec = endo_complex(op, Differential::coboundary, 0, c.hi);
    for (std::size_t n = 0; n <= c.hi; ++n) {
      l.require(rank(differential_matrix(spec, n)) == rank(hochschild_matrix(op.algebra(), n)),
                std::string(c.preset) + ": rank d vs d_H at degree " + std::to_string(n));
    }
  }
  EndoOperad kq(FinAlgebra::preset("field", Field::rationals()));
  auto bq = betti(endo_complex(kq, Differential::hochschild, 1, 3));
  l.require(bq.dims == std::vector<std::size_t>({0, 0, 0}), "HH^1..3 of the ground field over Q");
  return l;
}

std::string capture(const std::string& cmd, int& status) {
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Line criterion9() {
  Line l;
  const std::string cli = OPERAD_LAB_CLI;
  const std::vector<std::string> runs = {
      "verify --suite all --operad assoc --trials 60 --seed 7 --json",
      "verify --suite all --operad shift --trials 60 --seed 7 --json",
      "verify --suite all --operad endo:dual --field gfp:3 --trials 60 --seed 7 --json",
  };
  for (const auto& r : runs) {
    int s1 = 0, s2 = 0, s3 = 0;
    auto a = capture("OPERAD_LAB_THREADS=1 " + cli + " " + r, s1);
    auto b = capture("OPERAD_LAB_THREADS=1 " + cli + " " + r, s2);
    auto c = capture("OPERAD_LAB_THREADS=4 " + cli + " " + r, s3);
    l.require(!a.empty() && a.front() == '{', r + ": no JSON");
    l.require(a == b && a == c && s1 == s2 && s1 == s3, r + ": output differs between runs");
  }
  return l;
}

}  // namespace

int main() {
  Operads ops;
  const std::vector<std::pair<std::string, std::function<Line()>>> criteria = {
      {"golden values", criterion1},
      {"composition method equivalence", criterion2},
      {"simplicial identities", [&] { return suite_criterion(ops, "simplicial", kSimplicial, 1000); }},
      {"chain and bicomplex identities", [&] { return suite_criterion(ops, "chain", kChain, 500); }},
      {"coalgebra axioms", [&] { return suite_criterion(ops, "coalgebra", kCoalgebra, 500); }},
      {"brace and DGA relations (assoc)", criterion6},
      {"coincidences", criterion7},
      {"Hochschild cohomology values", criterion8},
      {"determinism", criterion9},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Line line;
    try {
      line = criteria[k].second();
    } catch (const std::exception& e) {
      line.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << (k + 1) << ": " << (line.ok ? "PASS" : "FAIL") << "  " << criteria[k].first;
    if (!line.notes.empty()) {
      std::cout << "  [";
      for (std::size_t i = 0; i < line.notes.size(); ++i) std::cout << (i ? "; " : "") << line.notes[i];
      std::cout << "]";
    }
    std::cout << "\n";
    if (!line.ok) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
