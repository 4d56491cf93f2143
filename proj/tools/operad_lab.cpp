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

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "operad_lab/operad_lab.hpp"

namespace ol = operad_lab;

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kVerifyFailed = 2;
constexpr int kUsage = 64;

constexpr std::size_t kEndoMaxDim = 4;
constexpr std::size_t kEndoMaxArity = 4;

struct Options {
  std::string command;
  std::string operad = "assoc";
  std::optional<std::string> field;
  bool json = false;
  std::string left, right, element;
  std::vector<std::string> args;
  std::size_t at = 1;
  std::string differential = "coboundary";
  std::size_t lo = 0, hi = 3;
  long long bound = 8;
  std::size_t max_columns = 20000;
  std::string suite = "all";
  std::size_t trials = 500;
  std::uint64_t seed = 42;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Options& o, const ol::json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

/// Literal text, or a JSON element object when it starts with '{' or names a .json file.
template <class Op>
ol::Element<Op> read_element(const Op& op, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing ") + flag);
  if (text.front() == '{' && text.find("\"terms\"") != std::string::npos) {
    return ol::element_from_json(op, ol::json::parse(text));
  }
  if (text.size() > 5 && text.ends_with(".json")) {
    std::ifstream in(text);
    if (!in) throw UsageError("cannot read " + text);
    return ol::element_from_json(op, ol::json::parse(in));
  }
  return ol::parse_element(op, text);
}

template <class Op>
void check_size(const Op&, const ol::Element<Op>&) {}

void check_size(const ol::EndoOperad&, const ol::Element<ol::EndoOperad>& x) {
  if (x.arity() > kEndoMaxArity) {
    throw ol::limit_error("endo elements are limited to arity " + std::to_string(kEndoMaxArity));
  }
}

template <class Op>
ol::Element<Op> input(const Op& op, const std::string& text, const char* flag) {
  auto x = read_element(op, text, flag);
  check_size(op, x);
  return x;
}

template <class Op>
int print_element(const Options& o, const ol::Element<Op>& x) {
  emit(o, ol::element_to_json(x), x.to_string());
  return kOk;
}

template <class Op>
ol::ComplexSpec<Op> make_spec(const Op& op, const Options& o, ol::Differential kind) {
  if constexpr (std::is_same_v<Op, ol::AssocOperad>) {
    if (kind == ol::Differential::hochschild) throw UsageError("hochschild differential needs an endo operad");
    auto s = ol::assoc_complex(op, kind, o.lo, o.hi);
    s.max_columns = o.max_columns;
    return s;
  } else if constexpr (std::is_same_v<Op, ol::ShiftOperad>) {
    if (kind == ol::Differential::hochschild) throw UsageError("hochschild differential needs an endo operad");
    auto s = ol::shift_complex(op, kind, o.lo, o.hi, o.bound);
    s.max_columns = o.max_columns;
    return s;
  } else {
    if (o.hi > kEndoMaxArity) throw ol::limit_error("endo complexes are limited to degree " + std::to_string(kEndoMaxArity));
    auto s = ol::endo_complex(op, kind, o.lo, o.hi);
    s.max_columns = o.max_columns;
    return s;
  }
}

ol::Differential parse_differential(const std::string& s) {
  if (s == "boundary") return ol::Differential::boundary;
  if (s == "coboundary") return ol::Differential::coboundary;
  if (s == "hochschild") return ol::Differential::hochschild;
  throw UsageError("unknown differential '" + s + "'");
}

template <class Op>
int dispatch(const Op& op, const Options& o) {
  const std::string& c = o.command;
  if (c == "compose") return print_element(o, ol::compose(input(op, o.left, "--left"), o.at, input(op, o.right, "--right")));
  if (c == "face") return print_element(o, ol::face(input(op, o.element, "--element"), o.at));
  if (c == "degen") return print_element(o, ol::degeneracy(input(op, o.element, "--element"), o.at));
  if (c == "boundary") return print_element(o, ol::boundary(input(op, o.element, "--element")));
  if (c == "coboundary") return print_element(o, ol::coboundary(input(op, o.element, "--element")));
  if (c == "dot") return print_element(o, ol::dot(input(op, o.left, "--left"), input(op, o.right, "--right")));
  if (c == "odot") return print_element(o, ol::odot(input(op, o.left, "--left"), input(op, o.right, "--right")));
  if (c == "brace") {
    std::vector<ol::Element<Op>> qs;
    for (const auto& a : o.args) qs.push_back(input(op, a, "--arg"));
    return print_element(o, ol::brace(input(op, o.element, "--element"), qs));
  }
  if (c == "coproduct") {
    auto t = ol::aw_coproduct(input(op, o.element, "--element"));
    emit(o, ol::tensor_to_json(t), t.to_string());
    return kOk;
  }
  if (c == "cohomology") {
    auto r = ol::betti(make_spec(op, o, parse_differential(o.differential)));
    std::string text;
    for (std::size_t k = 0; k < r.degrees.size(); ++k) {
      text += "H^" + std::to_string(r.degrees[k]) + " = " + std::to_string(r.dims[k]) + "   (rank out " +
              std::to_string(r.ranks[k]) + ")\n";
    }
    for (const auto& w : r.warnings) text += "note: " + w + "\n";
    text += "field: " + r.field;
    emit(o, ol::betti_to_json(r), text);
    return kOk;
  }
  if (c == "verify") {
    ol::VerifyOptions vo{o.seed, o.trials, o.suite};
    auto rep = ol::verify(op, vo);
    auto j = rep.to_json(op.name(), op.field().name(), vo);
    std::string text;
    for (const auto& ch : rep.checks) {
      text += std::string(ch.passed() ? "PASS " : "FAIL ") + "[" + ch.suite + "] " + ch.name + "  (" +
              std::to_string(ch.failures) + "/" + std::to_string(ch.trials) + " failing)\n";
      if (!ch.info.is_null()) text += "     info: " + ch.info.dump() + "\n";
      if (!ch.passed() && !ch.counterexample.is_null()) text += "     counterexample: " + ch.counterexample.dump() + "\n";
    }
    text += rep.passed() ? "all checks passed" : "some checks failed";
    emit(o, j, text);
    return rep.passed() ? kOk : kVerifyFailed;
  }
  throw UsageError("unknown command '" + c + "'");
}

ol::FinAlgebra load_algebra(const std::string& which, const ol::Field& f) {
  for (const char* p : {"field", "dual", "m2", "upper"}) {
    if (which == p) return ol::FinAlgebra::preset(which, f);
  }
  std::ifstream in(which);
  if (!in) throw UsageError("unknown algebra '" + which + "' (presets: field, dual, m2, upper; or a JSON file)");
  ol::json j;
  try {
    j = ol::json::parse(in);
  } catch (const ol::json::exception& e) {
    throw ol::parse_error(std::string("algebra file: ") + e.what());
  }
  auto a = ol::algebra_from_json(j, f, std::filesystem::path(which).stem().string());
  if (a.dim() > kEndoMaxDim) throw ol::limit_error("algebras are limited to dimension " + std::to_string(kEndoMaxDim));
  for (const auto& u : a.unit()) {
    if (!u.is_zero() && !u.is_one()) {
      std::cerr << "warning: unit coordinates outside {0, 1}; the coproduct is not coassociative for this basis\n";
      break;
    }
  }
  return a;
}

int run(const Options& o) {
  const bool batch = o.command == "verify" || o.command == "cohomology";
  const ol::Field f = ol::Field::parse(o.field.value_or(batch ? "gfp:32003" : "q"));
  if (o.operad == "assoc") return dispatch(ol::AssocOperad(f), o);
  if (o.operad == "shift") return dispatch(ol::ShiftOperad(f), o);
  if (o.operad.starts_with("endo:")) return dispatch(ol::EndoOperad(load_algebra(o.operad.substr(5), f)), o);
  throw UsageError("unknown operad '" + o.operad + "' (assoc, shift, endo:<preset|file.json>)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in multiplicative connected operads"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--operad", o.operad, "assoc | shift | endo:<field|dual|m2|upper|file.json>");
    sub->add_option("--field", o.field, "q | gfp:<p> (default q; gfp:32003 for verify and cohomology)");
    sub->add_flag("--json", o.json, "print JSON");
  };
  auto binary = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    common(s);
    s->add_option("--left", o.left, "left element")->required();
    s->add_option("--right", o.right, "right element")->required();
    return s;
  };
  auto unary = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    common(s);
    s->add_option("--element", o.element, "element, e.g. '2*4312 - 3124'")->required();
    return s;
  };

  binary("compose", "partial composition left ∘_at right")->add_option("--at", o.at, "slot (1-based)")->required();
  unary("face", "face map F_i")->add_option("--at", o.at, "index (1-based)")->required();
  unary("degen", "degeneracy map D_i")->add_option("--at", o.at, "index (1-based)")->required();
  unary("boundary", "simplicial boundary");
  unary("coboundary", "coboundary d");
  unary("brace", "right brace x{y1,...,yn}")->add_option("--arg", o.args, "brace argument (repeatable)");
  binary("dot", "dot product");
  binary("odot", "odot product");
  unary("coproduct", "Alexander-Whitney coproduct");

  auto* coh = app.add_subcommand("cohomology", "dimensions of (co)homology");
  common(coh);
  coh->add_option("--differential", o.differential, "boundary | coboundary | hochschild")->capture_default_str();
  coh->add_option("--lo", o.lo, "lowest degree")->capture_default_str();
  coh->add_option("--hi", o.hi, "highest degree")->capture_default_str();
  coh->add_option("--bound", o.bound, "shift: largest entry in lowest degree")->capture_default_str();
  coh->add_option("--max-columns", o.max_columns, "basis size cap")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "randomized identity checks");
  common(ver);
  std::string suites = "all";
  for (const auto& s : ol::suite_names()) suites += "|" + s;
  ver->add_option("--suite", o.suite, suites)->check(CLI::IsMember([] {
    auto v = ol::suite_names();
    v.push_back("all");
    return v;
  }()))->capture_default_str();
  ver->add_option("--trials", o.trials, "trials per check")->capture_default_str();
  ver->add_option("--seed", o.seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  o.command = app.get_subcommands().front()->get_name();

  try {
    return run(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ol::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
}
