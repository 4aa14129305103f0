// czr: batch driver for the realizability engine.
//
// Exit codes: 0 all Realized / ok, 1 any Refuted / violation, 2 any Unknown,
// 3 usage or parse error.

#include "czr/axioms.hpp"
#include "czr/checker.hpp"
#include "czr/hf.hpp"
#include "czr/setcode_io.hpp"
#include "czr/term_syntax.hpp"
#include "czr/treeset.hpp"
#include "czr/tuple_code.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace czr;

constexpr int kOk = 0, kRefuted = 1, kUnknown = 2, kUsage = 3;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  CheckBudget budget;
  bool verbose = false;
  std::uint64_t seed = 0;
};

std::string header(const std::string& command, const Config& cfg) {
  return "# czr " + command + " " + cfg.budget.to_string() + " seed=" + std::to_string(cfg.seed);
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Realized: return kOk;
    case Verdict::Refuted: return kRefuted;
    case Verdict::Unknown: return kUnknown;
  }
  return kUsage;
}

/// Later verdicts can only raise the exit code: Refuted > Unknown > ok.
int worst(int a, int b) {
  auto rank = [](int c) { return c == kRefuted ? 2 : c == kUnknown ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Usage("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Nat evaluate_term(Pca& pca, const std::string& text, std::uint64_t fuel) {
  auto names = core_names(build_core_realizers(pca));
  auto t = bind_names(parse_term(text), names);
  auto free = free_vars(t);
  if (!free.empty()) throw Usage("unknown identifier " + *free.begin() + " in term: " + text);
  auto r = pca.evaluate(t, EvalBudget{fuel});
  if (!r.ok()) throw Usage("term did not evaluate: " + std::string(to_string(r.status)));
  return r.value;
}

int run_pca_eval(const Config& cfg, const std::string& term_text, const std::optional<std::string>& arg_text) {
  Pca pca;
  std::cout << header("pca-eval", cfg) << "\n";
  auto names = core_names(build_core_realizers(pca));
  auto t = bind_names(parse_term(term_text), names);
  if (auto free = free_vars(t); !free.empty()) throw Usage("unknown identifier " + *free.begin());
  EvalResult r;
  if (arg_text) {
    auto f = pca.evaluate(t, EvalBudget{cfg.budget.fuel});
    if (!f.ok()) throw Usage("TERM did not evaluate: " + std::string(to_string(f.status)));
    Nat fun = f.value;
    Nat arg = evaluate_term(pca, *arg_text, cfg.budget.fuel);
    r = pca.apply(fun, arg, EvalBudget{cfg.budget.fuel});
  } else {
    r = pca.evaluate(t, EvalBudget{cfg.budget.fuel});
  }
  if (!r.ok()) {
    std::cout << to_string(r.status) << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    return r.status == EvalStatus::OutOfFuel ? kUnknown : kRefuted;
  }
  std::cout << to_string(r.value) << "\n";
  if (cfg.verbose) {
    if (auto h = pca.lookup(r.value)) std::cout << "# handle: " << print_term(*h) << "\n";
    else if (r.value != 0 && arity(r.value) <= 64) std::cout << "# tuple: " << format_tuple(decode_tuple(r.value)) << "\n";
  }
  return kOk;
}

TupleSet raw_tuples(const std::string& text) {
  TupleSet out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.insert(parse_tuple(line));
  }
  return out;
}

int run_set(const Config&, const std::string& op, const std::vector<std::string>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw Usage("set " + op + " expects " + std::to_string(n) + " argument(s)");
  };
  if (op == "validate") {
    if (args.empty()) throw Usage("set validate expects at least one file");
    int code = kOk;
    for (const auto& path : args) {
      auto v = validate(raw_tuples(slurp(path)));
      if (v) {
        std::cout << path << ": violation at " << format_tuple(v->tuple) << ": " << v->reason << "\n";
        code = kRefuted;
      } else {
        std::cout << path << ": ok\n";
      }
    }
    return code;
  }
  if (op == "members") {
    need(1);
    for (const auto& a : read_setcode(slurp(args[0])).members()) std::cout << to_string(a) << "\n";
    return kOk;
  }
  if (op == "subtree") {
    need(2);
    std::cout << write_setcode(read_setcode(slurp(args[0])).subtree(parse_tuple(args[1])));
    return kOk;
  }
  if (op == "pair") {
    need(2);
    std::cout << write_setcode(pair_set(read_setcode(slurp(args[0])), read_setcode(slurp(args[1]))));
    return kOk;
  }
  if (op == "union") {
    need(1);
    std::cout << write_setcode(union_set(read_setcode(slurp(args[0]))));
    return kOk;
  }
  if (op == "omega") {
    need(1);
    std::cout << write_setcode(omega_set(static_cast<unsigned>(std::stoul(args[0]))));
    return kOk;
  }
  if (op == "decode") {
    need(1);
    std::cout << hf_decode(read_setcode(slurp(args[0]))).to_string() << "\n";
    return kOk;
  }
  throw Usage("unknown set operation: " + op);
}

int run_check(const Config& cfg, const std::string& realizer, const std::string& formula,
              const std::vector<std::string>& bindings) {
  Pca pca;
  Environment env;
  for (const auto& b : bindings) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) throw Usage("expected NAME=FILE, got " + b);
    std::string name = b.substr(0, eq);
    if (name.front() == '$') name.erase(0, 1);
    env[name] = read_setcode(slurp(b.substr(eq + 1)));
  }
  auto phi = parse_formula(formula);
  Nat e = evaluate_term(pca, realizer, cfg.budget.fuel);
  std::cout << header("check", cfg) << "\n";
  std::cout << "# formula " << print_formula(phi) << "\n";
  auto r = check(pca, e, phi, env, cfg.budget);
  std::cout << r.serialize() << "\n";
  if (cfg.verbose)
    for (const auto& line : r.trace) std::cout << "  " << line << "\n";
  return exit_for(r.verdict);
}

int run_axiom(const Config& cfg, const std::string& family, const SuiteOptions& opts) {
  std::cout << header("axiom", cfg) << " suite_rank=" << opts.rank << " suite_width=" << opts.width << "\n";
  int code = kOk;
  for (const auto& name : expand_family(family)) {
    Pca pca;
    auto pkg = make_axiom_package(pca, name, opts);
    std::cout << "# package " << pkg.name << " realizer=" << to_string(pkg.realizer) << "\n";
    if (cfg.verbose) std::cout << "# statement " << pkg.statement << "\n";
    auto rep = run_suite(pkg, cfg.budget);
    for (std::size_t i = 0; i < rep.instances.size(); ++i) {
      const auto& inst = rep.instances[i];
      std::cout << pkg.name << "\t" << i << "\t" << inst.label << "\t" << inst.result.serialize() << "\n";
      if (cfg.verbose)
        for (const auto& line : inst.result.trace) std::cout << "  " << line << "\n";
      code = worst(code, exit_for(inst.result.verdict));
    }
    std::cout << "# " << pkg.name << ": " << rep.realized << " realized, " << rep.refuted << " refuted, " << rep.unknown
              << " unknown\n";
  }
  return code;
}

int run_enumerate(unsigned rank, unsigned width) {
  std::cout << "# czr enumerate-hf rank=" << rank << " width=" << width << "\n";
  std::size_t i = 0;
  for (const auto& c : enumerate_hf(rank, width)) {
    std::string tuples;
    for (const auto& t : c.tuples()) tuples += (tuples.empty() ? "" : " ") + format_tuple(t);
    std::cout << i++ << "\t" << hf_decode(c).to_string() << "\t" << tuples << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"czr: realizability checks over finite set codes"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--fuel", cfg.budget.fuel, "PCA steps per application")->capture_default_str();
  app.add_option("--hf-rank", cfg.budget.hf_rank, "rank bound for set-quantifier witnesses")->capture_default_str();
  app.add_option("--hf-width", cfg.budget.hf_width, "width bound for set-quantifier witnesses")->capture_default_str();
  app.add_option("--realizer-bound", cfg.budget.realizer_bound, "naturals tried as implication premises")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized generation")->capture_default_str();
  app.add_flag("-v,--verbose", cfg.verbose, "dump evidence traces");

  std::string term_text;
  std::optional<std::string> arg_text;
  auto* eval_cmd = app.add_subcommand("pca-eval", "evaluate TERM, or apply it to ARG");
  eval_cmd->add_option("TERM", term_text)->required();
  eval_cmd->add_option("ARG", arg_text);

  std::string set_op;
  std::vector<std::string> set_args;
  auto* set_cmd = app.add_subcommand("set", "validate and transform set-code files");
  set_cmd->add_option("OP", set_op, "validate|members|subtree|pair|union|omega|decode")
      ->required()
      ->check(CLI::IsMember({"validate", "members", "subtree", "pair", "union", "omega", "decode"}));
  set_cmd->add_option("ARGS", set_args, "files, then a tuple for subtree or a natural for omega");

  std::string realizer, formula;
  std::vector<std::string> bindings;
  auto* check_cmd = app.add_subcommand("check", "check a realizer against a formula");
  check_cmd->add_option("--realizer", realizer, "realizer as a term; Id, Sym, Trans, MemL, MemR, NatEq are predefined")
      ->required();
  check_cmd->add_option("--formula", formula)->required();
  check_cmd->add_option("--env", bindings, "NAME=FILE");

  std::string family;
  SuiteOptions suite;
  auto* axiom_cmd = app.add_subcommand("axiom", "run an axiom package's verification suite");
  axiom_cmd->add_option("NAME", family)->required()->check(CLI::IsMember(axiom_families()));
  axiom_cmd->add_option("--suite-rank", suite.rank)->capture_default_str();
  axiom_cmd->add_option("--suite-width", suite.width)->capture_default_str();
  axiom_cmd->add_option("--truncation", suite.infinity_truncation, "infinity truncation")->capture_default_str();

  unsigned rank = 2, width = 2;
  auto* enum_cmd = app.add_subcommand("enumerate-hf", "list canonical codes of small HF sets");
  enum_cmd->add_option("--rank", rank)->required();
  enum_cmd->add_option("--width", width)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval_cmd) return run_pca_eval(cfg, term_text, arg_text);
    if (*set_cmd) return run_set(cfg, set_op, set_args);
    if (*check_cmd) return run_check(cfg, realizer, formula, bindings);
    if (*axiom_cmd) return run_axiom(cfg, family, suite);
    if (*enum_cmd) return run_enumerate(rank, width);
  } catch (const std::exception& e) {
    std::cerr << "czr: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
