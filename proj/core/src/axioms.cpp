#include "czr/axioms.hpp"

#include "czr/hf.hpp"
#include "czr/term_syntax.hpp"
#include "czr/tuple_code.hpp"

#include <algorithm>

namespace czr {

namespace {

/// Evaluates a closed source term to a natural; realizer constants are
/// tuples as often as abstractions, so interning alone is not enough.
Nat value_of(Pca& pca, const std::string& src, const std::map<std::string, Nat>& names) {
  auto r = pca.evaluate(bind_names(parse_term(src), names), EvalBudget{100'000});
  if (!r.ok()) throw EvaluationFailure("building realizer: " + std::string(to_string(r.status)));
  return r.value;
}

std::vector<Environment> product_suite(const std::vector<std::string>& inputs, const SuiteOptions& o) {
  const auto codes = enumerate_hf(o.rank, o.width);
  std::vector<Environment> out{Environment{}};
  for (const auto& name : inputs) {
    std::vector<Environment> next;
    for (const auto& env : out)
      for (const auto& c : codes) {
        auto e = env;
        e.emplace(name, c);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

/// Package whose verification is a single check against `body` after the
/// witness builder has run.
AxiomPackage formula_package(Pca& pca, std::string name, const std::string& body_text, Nat realizer,
                             std::vector<std::string> inputs, bool open_ended, const SuiteOptions& o,
                             std::function<Environment(const Environment&)> builder = {}) {
  AxiomPackage p;
  p.name = std::move(name);
  auto body = parse_formula(body_text);
  p.statement = print_formula(body);
  p.realizer = std::move(realizer);
  p.inputs = std::move(inputs);
  p.open_ended = open_ended;
  p.witness_builder = builder;
  p.suite = product_suite(p.inputs, o);
  p.verify = [&pca, body, builder](const Nat& e, const Environment& inst, const CheckBudget& budget) {
    Environment env = builder ? builder(inst) : inst;
    return check(pca, e, body, env, budget);
  };
  return p;
}

constexpr const char* kSucc = "y in s /\\ (forall t in y. t in s) /\\ (forall t in s. t in y \\/ t = y)";

}  // namespace

std::string describe_instance(const Environment& instance) {
  std::string out;
  for (const auto& [name, code] : instance) {
    if (!out.empty()) out += " ";
    out += name + "=" + hf_decode(code).to_string();
  }
  return out.empty() ? "(no inputs)" : out;
}

AxiomPackage equality_package(Pca& pca, const SuiteOptions& o) {
  auto core = build_core_realizers(pca);
  Nat e = value_of(pca, "<Id, <Sym, <TransPair, <MemL, MemR>>>>", core_names(core));
  return formula_package(pca, "equality",
                         "$S = $S /\\ ($S = $T -> $T = $S) /\\ ($S = $T /\\ $T = $R -> $S = $R)"
                         " /\\ ($S = $T /\\ $R in $S -> $R in $T) /\\ ($S = $T /\\ $S in $R -> $T in $R)",
                         e, {"R", "S", "T"}, true, o);
}

AxiomPackage extensionality_package(Pca& pca, const SuiteOptions& o) {
  auto names = core_names(build_core_realizers(pca));
  Nat e = value_of(pca,
                   "<lam p. <lam m. MemL <p, m>, lam m. MemL <<p.1, p.0>, m>>,"
                   " lam r. <lam a. (r.0) <a, Id>, lam b. (r.1) <b, Id>>>",
                   names);
  const std::string sides = "(forall z. (z in $S -> z in $T) /\\ (z in $T -> z in $S))";
  return formula_package(pca, "extensionality", "($S = $T -> " + sides + ") /\\ (" + sides + " -> $S = $T)", e,
                         {"S", "T"}, true, o);
}

Nat induction_builder(Pca& pca) { return pca.intern_source("lam e. fix (lam h. e (lam x. h))"); }

Nat induction_realizer(Pca& pca, const Nat& e) {
  auto r = pca.apply(induction_builder(pca), e, EvalBudget{1000});
  if (!r.ok()) throw EvaluationFailure("induction builder: " + std::string(to_string(r.status)));
  return r.value;
}

AxiomPackage induction_package(Pca& pca, const SuiteOptions& o) {
  auto names = core_names(build_core_realizers(pca));
  Nat e = pca.intern_source("lam f. Id", names);
  return formula_package(pca, "set-induction", "$S = $S", induction_realizer(pca, e), {"S"}, false, o);
}

AxiomPackage pairing_package(Pca& pca, const SuiteOptions& o) {
  auto names = core_names(build_core_realizers(pca));
  Nat e = value_of(pca, "<<0, Id>, <<1, Id>, lam f. <f.0, f.1>>>", names);
  return formula_package(pca, "pairing", "$S in $U /\\ $T in $U /\\ (forall w in $U. w = $S \\/ w = $T)", e,
                         {"S", "T"}, false, o, [](const Environment& inst) {
                           auto env = inst;
                           env["U"] = pair_set(inst.at("S"), inst.at("T"));
                           return env;
                         });
}

AxiomPackage union_package(Pca& pca, const SuiteOptions& o) {
  auto core = build_core_realizers(pca);
  auto names = core_names(core);
  names["T"] = core.trans;
  Nat e = value_of(pca,
                   "<lam f. <<(f.0).0, Id>, <(f.0).1, f.1>>,"
                   " lam f. lam m. <<f.0, ((f.1).0 m.0).0>, T m.1 ((f.1).0 m.0).1>>",
                   names);
  return formula_package(pca, "union", "(forall z in $U. exists w in $S. z in w) /\\ (forall w in $S. forall z in w. z in $U)",
                         e, {"S"}, false, o, [](const Environment& inst) {
                           auto env = inst;
                           env["U"] = tagged_union_set(inst.at("S"));
                           return env;
                         });
}

Nat infinity_iteration(Pca& pca) {
  auto names = core_names(build_core_realizers(pca));
  names["Eqv"] = pca.intern_source(
      "lam q. lam n. <lam j. ifz (NatEq j (pred n)) then (q.1).0 else ((q.1).1).0 <j, Id>,"
      " lam c. (lam w. ifz w.0 then w.1 else <pred n, w.1>) (((q.1).1).1 <c, Id>)>",
      names);
  names["Step"] = pca.intern_source("lam r. lam n. lam m. (lam q. <(q.0).0, Trans (Eqv q n) (q.0).1>) ((r.1) m)", names);
  names["Iter"] = pca.intern_source("fix (lam I. lam r. lam n. ifz n then r.0 else Step r n (I r (pred n)))", names);
  return pca.intern_source("lam r. lam g. MemR <<(g.1).1, (g.1).0>, Iter r (g.0)>", names);
}

AxiomPackage infinity_package(Pca& pca, const SuiteOptions& o) {
  auto names = core_names(build_core_realizers(pca));
  names["Succ"] = pca.intern_source(
      "lam f. <<succ (f.0), Id>, <f, <lam g. MemL <f.1, g>,"
      " lam g. ifz (NatEq (g.0) (f.0)) then <1, Trans (g.1) <(f.1).1, (f.1).0>>"
      " else <0, MemL <<(f.1).1, (f.1).0>, g>>>>>",
      names);
  names["Min"] = infinity_iteration(pca);
  Nat e = value_of(pca, "<<0, Id>, <Succ, Min>>", names);
  const std::string succ = kSucc;
  const std::string body = "$E in $X /\\ (forall y in $Xprev. exists s in $X. " + succ +
                           ") /\\ (forall z. $E in z /\\ (forall y in z. exists s in z. " + succ +
                           ") -> (forall t in $X. t in z))";
  const unsigned k = std::max(1u, o.infinity_truncation);
  auto p = formula_package(pca, "infinity", body, e, {}, true, o, [k](const Environment& inst) {
    auto env = inst;
    env["E"] = TreeSetCode{};
    env["X"] = omega_set(k);
    env["Xprev"] = omega_set(k - 1);
    return env;
  });
  return p;
}

FormulaPtr separation_formula(SeparationPreset preset) {
  switch (preset) {
    case SeparationPreset::SelfEqual: return parse_formula("x = x");
    case SeparationPreset::Bot: return parse_formula("bot");
    case SeparationPreset::Nonempty: return parse_formula("exists y. y in x");
  }
  return nullptr;
}

Finder canonical_finder(Pca& pca, SeparationPreset preset) {
  const Nat id = identity_realizer(pca);
  switch (preset) {
    case SeparationPreset::SelfEqual:
      return [id](const Nat&, const TreeSetCode&) { return std::vector<Nat>{id}; };
    case SeparationPreset::Bot:
      return [](const Nat&, const TreeSetCode&) { return std::vector<Nat>{}; };
    case SeparationPreset::Nonempty:
      return [id](const Nat&, const TreeSetCode& member) {
        std::vector<Nat> out;
        for (const auto& c : member.members()) out.push_back(encode_tuple({c, id}));
        return out;
      };
  }
  return {};
}

AxiomPackage separation_package(Pca& pca, SeparationPreset preset, const SuiteOptions& o) {
  auto core = build_core_realizers(pca);
  auto names = core_names(core);
  auto phi = separation_formula(preset);
  names["Tphi"] = transport_realizer(pca, core, phi, "x");
  std::string right;
  std::string tag;
  switch (preset) {
    case SeparationPreset::SelfEqual:
      right = "lam r. <<Id, (r.0).0>, (r.0).1>";
      tag = "x=x";
      break;
    case SeparationPreset::Bot:
      right = "lam r. r";
      tag = "bot";
      break;
    case SeparationPreset::Nonempty:
      right = "lam r. <<<((((r.0).1).0) ((r.1).0)).0, Id>, (r.0).0>, (r.0).1>";
      tag = "nonempty";
      break;
  }
  Nat e = value_of(pca, "<lam e. <<(e.0).1, e.1>, Tphi <(e.1).1, (e.1).0> (e.0).0>, " + right + ">", names);
  const std::string phx = print_formula(substitute(phi, "x", FTerm::param("X")));
  const std::string body = "($X in $P -> $X in $S /\\ " + phx + ") /\\ ($X in $S /\\ " + phx + " -> $X in $P)";
  Finder finder = canonical_finder(pca, preset);
  return formula_package(pca, "separation[" + tag + "]", body, e, {"S", "X"}, true, o,
                         [finder](const Environment& inst) {
                           auto env = inst;
                           env["P"] = separation_set(inst.at("S"), finder).set;
                           return env;
                         });
}

AxiomPackage fullness_package(Pca& pca, const SuiteOptions& o) {
  auto core = build_core_realizers(pca);
  auto names = core_names(core);
  Nat e = value_of(pca,
                   "<lam m. lam g. <((m.0) g).0, MemL <<(m.1).1, (m.1).0>, ((m.0) g).1>>,"
                   " lam f. <<f, Id>, lam m. m>>",
                   names);
  AxiomPackage p;
  p.name = "fullness";
  p.statement =
      "C = ^S T from the pool of all maps S -> T; each member named f is total by {e_0}(<f,Id>), and "
      "{e_1}(f) |- exists v in C. forall w in v. w in U for each pool entry (f, U)";
  p.realizer = e;
  p.inputs = {"S", "T"};
  p.open_ended = false;
  p.suite = product_suite(p.inputs, o);
  p.witness_builder = [&pca, core](const Environment& inst) {
    const auto& s = inst.at("S");
    const auto& t = inst.at("T");
    std::vector<PoolEntry> pool;
    for (const auto& fe : function_pool(pca, core, s, t)) pool.push_back(fe.entry);
    auto env = inst;
    env["C"] = fullness_set(pca, s, t, pool, CheckBudget{});
    return env;
  };
  p.verify = [&pca, core](const Nat& e, const Environment& inst, const CheckBudget& budget) {
    static const FormulaPtr below = parse_formula("exists v in $C. forall w in v. w in $U");
    const auto& s = inst.at("S");
    const auto& t = inst.at("T");
    const EvalBudget eb{budget.fuel};
    auto e0 = pca.project(e, Nat(0), eb);
    auto e1 = pca.project(e, Nat(1), eb);
    if (!e0.ok() || !e1.ok()) return verdict_only(Verdict::Refuted, "realizer is not a pair");
    std::vector<PoolEntry> pool;
    std::vector<std::pair<std::string, CheckResult>> parts;
    for (const auto& fe : function_pool(pca, core, s, t)) {
      auto total = check_total_relation(pca, fe.entry.f, s, t, fe.entry.u, budget);
      if (total.realized()) pool.push_back(fe.entry);
      parts.emplace_back("pool entry " + to_string(fe.entry.f) + " total", std::move(total));
    }
    TreeSetCode c;
    try {
      c = fullness_set(pca, s, t, pool, budget);
    } catch (const EvaluationFailure& err) {
      return verdict_only(Verdict::Refuted, err.what());
    }
    for (const auto& entry : pool) {
      const std::string tag = "f=" + to_string(entry.f);
      auto named = pca.apply(e0.value, encode_tuple({entry.f, core.id}), eb);
      if (!named.ok()) {
        parts.emplace_back(tag + " member total", verdict_only(Verdict::Refuted, "e_0 fails on a member name"));
      } else {
        parts.emplace_back(tag + " member total",
                           check_total_relation(pca, named.value, s, t, c.child(entry.f), budget));
      }
      auto sub = pca.apply(e1.value, entry.f, eb);
      if (!sub.ok()) {
        parts.emplace_back(tag + " subset", verdict_only(Verdict::Refuted, "e_1 fails on a pool realizer"));
      } else {
        parts.emplace_back(tag + " subset", check(pca, sub.value, below, {{"C", c}, {"U", entry.u}}, budget));
      }
    }
    if (parts.empty()) return verdict_only(Verdict::Realized, "no maps from S to T; C is empty");
    return conjoin(parts);
  };
  return p;
}

Nat collection_realizer(Pca& pca, const FormulaPtr& phi) {
  auto core = build_core_realizers(pca);
  auto names = core_names(core);
  names["Tx"] = transport_realizer(pca, core, phi, "x");
  names["Ty"] = transport_realizer(pca, core, phi, "y");
  return pca.intern_source(
      "lam e. <lam m. <<m.0, Id>, Tx <(m.1).1, (m.1).0> (e <m.0, Id>)>,"
      " lam m. <<m.0, Id>, Ty <(m.1).1, (m.1).0> (e <m.0, Id>)>>",
      names);
}

AxiomPackage collection_package(Pca& pca, const SuiteOptions& o) {
  auto names = core_names(build_core_realizers(pca));
  auto phi = parse_formula("x = y");
  const Nat premise_realizer = pca.intern_source("lam f. Id", names);
  AxiomPackage p;
  p.name = "strong-collection";
  p.realizer = collection_realizer(pca, phi);
  p.inputs = {"S"};
  p.open_ended = true;
  p.suite = product_suite(p.inputs, o);
  auto premise = parse_formula("forall x in $S. exists y. x = y");
  auto body = parse_formula("(forall x in $S. exists y in $Z. x = y) /\\ (forall y in $Z. exists x in $S. x = y)");
  p.statement = print_formula(body);
  p.witness_builder = [&pca, phi, premise_realizer](const Environment& inst) {
    auto env = inst;
    env["Z"] = strong_collection_witness(inst.at("S"), search_chooser(pca, premise_realizer, phi, inst.at("S"), CheckBudget{}));
    return env;
  };
  p.verify = [&pca, phi, premise, body, premise_realizer](const Nat& r, const Environment& inst, const CheckBudget& budget) {
    const auto& s = inst.at("S");
    std::vector<std::pair<std::string, CheckResult>> parts;
    parts.emplace_back("premise", check(pca, premise_realizer, premise, inst, budget));
    TreeSetCode z;
    try {
      z = strong_collection_witness(s, search_chooser(pca, premise_realizer, phi, s, budget));
    } catch (const ChooserFailure& err) {
      parts.emplace_back("chooser", verdict_only(Verdict::Unknown, err.what(), {bound::kHf}));
      return conjoin(parts);
    }
    auto applied = pca.apply(r, premise_realizer, EvalBudget{budget.fuel});
    if (!applied.ok()) {
      parts.emplace_back("conclusion", verdict_only(Verdict::Refuted, "realizer fails on the premise realizer"));
    } else {
      parts.emplace_back("conclusion", check(pca, applied.value, body, {{"S", s}, {"Z", z}}, budget));
    }
    return conjoin(parts);
  };
  return p;
}

std::vector<std::string> axiom_names() {
  return {"equality",          "extensionality",  "set-induction",
          "pairing",           "union",           "infinity",
          "separation[x=x]",   "separation[bot]", "separation[nonempty]",
          "fullness",          "strong-collection"};
}

std::vector<std::string> axiom_families() {
  return {"equality", "extensionality", "set-induction", "pairing",          "union",
          "infinity", "separation",     "fullness",      "strong-collection"};
}

std::vector<std::string> expand_family(const std::string& family) {
  if (family == "separation") return {"separation[x=x]", "separation[bot]", "separation[nonempty]"};
  auto all = axiom_names();
  if (std::find(all.begin(), all.end(), family) != all.end()) return {family};
  throw UnknownAxiom("unknown axiom: " + family);
}

AxiomPackage make_axiom_package(Pca& pca, const std::string& name, const SuiteOptions& o) {
  if (name == "equality") return equality_package(pca, o);
  if (name == "extensionality") return extensionality_package(pca, o);
  if (name == "set-induction") return induction_package(pca, o);
  if (name == "pairing") return pairing_package(pca, o);
  if (name == "union") return union_package(pca, o);
  if (name == "infinity") return infinity_package(pca, o);
  if (name == "separation[x=x]") return separation_package(pca, SeparationPreset::SelfEqual, o);
  if (name == "separation[bot]") return separation_package(pca, SeparationPreset::Bot, o);
  if (name == "separation[nonempty]") return separation_package(pca, SeparationPreset::Nonempty, o);
  if (name == "fullness") return fullness_package(pca, o);
  if (name == "strong-collection") return collection_package(pca, o);
  throw UnknownAxiom("unknown axiom: " + name);
}

SuiteReport run_suite(const AxiomPackage& package, const CheckBudget& budget) {
  SuiteReport rep;
  rep.name = package.name;
  rep.realizer = package.realizer;
  rep.open_ended = package.open_ended;
  for (const auto& inst : package.suite) {
    auto r = package.verify(package.realizer, inst, budget);
    switch (r.verdict) {
      case Verdict::Realized: ++rep.realized; break;
      case Verdict::Refuted: ++rep.refuted; break;
      case Verdict::Unknown: ++rep.unknown; break;
    }
    rep.instances.push_back({describe_instance(inst), std::move(r)});
  }
  return rep;
}

CheckResult check_axiom_instance(Pca& pca, const std::string& name, const Nat& realizer, const Environment& instance,
                                 const CheckBudget& budget) {
  auto pkg = make_axiom_package(pca, name, SuiteOptions{0, 0, 3});
  for (const auto& in : pkg.inputs)
    if (!instance.count(in)) throw UnboundParameter("instance for " + name + " lacks $" + in);
  return pkg.verify(realizer, instance, budget);
}

}  // namespace czr
