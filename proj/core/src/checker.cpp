#include "czr/checker.hpp"

#include "czr/hf.hpp"
#include "czr/realizers.hpp"
#include "czr/tuple_code.hpp"

#include <algorithm>
#include <cstdio>
#include <tuple>

namespace czr {

std::string CheckBudget::to_string() const {
  return "fuel=" + std::to_string(fuel) + " hf_rank=" + std::to_string(hf_rank) +
         " hf_width=" + std::to_string(hf_width) + " realizer_bound=" + std::to_string(realizer_bound);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Realized: return "Realized";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

std::uint64_t CheckResult::trace_hash() const {
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const auto& line : trace) {
    feed(line);
    feed("\n");
  }
  feed(std::to_string(dropped_trace_lines));
  return h;
}

std::string CheckResult::serialize() const {
  std::string bounds;
  for (const auto& b : exhausted) bounds += (bounds.empty() ? "" : "+") + b;
  if (bounds.empty()) bounds = "-";
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(trace_hash()));
  return std::string(czr::to_string(verdict)) + ";" + bounds + ";" + hex;
}

struct Checker::Outcome {
  Verdict v = Verdict::Realized;
  std::set<std::string> exhausted;

  static Outcome realized() { return {}; }
  static Outcome refuted() { return {Verdict::Refuted, {}}; }
  static Outcome unknown(std::string why) { return {Verdict::Unknown, {std::move(why)}}; }

  /// Conjunctive accumulation: Refuted dominates, then Unknown.
  void meet(const Outcome& o) {
    if (v == Verdict::Refuted) return;
    if (o.v == Verdict::Refuted) {
      *this = o;
      return;
    }
    if (o.v == Verdict::Unknown) {
      v = Verdict::Unknown;
      exhausted.insert(o.exhausted.begin(), o.exhausted.end());
    }
  }
  void absorb_bounds(const Outcome& o) { exhausted.insert(o.exhausted.begin(), o.exhausted.end()); }
};

namespace {

std::string show(const Nat& n) {
  std::string s = to_string(n);
  if (s.size() <= 24) return s;
  return s.substr(0, 10) + "..(" + std::to_string(s.size()) + " digits)";
}

constexpr std::size_t kStructuralCap = 8;
constexpr int kTraceDepth = 4;

}  // namespace

struct Checker::State {
  std::vector<TreeSetCode> codes;
  std::map<TreeSetCode, int> ids;
  std::map<std::pair<int, Nat>, int> children;
  std::map<int, HfSet> hf;
  std::map<std::tuple<int, int, int, Nat>, Outcome> memo;
  std::map<std::string, int> params;
  std::optional<std::vector<int>> witnesses;
  std::vector<Nat> discovered;
  std::set<Nat> discovered_set;
  std::size_t horizon = 0;
  std::size_t trace_limit = 0;
  std::vector<std::string> trace;
  std::size_t dropped = 0;

  int code_id(const TreeSetCode& c) {
    auto [it, fresh] = ids.emplace(c, static_cast<int>(codes.size()));
    if (fresh) codes.push_back(c);
    return it->second;
  }
  int child(int s, const Nat& a) {
    auto key = std::make_pair(s, a);
    if (auto it = children.find(key); it != children.end()) return it->second;
    int id = code_id(codes[s].child(a));
    children.emplace(key, id);
    return id;
  }
  const HfSet& extension(int s) {
    auto it = hf.find(s);
    if (it == hf.end()) it = hf.emplace(s, hf_decode(codes[s])).first;
    return it->second;
  }
  void log(int depth, const std::string& line) {
    if (trace.size() >= trace_limit) {
      ++dropped;
      return;
    }
    trace.push_back(std::string(2 * static_cast<std::size_t>(depth), ' ') + line);
  }
  void discover(const Nat& n) {
    if (discovered_set.insert(n).second) discovered.push_back(n);
  }
  int resolve(const FTerm& t, const Scope& scope) const {
    if (t.is_var()) {
      auto it = scope.find(t.name);
      if (it == scope.end()) throw std::invalid_argument("free variable " + t.name + " has no binding");
      return it->second;
    }
    auto it = params.find(t.name);
    if (it == params.end()) throw UnboundParameter("unbound parameter $" + t.name);
    return it->second;
  }
  std::string name(int id) const { return "#" + std::to_string(id); }
};

Checker::Checker(Pca& pca, CheckBudget budget, CheckOptions options)
    : pca_(pca), budget_(budget), options_(std::move(options)), id_(identity_realizer(pca)) {}

CheckResult Checker::check(const Nat& e, const FormulaPtr& phi, const Environment& env) {
  State st;
  st.trace_limit = options_.trace_limit;
  for (const auto& p : params(phi)) {
    auto it = env.find(p);
    if (it == env.end()) throw UnboundParameter("unbound parameter $" + p);
  }
  for (const auto& [name, code] : env) {
    int id = st.code_id(code);
    st.params.emplace(name, id);
    st.log(0, "param $" + name + " = " + st.name(id) + " (" + std::to_string(code.size()) + " tuples)");
  }
  st.horizon = options_.handle_horizon.value_or(pca_.handle_count());
  st.log(0, "check " + show(e) + " |- " + print_formula(phi) + " [" + budget_.to_string() + "]");

  Outcome o = run(st, e, phi, Scope{}, 0);

  CheckResult r;
  r.verdict = o.v;
  if (o.v == Verdict::Unknown) r.exhausted = o.exhausted;
  r.handle_horizon = st.horizon;
  st.log(0, std::string("verdict ") + czr::to_string(o.v));
  r.trace = std::move(st.trace);
  r.dropped_trace_lines = st.dropped;
  return r;
}

namespace {

/// Maps an evaluation failure to a checker outcome.
template <class Outcome>
Outcome failure_outcome(const EvalResult& r) {
  if (r.status == EvalStatus::OutOfFuel) return Outcome::unknown(bound::kFuel);
  return Outcome::refuted();
}

}  // namespace

Checker::Outcome Checker::run(State& st, const Nat& e, const FormulaPtr& phi, const Scope& scope, int depth) {
  const EvalBudget eb{budget_.fuel};
  auto component = [&](const Nat& n, unsigned i, Outcome& fail) -> std::optional<Nat> {
    auto r = pca_.project(n, Nat(i), eb);
    if (r.ok()) return r.value;
    fail = failure_outcome<Outcome>(r);
    if (depth < kTraceDepth) st.log(depth, "projection " + show(n) + "." + std::to_string(i) + " failed: " + r.detail);
    return std::nullopt;
  };

  switch (phi->kind) {
    case FormulaKind::Bot:
      if (depth < kTraceDepth) st.log(depth, "bot: no realizer");
      return Outcome::refuted();

    case FormulaKind::Eq:
      return run_eq(st, e, st.resolve(phi->lhs, scope), st.resolve(phi->rhs, scope), depth);

    case FormulaKind::Mem:
      return run_mem(st, e, st.resolve(phi->lhs, scope), st.resolve(phi->rhs, scope), depth);

    case FormulaKind::And: {
      Outcome fail;
      auto e0 = component(e, 0, fail);
      if (!e0) return fail;
      Outcome acc = run(st, *e0, phi->kids[0], scope, depth + 1);
      if (acc.v == Verdict::Refuted) return acc;
      auto e1 = component(e, 1, fail);
      if (!e1) {
        acc.meet(fail);
        return acc;
      }
      acc.meet(run(st, *e1, phi->kids[1], scope, depth + 1));
      return acc;
    }

    case FormulaKind::Or: {
      Outcome fail;
      auto e0 = component(e, 0, fail);
      if (!e0) return fail;
      if (*e0 > 1) {
        if (depth < kTraceDepth) st.log(depth, "or: tag " + show(*e0) + " is neither 0 nor 1");
        return Outcome::refuted();
      }
      auto e1 = component(e, 1, fail);
      if (!e1) return fail;
      return run(st, *e1, phi->kids[*e0 == 0 ? 0 : 1], scope, depth + 1);
    }

    case FormulaKind::Imp:
      return run_imp(st, e, phi, scope, depth);

    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return run_unbounded(st, e, phi, scope, depth);

    case FormulaKind::ForallIn:
      if (options_.optimized_bounded) return run_forall_in(st, e, phi, scope, depth);
      return run(st, e,
                 fm::forall(phi->var, fm::imp(fm::mem(FTerm::var(phi->var), phi->rhs), phi->kids[0])),
                 scope, depth);

    case FormulaKind::ExistsIn:
      if (options_.optimized_bounded) return run_exists_in(st, e, phi, scope, depth);
      return run(st, e,
                 fm::exists(phi->var, fm::conj(fm::mem(FTerm::var(phi->var), phi->rhs), phi->kids[0])),
                 scope, depth);
  }
  return Outcome::unknown(bound::kFuel);
}

Checker::Outcome Checker::run_mem(State& st, const Nat& e, int x, int s, int depth) {
  auto key = std::make_tuple(1, x, s, e);
  if (auto it = st.memo.find(key); it != st.memo.end()) return it->second;

  const EvalBudget eb{budget_.fuel};
  Outcome out;
  auto e0 = pca_.project(e, Nat(0), eb);
  auto e1 = e0.ok() ? pca_.project(e, Nat(1), eb) : e0;
  if (!e0.ok() || !e1.ok()) {
    out = failure_outcome<Outcome>(e0.ok() ? e1 : e0);
    if (depth < kTraceDepth) st.log(depth, "mem: " + show(e) + " is not a pair");
  } else if (!st.codes[s].has_member(e0.value)) {
    out = Outcome::refuted();
    if (depth < kTraceDepth) st.log(depth, "mem: label " + show(e0.value) + " absent from " + st.name(s));
  } else {
    out = run_eq(st, e1.value, x, st.child(s, e0.value), depth + 1);
  }
  st.memo.emplace(key, out);
  return out;
}

Checker::Outcome Checker::run_eq(State& st, const Nat& e, int a, int b, int depth) {
  auto key = std::make_tuple(0, a, b, e);
  if (auto it = st.memo.find(key); it != st.memo.end()) return it->second;

  const EvalBudget eb{budget_.fuel};
  Outcome out;
  auto side = [&](unsigned i, int from, int to) {
    auto labels = st.codes[from].members();
    if (labels.empty()) return;
    auto ei = pca_.project(e, Nat(i), eb);
    if (!ei.ok()) {
      out.meet(failure_outcome<Outcome>(ei));
      return;
    }
    for (const auto& lab : labels) {
      auto m = pca_.apply(ei.value, lab, eb);
      if (!m.ok()) {
        out.meet(failure_outcome<Outcome>(m));
        if (depth < kTraceDepth) st.log(depth, "eq: {" + show(ei.value) + "}(" + show(lab) + ") " + to_string(m.status));
      } else {
        out.meet(run_mem(st, m.value, st.child(from, lab), to, depth + 1));
      }
      if (out.v == Verdict::Refuted) {
        if (depth < kTraceDepth)
          st.log(depth, "eq: label " + show(lab) + " of " + st.name(from) + " has no counterpart in " + st.name(to));
        return;
      }
    }
  };
  side(0, a, b);
  if (out.v != Verdict::Refuted) side(1, b, a);
  st.memo.emplace(key, out);
  return out;
}

bool Checker::unrealizable(State& st, const FormulaPtr& phi, const Scope& scope) {
  switch (phi->kind) {
    case FormulaKind::Bot:
      return true;
    case FormulaKind::Eq:
      return !(st.extension(st.resolve(phi->lhs, scope)) == st.extension(st.resolve(phi->rhs, scope)));
    case FormulaKind::Mem:
      return !st.extension(st.resolve(phi->rhs, scope)).contains(st.extension(st.resolve(phi->lhs, scope)));
    case FormulaKind::And:
      return unrealizable(st, phi->kids[0], scope) || unrealizable(st, phi->kids[1], scope);
    case FormulaKind::Or:
      return unrealizable(st, phi->kids[0], scope) && unrealizable(st, phi->kids[1], scope);
    case FormulaKind::ExistsIn:
      return st.codes[st.resolve(phi->rhs, scope)].members().empty();
    default:
      return false;
  }
}

std::vector<Nat> Checker::structural_candidates(State& st, const FormulaPtr& phi, const Scope& scope, int depth) {
  std::vector<Nat> out;
  if (depth > 3) return out;
  switch (phi->kind) {
    case FormulaKind::Eq:
      out.push_back(id_);
      break;
    case FormulaKind::Mem: {
      int x = st.resolve(phi->lhs, scope);
      int s = st.resolve(phi->rhs, scope);
      for (const auto& a : st.codes[s].members()) {
        if (out.size() >= kStructuralCap) break;
        if (st.extension(st.child(s, a)) == st.extension(x)) out.push_back(encode_tuple({a, id_}));
      }
      break;
    }
    case FormulaKind::And: {
      auto l = structural_candidates(st, phi->kids[0], scope, depth + 1);
      auto r = structural_candidates(st, phi->kids[1], scope, depth + 1);
      for (std::size_t i = 0; i < l.size() && i < kStructuralCap; ++i)
        for (std::size_t j = 0; j < r.size() && j < kStructuralCap; ++j) out.push_back(encode_tuple({l[i], r[j]}));
      break;
    }
    case FormulaKind::Or:
      for (const auto& f : structural_candidates(st, phi->kids[0], scope, depth + 1)) out.push_back(encode_tuple({0, f}));
      for (const auto& g : structural_candidates(st, phi->kids[1], scope, depth + 1)) out.push_back(encode_tuple({1, g}));
      break;
    case FormulaKind::ExistsIn: {
      int b = st.resolve(phi->rhs, scope);
      std::size_t taken = 0;
      for (const auto& a : st.codes[b].members()) {
        if (taken++ >= kStructuralCap) break;
        Scope inner = scope;
        inner[phi->var] = st.child(b, a);
        auto body = structural_candidates(st, phi->kids[0], inner, depth + 1);
        for (std::size_t j = 0; j < body.size() && j < 4; ++j)
          out.push_back(encode_tuple({encode_tuple({a, id_}), body[j]}));
      }
      break;
    }
    default:
      break;
  }
  return out;
}

Checker::Outcome Checker::run_imp(State& st, const Nat& e, const FormulaPtr& phi, const Scope& scope, int depth) {
  const auto& premise = phi->kids[0];
  const auto& conclusion = phi->kids[1];
  if (unrealizable(st, premise, scope)) {
    if (depth < kTraceDepth) st.log(depth, "imp: premise " + print_formula(premise) + " unrealizable; vacuous");
    return Outcome::realized();
  }

  std::vector<Nat> pool;
  std::set<Nat> seen;
  auto offer = [&](const Nat& n) {
    if (seen.insert(n).second) pool.push_back(n);
  };
  for (const auto& n : structural_candidates(st, premise, scope, 0)) offer(n);
  for (const auto& n : options_.extra_candidates) offer(n);
  for (std::size_t i = 0; i < st.discovered.size(); ++i) offer(st.discovered[i]);
  for (std::uint64_t n = 0; n < budget_.realizer_bound; ++n) offer(Nat(n));
  for (std::size_t i = 0; i < st.horizon; ++i) offer(pca_.handle_at(i));

  const EvalBudget eb{budget_.fuel};
  Outcome acc = Outcome::unknown(bound::kImp);
  std::size_t exercised = 0;
  for (const auto& f : pool) {
    Outcome p = run(st, f, premise, scope, depth + 1 + kTraceDepth);
    if (p.v != Verdict::Realized) continue;
    ++exercised;
    auto v = pca_.apply(e, f, eb);
    if (!v.ok()) {
      Outcome fail = failure_outcome<Outcome>(v);
      if (fail.v == Verdict::Refuted) {
        if (depth < kTraceDepth) st.log(depth, "imp: {" + show(e) + "}(" + show(f) + ") " + to_string(v.status));
        return fail;
      }
      acc.absorb_bounds(fail);
      continue;
    }
    Outcome q = run(st, v.value, conclusion, scope, depth + 1);
    if (q.v == Verdict::Refuted) {
      if (depth < kTraceDepth)
        st.log(depth, "imp: premise realizer " + show(f) + " maps to " + show(v.value) + ", which fails the conclusion");
      return q;
    }
    acc.absorb_bounds(q);
    st.discover(v.value);
  }
  if (depth < kTraceDepth)
    st.log(depth, "imp: " + std::to_string(exercised) + " of " + std::to_string(pool.size()) + " candidates realize the premise");
  return acc;
}

Checker::Outcome Checker::run_unbounded(State& st, const Nat& e, const FormulaPtr& phi, const Scope& scope, int depth) {
  if (!st.witnesses) {
    std::vector<int> w;
    std::set<int> seen;
    auto offer = [&](int id) {
      if (seen.insert(id).second) w.push_back(id);
    };
    for (const auto& c : enumerate_hf(budget_.hf_rank, budget_.hf_width)) offer(st.code_id(c));
    for (const auto& c : options_.extra_witnesses) offer(st.code_id(c));
    std::vector<int> roots;
    for (const auto& [name, id] : st.params) roots.push_back(id);
    for (int id : roots) {
      offer(id);
      for (const auto& a : st.codes[id].members()) offer(st.child(id, a));
    }
    st.witnesses = std::move(w);
  }
  const bool universal = phi->kind == FormulaKind::Forall;
  Outcome acc = Outcome::unknown(bound::kHf);
  const auto witnesses = *st.witnesses;
  for (int x : witnesses) {
    Scope inner = scope;
    inner[phi->var] = x;
    Outcome r = run(st, e, phi->kids[0], inner, depth + 1);
    if (universal && r.v == Verdict::Refuted) {
      if (depth < kTraceDepth) st.log(depth, "forall " + phi->var + ": counterexample " + st.name(x));
      return r;
    }
    if (!universal && r.v == Verdict::Realized) {
      if (depth < kTraceDepth) st.log(depth, "exists " + phi->var + ": witness " + st.name(x));
      return r;
    }
    acc.absorb_bounds(r);
  }
  if (depth < kTraceDepth)
    st.log(depth, std::string(universal ? "forall " : "exists ") + phi->var + ": " + std::to_string(witnesses.size()) +
                      " candidates exhausted");
  return acc;
}

Checker::Outcome Checker::run_forall_in(State& st, const Nat& e, const FormulaPtr& phi, const Scope& scope, int depth) {
  int b = st.resolve(phi->rhs, scope);
  const EvalBudget eb{budget_.fuel};
  Outcome acc;
  for (const auto& a : st.codes[b].members()) {
    auto v = pca_.apply(e, encode_tuple({a, id_}), eb);
    if (!v.ok()) {
      acc.meet(failure_outcome<Outcome>(v));
      if (depth < kTraceDepth) st.log(depth, "forall " + phi->var + " in: {" + show(e) + "}(<" + show(a) + ",Id>) " + to_string(v.status));
    } else {
      Scope inner = scope;
      inner[phi->var] = st.child(b, a);
      acc.meet(run(st, v.value, phi->kids[0], inner, depth + 1));
    }
    if (acc.v == Verdict::Refuted) {
      if (depth < kTraceDepth) st.log(depth, "forall " + phi->var + " in " + st.name(b) + ": fails at label " + show(a));
      return acc;
    }
  }
  return acc;
}

Checker::Outcome Checker::run_exists_in(State& st, const Nat& e, const FormulaPtr& phi, const Scope& scope, int depth) {
  int b = st.resolve(phi->rhs, scope);
  const EvalBudget eb{budget_.fuel};
  auto e0 = pca_.project(e, Nat(0), eb);
  auto e1 = e0.ok() ? pca_.project(e, Nat(1), eb) : e0;
  if (!e0.ok() || !e1.ok()) return failure_outcome<Outcome>(e0.ok() ? e1 : e0);
  auto e00 = pca_.project(e0.value, Nat(0), eb);
  if (!e00.ok()) return failure_outcome<Outcome>(e00);
  if (!st.codes[b].has_member(e00.value)) {
    if (depth < kTraceDepth) st.log(depth, "exists " + phi->var + " in: label " + show(e00.value) + " absent from " + st.name(b));
    return Outcome::refuted();
  }

  std::vector<int> candidates{st.child(b, e00.value)};
  for (const auto& a : st.codes[b].members()) candidates.push_back(st.child(b, a));
  Outcome acc = Outcome::unknown(bound::kHf);
  std::set<int> tried;
  for (int w : candidates) {
    if (!tried.insert(w).second) continue;
    Outcome m = run_mem(st, e0.value, w, b, depth + 1);
    if (m.v != Verdict::Realized) {
      acc.absorb_bounds(m);
      continue;
    }
    Scope inner = scope;
    inner[phi->var] = w;
    Outcome body = run(st, e1.value, phi->kids[0], inner, depth + 1);
    if (body.v == Verdict::Realized) return body;
    acc.absorb_bounds(body);
    if (body.v == Verdict::Refuted && depth < kTraceDepth)
      st.log(depth, "exists " + phi->var + " in: witness " + st.name(w) + " fails the body");
  }
  return acc;
}

CheckResult conjoin(const std::vector<std::pair<std::string, CheckResult>>& parts) {
  CheckResult out;
  out.verdict = Verdict::Realized;
  for (const auto& [label, r] : parts) {
    out.trace.push_back("[" + label + "] " + r.serialize());
    for (const auto& line : r.trace) out.trace.push_back("  " + line);
    out.dropped_trace_lines += r.dropped_trace_lines;
    out.handle_horizon = std::max(out.handle_horizon, r.handle_horizon);
    if (out.verdict == Verdict::Refuted) continue;
    if (r.verdict == Verdict::Refuted) {
      out.verdict = Verdict::Refuted;
      out.exhausted.clear();
    } else if (r.verdict == Verdict::Unknown) {
      out.verdict = Verdict::Unknown;
      out.exhausted.insert(r.exhausted.begin(), r.exhausted.end());
    }
  }
  return out;
}

CheckResult verdict_only(Verdict v, std::string reason, std::set<std::string> exhausted) {
  CheckResult r;
  r.verdict = v;
  if (v == Verdict::Unknown) r.exhausted = std::move(exhausted);
  r.trace.push_back(std::move(reason));
  return r;
}

CheckResult check(Pca& pca, const Nat& e, const FormulaPtr& phi, const Environment& env, const CheckBudget& budget,
                  const CheckOptions& options) {
  Checker c(pca, budget, options);
  return c.check(e, phi, env);
}

}  // namespace czr
