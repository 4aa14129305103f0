#include "czr/constructions.hpp"

#include "czr/hf.hpp"
#include "czr/tuple_code.hpp"

namespace czr {

TreeSetCode pair_set(const TreeSetCode& s, const TreeSetCode& t) {
  TupleSet u = prefixed(0, s);
  u.merge(prefixed(1, t));
  u.insert(Tuple{});
  return TreeSetCode::prefix_closure(u);
}

TreeSetCode opair(const TreeSetCode& x, const TreeSetCode& y) { return pair_set(pair_set(x, x), pair_set(x, y)); }

TreeSetCode union_set(const TreeSetCode& s) {
  TupleSet out{Tuple{}};
  for (const auto& t : s.tuples())
    if (!t.empty()) out.insert(Tuple(t.begin() + 1, t.end()));
  return TreeSetCode::from_tuples(std::move(out));
}

TreeSetCode tagged_union_set(const TreeSetCode& s) {
  TupleSet out{Tuple{}};
  for (const auto& t : s.tuples()) {
    if (t.size() < 2) continue;
    Tuple r{encode_tuple({t[0], t[1]})};
    r.insert(r.end(), t.begin() + 2, t.end());
    out.insert(std::move(r));
  }
  return TreeSetCode::prefix_closure(out);
}

TreeSetCode omega_set(unsigned n) {
  std::vector<TreeSetCode> s{TreeSetCode{}};
  for (unsigned k = 1; k <= n; ++k) {
    TupleSet next{Tuple{}};
    for (unsigned m = 0; m < k; ++m) next.merge(prefixed(m, s[m]));
    s.push_back(TreeSetCode::prefix_closure(next));
  }
  return s[n];
}

SeparationResult separation_set(const TreeSetCode& s, const Finder& finder) {
  SeparationResult out;
  TupleSet tuples{Tuple{}};
  for (const auto& a0 : s.members()) {
    auto member = s.child(a0);
    auto fs = finder(a0, member);
    if (fs.empty()) {
      out.omitted.push_back(a0);
      continue;
    }
    for (const auto& f : fs) tuples.merge(prefixed(encode_tuple({f, a0}), member));
    out.found.emplace(a0, std::move(fs));
  }
  out.set = TreeSetCode::prefix_closure(tuples);
  return out;
}

Finder search_finder(Pca& pca, const FormulaPtr& phi, const std::string& var, const CheckBudget& budget) {
  auto body = substitute(phi, var, FTerm::param("X"));
  return [&pca, body, budget](const Nat&, const TreeSetCode& member) -> std::vector<Nat> {
    Environment env{{"X", member}};
    Nat id = identity_realizer(pca);
    std::vector<Nat> candidates{id};
    for (const auto& c : member.members()) candidates.push_back(encode_tuple({c, id}));
    for (std::uint64_t n = 0; n < budget.realizer_bound; ++n) candidates.push_back(Nat(n));
    const std::size_t horizon = pca.handle_count();
    for (std::size_t i = 0; i < horizon; ++i) candidates.push_back(pca.handle_at(i));
    Checker checker(pca, budget);
    for (const auto& f : candidates)
      if (checker.check(f, body, env).realized()) return {f};
    return {};
  };
}

namespace {

Nat must(const EvalResult& r, const std::string& what) {
  if (!r.ok()) throw EvaluationFailure(what + ": " + to_string(r.status) + (r.detail.empty() ? "" : " (" + r.detail + ")"));
  return r.value;
}

}  // namespace

TreeSetCode restrict(Pca& pca, const Nat& f, const TreeSetCode& s, const TreeSetCode&, const TreeSetCode& u,
                     const CheckBudget& budget) {
  const EvalBudget eb{budget.fuel};
  const Nat id = identity_realizer(pca);
  std::set<Nat> keep;
  for (const auto& a : s.members()) {
    Nat r = must(pca.apply(f, encode_tuple({a, id}), eb), "applying f");
    Nat r1 = must(pca.project(r, Nat(1), eb), "projecting f's answer");
    keep.insert(must(pca.project(r1, Nat(0), eb), "projecting f's pair label"));
  }
  TupleSet out{Tuple{}};
  for (const auto& t : u.tuples())
    if (!t.empty() && keep.count(t[0])) out.insert(t);
  return TreeSetCode::from_tuples(std::move(out));
}

CheckResult check_total_relation(Pca& pca, const Nat& f, const TreeSetCode& s, const TreeSetCode& t,
                                 const TreeSetCode& u, const CheckBudget& budget) {
  const EvalBudget eb{budget.fuel};
  const Nat id = identity_realizer(pca);
  static const FormulaPtr y_in_t = parse_formula("$Y in $T");
  static const FormulaPtr p_in_u = parse_formula("$P in $U");
  std::vector<std::pair<std::string, CheckResult>> parts;
  auto fail = [](const EvalResult& r, const std::string& what) {
    if (r.status == EvalStatus::OutOfFuel) return verdict_only(Verdict::Unknown, what + " ran out of fuel", {bound::kFuel});
    return verdict_only(Verdict::Refuted, what + ": " + to_string(r.status));
  };
  for (const auto& a : s.members()) {
    const std::string label = "x=" + to_string(a);
    auto r = pca.apply(f, encode_tuple({a, id}), eb);
    if (!r.ok()) {
      parts.emplace_back(label, fail(r, "applying f"));
      continue;
    }
    auto r0 = pca.project(r.value, Nat(0), eb);
    auto r1 = r0.ok() ? pca.project(r.value, Nat(1), eb) : r0;
    auto r00 = r0.ok() ? pca.project(r0.value, Nat(0), eb) : r0;
    if (!r0.ok() || !r1.ok() || !r00.ok()) {
      parts.emplace_back(label, fail(!r0.ok() ? r0 : !r1.ok() ? r1 : r00, "unpacking f's answer"));
      continue;
    }
    if (!t.has_member(r00.value)) {
      parts.emplace_back(label, verdict_only(Verdict::Refuted, "label " + to_string(r00.value) + " is not a member of T"));
      continue;
    }
    TreeSetCode y = t.child(r00.value);
    Environment env{{"Y", y}, {"T", t}, {"P", opair(s.child(a), y)}, {"U", u}};
    Checker checker(pca, budget);
    parts.emplace_back(label + " y in T", checker.check(r0.value, y_in_t, env));
    parts.emplace_back(label + " <x,y> in U", checker.check(r1.value, p_in_u, env));
  }
  if (parts.empty()) return verdict_only(Verdict::Realized, "S has no members");
  return conjoin(parts);
}

TreeSetCode fullness_set(Pca& pca, const TreeSetCode& s, const TreeSetCode& t, const std::vector<PoolEntry>& pool,
                         const CheckBudget& budget) {
  TupleSet out{Tuple{}};
  for (const auto& entry : pool) out.merge(prefixed(entry.f, restrict(pca, entry.f, s, t, entry.u, budget)));
  return TreeSetCode::prefix_closure(out);
}

std::vector<FunctionEntry> function_pool(Pca& pca, const CoreRealizers& core, const TreeSetCode& s,
                                         const TreeSetCode& t) {
  using namespace term;
  const auto dom = s.members();
  const auto cod = t.members();
  std::vector<FunctionEntry> out;
  if (dom.empty()) {
    out.push_back({{pca.intern_source("lam g. g"), TreeSetCode{}}, {}});
    return out;
  }
  if (cod.empty()) return out;
  std::vector<std::size_t> choice(dom.size(), 0);
  while (true) {
    std::map<Nat, Nat> graph;
    TupleSet u{Tuple{}};
    for (std::size_t i = 0; i < dom.size(); ++i) {
      graph.emplace(dom[i], cod[choice[i]]);
      u.merge(prefixed(dom[i], opair(s.child(dom[i]), t.child(cod[choice[i]]))));
    }
    TermPtr h = num(0);
    for (auto it = graph.rbegin(); it != graph.rend(); ++it)
      h = ifz(app(num(core.nat_eq), proj(var("g"), 0), num(it->first)), num(it->second), h);
    auto f = lam("g", tuple({tuple({h, num(core.id)}), tuple({proj(var("g"), 0), num(core.id)})}));
    out.push_back({{pca.intern(f), TreeSetCode::prefix_closure(u)}, std::move(graph)});

    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == cod.size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

TreeSetCode strong_collection_witness(const TreeSetCode& s, const Chooser& chooser) {
  TupleSet out{Tuple{}};
  for (const auto& a : s.members()) {
    auto y = chooser(a);
    if (!y) throw ChooserFailure(a, "no Y found for member label " + to_string(a));
    out.merge(prefixed(a, *y));
  }
  return TreeSetCode::prefix_closure(out);
}

Chooser search_chooser(Pca& pca, const Nat& e, const FormulaPtr& phi, const TreeSetCode& s, const CheckBudget& budget) {
  auto body = substitute(substitute(phi, "x", FTerm::param("X")), "y", FTerm::param("Y"));
  return [&pca, e, body, s, budget](const Nat& a) -> std::optional<TreeSetCode> {
    const EvalBudget eb{budget.fuel};
    auto r = pca.apply(e, encode_tuple({a, identity_realizer(pca)}), eb);
    if (!r.ok()) return std::nullopt;
    TreeSetCode x = s.child(a);
    std::vector<TreeSetCode> candidates{x};
    for (const auto& b : x.members()) candidates.push_back(x.child(b));
    for (const auto& c : s.members()) candidates.push_back(s.child(c));
    for (auto& c : enumerate_hf(budget.hf_rank, budget.hf_width)) candidates.push_back(std::move(c));
    Checker checker(pca, budget);
    for (const auto& y : candidates)
      if (checker.check(r.value, body, {{"X", x}, {"Y", y}}).realized()) return y;
    return std::nullopt;
  };
}

}  // namespace czr
