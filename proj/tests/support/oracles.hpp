#pragma once

// Independent reference implementations used to pin expected values. They
// share data types with the library but none of its algorithms.

#include "czr/pca.hpp"
#include "czr/realizers.hpp"
#include "czr/term.hpp"
#include "czr/treeset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using czr::Nat;
using czr::Tuple;
using czr::TupleSet;

inline Nat pair(const Nat& x, const Nat& y) { return (x + y) * (x + y + 1) / 2 + y; }

/// enc(⟨⟩) = 0, enc(s) = 1 + pair(n−1, payload(s)), payload folded from the right.
inline Nat encode(const Tuple& s) {
  if (s.empty()) return 0;
  Nat payload = s.back();
  for (std::size_t i = s.size() - 1; i-- > 0;) payload = pair(s[i], payload);
  return 1 + pair(Nat(s.size() - 1), payload);
}

/// Canonical text of the hereditarily finite set named by `prefix` in a tree:
/// "{" + sorted distinct member texts joined by "," + "}".
inline std::string hf_text(const TupleSet& tuples, const Tuple& prefix = {}) {
  std::set<std::string> members;
  for (const auto& t : tuples) {
    if (t.size() != prefix.size() + 1 || !std::equal(prefix.begin(), prefix.end(), t.begin())) continue;
    members.insert(hf_text(tuples, t));
  }
  std::string out = "{";
  bool first = true;
  for (const auto& m : members) {
    if (!first) out += ",";
    out += m;
    first = false;
  }
  return out + "}";
}

inline std::string join_set(const std::set<std::string>& members) {
  std::string out = "{";
  bool first = true;
  for (const auto& m : members) {
    if (!first) out += ",";
    out += m;
    first = false;
  }
  return out + "}";
}

inline std::string von_neumann(unsigned n) {
  std::set<std::string> members;
  for (unsigned k = 0; k < n; ++k) members.insert(von_neumann(k));
  return join_set(members);
}

/// All HF sets of rank ≤ r and width ≤ w, as canonical texts, by brute force
/// over subsets of the previous level.
inline std::set<std::string> hf_universe(unsigned rank, unsigned width) {
  std::set<std::string> level{"{}"};
  for (unsigned k = 0; k < rank; ++k) {
    std::vector<std::string> prev(level.begin(), level.end());
    std::set<std::string> next;
    for (unsigned mask = 0; mask < (1u << prev.size()); ++mask) {
      if (static_cast<unsigned>(__builtin_popcount(mask)) > width) continue;
      std::set<std::string> members;
      for (std::size_t i = 0; i < prev.size(); ++i)
        if (mask & (1u << i)) members.insert(prev[i]);
      next.insert(join_set(members));
    }
    level = std::move(next);
  }
  return level;
}

/// X is inductive relative to S: every node whose children all lie in X lies in X.
inline bool inductive(const TupleSet& s, const TupleSet& x) {
  for (const auto& node : s) {
    bool children_in = true;
    for (const auto& t : s)
      if (t.size() == node.size() + 1 && std::equal(node.begin(), node.end(), t.begin()) && !x.count(t))
        children_in = false;
    if (children_in && !x.count(node)) return false;
  }
  return true;
}

/// { b̄ | ā⌢b̄ ∈ S }, without adjoining anything.
inline TupleSet raw_subtree(const TupleSet& s, const Tuple& a) {
  TupleSet out;
  for (const auto& t : s)
    if (t.size() >= a.size() && std::equal(a.begin(), a.end(), t.begin())) out.insert(Tuple(t.begin() + a.size(), t.end()));
  return out;
}

inline TupleSet random_tree(std::mt19937_64& rng, unsigned max_depth, unsigned max_children = 3, unsigned max_label = 9) {
  TupleSet out{Tuple{}};
  std::function<void(const Tuple&, unsigned)> grow = [&](const Tuple& at, unsigned depth) {
    if (depth == max_depth) return;
    unsigned k = std::uniform_int_distribution<unsigned>(0, max_children)(rng);
    for (unsigned i = 0; i < k; ++i) {
      Tuple child = at;
      child.push_back(std::uniform_int_distribution<unsigned>(0, max_label)(rng));
      if (out.insert(child).second) grow(child, depth + 1);
    }
  };
  grow({}, 0);
  return out;
}

/// Every rooted unordered tree with at most `max_nodes` nodes, each as a code
/// whose sibling labels are 0, 1, ...
inline std::vector<TupleSet> all_tree_shapes(unsigned max_nodes) {
  // shapes[n] = canonical child-size multisets for trees of exactly n nodes,
  // stored as lists of child shapes (indices into by_size).
  struct Shape {
    std::vector<std::pair<unsigned, std::size_t>> kids;  // (size, index)
  };
  std::vector<std::vector<Shape>> by_size(max_nodes + 1);
  by_size[1].push_back({});
  for (unsigned n = 2; n <= max_nodes; ++n) {
    // children: non-increasing sequence of (size, index) pairs summing to n-1
    std::function<void(unsigned, std::pair<unsigned, std::size_t>, std::vector<std::pair<unsigned, std::size_t>>&)> pick =
        [&](unsigned left, std::pair<unsigned, std::size_t> bound, std::vector<std::pair<unsigned, std::size_t>>& acc) {
          if (left == 0) {
            by_size[n].push_back({acc});
            return;
          }
          for (unsigned sz = std::min(left, bound.first); sz >= 1; --sz) {
            std::size_t top = (sz == bound.first) ? bound.second : by_size[sz].size() - 1;
            for (std::size_t idx = 0; idx <= top && idx < by_size[sz].size(); ++idx) {
              acc.push_back({sz, idx});
              pick(left - sz, {sz, idx}, acc);
              acc.pop_back();
            }
          }
        };
    std::vector<std::pair<unsigned, std::size_t>> acc;
    pick(n - 1, {n - 1, by_size[n - 1].size() - 1}, acc);
  }
  std::function<void(unsigned, std::size_t, const Tuple&, TupleSet&)> emit = [&](unsigned sz, std::size_t idx,
                                                                                  const Tuple& at, TupleSet& out) {
    out.insert(at);
    unsigned label = 0;
    for (const auto& [csz, cidx] : by_size[sz][idx].kids) {
      Tuple child = at;
      child.push_back(label++);
      emit(csz, cidx, child, out);
    }
  };
  std::vector<TupleSet> out;
  for (unsigned n = 1; n <= max_nodes; ++n)
    for (std::size_t i = 0; i < by_size[n].size(); ++i) {
      TupleSet t;
      emit(n, i, {}, t);
      out.push_back(std::move(t));
    }
  return out;
}

// ---- hand-built equality and membership realizers ----

struct MemR;

/// A realizer of A = B given as finite tables, or the identity realizer.
struct EqR {
  bool identity = false;
  std::map<Nat, std::shared_ptr<MemR>> left, right;
};

struct MemR {
  Nat label;
  std::shared_ptr<EqR> eq;
};

inline bool eq_holds(const EqR& r, const TupleSet& a, const TupleSet& b);

inline bool mem_holds(const MemR& m, const TupleSet& x, const TupleSet& s) {
  if (!s.count(Tuple{m.label})) return false;
  return eq_holds(*m.eq, x, raw_subtree(s, Tuple{m.label}));
}

inline std::vector<Nat> labels(const TupleSet& s) {
  std::vector<Nat> out;
  for (const auto& t : s)
    if (t.size() == 1) out.push_back(t[0]);
  return out;
}

/// Direct recursion over the two clauses, no application structure involved.
inline bool eq_holds(const EqR& r, const TupleSet& a, const TupleSet& b) {
  if (r.identity) return a == b;
  for (const auto& l : labels(a)) {
    auto it = r.left.find(l);
    if (it == r.left.end() || !mem_holds(*it->second, raw_subtree(a, Tuple{l}), b)) return false;
  }
  for (const auto& l : labels(b)) {
    auto it = r.right.find(l);
    if (it == r.right.end() || !mem_holds(*it->second, raw_subtree(b, Tuple{l}), a)) return false;
  }
  return true;
}

/// Same-shape realizer: matches labels by extensional equality where
/// possible, otherwise points at the first label of the other side.
inline std::shared_ptr<EqR> matching(const TupleSet& a, const TupleSet& b, bool sloppy) {
  auto r = std::make_shared<EqR>();
  auto side = [&](const TupleSet& from, const TupleSet& to, auto& table) {
    auto targets = labels(to);
    for (const auto& l : labels(from)) {
      auto sub = raw_subtree(from, Tuple{l});
      Nat pick = targets.empty() ? Nat(0) : targets.front();
      if (!sloppy)
        for (const auto& t : targets)
          if (hf_text(raw_subtree(to, Tuple{t})) == hf_text(sub)) {
            pick = t;
            break;
          }
      auto m = std::make_shared<MemR>();
      m->label = pick;
      m->eq = matching(sub, raw_subtree(to, Tuple{pick}), sloppy);
      table.emplace(l, m);
    }
  };
  side(a, b, r->left);
  side(b, a, r->right);
  return r;
}

/// Random term over the bound names in `scope`; closed when scope is empty
/// at the root. Recursion through `fix` makes some of them diverge.
inline czr::TermPtr random_term(std::mt19937_64& rng, int depth, std::vector<std::string> scope) {
  using namespace czr::term;
  auto leaf = [&]() -> czr::TermPtr {
    if (!scope.empty() && rng() % 3 != 0) return var(scope[rng() % scope.size()]);
    return num(rng() % 6);
  };
  if (depth <= 0) return leaf();
  auto sub = [&] { return random_term(rng, depth - 1, scope); };
  switch (rng() % 11) {
    case 0:
      return leaf();
    case 1: {
      std::string b = "v" + std::to_string(scope.size());
      scope.push_back(b);
      return lam(b, random_term(rng, depth - 1, scope));
    }
    case 2:
    case 3:
      return app(sub(), sub());
    case 4:
      return tuple({sub(), sub()});
    case 5:
      return proj(sub(), static_cast<unsigned>(rng() % 3));
    case 6:
      return succ(sub());
    case 7:
      return pred(sub());
    case 8:
      return ifz(sub(), sub(), sub());
    case 9:
      return arity(sub());
    default: {
      std::string f = "f" + std::to_string(scope.size());
      std::string x = "x" + std::to_string(scope.size());
      scope.push_back(f);
      scope.push_back(x);
      return fix(lam(f, lam(x, random_term(rng, depth - 1, scope))));
    }
  }
}

/// Lowers a table realizer to a closed term: each side is a lookup chain
/// `ifz NatEq x l then <label, sub> else ...` ending in 0.
inline czr::TermPtr compile(const EqR& r, const czr::CoreRealizers& core) {
  using namespace czr::term;
  if (r.identity) return num(core.id);
  auto side = [&](const std::map<Nat, std::shared_ptr<MemR>>& table) {
    czr::TermPtr chain = num(0);
    for (auto it = table.rbegin(); it != table.rend(); ++it)
      chain = ifz(app(num(core.nat_eq), var("x"), num(it->first)),
                  tuple({num(it->second->label), compile(*it->second->eq, core)}), chain);
    return lam("x", chain);
  };
  return tuple({side(r.left), side(r.right)});
}

/// Evaluates the compiled realizer to its natural.
inline Nat realize(czr::Pca& pca, const EqR& r, const czr::CoreRealizers& core) {
  auto v = pca.evaluate(compile(r, core), czr::EvalBudget{100'000});
  if (!v.ok()) throw std::runtime_error("oracle realizer did not evaluate: " + v.detail);
  return v.value;
}

}  // namespace oracle
