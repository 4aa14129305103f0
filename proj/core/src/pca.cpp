#include "czr/pca.hpp"

#include "czr/term_syntax.hpp"
#include "czr/tuple_code.hpp"

namespace czr {

namespace {
constexpr int kMaxDepth = 3000;
}

const Nat Pca::kHandleBase = Nat(1) << 32;

const char* to_string(EvalStatus s) {
  switch (s) {
    case EvalStatus::Value:
      return "value";
    case EvalStatus::OutOfFuel:
      return "out-of-fuel";
    case EvalStatus::NotAFunction:
      return "not-a-function";
    case EvalStatus::Stuck:
      return "stuck";
  }
  return "?";
}

Nat Pca::intern(const TermPtr& closed) {
  auto open = free_vars(closed);
  if (!open.empty()) throw OpenTermError("cannot intern open term; free variable '" + *open.begin() + "'");
  if (closed->kind == TermKind::Fix && closed->kids[0]->kind != TermKind::Num) {
    const auto& gen = closed->kids[0];
    if (gen->kind == TermKind::Lam) return fixpoint(intern_unchecked(gen));
    auto g = evaluate(gen, EvalBudget{});
    if (!g.ok()) throw OpenTermError("fix generator does not evaluate: " + g.detail);
    return fixpoint(g.value);
  }
  return intern_unchecked(closed);
}

Nat Pca::intern_unchecked(const TermPtr& closed) {
  auto key = canonical_key(closed);
  auto [it, inserted] = index_.try_emplace(std::move(key), table_.size());
  if (inserted) table_.push_back(closed);
  return kHandleBase + it->second;
}

Nat Pca::intern_source(const std::string& source, const std::map<std::string, Nat>& names) {
  return intern(bind_names(parse_term(source), names));
}

std::optional<TermPtr> Pca::lookup(const Nat& code) const {
  if (code < kHandleBase) return std::nullopt;
  Nat offset = code - kHandleBase;
  if (offset >= table_.size()) return std::nullopt;
  return table_[static_cast<std::size_t>(offset)];
}

Nat Pca::fixpoint(const Nat& g) { return intern_unchecked(term::fix(term::num(g))); }

EvalResult Pca::evaluate(const TermPtr& closed, EvalBudget budget) {
  Fuel fuel{budget.fuel};
  return eval(closed, fuel, 0);
}

EvalResult Pca::apply(const Nat& e, const Nat& x, EvalBudget budget) {
  return evaluate(term::app(term::num(e), term::num(x)), budget);
}

EvalResult Pca::apply(const Nat& e, const Nat& x, const Nat& y, EvalBudget budget) {
  return evaluate(term::app(term::num(e), term::num(x), term::num(y)), budget);
}

EvalResult Pca::project(const Nat& n, const Nat& i, EvalBudget budget) {
  return evaluate(term::proj(term::num(n), term::num(i)), budget);
}

EvalResult Pca::arity_of(const Nat& n, EvalBudget budget) {
  return evaluate(term::arity(term::num(n)), budget);
}

// Unfolds fixed-point handles until a plain natural remains.
EvalResult Pca::force(Nat n, Fuel& fuel, int depth) {
  for (;;) {
    auto entry = lookup(n);
    if (!entry || (*entry)->kind != TermKind::Fix) return EvalResult::of(std::move(n));
    if (!fuel.spend()) return EvalResult::fail(EvalStatus::OutOfFuel, "fuel exhausted unfolding fix");
    const Nat& gen = (*entry)->kids[0]->num;
    auto unfolded = eval(term::app(term::num(gen), term::num(n)), fuel, depth + 1);
    if (!unfolded.ok()) return unfolded;
    n = std::move(unfolded.value);
  }
}

EvalResult Pca::eval(TermPtr t, Fuel& fuel, int depth) {
  if (depth > kMaxDepth) return EvalResult::fail(EvalStatus::OutOfFuel, "recursion depth exceeded");
  for (;;) {
    switch (t->kind) {
      case TermKind::Num:
        return EvalResult::of(t->num);
      case TermKind::Var:
        return EvalResult::fail(EvalStatus::Stuck, "free variable '" + t->name + "'");
      case TermKind::Lam:
        return EvalResult::of(intern_unchecked(t));
      case TermKind::Fix: {
        auto gen = eval(t->kids[0], fuel, depth + 1);
        if (!gen.ok()) return gen;
        return EvalResult::of(fixpoint(gen.value));
      }
      case TermKind::MkTuple: {
        Tuple values;
        values.reserve(t->kids.size());
        for (const auto& k : t->kids) {
          auto v = eval(k, fuel, depth + 1);
          if (!v.ok()) return v;
          values.push_back(std::move(v.value));
        }
        return EvalResult::of(encode_tuple(values));
      }
      case TermKind::Proj: {
        auto src = eval(t->kids[0], fuel, depth + 1);
        if (!src.ok()) return src;
        auto idx = eval(t->kids[1], fuel, depth + 1);
        if (!idx.ok()) return idx;
        auto forced = force(std::move(src.value), fuel, depth);
        if (!forced.ok()) return forced;
        if (idx.value >= arity(forced.value)) return EvalResult::of(Nat(0));
        return EvalResult::of(proj(forced.value, idx.value));
      }
      case TermKind::Arity: {
        auto src = eval(t->kids[0], fuel, depth + 1);
        if (!src.ok()) return src;
        auto forced = force(std::move(src.value), fuel, depth);
        if (!forced.ok()) return forced;
        return EvalResult::of(arity(forced.value));
      }
      case TermKind::Succ: {
        auto v = eval(t->kids[0], fuel, depth + 1);
        if (!v.ok()) return v;
        return EvalResult::of(v.value + 1);
      }
      case TermKind::Pred: {
        auto v = eval(t->kids[0], fuel, depth + 1);
        if (!v.ok()) return v;
        return EvalResult::of(v.value == 0 ? Nat(0) : Nat(v.value - 1));
      }
      case TermKind::IfZero: {
        auto c = eval(t->kids[0], fuel, depth + 1);
        if (!c.ok()) return c;
        t = c.value == 0 ? t->kids[1] : t->kids[2];
        continue;
      }
      case TermKind::App: {
        auto fun = eval(t->kids[0], fuel, depth + 1);
        if (!fun.ok()) return fun;
        auto arg = eval(t->kids[1], fuel, depth + 1);
        if (!arg.ok()) return arg;
        Nat f = std::move(fun.value);
        for (;;) {
          auto entry = lookup(f);
          if (!entry) return EvalResult::fail(EvalStatus::NotAFunction, f.str() + " is not an interned function");
          const TermPtr& body = *entry;
          if (body->kind == TermKind::Lam) {
            if (!fuel.spend()) return EvalResult::fail(EvalStatus::OutOfFuel, "fuel exhausted");
            t = substitute(body->kids[0], body->name, term::num(arg.value));
            break;
          }
          if (body->kind == TermKind::Fix) {
            if (!fuel.spend()) return EvalResult::fail(EvalStatus::OutOfFuel, "fuel exhausted");
            auto unfolded = eval(term::app(body->kids[0], term::num(f)), fuel, depth + 1);
            if (!unfolded.ok()) return unfolded;
            f = std::move(unfolded.value);
            continue;
          }
          return EvalResult::fail(EvalStatus::NotAFunction, f.str() + " names a datum, not a function");
        }
        continue;
      }
    }
  }
}

}  // namespace czr
