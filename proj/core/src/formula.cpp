#include "czr/formula.hpp"

#include <algorithm>
#include <sstream>

namespace czr {

namespace fm {

namespace {
FormulaPtr make(FormulaKind k, std::vector<FormulaPtr> kids = {}, std::string var = {}, FTerm lhs = {},
                FTerm rhs = {}) {
  return std::make_shared<const Formula>(
      Formula{k, std::move(var), std::move(lhs), std::move(rhs), std::move(kids)});
}
}  // namespace

FormulaPtr bot() { return make(FormulaKind::Bot); }
FormulaPtr eq(FTerm a, FTerm b) { return make(FormulaKind::Eq, {}, {}, std::move(a), std::move(b)); }
FormulaPtr mem(FTerm a, FTerm b) { return make(FormulaKind::Mem, {}, {}, std::move(a), std::move(b)); }
FormulaPtr conj(FormulaPtr l, FormulaPtr r) { return make(FormulaKind::And, {std::move(l), std::move(r)}); }
FormulaPtr disj(FormulaPtr l, FormulaPtr r) { return make(FormulaKind::Or, {std::move(l), std::move(r)}); }
FormulaPtr imp(FormulaPtr l, FormulaPtr r) { return make(FormulaKind::Imp, {std::move(l), std::move(r)}); }
FormulaPtr neg(FormulaPtr p) { return imp(std::move(p), bot()); }
FormulaPtr iff(FormulaPtr l, FormulaPtr r) { return conj(imp(l, r), imp(r, l)); }
FormulaPtr forall(std::string v, FormulaPtr body) {
  return make(FormulaKind::Forall, {std::move(body)}, std::move(v));
}
FormulaPtr exists(std::string v, FormulaPtr body) {
  return make(FormulaKind::Exists, {std::move(body)}, std::move(v));
}
FormulaPtr forall_in(std::string v, FTerm bound, FormulaPtr body) {
  return make(FormulaKind::ForallIn, {std::move(body)}, std::move(v), {}, std::move(bound));
}
FormulaPtr exists_in(std::string v, FTerm bound, FormulaPtr body) {
  return make(FormulaKind::ExistsIn, {std::move(body)}, std::move(v), {}, std::move(bound));
}

}  // namespace fm

namespace {

bool is_quantifier(FormulaKind k) {
  return k == FormulaKind::Forall || k == FormulaKind::Exists || k == FormulaKind::ForallIn ||
         k == FormulaKind::ExistsIn;
}

bool is_bounded(FormulaKind k) { return k == FormulaKind::ForallIn || k == FormulaKind::ExistsIn; }

FormulaPtr with(const FormulaPtr& p, std::string var, FTerm lhs, FTerm rhs, std::vector<FormulaPtr> kids) {
  return std::make_shared<const Formula>(
      Formula{p->kind, std::move(var), std::move(lhs), std::move(rhs), std::move(kids)});
}

std::string term_text(const FTerm& t) { return t.is_var() ? t.name : "$" + t.name; }

void print(const FormulaPtr& p, std::ostream& os) {
  switch (p->kind) {
    case FormulaKind::Bot:
      os << "bot";
      return;
    case FormulaKind::Eq:
      os << term_text(p->lhs) << " = " << term_text(p->rhs);
      return;
    case FormulaKind::Mem:
      os << term_text(p->lhs) << " in " << term_text(p->rhs);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp: {
      const char* op = p->kind == FormulaKind::And ? " /\\ " : p->kind == FormulaKind::Or ? " \\/ " : " -> ";
      os << '(';
      print(p->kids[0], os);
      os << op;
      print(p->kids[1], os);
      os << ')';
      return;
    }
    default:
      break;
  }
  os << '(' << (p->kind == FormulaKind::Forall || p->kind == FormulaKind::ForallIn ? "forall " : "exists ")
     << p->var;
  if (is_bounded(p->kind)) os << " in " << term_text(p->rhs);
  os << ". ";
  print(p->kids[0], os);
  os << ')';
}

void collect_free(const FormulaPtr& p, std::vector<std::string>& bound, std::set<std::string>& out) {
  auto note = [&](const FTerm& t) {
    if (t.is_var() && std::find(bound.begin(), bound.end(), t.name) == bound.end()) out.insert(t.name);
  };
  switch (p->kind) {
    case FormulaKind::Eq:
    case FormulaKind::Mem:
      note(p->lhs);
      note(p->rhs);
      return;
    default:
      break;
  }
  if (is_bounded(p->kind)) note(p->rhs);
  if (is_quantifier(p->kind)) bound.push_back(p->var);
  for (const auto& k : p->kids) collect_free(k, bound, out);
  if (is_quantifier(p->kind)) bound.pop_back();
}

void collect_params(const FormulaPtr& p, std::set<std::string>& out) {
  auto note = [&](const FTerm& t) {
    if (!t.is_var()) out.insert(t.name);
  };
  if (p->kind == FormulaKind::Eq || p->kind == FormulaKind::Mem) {
    note(p->lhs);
    note(p->rhs);
  }
  if (is_bounded(p->kind)) note(p->rhs);
  for (const auto& k : p->kids) collect_params(k, out);
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  for (unsigned i = 1;; ++i) {
    auto candidate = base + "_" + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

void collect_all_vars(const FormulaPtr& p, std::set<std::string>& out) {
  if (p->lhs.is_var() && !p->lhs.name.empty()) out.insert(p->lhs.name);
  if (p->rhs.is_var() && !p->rhs.name.empty()) out.insert(p->rhs.name);
  if (is_quantifier(p->kind)) out.insert(p->var);
  for (const auto& k : p->kids) collect_all_vars(k, out);
}

FTerm subst_term(const FTerm& t, const std::string& v, const FTerm& r) {
  return t.is_var() && t.name == v ? r : t;
}

using Scope = std::vector<std::pair<std::string, std::string>>;

bool same_term(const FTerm& a, const FTerm& b, const Scope& scope) {
  if (a.kind != b.kind) return false;
  if (!a.is_var()) return a.name == b.name;
  for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
    bool ha = it->first == a.name, hb = it->second == b.name;
    if (ha || hb) return ha && hb;
  }
  return a.name == b.name;
}

bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b, Scope& scope) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FormulaKind::Bot:
      return true;
    case FormulaKind::Eq:
    case FormulaKind::Mem:
      return same_term(a->lhs, b->lhs, scope) && same_term(a->rhs, b->rhs, scope);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      return alpha_eq(a->kids[0], b->kids[0], scope) && alpha_eq(a->kids[1], b->kids[1], scope);
    default:
      break;
  }
  if (is_bounded(a->kind) && !same_term(a->rhs, b->rhs, scope)) return false;
  scope.emplace_back(a->var, b->var);
  bool ok = alpha_eq(a->kids[0], b->kids[0], scope);
  scope.pop_back();
  return ok;
}

// Lowest n with p in Sigma_n and lowest n with p in Pi_n.
struct Levels {
  unsigned sigma = 0, pi = 0;
};

Levels levels(const FormulaPtr& p) {
  switch (p->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Eq:
    case FormulaKind::Mem:
      return {};
    case FormulaKind::And:
    case FormulaKind::Or: {
      auto l = levels(p->kids[0]), r = levels(p->kids[1]);
      return {std::max(l.sigma, r.sigma), std::max(l.pi, r.pi)};
    }
    case FormulaKind::Imp: {
      auto l = levels(p->kids[0]), r = levels(p->kids[1]);
      return {std::max(l.pi, r.sigma), std::max(l.sigma, r.pi)};
    }
    case FormulaKind::ForallIn:
    case FormulaKind::ExistsIn:
      return levels(p->kids[0]);
    case FormulaKind::Exists: {
      auto b = levels(p->kids[0]);
      unsigned s = std::min(std::max(b.sigma, 1u), b.pi + 1);
      return {s, s + 1};
    }
    case FormulaKind::Forall: {
      auto b = levels(p->kids[0]);
      unsigned q = std::min(std::max(b.pi, 1u), b.sigma + 1);
      return {q + 1, q};
    }
  }
  return {};
}

}  // namespace

std::string print_formula(const FormulaPtr& p) {
  std::ostringstream os;
  print(p, os);
  return os.str();
}

std::set<std::string> free_vars(const FormulaPtr& p) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(p, bound, out);
  return out;
}

std::set<std::string> params(const FormulaPtr& p) {
  std::set<std::string> out;
  collect_params(p, out);
  return out;
}

FormulaPtr substitute(const FormulaPtr& p, const std::string& v, const FTerm& r) {
  switch (p->kind) {
    case FormulaKind::Bot:
      return p;
    case FormulaKind::Eq:
    case FormulaKind::Mem:
      return with(p, {}, subst_term(p->lhs, v, r), subst_term(p->rhs, v, r), {});
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      return with(p, {}, {}, {}, {substitute(p->kids[0], v, r), substitute(p->kids[1], v, r)});
    default:
      break;
  }
  FTerm bound = is_bounded(p->kind) ? subst_term(p->rhs, v, r) : p->rhs;
  if (p->var == v) return with(p, p->var, {}, bound, p->kids);
  if (!free_vars(p->kids[0]).count(v)) return with(p, p->var, {}, bound, p->kids);
  std::string binder = p->var;
  FormulaPtr body = p->kids[0];
  if (r.is_var() && r.name == binder) {
    std::set<std::string> avoid;
    collect_all_vars(body, avoid);
    avoid.insert(r.name);
    avoid.insert(v);
    auto renamed = fresh_name(binder, avoid);
    body = substitute(body, binder, FTerm::var(renamed));
    binder = renamed;
  }
  return with(p, binder, {}, bound, {substitute(body, v, r)});
}

FormulaPtr desugar_bounded(const FormulaPtr& p) {
  switch (p->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Eq:
    case FormulaKind::Mem:
      return p;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      return with(p, {}, {}, {}, {desugar_bounded(p->kids[0]), desugar_bounded(p->kids[1])});
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return with(p, p->var, {}, {}, {desugar_bounded(p->kids[0])});
    case FormulaKind::ForallIn:
      return fm::forall(p->var, fm::imp(fm::mem(FTerm::var(p->var), p->rhs), desugar_bounded(p->kids[0])));
    case FormulaKind::ExistsIn:
      return fm::exists(p->var, fm::conj(fm::mem(FTerm::var(p->var), p->rhs), desugar_bounded(p->kids[0])));
  }
  return p;
}

bool alpha_equivalent(const FormulaPtr& a, const FormulaPtr& b) {
  Scope scope;
  return alpha_eq(a, b, scope);
}

std::string LevyRank::to_string() const {
  switch (cls) {
    case Class::Delta0:
      return "Delta0";
    case Class::Sigma:
      return "Sigma" + std::to_string(level);
    case Class::Pi:
      return "Pi" + std::to_string(level);
  }
  return "?";
}

LevyRank levy_rank(const FormulaPtr& p) {
  auto l = levels(p);
  if (l.sigma == 0 && l.pi == 0) return {LevyRank::Class::Delta0, 0};
  if (l.sigma <= l.pi) return {LevyRank::Class::Sigma, l.sigma};
  return {LevyRank::Class::Pi, l.pi};
}

}  // namespace czr
