#include "czr/term.hpp"

#include <algorithm>
#include <sstream>

namespace czr {

namespace term {

namespace {
TermPtr make(TermKind k, std::vector<TermPtr> kids, std::string name = {}, Nat n = 0) {
  return std::make_shared<const Term>(Term{k, std::move(name), std::move(n), std::move(kids)});
}
}  // namespace

TermPtr var(std::string name) { return make(TermKind::Var, {}, std::move(name)); }
TermPtr num(Nat n) { return make(TermKind::Num, {}, {}, std::move(n)); }
TermPtr app(TermPtr fun, TermPtr arg) { return make(TermKind::App, {std::move(fun), std::move(arg)}); }
TermPtr app(TermPtr fun, TermPtr a, TermPtr b) { return app(app(std::move(fun), std::move(a)), std::move(b)); }
TermPtr lam(std::string binder, TermPtr body) {
  return make(TermKind::Lam, {std::move(body)}, std::move(binder));
}
TermPtr tuple(std::vector<TermPtr> elems) { return make(TermKind::MkTuple, std::move(elems)); }
TermPtr proj(TermPtr src, TermPtr index) { return make(TermKind::Proj, {std::move(src), std::move(index)}); }
TermPtr proj(TermPtr src, unsigned index) { return proj(std::move(src), num(index)); }
TermPtr arity(TermPtr src) { return make(TermKind::Arity, {std::move(src)}); }
TermPtr fix(TermPtr gen) { return make(TermKind::Fix, {std::move(gen)}); }
TermPtr ifz(TermPtr s, TermPtr t, TermPtr e) {
  return make(TermKind::IfZero, {std::move(s), std::move(t), std::move(e)});
}
TermPtr succ(TermPtr src) { return make(TermKind::Succ, {std::move(src)}); }
TermPtr pred(TermPtr src) { return make(TermKind::Pred, {std::move(src)}); }

}  // namespace term

namespace {

void collect_free(const TermPtr& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Var:
      if (std::find(bound.begin(), bound.end(), t->name) == bound.end()) out.insert(t->name);
      return;
    case TermKind::Lam:
      bound.push_back(t->name);
      collect_free(t->kids[0], bound, out);
      bound.pop_back();
      return;
    default:
      for (const auto& k : t->kids) collect_free(k, bound, out);
  }
}

bool mentions(const TermPtr& t, const std::string& name) {
  switch (t->kind) {
    case TermKind::Var:
      return t->name == name;
    case TermKind::Num:
      return false;
    case TermKind::Lam:
      return t->name != name && mentions(t->kids[0], name);
    default:
      return std::any_of(t->kids.begin(), t->kids.end(), [&](const TermPtr& k) { return mentions(k, name); });
  }
}

TermPtr rebuild(const TermPtr& t, std::vector<TermPtr> kids) {
  return std::make_shared<const Term>(Term{t->kind, t->name, t->num, std::move(kids)});
}

void write_key(const TermPtr& t, std::vector<std::string>& bound, std::ostream& os) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = std::find(bound.rbegin(), bound.rend(), t->name);
      if (it == bound.rend())
        os << "v:" << t->name;
      else
        os << '#' << (it - bound.rbegin());
      return;
    }
    case TermKind::Num:
      os << 'n' << t->num;
      return;
    case TermKind::Lam:
      os << "(L ";
      bound.push_back(t->name);
      write_key(t->kids[0], bound, os);
      bound.pop_back();
      os << ')';
      return;
    default:
      break;
  }
  static const char* tags[] = {"V", "N", "A", "L", "T", "P", "R", "F", "I", "S", "D"};
  os << '(' << tags[static_cast<int>(t->kind)];
  for (const auto& k : t->kids) {
    os << ' ';
    write_key(k, bound, os);
  }
  os << ')';
}

bool is_atomic(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Num:
    case TermKind::MkTuple:
      return true;
    default:
      return false;
  }
}

void print(const TermPtr& t, std::ostream& os);

void print_operand(const TermPtr& t, std::ostream& os) {
  if (is_atomic(t)) {
    print(t, os);
  } else {
    os << '(';
    print(t, os);
    os << ')';
  }
}

void print(const TermPtr& t, std::ostream& os) {
  switch (t->kind) {
    case TermKind::Var:
      os << t->name;
      break;
    case TermKind::Num:
      os << t->num;
      break;
    case TermKind::App:
      if (t->kids[0]->kind == TermKind::App)
        print(t->kids[0], os);
      else
        print_operand(t->kids[0], os);
      os << ' ';
      print_operand(t->kids[1], os);
      break;
    case TermKind::Lam:
      os << "lam " << t->name << ". ";
      print(t->kids[0], os);
      break;
    case TermKind::MkTuple:
      os << '<';
      for (std::size_t i = 0; i < t->kids.size(); ++i) {
        if (i) os << ", ";
        print(t->kids[i], os);
      }
      os << '>';
      break;
    case TermKind::Proj:
      print_operand(t->kids[0], os);
      if (t->kids[1]->kind == TermKind::Num) {
        os << '.' << t->kids[1]->num;
      } else {
        os << ".(";
        print(t->kids[1], os);
        os << ')';
      }
      break;
    case TermKind::Arity:
      os << '#';
      print_operand(t->kids[0], os);
      break;
    case TermKind::Fix:
      os << "fix ";
      print_operand(t->kids[0], os);
      break;
    case TermKind::IfZero:
      os << "ifz ";
      print(t->kids[0], os);
      os << " then ";
      print(t->kids[1], os);
      os << " else ";
      print(t->kids[2], os);
      break;
    case TermKind::Succ:
      os << "succ ";
      print_operand(t->kids[0], os);
      break;
    case TermKind::Pred:
      os << "pred ";
      print_operand(t->kids[0], os);
      break;
  }
}

}  // namespace

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(t, bound, out);
  return out;
}

TermPtr substitute(const TermPtr& t, const std::string& name, const TermPtr& value) {
  if (!mentions(t, name)) return t;
  if (t->kind == TermKind::Var) return value;
  std::vector<TermPtr> kids;
  kids.reserve(t->kids.size());
  for (const auto& k : t->kids) kids.push_back(substitute(k, name, value));
  return rebuild(t, std::move(kids));
}

TermPtr bind_names(const TermPtr& t, const std::map<std::string, Nat>& names) {
  TermPtr out = t;
  for (const auto& free : free_vars(t)) {
    auto it = names.find(free);
    if (it != names.end()) out = substitute(out, free, term::num(it->second));
  }
  return out;
}

std::string canonical_key(const TermPtr& t) {
  std::ostringstream os;
  std::vector<std::string> bound;
  write_key(t, bound, os);
  return os.str();
}

std::string print_term(const TermPtr& t) {
  std::ostringstream os;
  print(t, os);
  return os.str();
}

}  // namespace czr
