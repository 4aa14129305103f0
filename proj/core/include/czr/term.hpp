#pragma once

#include "czr/nat.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace czr {

enum class TermKind { Var, Num, App, Lam, MkTuple, Proj, Arity, Fix, IfZero, Succ, Pred };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Programs of the application structure. Immutable; subterms are shared.
struct Term {
  TermKind kind;
  std::string name;  // Var name or Lam binder
  Nat num;           // Num literal
  std::vector<TermPtr> kids;
};

namespace term {
TermPtr var(std::string name);
TermPtr num(Nat n);
TermPtr app(TermPtr fun, TermPtr arg);
TermPtr app(TermPtr fun, TermPtr a, TermPtr b);
TermPtr lam(std::string binder, TermPtr body);
TermPtr tuple(std::vector<TermPtr> elems);
TermPtr proj(TermPtr src, TermPtr index);
TermPtr proj(TermPtr src, unsigned index);
TermPtr arity(TermPtr src);
TermPtr fix(TermPtr gen);
TermPtr ifz(TermPtr scrut, TermPtr then_branch, TermPtr else_branch);
TermPtr succ(TermPtr src);
TermPtr pred(TermPtr src);
}  // namespace term

std::set<std::string> free_vars(const TermPtr& t);
inline bool is_closed(const TermPtr& t) { return free_vars(t).empty(); }

/// Replaces free occurrences of `name` by the closed term `value`. Because the
/// replacement is closed no renaming is ever needed.
TermPtr substitute(const TermPtr& t, const std::string& name, const TermPtr& value);

/// Replaces every free variable found in `names` by the corresponding numeral.
TermPtr bind_names(const TermPtr& t, const std::map<std::string, Nat>& names);

/// De Bruijn rendering; equal exactly for alpha-equivalent terms.
std::string canonical_key(const TermPtr& t);

/// Surface syntax, re-parseable by parse_term.
std::string print_term(const TermPtr& t);

}  // namespace czr
