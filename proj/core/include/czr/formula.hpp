#pragma once

#include "czr/syntax_error.hpp"

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace czr {

/// Object-language terms: bound or free variables, and `$name` parameters
/// that resolve to set codes in an environment.
struct FTerm {
  enum class Kind { Var, Param };
  Kind kind = Kind::Var;
  std::string name;

  static FTerm var(std::string n) { return {Kind::Var, std::move(n)}; }
  static FTerm param(std::string n) { return {Kind::Param, std::move(n)}; }
  bool is_var() const { return kind == Kind::Var; }
  friend bool operator==(const FTerm&, const FTerm&) = default;
};

enum class FormulaKind { Bot, Eq, Mem, And, Or, Imp, Forall, Exists, ForallIn, ExistsIn };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Negation is not a node: ~p is p -> bot. Bounded quantifiers are nodes of
/// their own whose meaning is pinned to
///   forall v in t. p  ==  forall v. (v in t -> p)
///   exists v in t. p  ==  exists v. (v in t /\ p)
struct Formula {
  FormulaKind kind;
  std::string var;   // quantified variable
  FTerm lhs, rhs;    // Eq/Mem operands; rhs doubles as the quantifier bound
  std::vector<FormulaPtr> kids;
};

namespace fm {
FormulaPtr bot();
FormulaPtr eq(FTerm a, FTerm b);
FormulaPtr mem(FTerm a, FTerm b);
FormulaPtr conj(FormulaPtr l, FormulaPtr r);
FormulaPtr disj(FormulaPtr l, FormulaPtr r);
FormulaPtr imp(FormulaPtr l, FormulaPtr r);
FormulaPtr neg(FormulaPtr p);
FormulaPtr iff(FormulaPtr l, FormulaPtr r);
FormulaPtr forall(std::string v, FormulaPtr body);
FormulaPtr exists(std::string v, FormulaPtr body);
FormulaPtr forall_in(std::string v, FTerm bound, FormulaPtr body);
FormulaPtr exists_in(std::string v, FTerm bound, FormulaPtr body);
}  // namespace fm

/// Grammar (tokens exact): bot = in /\ \/ -> ~ forall exists, variables
/// [a-z][a-zA-Z0-9_]*, parameters $name, parentheses. `->` is
/// right-associative and loosest, then `\/`, then `/\` (both
/// right-associative); quantifier bodies extend as far right as possible.
/// Bound variables that clash with free variables are renamed apart.
FormulaPtr parse_formula(std::string_view text);

/// Fully parenthesized; parse_formula(print_formula(p)) is alpha-equivalent to p.
std::string print_formula(const FormulaPtr& p);

std::set<std::string> free_vars(const FormulaPtr& p);
std::set<std::string> params(const FormulaPtr& p);

/// Capture-avoiding substitution of `replacement` for free occurrences of v.
FormulaPtr substitute(const FormulaPtr& p, const std::string& v, const FTerm& replacement);

/// Rewrites every bounded quantifier into its unbounded desugaring.
FormulaPtr desugar_bounded(const FormulaPtr& p);

bool alpha_equivalent(const FormulaPtr& a, const FormulaPtr& b);

struct LevyRank {
  enum class Class { Delta0, Sigma, Pi };
  Class cls = Class::Delta0;
  unsigned level = 0;

  std::string to_string() const;
  friend bool operator==(const LevyRank&, const LevyRank&) = default;
};

/// Classical Levy rank. Bounded quantifiers are free, p -> q counts as
/// ~p \/ q, and a formula in both Sigma_n and Pi_n reports as Sigma_n.
LevyRank levy_rank(const FormulaPtr& p);

}  // namespace czr
