#include "czr/formula.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace czr;

namespace {

FormulaPtr P(const char* s) { return parse_formula(s); }

FTerm random_term(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  if (vars.empty() || rng() % 3 == 0) return FTerm::param(rng() % 2 ? "S" : "T");
  return FTerm::var(vars[rng() % vars.size()]);
}

FormulaPtr random_formula(std::mt19937_64& rng, int depth, std::vector<std::string> vars) {
  int pick = depth == 0 ? static_cast<int>(rng() % 3) : static_cast<int>(rng() % 10);
  switch (pick) {
    case 0:
      return fm::bot();
    case 1:
      return fm::eq(random_term(rng, vars), random_term(rng, vars));
    case 2:
      return fm::mem(random_term(rng, vars), random_term(rng, vars));
    case 3:
      return fm::conj(random_formula(rng, depth - 1, vars), random_formula(rng, depth - 1, vars));
    case 4:
      return fm::disj(random_formula(rng, depth - 1, vars), random_formula(rng, depth - 1, vars));
    case 5:
      return fm::imp(random_formula(rng, depth - 1, vars), random_formula(rng, depth - 1, vars));
    default: {
      std::string v = "v" + std::to_string(rng() % 3);
      FTerm bound = random_term(rng, vars);
      vars.push_back(v);
      auto body = random_formula(rng, depth - 1, vars);
      switch (pick) {
        case 6:
          return fm::forall(v, body);
        case 7:
          return fm::exists(v, body);
        case 8:
          return fm::forall_in(v, bound, body);
        default:
          return fm::exists_in(v, bound, body);
      }
    }
  }
}

}  // namespace

TEST(FormulaParse, BoundedForall) {
  auto p = P("forall x in $S. x = x");
  ASSERT_EQ(p->kind, FormulaKind::ForallIn);
  EXPECT_EQ(p->var, "x");
  EXPECT_EQ(p->rhs, FTerm::param("S"));
  ASSERT_EQ(p->kids[0]->kind, FormulaKind::Eq);
  EXPECT_EQ(p->kids[0]->lhs, FTerm::var("x"));
}

TEST(FormulaParse, Precedence) {
  auto p = P("exists y. y in $S /\\ y = $T -> bot");
  auto want = fm::exists("y", fm::imp(fm::conj(fm::mem(FTerm::var("y"), FTerm::param("S")),
                                               fm::eq(FTerm::var("y"), FTerm::param("T"))),
                                      fm::bot()));
  EXPECT_TRUE(alpha_equivalent(p, want)) << print_formula(p);
  auto r = P("bot -> bot -> bot");
  ASSERT_EQ(r->kind, FormulaKind::Imp);
  EXPECT_EQ(r->kids[1]->kind, FormulaKind::Imp);
  auto d = P("bot \\/ bot /\\ bot");
  ASSERT_EQ(d->kind, FormulaKind::Or);
  EXPECT_EQ(d->kids[1]->kind, FormulaKind::And);
}

TEST(FormulaParse, NegationIsImplicationToBot) {
  auto p = P("~ $S = $T");
  ASSERT_EQ(p->kind, FormulaKind::Imp);
  EXPECT_EQ(p->kids[0]->kind, FormulaKind::Eq);
  EXPECT_EQ(p->kids[1]->kind, FormulaKind::Bot);
}

TEST(FormulaParse, Errors) {
  EXPECT_THROW(P("bot bot"), SyntaxError);
  EXPECT_THROW(P("forall X. bot"), SyntaxError);
  EXPECT_THROW(P("x ="), SyntaxError);
  EXPECT_THROW(P("(bot"), SyntaxError);
  EXPECT_THROW(P("$ = x"), SyntaxError);
  try {
    P("x = y z");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset, 6u);
  }
}

TEST(FormulaParse, RenamesBoundAwayFromFree) {
  auto p = P("x = x /\\ forall x. x in $S");
  const auto& q = p->kids[1];
  ASSERT_EQ(q->kind, FormulaKind::Forall);
  EXPECT_NE(q->var, "x");
  EXPECT_EQ(free_vars(p), std::set<std::string>{"x"});
}

TEST(FormulaSubstitute, Examples) {
  EXPECT_TRUE(alpha_equivalent(substitute(P("x = x"), "x", FTerm::param("S")), P("$S = $S")));
  EXPECT_TRUE(alpha_equivalent(substitute(P("forall x. x = y"), "y", FTerm::param("S")), P("forall x. x = $S")));
  auto unchanged = P("forall x. x = y");
  EXPECT_TRUE(alpha_equivalent(substitute(unchanged, "x", FTerm::param("S")), unchanged));
}

TEST(FormulaSubstitute, AvoidsCapture) {
  auto p = substitute(P("forall x. x = y"), "y", FTerm::var("x"));
  ASSERT_EQ(p->kind, FormulaKind::Forall);
  EXPECT_NE(p->var, "x");
  EXPECT_EQ(free_vars(p), std::set<std::string>{"x"});
}

TEST(FormulaSubstitute, CommutesWithTextualSubstitution) {
  EXPECT_TRUE(alpha_equivalent(substitute(P("exists z in y. z = y"), "y", FTerm::param("T")),
                               P("exists z in $T. z = $T")));
}

TEST(FormulaParams, Collected) {
  EXPECT_EQ(params(P("$A in $B /\\ forall x in $C. x = x")), (std::set<std::string>{"A", "B", "C"}));
}

TEST(Desugar, BoundedQuantifiers) {
  auto d = desugar_bounded(P("forall x in $S. exists y in x. y = y"));
  auto want = P("forall x. x in $S -> exists y. y in x /\\ y = y");
  EXPECT_TRUE(alpha_equivalent(d, want)) << print_formula(d);
}

TEST(Levy, Examples) {
  EXPECT_EQ(levy_rank(P("forall y in $x. y = y")).to_string(), "Delta0");
  EXPECT_EQ(levy_rank(P("exists x. x = x")).to_string(), "Sigma1");
  EXPECT_EQ(levy_rank(P("forall x. exists y. y in x")).to_string(), "Pi2");
  EXPECT_EQ(levy_rank(P("forall x. x = x")).to_string(), "Pi1");
  EXPECT_EQ(levy_rank(P("(exists x. x = x) -> bot")).to_string(), "Pi1");
  EXPECT_EQ(levy_rank(P("exists x. forall y. exists z. z in y")).to_string(), "Sigma3");
}

TEST(Levy, InvariantUnderRenaming) {
  EXPECT_EQ(levy_rank(P("forall a. exists b. b in a")), levy_rank(P("forall x. exists y. y in x")));
}

TEST(FormulaPrint, RoundTripProperty) {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 2000; ++i) {
    auto p = random_formula(rng, 5, {});
    auto text = print_formula(p);
    auto q = parse_formula(text);
    ASSERT_TRUE(alpha_equivalent(p, q)) << text << " vs " << print_formula(q);
    ASSERT_EQ(levy_rank(p), levy_rank(q));
  }
}
