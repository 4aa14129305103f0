#include "czr/checker.hpp"
#include "czr/hf.hpp"
#include "czr/realizers.hpp"
#include "czr/term_syntax.hpp"
#include "czr/tuple_code.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace czr;

namespace {

TreeSetCode code(TupleSet t) { return TreeSetCode::from_tuples(std::move(t)); }
const TreeSetCode kEmpty;
const TreeSetCode kOne = code({Tuple{}, Tuple{0}});
const TreeSetCode kS2 = code({Tuple{}, Tuple{0}, Tuple{1}, Tuple{1, 0}});

CheckBudget small() {
  CheckBudget b;
  b.fuel = 20'000;
  b.realizer_bound = 32;
  return b;
}

}  // namespace

TEST(Checker, IdRealizesSelfEqualityOnEmpty) {
  Pca pca;
  Nat id = identity_realizer(pca);
  auto r = check(pca, id, parse_formula("$S = $S"), {{"S", kEmpty}}, small());
  EXPECT_TRUE(r.realized());
  EXPECT_TRUE(r.exhausted.empty());
}

TEST(Checker, IdRealizesSelfEqualityOnS2) {
  Pca pca;
  Nat id = identity_realizer(pca);
  EXPECT_TRUE(check(pca, id, parse_formula("$S = $S"), {{"S", kS2}}, small()).realized());
}

TEST(Checker, CanonicalMembership) {
  Pca pca;
  Nat id = identity_realizer(pca);
  auto r = check(pca, encode_tuple({0, id}), parse_formula("$X in $S"), {{"X", kEmpty}, {"S", kOne}}, small());
  EXPECT_TRUE(r.realized());
  auto wrong = check(pca, encode_tuple({1, id}), parse_formula("$X in $S"), {{"X", kEmpty}, {"S", kOne}}, small());
  EXPECT_TRUE(wrong.refuted());
}

TEST(Checker, NothingRealizesBot) {
  Pca pca;
  Nat id = identity_realizer(pca);
  for (Nat e : {Nat(0), Nat(1), Nat(17), id}) EXPECT_FALSE(check(pca, e, parse_formula("bot"), {}, small()).realized());
}

TEST(Checker, MissingMemberRefutesForEveryRealizer) {
  Pca pca;
  Nat id = identity_realizer(pca);
  auto phi = parse_formula("$S = $T");
  Environment env{{"S", hf_encode(HfSet::of({HfSet()}))}, {"T", kEmpty}};
  for (Nat e : {Nat(0), Nat(5), id, encode_tuple({id, id})}) EXPECT_TRUE(check(pca, e, phi, env, small()).refuted());
}

TEST(Checker, UnboundParameterThrows) {
  Pca pca;
  EXPECT_THROW(check(pca, 0, parse_formula("$S = $S"), {}, small()), UnboundParameter);
}

TEST(Checker, Connectives) {
  Pca pca;
  Nat id = identity_realizer(pca);
  Environment env{{"S", kOne}};
  auto phi = parse_formula("$S = $S /\\ $S = $S");
  EXPECT_TRUE(check(pca, encode_tuple({id, id}), phi, env, small()).realized());
  auto disj = parse_formula("bot \\/ $S = $S");
  EXPECT_TRUE(check(pca, encode_tuple({1, id}), disj, env, small()).realized());
  EXPECT_TRUE(check(pca, encode_tuple({0, id}), disj, env, small()).refuted());
  EXPECT_TRUE(check(pca, encode_tuple({2, id}), disj, env, small()).refuted());
}

TEST(Checker, ImplicationWithUnrealizablePremiseIsVacuous) {
  Pca pca;
  auto r = check(pca, 0, parse_formula("bot -> bot"), {}, small());
  EXPECT_TRUE(r.realized());
}

TEST(Checker, ImplicationReportsImpBound) {
  Pca pca;
  Nat id = identity_realizer(pca);
  Nat k = pca.intern_source("lam f. I", {{"I", id}});
  auto r = check(pca, k, parse_formula("$S = $S -> $S = $S"), {{"S", kOne}}, small());
  EXPECT_TRUE(r.unknown());
  EXPECT_EQ(r.exhausted, std::set<std::string>{bound::kImp});
  Nat bad = pca.intern_source("lam f. 0");
  EXPECT_TRUE(check(pca, bad, parse_formula("$S = $S -> $S = $S"), {{"S", kOne}}, small()).refuted());
}

TEST(Checker, UnboundedQuantifiers) {
  Pca pca;
  Nat id = identity_realizer(pca);
  auto all = check(pca, id, parse_formula("forall x. x = x"), {}, small());
  EXPECT_TRUE(all.unknown());
  EXPECT_TRUE(all.exhausted.count(bound::kHf));
  auto some = check(pca, id, parse_formula("exists x. x = x"), {}, small());
  EXPECT_TRUE(some.realized());
}

TEST(Checker, OutOfFuelIsUnknown) {
  Pca pca;
  Nat loop = pca.intern(parse_term("fix (lam f. lam x. f x)"));
  auto r = check(pca, encode_tuple({loop, loop}), parse_formula("$S = $S"), {{"S", kOne}}, small());
  EXPECT_TRUE(r.unknown());
  EXPECT_EQ(r.exhausted, std::set<std::string>{bound::kFuel});
}

TEST(Checker, BoundedQuantifiers) {
  Pca pca;
  Nat id = identity_realizer(pca);
  Nat k = pca.intern_source("lam m. I", {{"I", id}});
  auto all = check(pca, k, parse_formula("forall x in $S. x = x"), {{"S", kS2}}, small());
  EXPECT_TRUE(all.realized());
  auto some = check(pca, encode_tuple({1, id}), parse_formula("exists x in $S. x = x"), {{"S", kS2}}, small());
  EXPECT_TRUE(some.realized());
  auto none = check(pca, encode_tuple({0, id}), parse_formula("exists x in $S. x = x"), {{"S", kEmpty}}, small());
  EXPECT_TRUE(none.refuted());
}

TEST(Checker, ReplayReproducesVerdictAndTrace) {
  Pca pca;
  Nat id = identity_realizer(pca);
  Nat k = pca.intern_source("lam f. I", {{"I", id}});
  auto phi = parse_formula("($S = $S -> $S = $S) /\\ $S in $T");
  Environment env{{"S", kEmpty}, {"T", kOne}};
  Nat e = encode_tuple({k, encode_tuple({0, id})});
  auto first = check(pca, e, phi, env, small());
  CheckOptions replay;
  replay.handle_horizon = first.handle_horizon;
  auto second = check(pca, e, phi, env, small(), replay);
  EXPECT_EQ(first.serialize(), second.serialize());
  EXPECT_EQ(first.trace, second.trace);
  EXPECT_FALSE(first.trace.empty());
}

TEST(Checker, SerializationShape) {
  Pca pca;
  Nat id = identity_realizer(pca);
  auto r = check(pca, id, parse_formula("forall x. x = x"), {}, small());
  auto s = r.serialize();
  EXPECT_EQ(s.rfind("Unknown;", 0), 0u) << s;
  EXPECT_NE(s.find("hf-bound"), std::string::npos);
  EXPECT_EQ(std::count(s.begin(), s.end(), ';'), 2);
  auto ok = check(pca, id, parse_formula("$S = $S"), {{"S", kEmpty}}, small());
  EXPECT_EQ(ok.serialize().rfind("Realized;-;", 0), 0u) << ok.serialize();
}

TEST(Checker, BudgetMonotonicity) {
  Pca pca;
  auto core = build_core_realizers(pca);
  std::vector<std::pair<Nat, FormulaPtr>> cases;
  cases.push_back({core.id, parse_formula("$S = $S")});
  cases.push_back({core.id, parse_formula("$S = $T")});
  cases.push_back({encode_tuple({core.sym, core.sym}), parse_formula("$S = $T -> $T = $S")});
  cases.push_back({encode_tuple({0, core.id}), parse_formula("$S in $T")});
  cases.push_back({pca.intern_source("lam m. Id", core_names(core)), parse_formula("forall x in $T. x = x")});
  auto sets = enumerate_hf(2, 2);
  for (const auto& [e, phi] : cases)
    for (const auto& s : sets)
      for (const auto& t : sets) {
        Environment env{{"S", s}, {"T", t}};
        std::optional<Verdict> settled;
        for (std::uint64_t scale : {1, 4, 16}) {
          CheckBudget b;
          b.fuel = 200 * scale;
          b.realizer_bound = 4 * scale;
          auto r = check(pca, e, phi, env, b);
          if (r.unknown()) continue;
          if (settled) {
            ASSERT_EQ(*settled, r.verdict) << print_formula(phi);
          }
          settled = r.verdict;
        }
      }
}

TEST(Checker, BoundedAndDesugaredPathsAgree) {
  Pca pca;
  auto core = build_core_realizers(pca);
  auto names = core_names(core);
  std::vector<std::pair<Nat, FormulaPtr>> cases{
      {pca.intern_source("lam m. Id", names), parse_formula("forall x in $S. x = x")},
      {pca.intern_source("lam m. m", names), parse_formula("forall x in $S. x in $S")},
      {pca.intern_source("lam m. 0", names), parse_formula("forall x in $S. x = x")},
      {encode_tuple({0, core.id}), parse_formula("exists x in $S. x = x")},
      {encode_tuple({encode_tuple({0, core.id}), encode_tuple({0, core.id})}), parse_formula("exists x in $S. x in $S")},
  };
  CheckOptions plain;
  plain.optimized_bounded = false;
  std::size_t compared = 0;
  for (const auto& [e, phi] : cases)
    for (const auto& s : enumerate_hf(2, 2)) {
      Environment env{{"S", s}};
      auto fast = check(pca, e, phi, env, small());
      auto slow = check(pca, e, phi, env, small(), plain);
      if (fast.unknown() || slow.unknown()) continue;
      ++compared;
      ASSERT_EQ(fast.verdict, slow.verdict) << print_formula(phi) << " on " << s.size();
    }
  EXPECT_GT(compared, 0u);
}

TEST(Checker, AtomicClausesMatchOracle) {
  Pca pca;
  auto core = build_core_realizers(pca);
  auto sets = enumerate_hf(2, 2);
  std::size_t realized = 0, refuted = 0;
  for (const auto& a : sets)
    for (const auto& b : sets)
      for (bool sloppy : {false, true}) {
        auto r = oracle::matching(a.tuples(), b.tuples(), sloppy);
        Nat e = oracle::realize(pca, *r, core);
        auto got = check(pca, e, parse_formula("$A = $B"), {{"A", a}, {"B", b}}, small());
        ASSERT_FALSE(got.unknown());
        ASSERT_EQ(got.realized(), oracle::eq_holds(*r, a.tuples(), b.tuples()));
        (got.realized() ? realized : refuted)++;
      }
  EXPECT_GT(realized, 0u);
  EXPECT_GT(refuted, 0u);
}
