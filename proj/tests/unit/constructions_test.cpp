#include "czr/axioms.hpp"
#include "czr/constructions.hpp"
#include "czr/hf.hpp"
#include "czr/tuple_code.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace czr;

namespace {

TreeSetCode code(TupleSet t) { return TreeSetCode::from_tuples(std::move(t)); }
const TreeSetCode kEmpty;
const TreeSetCode kS2 = code({Tuple{}, Tuple{0}, Tuple{1}, Tuple{1, 0}});

CheckBudget budget() {
  CheckBudget b;
  b.realizer_bound = 64;
  return b;
}

std::string kuratowski(const std::string& x, const std::string& y) {
  return oracle::join_set({oracle::join_set({x}), oracle::join_set({x, y})});
}

}  // namespace

TEST(PairSet, Examples) {
  EXPECT_EQ(pair_set(kEmpty, kEmpty).tuples(), (TupleSet{Tuple{}, Tuple{0}, Tuple{1}}));
  auto u = pair_set(kS2, kEmpty);
  EXPECT_EQ(u.members(), (std::vector<Nat>{0, 1}));
  EXPECT_EQ(u.child(0), kS2);
  EXPECT_EQ(u.child(1), kEmpty);
}

TEST(PairSet, OrderedPairMatchesKuratowski) {
  auto sets = enumerate_hf(2, 2);
  for (const auto& x : sets)
    for (const auto& y : sets)
      ASSERT_EQ(oracle::hf_text(opair(x, y).tuples()),
                kuratowski(oracle::hf_text(x.tuples()), oracle::hf_text(y.tuples())));
}

TEST(UnionSet, Examples) {
  EXPECT_EQ(union_set(kEmpty), kEmpty);
  EXPECT_EQ(union_set(code({Tuple{}, Tuple{0}, Tuple{0, 0}})).tuples(), (TupleSet{Tuple{}, Tuple{0}}));
  EXPECT_EQ(union_set(code({Tuple{}, Tuple{5}})), kEmpty);
}

TEST(UnionSet, TaggedUnionIsExtensionalUnion) {
  auto sets = enumerate_hf(3, 2);
  for (const auto& s : sets) {
    std::set<std::string> want;
    for (const auto& a : s.members())
      for (const auto& b : s.child(a).members()) want.insert(oracle::hf_text(s.child(a).child(b).tuples()));
    ASSERT_EQ(oracle::hf_text(tagged_union_set(s).tuples()), oracle::join_set(want));
  }
}

TEST(OmegaSet, Examples) {
  EXPECT_EQ(omega_set(0), kEmpty);
  EXPECT_EQ(omega_set(2), kS2);
  EXPECT_EQ(hf_decode(omega_set(3)), HfSet::von_neumann(3));
  for (unsigned n = 0; n <= 5; ++n) EXPECT_EQ(oracle::hf_text(omega_set(n).tuples()), oracle::von_neumann(n));
}

TEST(Separation, SelfEqualKeepsEveryMember) {
  Pca pca;
  Nat id = identity_realizer(pca);
  auto r = separation_set(kS2, search_finder(pca, parse_formula("x = x"), "x", budget()));
  EXPECT_EQ(r.set.members(), (std::vector<Nat>{encode_tuple({id, 0}), encode_tuple({id, 1})}));
  EXPECT_EQ(r.set.child(encode_tuple({id, 1})), kS2.child(1));
  EXPECT_TRUE(r.omitted.empty());
}

TEST(Separation, BotGivesEmpty) {
  Pca pca;
  for (const auto& s : enumerate_hf(2, 2)) {
    auto r = separation_set(s, search_finder(pca, parse_formula("bot"), "x", budget()));
    EXPECT_EQ(r.set, kEmpty);
    EXPECT_EQ(r.omitted, s.members());
  }
}

TEST(Separation, NonemptyKeepsOnlyInhabited) {
  Pca pca;
  Nat id = identity_realizer(pca);
  auto r = separation_set(kS2, search_finder(pca, parse_formula("exists y. y in x"), "x", budget()));
  Nat f = encode_tuple({0, id});
  ASSERT_EQ(r.found.size(), 1u);
  EXPECT_EQ(r.found.at(1), std::vector<Nat>{f});
  EXPECT_EQ(r.omitted, std::vector<Nat>{0});
  EXPECT_EQ(r.set.members(), std::vector<Nat>{encode_tuple({f, 1})});
}

TEST(Separation, MembersAreSoundAndResultWellFounded) {
  Pca pca;
  for (auto preset : {SeparationPreset::SelfEqual, SeparationPreset::Nonempty}) {
    auto phi = separation_formula(preset);
    for (const auto& s : enumerate_hf(2, 2)) {
      auto r = separation_set(s, canonical_finder(pca, preset));
      ASSERT_FALSE(validate(r.set.tuples()).has_value());
      for (const auto& label : r.set.members()) {
        Nat f = proj(label, 0), a0 = proj(label, 1);
        ASSERT_EQ(r.set.child(label), s.child(a0));
        auto res = check(pca, f, substitute(phi, "x", FTerm::param("X")), {{"X", s.child(a0)}}, budget());
        ASSERT_TRUE(res.realized());
      }
      auto whole = check_inductive_minimality(r.set, r.set.tuples());
      EXPECT_TRUE(whole.inductive && whole.equals_whole);
    }
  }
}

TEST(Fullness, SingletonRestrict) {
  Pca pca;
  auto core = build_core_realizers(pca);
  auto s = hf_encode(HfSet::of({HfSet()}));
  auto pool = function_pool(pca, core, s, s);
  ASSERT_EQ(pool.size(), 1u);
  const auto& [f, u] = pool[0].entry;
  ASSERT_TRUE(check_total_relation(pca, f, s, s, u, budget()).realized());
  auto r = restrict(pca, f, s, s, u, budget());
  EXPECT_EQ(r, u);
  EXPECT_EQ(r.members().size(), 1u);
  EXPECT_EQ(oracle::hf_text(r.child(0).tuples()), kuratowski("{}", "{}"));
  auto full = fullness_set(pca, s, s, {pool[0].entry}, budget());
  ASSERT_EQ(full.members(), std::vector<Nat>{f});
  EXPECT_EQ(full.child(f), r);
}

TEST(Fullness, RestrictIgnoresDuplicateLabels) {
  Pca pca;
  auto core = build_core_realizers(pca);
  auto s = kS2;
  for (const auto& fe : function_pool(pca, core, s, s)) {
    const auto& [f, u] = fe.entry;
    TupleSet dup = u.tuples();
    dup.merge(prefixed(9, u.child(0)));
    auto u2 = code(dup);
    ASSERT_NE(u, u2);
    ASSERT_EQ(hf_decode(u), hf_decode(u2));
    ASSERT_TRUE(check_total_relation(pca, f, s, s, u2, budget()).realized());
    EXPECT_EQ(restrict(pca, f, s, s, u, budget()), restrict(pca, f, s, s, u2, budget()));
  }
}

TEST(Fullness, FunctionSpaceMatchesBruteForce) {
  Pca pca;
  auto core = build_core_realizers(pca);
  auto s = kS2;
  auto pool = function_pool(pca, core, s, s);
  ASSERT_EQ(pool.size(), 4u);
  std::vector<PoolEntry> entries;
  for (const auto& fe : pool) {
    ASSERT_TRUE(check_total_relation(pca, fe.entry.f, s, s, fe.entry.u, budget()).realized());
    entries.push_back(fe.entry);
  }
  auto full = fullness_set(pca, s, s, entries, budget());
  std::set<std::string> got;
  for (const auto& m : full.members()) got.insert(oracle::hf_text(full.child(m).tuples()));

  std::vector<std::string> elems{"{}", "{{}}"};
  std::set<std::string> want;
  for (const auto& y0 : elems)
    for (const auto& y1 : elems) want.insert(oracle::join_set({kuratowski(elems[0], y0), kuratowski(elems[1], y1)}));
  EXPECT_EQ(got, want);
}

TEST(Fullness, EmptyDomain) {
  Pca pca;
  auto core = build_core_realizers(pca);
  auto pool = function_pool(pca, core, kEmpty, kS2);
  ASSERT_EQ(pool.size(), 1u);
  EXPECT_TRUE(check_total_relation(pca, pool[0].entry.f, kEmpty, kS2, pool[0].entry.u, budget()).realized());
  EXPECT_TRUE(function_pool(pca, core, kS2, kEmpty).empty());
}

TEST(Fullness, RejectsWrongRelation) {
  Pca pca;
  auto core = build_core_realizers(pca);
  auto pool = function_pool(pca, core, kS2, kS2);
  EXPECT_TRUE(check_total_relation(pca, pool[0].entry.f, kS2, kS2, pool[3].entry.u, budget()).refuted());
  EXPECT_THROW(restrict(pca, 5, kS2, kS2, kS2, budget()), EvaluationFailure);
}

TEST(StrongCollection, IdentityChooserCopiesShape) {
  Pca pca;
  auto z = strong_collection_witness(kS2, [&](const Nat& a) { return std::optional<TreeSetCode>(kS2.child(a)); });
  EXPECT_EQ(z, kS2);
  EXPECT_EQ(strong_collection_witness(kEmpty, [](const Nat&) { return std::optional<TreeSetCode>(); }), kEmpty);
}

TEST(StrongCollection, SearchChooserFindsCopies) {
  Pca pca;
  auto names = core_names(build_core_realizers(pca));
  Nat e = pca.intern_source("lam f. Id", names);
  auto z = strong_collection_witness(kS2, search_chooser(pca, e, parse_formula("x = y"), kS2, budget()));
  EXPECT_EQ(z, kS2);
}

TEST(StrongCollection, ChooserFailureNamesLabel) {
  Pca pca;
  auto names = core_names(build_core_realizers(pca));
  Nat e = pca.intern_source("lam f. <0, Id>", names);
  try {
    strong_collection_witness(kS2, search_chooser(pca, e, parse_formula("y in x"), kS2, budget()));
    FAIL() << "expected a chooser failure";
  } catch (const ChooserFailure& f) {
    EXPECT_EQ(f.label, 0);
  }
}
