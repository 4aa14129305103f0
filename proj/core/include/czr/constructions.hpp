#pragma once

#include "czr/checker.hpp"
#include "czr/realizers.hpp"
#include "czr/treeset.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace czr {

/// (0 ⌢ S) ∪ (1 ⌢ T), prefix-closed.
TreeSetCode pair_set(const TreeSetCode& s, const TreeSetCode& t);

/// Kuratowski pair {{x},{x,y}} built from pair_set.
TreeSetCode opair(const TreeSetCode& x, const TreeSetCode& y);

/// { ā | ∃a a⌢ā ∈ S } ∪ {⟨⟩}. Members of distinct members of S that share
/// a label are merged into one subtree.
TreeSetCode union_set(const TreeSetCode& s);

/// Union with member labels enc(⟨a, b⟩) for ⟨a, b⟩ ∈ S, so every member
/// keeps the subtree ⟨a, b⟩^S.
TreeSetCode tagged_union_set(const TreeSetCode& s);

/// S_0 = {⟨⟩}, S_n = { m ⌢ ā | m < n, ā ∈ S_m } ∪ {⟨⟩}: von Neumann n.
/// omega_set(k) is also the truncation of S_ω to its first k members.
TreeSetCode omega_set(unsigned n);

// ---- separation ----

/// Candidate realizers of φ(a₀^S) for a member label a₀.
using Finder = std::function<std::vector<Nat>(const Nat& label, const TreeSetCode& member)>;

struct SeparationResult {
  TreeSetCode set;
  std::map<Nat, std::vector<Nat>> found;  // member label -> realizers used
  std::vector<Nat> omitted;               // labels with no realizer
};

/// Set_{S,φ}: prefix-closure of { ⟨⟨f,a₀⟩, a₁..aₙ⟩ | ⟨a₀..aₙ⟩ ∈ S, f ∈ finder(a₀) } ∪ {⟨⟩}.
SeparationResult separation_set(const TreeSetCode& s, const Finder& finder);

/// Finder that checks candidates against φ with `var` bound to the member:
/// Id, then ⟨c, Id⟩ for each label c of the member, then naturals below
/// realizer_bound, then interned handles. Returns the first realizer found.
Finder search_finder(Pca& pca, const FormulaPtr& phi, const std::string& var, const CheckBudget& budget);

// ---- fullness ----

struct EvaluationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// f↾S×T = { ā ∈ U | ∃⟨a⟩∈S  ā₀ = {f}(⟨a,Id⟩)₁₀ } ∪ {⟨⟩}.
TreeSetCode restrict(Pca& pca, const Nat& f, const TreeSetCode& s, const TreeSetCode& t, const TreeSetCode& u,
                     const CheckBudget& budget);

/// Checks f |- ∀x∈S ∃y∈T ⟨x,y⟩ ∈ U, reading the pair through opair.
CheckResult check_total_relation(Pca& pca, const Nat& f, const TreeSetCode& s, const TreeSetCode& t,
                                 const TreeSetCode& u, const CheckBudget& budget);

struct PoolEntry {
  Nat f;
  TreeSetCode u;
};

/// ^S T over a finite pool: prefix-closure of { f ⌢ ā | (f,U) ∈ pool, ā ∈ f↾S×T } ∪ {⟨⟩}.
TreeSetCode fullness_set(Pca& pca, const TreeSetCode& s, const TreeSetCode& t, const std::vector<PoolEntry>& pool,
                         const CheckBudget& budget);

/// One pool entry per map from labels of S to labels of T: U labels each
/// pair by its S label and f answers ⟨⟨h(a), Id⟩, ⟨a, Id⟩⟩.
struct FunctionEntry {
  PoolEntry entry;
  std::map<Nat, Nat> graph;
};
std::vector<FunctionEntry> function_pool(Pca& pca, const CoreRealizers& core, const TreeSetCode& s,
                                         const TreeSetCode& t);

// ---- strong collection ----

/// Chooses Y_a for member label a, or nothing when no Y is found.
using Chooser = std::function<std::optional<TreeSetCode>(const Nat& label)>;

struct ChooserFailure : std::runtime_error {
  Nat label;
  ChooserFailure(const Nat& l, const std::string& what) : std::runtime_error(what), label(l) {}
};

/// Z = { ⟨a⟩ ⌢ ā | ā ∈ Y_a } ∪ {⟨⟩}.
TreeSetCode strong_collection_witness(const TreeSetCode& s, const Chooser& chooser);

/// Searches the member's own subtrees, then enumerate_hf(hf_rank, hf_width),
/// for Y with {e}(⟨a,Id⟩) |- φ(a^S, Y). φ's free variables are x and y.
Chooser search_chooser(Pca& pca, const Nat& e, const FormulaPtr& phi, const TreeSetCode& s, const CheckBudget& budget);

}  // namespace czr
