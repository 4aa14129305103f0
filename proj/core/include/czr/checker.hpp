#pragma once

#include "czr/formula.hpp"
#include "czr/pca.hpp"
#include "czr/treeset.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace czr {

using Environment = std::map<std::string, TreeSetCode>;

struct UnboundParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CheckBudget {
  std::uint64_t fuel = 100'000;       // PCA steps per application
  unsigned hf_rank = 2;               // witness search for set quantifiers
  unsigned hf_width = 2;
  std::uint64_t realizer_bound = 256; // naturals tried as Imp premises

  std::string to_string() const;
};

enum class Verdict { Realized, Refuted, Unknown };
const char* to_string(Verdict v);

/// Names of the bounds an Unknown verdict may report.
namespace bound {
inline constexpr const char* kFuel = "fuel";
inline constexpr const char* kHf = "hf-bound";
inline constexpr const char* kImp = "imp-bound";
}  // namespace bound

struct CheckResult {
  Verdict verdict = Verdict::Unknown;
  std::set<std::string> exhausted;
  std::vector<std::string> trace;
  std::size_t dropped_trace_lines = 0;
  std::size_t handle_horizon = 0;  // handles below this joined the Imp pool

  bool realized() const { return verdict == Verdict::Realized; }
  bool refuted() const { return verdict == Verdict::Refuted; }
  bool unknown() const { return verdict == Verdict::Unknown; }

  std::uint64_t trace_hash() const;
  /// `verdict;exhausted;trace_hash`, exhausted bounds joined by '+' or '-'.
  std::string serialize() const;
};

struct CheckOptions {
  /// Evaluate bounded quantifiers through canonical members <a, Id>; when
  /// false they are checked through their unbounded desugaring.
  bool optimized_bounded = true;
  /// Replays pass the horizon of an earlier run to see the same pool.
  std::optional<std::size_t> handle_horizon;
  std::vector<Nat> extra_candidates;
  std::vector<TreeSetCode> extra_witnesses;
  std::size_t trace_limit = 2000;
};

/// Three-valued, resource-bounded checker for e |- phi over finite codes.
///
/// Eq and Mem are decided exactly by recursion on the codes. Implications
/// search a deterministic pool of premise realizers; set quantifiers search
/// enumerate_hf(hf_rank, hf_width) plus the environment's sets and their
/// members.
class Checker {
 public:
  Checker(Pca& pca, CheckBudget budget, CheckOptions options = {});

  CheckResult check(const Nat& e, const FormulaPtr& phi, const Environment& env);

 private:
  struct Outcome;
  struct State;
  using Scope = std::map<std::string, int>;

  Outcome run(State& st, const Nat& e, const FormulaPtr& phi, const Scope& scope, int depth);
  Outcome run_eq(State& st, const Nat& e, int a, int b, int depth);
  Outcome run_mem(State& st, const Nat& e, int x, int s, int depth);
  Outcome run_imp(State& st, const Nat& e, const FormulaPtr& phi, const Scope& scope, int depth);
  Outcome run_forall_in(State& st, const Nat& e, const FormulaPtr& phi, const Scope& scope, int depth);
  Outcome run_exists_in(State& st, const Nat& e, const FormulaPtr& phi, const Scope& scope, int depth);
  Outcome run_unbounded(State& st, const Nat& e, const FormulaPtr& phi, const Scope& scope, int depth);

  bool unrealizable(State& st, const FormulaPtr& phi, const Scope& scope);
  std::vector<Nat> structural_candidates(State& st, const FormulaPtr& phi, const Scope& scope, int depth);

  Pca& pca_;
  CheckBudget budget_;
  CheckOptions options_;
  Nat id_;
};

/// Conjunction of separately checked parts: Refuted dominates, then Unknown.
/// Traces are concatenated under the given labels.
CheckResult conjoin(const std::vector<std::pair<std::string, CheckResult>>& parts);

/// A verdict reached without running the checker, e.g. an evaluation failure.
CheckResult verdict_only(Verdict v, std::string reason, std::set<std::string> exhausted = {});

CheckResult check(Pca& pca, const Nat& e, const FormulaPtr& phi, const Environment& env,
                  const CheckBudget& budget, const CheckOptions& options = {});

}  // namespace czr
