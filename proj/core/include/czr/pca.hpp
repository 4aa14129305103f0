#pragma once

#include "czr/nat.hpp"
#include "czr/term.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace czr {

struct OpenTermError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EvalBudget {
  std::uint64_t fuel = 10'000;
};

enum class EvalStatus {
  Value,
  OutOfFuel,
  NotAFunction,  // applied something that is not an interned abstraction
  Stuck,         // free variable reached at run time
};

struct EvalResult {
  EvalStatus status = EvalStatus::Value;
  Nat value;
  std::string detail;

  bool ok() const { return status == EvalStatus::Value; }
  static EvalResult of(Nat v) { return {EvalStatus::Value, std::move(v), {}}; }
  static EvalResult fail(EvalStatus s, std::string why) { return {s, 0, std::move(why)}; }
};

const char* to_string(EvalStatus s);

/// A Kleene-style application structure over the naturals.
///
/// Codes of functions come from an append-only intern table: interning a
/// closed term yields handle kHandleBase + index. Every natural is a legal
/// value; only interned Lam and Fix entries are applicable. Evaluation is
/// call-by-value, projection is total (out-of-range components read as 0),
/// and `fix g` is interned unevaluated, unfolding to {g}(self)
/// only when the handle is applied, projected or measured.
///
/// Not thread-safe: evaluation interns the abstractions it returns.
class Pca {
 public:
  static const Nat kHandleBase;

  Nat intern(const TermPtr& closed);
  std::optional<TermPtr> lookup(const Nat& code) const;
  bool is_handle(const Nat& code) const { return lookup(code).has_value(); }
  std::size_t handle_count() const { return table_.size(); }
  Nat handle_at(std::size_t index) const { return kHandleBase + index; }

  EvalResult evaluate(const TermPtr& closed, EvalBudget budget);
  EvalResult apply(const Nat& e, const Nat& x, EvalBudget budget);
  EvalResult apply(const Nat& e, const Nat& x, const Nat& y, EvalBudget budget);

  /// Tuple access that first unfolds fixed-point handles. Projection is total
  /// here: an index at or beyond the arity yields 0.
  EvalResult project(const Nat& n, const Nat& i, EvalBudget budget);
  EvalResult arity_of(const Nat& n, EvalBudget budget);

  /// Recursion-theorem fixed point: a handle e with {e}(x) = {{g}(e)}(x)
  /// and e_i = ({g}(e))_i.
  Nat fixpoint(const Nat& g);

  /// Convenience for building realizers from surface syntax with named
  /// constants already interned.
  Nat intern_source(const std::string& source, const std::map<std::string, Nat>& names = {});

 private:
  struct Fuel {
    std::uint64_t left;
    bool spend() {
      if (left == 0) return false;
      --left;
      return true;
    }
  };

  EvalResult eval(TermPtr t, Fuel& fuel, int depth);
  EvalResult force(Nat n, Fuel& fuel, int depth);
  Nat intern_unchecked(const TermPtr& closed);

  std::vector<TermPtr> table_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace czr
