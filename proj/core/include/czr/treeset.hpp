#pragma once

#include "czr/nat.hpp"

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace czr {

using TupleSet = std::set<Tuple>;

struct InvalidSetCode : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Violation {
  Tuple tuple;
  std::string reason;
};

/// ok iff nonempty, contains the root <> and is prefix-closed. Otherwise
/// names the first offending tuple in lexicographic order.
std::optional<Violation> validate(const TupleSet& raw);

std::string format_tuple(const Tuple& t);

/// A finitely presented set: a nonempty, prefix-closed, finite collection of
/// tuples. The members are named by the labels a with <a> in the tree;
/// distinct labels may name extensionally equal members.
class TreeSetCode {
 public:
  /// The empty set, {<>}.
  TreeSetCode();

  /// Throws InvalidSetCode when `tuples` fails validate().
  static TreeSetCode from_tuples(TupleSet tuples);

  /// Adjoins the root and every missing prefix.
  static TreeSetCode prefix_closure(const TupleSet& tuples);

  const TupleSet& tuples() const { return tuples_; }
  std::size_t size() const { return tuples_.size(); }
  bool contains(const Tuple& t) const { return tuples_.count(t) != 0; }
  bool has_member(const Nat& label) const { return contains(Tuple{label}); }

  /// Sorted, duplicate-free first-level labels.
  std::vector<Nat> members() const;

  /// { b | prefix ++ b in S }, with the root adjoined when that is empty.
  TreeSetCode subtree(const Tuple& prefix) const;
  TreeSetCode child(const Nat& label) const { return subtree(Tuple{label}); }

  /// Longest tuple length; 0 for the empty set.
  std::size_t depth() const;

  friend bool operator==(const TreeSetCode&, const TreeSetCode&) = default;
  friend auto operator<=>(const TreeSetCode& a, const TreeSetCode& b) { return a.tuples_ <=> b.tuples_; }

 private:
  explicit TreeSetCode(TupleSet t) : tuples_(std::move(t)) {}
  TupleSet tuples_;
};

/// Prepends `head` to every tuple of `code` (the a ++ X notation).
TupleSet prefixed(const Nat& head, const TreeSetCode& code);

struct InductivityReport {
  bool subset = true;                // X is a subset of S
  bool inductive = false;            // closed under "all children in X implies node in X"
  bool equals_whole = false;         // X == S
  std::optional<Tuple> witness;      // node whose children all lie in X while it does not
};

/// Decides inductivity of X relative to S. For finite S an inductive X
/// always equals S, which is the checkable form of well-foundedness.
InductivityReport check_inductive_minimality(const TreeSetCode& s, const TupleSet& x);

}  // namespace czr
