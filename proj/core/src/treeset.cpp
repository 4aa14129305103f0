#include "czr/treeset.hpp"

#include <algorithm>
#include <sstream>

namespace czr {

std::string format_tuple(const Tuple& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << t[i];
  }
  os << ')';
  return os.str();
}

std::optional<Violation> validate(const TupleSet& raw) {
  if (raw.empty()) return Violation{{}, "empty collection"};
  if (!raw.count(Tuple{})) return Violation{*raw.begin(), "missing root ()"};
  for (const auto& t : raw) {
    if (t.empty()) continue;
    Tuple parent(t.begin(), t.end() - 1);
    if (!raw.count(parent)) return Violation{t, "prefix " + format_tuple(parent) + " missing"};
  }
  return std::nullopt;
}

TreeSetCode::TreeSetCode() : tuples_{Tuple{}} {}

TreeSetCode TreeSetCode::from_tuples(TupleSet tuples) {
  if (auto v = validate(tuples)) throw InvalidSetCode("invalid set code at " + format_tuple(v->tuple) + ": " + v->reason);
  return TreeSetCode(std::move(tuples));
}

TreeSetCode TreeSetCode::prefix_closure(const TupleSet& tuples) {
  TupleSet closed{Tuple{}};
  for (const auto& t : tuples) {
    for (std::size_t len = 1; len <= t.size(); ++len) closed.emplace(t.begin(), t.begin() + len);
  }
  return TreeSetCode(std::move(closed));
}

std::vector<Nat> TreeSetCode::members() const {
  std::vector<Nat> out;
  for (const auto& t : tuples_) {
    if (t.size() == 1) out.push_back(t[0]);
  }
  return out;  // std::set order already sorts length-1 tuples by label
}

TreeSetCode TreeSetCode::subtree(const Tuple& prefix) const {
  TupleSet out;
  for (auto it = tuples_.lower_bound(prefix); it != tuples_.end(); ++it) {
    const Tuple& t = *it;
    if (t.size() < prefix.size() || !std::equal(prefix.begin(), prefix.end(), t.begin())) break;
    out.emplace(t.begin() + static_cast<std::ptrdiff_t>(prefix.size()), t.end());
  }
  if (out.empty()) out.insert(Tuple{});
  return TreeSetCode(std::move(out));
}

std::size_t TreeSetCode::depth() const {
  std::size_t d = 0;
  for (const auto& t : tuples_) d = std::max(d, t.size());
  return d;
}

TupleSet prefixed(const Nat& head, const TreeSetCode& code) {
  TupleSet out;
  for (const auto& t : code.tuples()) {
    Tuple ext;
    ext.reserve(t.size() + 1);
    ext.push_back(head);
    ext.insert(ext.end(), t.begin(), t.end());
    out.insert(std::move(ext));
  }
  return out;
}

InductivityReport check_inductive_minimality(const TreeSetCode& s, const TupleSet& x) {
  InductivityReport report;
  for (const auto& t : x) {
    if (!s.contains(t)) {
      report.subset = false;
      return report;
    }
  }
  report.inductive = true;
  // Children of a node are the tuples one longer sharing it as prefix; they
  // follow the node immediately in lexicographic order within its subtree.
  for (auto it = s.tuples().begin(); it != s.tuples().end(); ++it) {
    const Tuple& node = *it;
    bool children_in_x = true;
    for (auto c = std::next(it); c != s.tuples().end(); ++c) {
      if (c->size() <= node.size() || !std::equal(node.begin(), node.end(), c->begin())) break;
      if (c->size() == node.size() + 1 && !x.count(*c)) {
        children_in_x = false;
        break;
      }
    }
    if (children_in_x && !x.count(node)) {
      report.inductive = false;
      report.witness = node;
      break;
    }
  }
  report.equals_whole = x == s.tuples();
  return report;
}

}  // namespace czr
