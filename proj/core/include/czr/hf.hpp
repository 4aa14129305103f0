#pragma once

#include "czr/treeset.hpp"

#include <string>
#include <vector>

namespace czr {

/// A hereditarily finite set held extensionally: elements are canonical
/// (recursively deduplicated and sorted), so structural equality is
/// extensional equality.
class HfSet {
 public:
  HfSet() = default;
  static HfSet of(std::vector<HfSet> elems);
  static HfSet von_neumann(unsigned n);

  const std::vector<HfSet>& elements() const { return elems_; }
  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  bool contains(const HfSet& x) const;
  unsigned rank() const;

  /// Notation like {{},{{}}}.
  std::string to_string() const;

  friend int compare(const HfSet& a, const HfSet& b);
  friend bool operator==(const HfSet& a, const HfSet& b) { return compare(a, b) == 0; }
  friend bool operator<(const HfSet& a, const HfSet& b) { return compare(a, b) < 0; }

 private:
  std::vector<HfSet> elems_;
};

/// Labels members 0..k-1 in canonical order.
TreeSetCode hf_encode(const HfSet& h);

/// Reads first-level labels as members, recursing through subtrees.
HfSet hf_decode(const TreeSetCode& s);

/// Every HF set of rank <= max_rank in which each set along the hierarchy has
/// at most max_width members; canonical codes, no extensional duplicates,
/// in canonical order.
std::vector<HfSet> enumerate_hf_sets(unsigned max_rank, unsigned max_width);
std::vector<TreeSetCode> enumerate_hf(unsigned max_rank, unsigned max_width);

}  // namespace czr
