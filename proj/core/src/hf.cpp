#include "czr/hf.hpp"

#include <algorithm>
#include <functional>

namespace czr {

int compare(const HfSet& a, const HfSet& b) {
  std::size_t n = std::min(a.elems_.size(), b.elems_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(a.elems_[i], b.elems_[i])) return c;
  }
  if (a.elems_.size() == b.elems_.size()) return 0;
  return a.elems_.size() < b.elems_.size() ? -1 : 1;
}

HfSet HfSet::of(std::vector<HfSet> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  HfSet out;
  out.elems_ = std::move(elems);
  return out;
}

HfSet HfSet::von_neumann(unsigned n) {
  std::vector<HfSet> below;
  for (unsigned k = 0; k < n; ++k) below.push_back(HfSet::of(below));
  return HfSet::of(std::move(below));
}

bool HfSet::contains(const HfSet& x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

unsigned HfSet::rank() const {
  unsigned r = 0;
  for (const auto& e : elems_) r = std::max(r, e.rank() + 1);
  return r;
}

std::string HfSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ',';
    out += elems_[i].to_string();
  }
  return out + "}";
}

TreeSetCode hf_encode(const HfSet& h) {
  TupleSet tuples{Tuple{}};
  const auto& elems = h.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto sub = prefixed(Nat(i), hf_encode(elems[i]));
    tuples.insert(sub.begin(), sub.end());
  }
  return TreeSetCode::from_tuples(std::move(tuples));
}

HfSet hf_decode(const TreeSetCode& s) {
  std::vector<HfSet> elems;
  for (const auto& label : s.members()) elems.push_back(hf_decode(s.child(label)));
  return HfSet::of(std::move(elems));
}

std::vector<HfSet> enumerate_hf_sets(unsigned max_rank, unsigned max_width) {
  std::vector<HfSet> level{HfSet{}};
  for (unsigned r = 1; r <= max_rank; ++r) {
    std::vector<HfSet> next;
    std::vector<HfSet> chosen;
    std::function<void(std::size_t)> pick = [&](std::size_t from) {
      next.push_back(HfSet::of(chosen));
      if (chosen.size() == max_width) return;
      for (std::size_t i = from; i < level.size(); ++i) {
        chosen.push_back(level[i]);
        pick(i + 1);
        chosen.pop_back();
      }
    };
    pick(0);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return level;
}

std::vector<TreeSetCode> enumerate_hf(unsigned max_rank, unsigned max_width) {
  std::vector<TreeSetCode> out;
  for (const auto& h : enumerate_hf_sets(max_rank, max_width)) out.push_back(hf_encode(h));
  return out;
}

}  // namespace czr
