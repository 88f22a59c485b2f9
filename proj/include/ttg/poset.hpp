#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ttg/bitset.hpp"
#include "ttg/errors.hpp"

namespace ttg {

/* Finite poset of "points". Orientation convention used everywhere: x <= y
 * means x specializes y (x lies in the closure of {y}), so the closed sets of
 * the associated T_0 space are exactly the down-sets. Minimal points are the
 * closed points, maximal points the generic ones. */
class Poset {
public:
  Poset() = default;

  // `pairs` is any relation; the constructor takes its reflexive-transitive
  // closure and rejects cycles (antisymmetry violation).
  Poset(int n, const std::vector<std::pair<int, int>>& pairs, std::vector<std::string> names = {})
      : n_(n), names_(std::move(names)) {
    if (n_ < 0) throw Error(ErrorCode::Input, "poset size must be nonnegative");
    if (names_.empty()) {
      names_.reserve(n_);
      for (int i = 0; i < n_; ++i) names_.push_back("p" + std::to_string(i));
    }
    if (static_cast<int>(names_.size()) != n_)
      throw Error(ErrorCode::Input, "poset name list does not match point count");
    below_.assign(n_, Bitset(n_));
    for (int i = 0; i < n_; ++i) below_[i].set(i);
    for (auto [a, b] : pairs) {
      if (a < 0 || a >= n_ || b < 0 || b >= n_) throw Error(ErrorCode::UnknownElement, "order pair out of range");
      below_[b].set(a);
    }
    // transitive closure: below(y) absorbs below(x) whenever x <= y
    bool changed = true;
    while (changed) {
      changed = false;
      for (int y = 0; y < n_; ++y)
        for (int x = below_[y].next_bit(0); x >= 0; x = below_[y].next_bit(x + 1)) {
          Bitset merged = below_[y] | below_[x];
          if (merged != below_[y]) {
            below_[y] = merged;
            changed = true;
          }
        }
    }
    for (int x = 0; x < n_; ++x)
      for (int y = x + 1; y < n_; ++y)
        if (below_[y].test(x) && below_[x].test(y))
          throw Error(ErrorCode::Input, "order relation has a cycle through " + names_[x] + " and " + names_[y]);
    build_above();
  }

  static Poset chain(int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < k; ++i) pairs.emplace_back(i, i + 1);
    return Poset(k, pairs);
  }
  static Poset antichain(int k) { return Poset(k, {}); }

  int n() const { return n_; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> point_of_name(const std::string& s) const {
    for (int i = 0; i < n_; ++i)
      if (names_[i] == s) return i;
    return std::nullopt;
  }
  bool leq(int x, int y) const { return below_[y].test(x); }
  const Bitset& below(int y) const { return below_[y]; }  // down-closure of {y}, incl. y
  const Bitset& above(int x) const { return above_[x]; }  // generalizations of x, incl. x

  Bitset down_closure(const Bitset& w) const {
    Bitset r(n_);
    w.for_each([&](int i) { r |= below_[i]; });
    return r;
  }
  bool is_down_closed(const Bitset& w) const { return down_closure(w) == w; }

  std::vector<int> minimal_points() const {
    std::vector<int> r;
    for (int i = 0; i < n_; ++i)
      if (below_[i].count() == 1) r.push_back(i);
    return r;
  }
  std::vector<int> maximal_points() const {
    std::vector<int> r;
    for (int i = 0; i < n_; ++i)
      if (above_[i].count() == 1) r.push_back(i);
    return r;
  }

  // length (edge count) of the longest chain; -1 for the empty poset
  int krull_dimension() const {
    if (n_ == 0) return -1;
    std::vector<int> order(n_), depth(n_, 0);
    for (int i = 0; i < n_; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return below_[a].count() < below_[b].count(); });
    int best = 0;
    for (int i : order) {
      for (int j = below_[i].next_bit(0); j >= 0; j = below_[i].next_bit(j + 1))
        if (j != i) depth[i] = std::max(depth[i], depth[j] + 1);
      best = std::max(best, depth[i]);
    }
    return best;
  }

  // unique closed point generalized by every point; false for the empty poset
  bool is_local() const {
    auto mins = minimal_points();
    if (mins.size() != 1) return false;
    int s = mins[0];
    for (int i = 0; i < n_; ++i)
      if (!leq(s, i)) return false;
    return true;
  }

  // induced subposet on `keep`; returns the point map new id -> old id
  Poset induced(const Bitset& keep, std::vector<int>* old_of_new = nullptr) const {
    std::vector<int> pts = keep.to_vector();
    std::unordered_map<int, int> new_of;
    std::vector<std::string> nm;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      new_of[pts[i]] = static_cast<int>(i);
      nm.push_back(names_[pts[i]]);
    }
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (i != j && leq(pts[i], pts[j])) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    if (old_of_new) *old_of_new = pts;
    return Poset(static_cast<int>(pts.size()), pairs, nm);
  }

  // same order, new point names
  Poset renamed(std::vector<std::string> names) const {
    if (static_cast<int>(names.size()) != n_) throw Error(ErrorCode::Input, "rename needs one name per point");
    Poset p = *this;
    p.names_ = std::move(names);
    return p;
  }

  // product order: (x,y) <= (x',y') iff x<=x' and y<=y'
  static Poset product(const Poset& a, const Poset& b) {
    int n = a.n() * b.n();
    std::vector<std::string> nm;
    nm.reserve(n);
    for (int x = 0; x < a.n(); ++x)
      for (int y = 0; y < b.n(); ++y) nm.push_back("(" + a.name(x) + "," + b.name(y) + ")");
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < a.n(); ++x)
      for (int y = 0; y < b.n(); ++y)
        for (int u = 0; u < a.n(); ++u)
          for (int v = 0; v < b.n(); ++v)
            if (a.leq(x, u) && b.leq(y, v)) pairs.emplace_back(x * b.n() + y, u * b.n() + v);
    return Poset(n, pairs, nm);
  }

  /* Disjoint union of components plus optional extra relations between global
   * ids (the assembled relation is closed and re-validated). `offsets` gets the
   * starting global id of each component. */
  static Poset disjoint_union(const std::vector<Poset>& parts,
                              const std::vector<std::pair<int, int>>& cross = {},
                              std::vector<int>* offsets = nullptr) {
    int n = 0;
    std::vector<int> off;
    std::vector<std::string> nm;
    for (const auto& p : parts) {
      off.push_back(n);
      for (int i = 0; i < p.n(); ++i) nm.push_back(p.name(i));
      n += p.n();
    }
    std::vector<std::pair<int, int>> pairs = cross;
    for (std::size_t k = 0; k < parts.size(); ++k)
      for (int i = 0; i < parts[k].n(); ++i)
        for (int j = 0; j < parts[k].n(); ++j)
          if (i != j && parts[k].leq(i, j)) pairs.emplace_back(off[k] + i, off[k] + j);
    if (offsets) *offsets = off;
    return Poset(n, pairs, nm);
  }

  bool operator==(const Poset& o) const { return n_ == o.n_ && below_ == o.below_; }

private:
  void build_above() {
    above_.assign(n_, Bitset(n_));
    for (int y = 0; y < n_; ++y)
      for (int x = below_[y].next_bit(0); x >= 0; x = below_[y].next_bit(x + 1)) above_[x].set(y);
  }

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<Bitset> below_;
  std::vector<Bitset> above_;
};

inline constexpr int kDefaultMaxPoints = 24;

/* All down-sets of X, canonically ordered (cardinality, then word order).
 * Enumeration is worklist-based: a down-set grows by any minimal point of its
 * complement. Refuses posets larger than `max_points` since the result can
 * have 2^n members. */
inline std::vector<Bitset> all_down_sets(const Poset& x, int max_points = kDefaultMaxPoints) {
  if (x.n() > max_points)
    throw Error(ErrorCode::Guard, "down-set enumeration refused: " + std::to_string(x.n()) +
                                      " points exceeds the guard of " + std::to_string(max_points));
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> work{Bitset(x.n())};
  seen.insert(work[0]);
  for (std::size_t head = 0; head < work.size(); ++head) {
    Bitset d = work[head];
    for (int p = 0; p < x.n(); ++p) {
      if (d.test(p)) continue;
      if (!(x.below(p) - Bitset::single(x.n(), p)).is_subset_of(d)) continue;
      Bitset nd = d | Bitset::single(x.n(), p);
      if (seen.insert(nd).second) work.push_back(nd);
    }
  }
  std::sort(work.begin(), work.end(), Bitset::canonical_less);
  return work;
}

// Label for a set of points, e.g. "{s,eta}"; points listed in id order.
inline std::string point_set_label(const Poset& x, const Bitset& w) {
  std::string s = "{";
  bool first = true;
  w.for_each([&](int i) {
    if (!first) s += ",";
    s += x.name(i);
    first = false;
  });
  return s + "}";
}

}  // namespace ttg
