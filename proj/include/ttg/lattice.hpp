#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ttg/bitset.hpp"
#include "ttg/errors.hpp"
#include "ttg/poset.hpp"

namespace ttg {

/* Finite join-semilattice, optionally with all meets (then has_meets()).
 * Submodule lattices are the has_meets() case.
 *
 * Two backing modes:
 *  - order-backed: joins/meets precomputed into tables (small lattices only);
 *  - family-backed: elements carry a set realization ("carrier") ordered by
 *    inclusion. Down-set lattices and Severi-Brauer families live here; joins
 *    are unions when the family is union-closed, meets are intersections when
 *    it is intersection-closed, and for a union-closed family that is not
 *    intersection-closed the meet is the union of all common lower bounds
 *    (the largest family member inside the intersection).
 */
class Lattice {
public:
  Lattice() = default;

  struct FamilyFlags {
    bool union_joins = false;
    bool intersection_meets = false;
    bool trusted = false;  // skip closure verification (internal builders)
  };

  // `pairs` is any generating relation on labeled elements.
  static Lattice from_order(const std::vector<std::string>& labels,
                            const std::vector<std::pair<int, int>>& pairs) {
    if (labels.empty()) throw Error(ErrorCode::Input, "a lattice needs at least one element");
    if (labels.size() > 1024) throw Error(ErrorCode::Guard, "order-backed lattice too large");
    Poset p(static_cast<int>(labels.size()), pairs, labels);
    Lattice l;
    l.m_ = p.n();
    l.labels_ = labels;
    l.below_.reserve(l.m_);
    l.above_.reserve(l.m_);
    for (int i = 0; i < l.m_; ++i) {
      l.below_.push_back(p.below(i));
      l.above_.push_back(p.above(i));
    }
    l.build_tables();
    l.find_extremes();
    return l;
  }

  static Lattice from_family(std::vector<Bitset> family, std::vector<std::string> labels,
                             FamilyFlags flags) {
    if (family.empty()) throw Error(ErrorCode::Input, "a lattice needs at least one element");
    Lattice l;
    l.m_ = static_cast<int>(family.size());
    l.labels_ = std::move(labels);
    l.carrier_ = std::move(family);
    l.has_carrier_ = true;
    l.union_joins_ = flags.union_joins;
    l.intersection_meets_ = flags.intersection_meets;
    for (int i = 0; i < l.m_; ++i) {
      if (!l.carrier_index_.emplace(l.carrier_[i], i).second)
        throw Error(ErrorCode::Input, "family has a repeated member");
    }
    l.below_.assign(l.m_, Bitset(l.m_));
    l.above_.assign(l.m_, Bitset(l.m_));
    for (int i = 0; i < l.m_; ++i)
      for (int j = 0; j < l.m_; ++j)
        if (l.carrier_[i].is_subset_of(l.carrier_[j])) {
          l.below_[j].set(i);
          l.above_[i].set(j);
        }
    if (!flags.trusted) {
      for (int i = 0; i < l.m_; ++i)
        for (int j = i; j < l.m_; ++j) {
          if (l.union_joins_ && !l.carrier_index_.count(l.carrier_[i] | l.carrier_[j]))
            throw Error(ErrorCode::NotALattice, "family is not union-closed: " + l.labels_[i] + " | " + l.labels_[j]);
          if (l.intersection_meets_ && !l.carrier_index_.count(l.carrier_[i] & l.carrier_[j]))
            throw Error(ErrorCode::NotALattice,
                        "family is not intersection-closed: " + l.labels_[i] + " & " + l.labels_[j]);
        }
    }
    if (!l.union_joins_ || !l.intersection_meets_) {
      if (l.m_ > 512) throw Error(ErrorCode::Guard, "family lattice too large for table construction");
      l.build_tables();
    } else {
      l.has_meets_ = true;
    }
    l.find_extremes();
    return l;
  }

  int size() const { return m_; }
  const std::string& label(int e) const { return labels_[e]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool leq(int a, int b) const { return below_[b].test(a); }
  const Bitset& below(int e) const { return below_[e]; }
  const Bitset& above(int e) const { return above_[e]; }
  Bitset strictly_above(int e) const { return above_[e] - Bitset::single(m_, e); }
  int top() const { return top_; }
  bool has_bottom() const { return bottom_ >= 0; }
  int bottom() const {
    if (bottom_ < 0) throw Error(ErrorCode::NotALattice, "lattice has no bottom element");
    return bottom_;
  }
  bool has_meets() const { return has_meets_; }
  bool has_carrier() const { return has_carrier_; }
  const Bitset& carrier(int e) const { return carrier_[e]; }
  std::optional<int> element_of_carrier(const Bitset& c) const {
    auto it = carrier_index_.find(c);
    if (it == carrier_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<int> element_of_label(const std::string& s) const {
    for (int i = 0; i < m_; ++i)
      if (labels_[i] == s) return i;
    return std::nullopt;
  }

  int join(int a, int b) const {
    if (!join_table_.empty()) return join_table_[a * m_ + b];
    // union-closed family
    auto it = carrier_index_.find(carrier_[a] | carrier_[b]);
    if (it == carrier_index_.end())
      throw Error(ErrorCode::NotALattice, "join escaped the family: " + labels_[a] + " v " + labels_[b]);
    return it->second;
  }

  int meet(int a, int b) const {
    if (!has_meets_) throw Error(ErrorCode::NotALattice, "lattice does not have all meets");
    if (!meet_table_.empty()) return meet_table_[a * m_ + b];
    // family-backed without tables only happens for intersection-closed families
    auto it = carrier_index_.find(carrier_[a] & carrier_[b]);
    if (it == carrier_index_.end())
      throw Error(ErrorCode::NotALattice, "meet escaped the family: " + labels_[a] + " ^ " + labels_[b]);
    return it->second;
  }

  // join over a set of elements; the empty join is the bottom
  int fold_join(const Bitset& set) const {
    int acc = -1;
    set.for_each([&](int e) { acc = acc < 0 ? e : join(acc, e); });
    return acc < 0 ? bottom() : acc;
  }
  // meet over a set of elements; the empty meet is the top
  int fold_meet(const Bitset& set) const {
    int acc = -1;
    set.for_each([&](int e) { acc = acc < 0 ? e : meet(acc, e); });
    return acc < 0 ? top_ : acc;
  }

  /* Elements covering e (minimal strict over-elements). Down-set lattices use
   * the add-one-minimal-point shortcut; everything else scans. */
  std::vector<int> covers(int e) const {
    std::vector<int> r;
    if (downset_family_) {
      const Bitset& d = carrier_[e];
      for (int p = 0; p < ds_poset_.n(); ++p) {
        if (d.test(p)) continue;
        if (!(ds_poset_.below(p) - Bitset::single(ds_poset_.n(), p)).is_subset_of(d)) continue;
        r.push_back(carrier_index_.at(d | Bitset::single(ds_poset_.n(), p)));
      }
      std::sort(r.begin(), r.end());
      return r;
    }
    Bitset s = strictly_above(e);
    s.for_each([&](int c) {
      if (!(below_[c] - Bitset::single(m_, c)).intersects(s)) r.push_back(c);
    });
    return r;
  }

  friend Lattice down_set_lattice(const Poset& x, int max_points);

private:
  void build_tables() {
    join_table_.assign(static_cast<std::size_t>(m_) * m_, -1);
    meet_table_.assign(static_cast<std::size_t>(m_) * m_, -1);
    has_meets_ = true;
    for (int a = 0; a < m_; ++a)
      for (int b = a; b < m_; ++b) {
        int j = bound(a, b, /*upper=*/true);
        if (j < 0)
          throw Error(ErrorCode::NotALattice, "no join for " + labels_[a] + " and " + labels_[b]);
        join_table_[a * m_ + b] = join_table_[b * m_ + a] = j;
        int mt = bound(a, b, /*upper=*/false);
        if (mt < 0) has_meets_ = false;
        meet_table_[a * m_ + b] = meet_table_[b * m_ + a] = mt;
      }
    if (!has_meets_) meet_table_.clear();
  }

  // least upper / greatest lower bound of {a,b}, or -1 when none exists
  int bound(int a, int b, bool upper) const {
    Bitset cand = upper ? (above_[a] & above_[b]) : (below_[a] & below_[b]);
    for (int u = cand.next_bit(0); u >= 0; u = cand.next_bit(u + 1)) {
      if (upper ? cand.is_subset_of(above_[u]) : cand.is_subset_of(below_[u])) return u;
    }
    return -1;
  }

  void find_extremes() {
    top_ = -1;
    for (int i = 0; i < m_; ++i)
      if (above_[i].count() == 1) {
        if (top_ >= 0) throw Error(ErrorCode::NotALattice, "not a join-semilattice: two maximal elements");
        top_ = i;
      }
    bottom_ = -1;
    int minimals = 0;
    for (int i = 0; i < m_; ++i)
      if (below_[i].count() == 1) {
        ++minimals;
        bottom_ = i;
      }
    if (minimals != 1) bottom_ = -1;
    if (has_meets_ && bottom_ < 0)
      throw Error(ErrorCode::NotALattice, "meets present but no bottom element");
  }

  int m_ = 0;
  std::vector<std::string> labels_;
  std::vector<Bitset> below_, above_;
  std::vector<int> join_table_, meet_table_;
  bool has_meets_ = false;
  int top_ = -1, bottom_ = -1;

  bool has_carrier_ = false;
  std::vector<Bitset> carrier_;
  std::unordered_map<Bitset, int, BitsetHash> carrier_index_;
  bool union_joins_ = false, intersection_meets_ = false;
  bool downset_family_ = false;
  Poset ds_poset_;
};

/* The lattice of down-sets (= specialization-closed subsets) of a finite
 * poset, ordered by inclusion. Joins are unions, meets intersections. */
inline Lattice down_set_lattice(const Poset& x, int max_points = kDefaultMaxPoints) {
  std::vector<Bitset> family = all_down_sets(x, max_points);
  std::vector<std::string> labels;
  labels.reserve(family.size());
  for (const auto& d : family) labels.push_back(point_set_label(x, d));
  Lattice l = Lattice::from_family(std::move(family), std::move(labels),
                                   {.union_joins = true, .intersection_meets = true, .trusted = true});
  l.downset_family_ = true;
  l.ds_poset_ = x;
  return l;
}

/* View of the upward interval [bottom, parent top]. Submodules of the
 * idempotent-completed quotient by `bottom` correspond to this interval. */
struct IntervalView {
  const Lattice* parent;
  int bottom;
};

struct SubLattice {
  Lattice lattice;
  std::vector<int> to_parent;  // interval element id -> parent element id
};

// materialize the interval [lo, hi] of L as its own lattice
inline SubLattice interval_lattice(const Lattice& l, int lo, int hi) {
  if (!l.leq(lo, hi)) throw Error(ErrorCode::Input, "empty interval: bounds are not comparable");
  SubLattice r;
  for (int e = 0; e < l.size(); ++e)
    if (l.leq(lo, e) && l.leq(e, hi)) r.to_parent.push_back(e);
  std::vector<std::string> labels;
  std::unordered_map<int, int> idx;
  for (std::size_t i = 0; i < r.to_parent.size(); ++i) {
    labels.push_back(l.label(r.to_parent[i]));
    idx[r.to_parent[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < r.to_parent.size(); ++i)
    for (std::size_t j = 0; j < r.to_parent.size(); ++j)
      if (i != j && l.leq(r.to_parent[i], r.to_parent[j]))
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  r.lattice = Lattice::from_order(labels, pairs);
  return r;
}

inline SubLattice to_lattice(const IntervalView& v) {
  return interval_lattice(*v.parent, v.bottom, v.parent->top());
}

}  // namespace ttg
