#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ttg/bitset.hpp"
#include "ttg/errors.hpp"
#include "ttg/lattice.hpp"
#include "ttg/poset.hpp"
#include "ttg/spectrum.hpp"

namespace ttg {

// A submodule lattice acted on by the closed subsets of a base space:
// action(Z) is the submodule generated by the base sections supported in Z.
// Closed subsets of the base are its down-sets, indexed canonically.
struct LatticeDatum {
  Lattice sub;
  Poset base;
  std::vector<Bitset> base_closed;  // all down-sets, canonical order
  std::vector<int> action;          // per down-set index, an element of sub
  std::unordered_map<Bitset, int, BitsetHash> closed_index;

  int index_of_closed(const Bitset& z) const {
    auto it = closed_index.find(z);
    if (it == closed_index.end()) throw Error(ErrorCode::Input, "not a closed subset of the base");
    return it->second;
  }
  int action_of(const Bitset& z) const { return action[index_of_closed(z)]; }
};

inline LatticeDatum make_lattice_datum(Lattice sub, Poset base,
                                       const std::function<int(const Lattice&, const Bitset&)>& act,
                                       int max_points = kDefaultMaxPoints) {
  if (base.n() == 0 && sub.size() != 1)
    throw Error(ErrorCode::Input, "empty base requires the one-element submodule lattice");
  LatticeDatum d;
  d.base_closed = all_down_sets(base, max_points);
  for (size_t i = 0; i < d.base_closed.size(); ++i) {
    int e = act(sub, d.base_closed[i]);
    if (e < 0 || e >= sub.size())
      throw Error(ErrorCode::UnknownElement,
                  "action sends " + point_set_label(base, d.base_closed[i]) + " outside the lattice");
    d.action.push_back(e);
    d.closed_index.emplace(d.base_closed[i], static_cast<int>(i));
  }
  d.sub = std::move(sub);
  d.base = std::move(base);
  return d;
}

struct AdmissibilityReport {
  bool pass = true;
  std::string violated;  // "empty-set" | "meets" | "joins" | "composability"
  std::string witness;
  bool action_full_is_top = false;  // reported, not required
};

// Checks the lattice shadow of admissibility: the action turns intersections
// into meets, unions into joins, and satisfies the reconstruction identity
// P v action(Z n W) = (P v action(Z)) ^ (P v action(W)) for every P, which is
// the piece of composability the base-point algorithm consumes.
inline AdmissibilityReport validate_admissible(const LatticeDatum& d) {
  AdmissibilityReport r;
  const Lattice& l = d.sub;
  int nz = static_cast<int>(d.base_closed.size());
  auto zlabel = [&](int i) { return point_set_label(d.base, d.base_closed[i]); };
  auto fail = [&](std::string what, std::string wit) {
    r.pass = false;
    r.violated = std::move(what);
    r.witness = std::move(wit);
    return r;
  };

  Bitset whole = Bitset::full(d.base.n());
  r.action_full_is_top = d.base.n() == 0 || d.action_of(whole) == l.top();

  if (l.has_bottom() && d.action_of(Bitset(d.base.n())) != l.bottom())
    return fail("empty-set", "action({}) = " + l.label(d.action_of(Bitset(d.base.n()))));

  for (int i = 0; i < nz; ++i)
    for (int j = i; j < nz; ++j) {
      int zi = d.action[i], zj = d.action[j];
      int cap = d.action_of(d.base_closed[i] & d.base_closed[j]);
      if (cap != l.meet(zi, zj))
        return fail("meets", "Z=" + zlabel(i) + " W=" + zlabel(j) + ": action(Z n W) = " + l.label(cap) +
                                 " but action(Z) ^ action(W) = " + l.label(l.meet(zi, zj)));
      int cup = d.action_of(d.base_closed[i] | d.base_closed[j]);
      if (cup != l.join(zi, zj))
        return fail("joins", "Z=" + zlabel(i) + " W=" + zlabel(j) + ": action(Z u W) = " + l.label(cup) +
                                 " but action(Z) v action(W) = " + l.label(l.join(zi, zj)));
    }

  for (int p = 0; p < l.size(); ++p)
    for (int i = 0; i < nz; ++i)
      for (int j = i + 1; j < nz; ++j) {
        int cap = d.action_of(d.base_closed[i] & d.base_closed[j]);
        int lhs = l.join(p, cap);
        int rhs = l.meet(l.join(p, d.action[i]), l.join(p, d.action[j]));
        if (lhs != rhs)
          return fail("composability", "P=" + l.label(p) + " Z=" + zlabel(i) + " W=" + zlabel(j) + ": P v action(Z n W) = " +
                                           l.label(lhs) + " but (P v action(Z)) ^ (P v action(W)) = " + l.label(rhs));
      }
  return r;
}

namespace detail {
inline bool is_prime_element(const Lattice& l, int e) { return e != l.top() && l.covers(e).size() == 1; }
}

// The base-point algorithm, literally: closed Z satisfies (*) when
// action(Z) is not under P; the family of such Z is intersection-closed, its
// smallest member must be the closure of a single point, and that point is
// the image of P.  Failures of these steps indicate a non-admissible action.
inline int base_point_of_prime(const LatticeDatum& d, int p) {
  const Lattice& l = d.sub;
  if (!detail::is_prime_element(l, p))
    throw Error(ErrorCode::NotPrime, l.label(p) + " is not a prime element");

  int nz = static_cast<int>(d.base_closed.size());
  std::vector<int> star;
  for (int i = 0; i < nz; ++i)
    if (!l.leq(d.action[i], p)) star.push_back(i);
  if (star.empty())
    throw Error(ErrorCode::AdmissibilityViolated,
                "no closed subset satisfies (*) for prime " + l.label(p) + "; action(whole base) <= P");

  std::unordered_set<int> in_star(star.begin(), star.end());
  Bitset z0 = Bitset::full(d.base.n());
  for (int i : star) {
    for (int j : star) {
      int k = d.index_of_closed(d.base_closed[i] & d.base_closed[j]);
      if (!in_star.count(k))
        throw Error(ErrorCode::AdmissibilityViolated,
                    "(*)-family not intersection-closed at prime " + l.label(p) + ": Z=" +
                        point_set_label(d.base, d.base_closed[i]) + " W=" + point_set_label(d.base, d.base_closed[j]));
    }
    z0 &= d.base_closed[i];
  }
  if (!in_star.count(d.index_of_closed(z0)))
    throw Error(ErrorCode::AdmissibilityViolated,
                "smallest (*)-set fails (*) at prime " + l.label(p));

  // z0 must be the down-closure of a unique maximal point
  std::vector<int> maximal;
  z0.for_each([&](int z) {
    bool topmost = true;
    z0.for_each([&](int w) {
      if (w != z && d.base.leq(z, w)) topmost = false;
    });
    if (topmost) maximal.push_back(z);
  });
  if (maximal.size() != 1 || d.base.below(maximal[0]) != z0)
    throw Error(ErrorCode::AdmissibilityViolated,
                "smallest (*)-set " + point_set_label(d.base, z0) + " is not the closure of one point (prime " +
                    l.label(p) + ")");
  return maximal[0];
}

// Cross-check route: the unique base point lying in exactly the (*)-sets.
inline std::optional<int> base_point_of_prime_by_formula(const LatticeDatum& d, int p) {
  std::optional<int> found;
  for (int z = 0; z < d.base.n(); ++z) {
    bool ok = true;
    for (size_t i = 0; i < d.base_closed.size() && ok; ++i)
      if (!d.sub.leq(d.action[i], p) != d.base_closed[i].test(z)) ok = false;
    if (ok) {
      if (found) return std::nullopt;  // not unique
      found = z;
    }
  }
  return found;
}

// The refined topology on the spectrum: closed sets generated by the
// spectral family together with supp(action(Z)) for closed base Z.  At the
// lattice level the extra generators are supports of single elements, so the
// family never actually grows; we still assemble and compare.
struct FinTopology {
  SpectrumSpace space;
  std::vector<Bitset> extra_closed;      // supp(action(Z)), one per closed Z
  std::vector<Bitset> closed_sets;       // generated family
  bool refines_strictly = false;         // whether anything new appeared
};

inline FinTopology fin_topology(const LatticeDatum& d, SpectrumSpace sp, size_t guard = size_t{1} << 18) {
  FinTopology ft;
  ft.space = std::move(sp);
  std::vector<Bitset> seeds = ft.space.supp;
  for (int a : d.action) {
    ft.extra_closed.push_back(ft.space.supp[a]);
    seeds.push_back(ft.space.supp[a]);
  }
  ft.closed_sets = closed_family_from_generators(ft.space.n_primes(), seeds, guard);
  ft.refines_strictly = ft.closed_sets != ft.space.closed_sets;
  return ft;
}

// The quotient by I: submodules above I, with its own spectrum.  Primes of
// the interval correspond to primes of the ambient lattice above I.
struct QuotientSpectrum {
  SubLattice interval;  // [I, top]
  SpectrumSpace space;
};

inline QuotientSpectrum quotient_spectrum(const Lattice& l, int i, const SpectrumOptions& opt = {}) {
  QuotientSpectrum q;
  q.interval = interval_lattice(l, i, l.top());
  q.space = spectrum(q.interval.lattice, opt);
  return q;
}

struct SpectrumDecomposition {
  Bitset supp_part;      // prime indices with I not below
  Bitset quotient_part;  // prime indices above I
  bool partitions = false;
};

inline SpectrumDecomposition spectrum_decomposition(const Lattice& l, const SpectrumSpace& sp, int i) {
  SpectrumDecomposition dec;
  dec.supp_part = sp.supp[i];
  dec.quotient_part = primes_over(l, sp, i);
  dec.partitions = !dec.supp_part.intersects(dec.quotient_part) &&
                   (dec.supp_part | dec.quotient_part) == Bitset::full(sp.n_primes());
  return dec;
}

// One fiber of the morphism to the base: the primes over y, compared with
// the spectrum of the interval [action(closure{y} minus y), action(closure{y})]
// via P |-> (P ^ A) v B.
struct FiberResult {
  std::vector<int> fiber_primes;     // prime indices into the ambient space
  std::vector<Bitset> traces;        // induced closed sets, over fiber positions
  SubLattice interval;
  SpectrumSpace interval_space;
  std::vector<int> to_interval;      // fiber position -> interval prime index, or -1
  bool bijective = false;
  bool continuous = false;
  bool homeomorphic = false;
};

inline FiberResult fiber(const LatticeDatum& d, const SpectrumSpace& sp, int y) {
  if (y < 0 || y >= d.base.n()) throw Error(ErrorCode::UnknownElement, "no such base point");
  const Lattice& l = d.sub;
  FiberResult f;
  for (int k = 0; k < sp.n_primes(); ++k)
    if (base_point_of_prime(d, sp.primes[k]) == y) f.fiber_primes.push_back(k);

  Bitset w = d.base.below(y);
  int a = d.action_of(w);
  int b = d.action_of(w - Bitset::single(d.base.n(), y));
  f.interval = interval_lattice(l, b, a);
  f.interval_space = spectrum(f.interval.lattice);

  std::unordered_map<int, int> local_of_parent;
  for (size_t t = 0; t < f.interval.to_parent.size(); ++t) local_of_parent[f.interval.to_parent[t]] = static_cast<int>(t);

  int nf = static_cast<int>(f.fiber_primes.size());
  std::unordered_set<int> hit;
  f.bijective = nf == f.interval_space.n_primes();
  for (int k : f.fiber_primes) {
    int g = l.join(l.meet(sp.primes[k], a), b);
    auto it = local_of_parent.find(g);
    int idx = it == local_of_parent.end() ? -1 : f.interval_space.prime_index_of[it->second];
    f.to_interval.push_back(idx);
    if (idx < 0 || !hit.insert(idx).second) f.bijective = false;
  }

  // induced closed sets: traces of the ambient closed family on the fiber
  std::unordered_set<Bitset, BitsetHash> tset;
  for (const Bitset& c : sp.closed_sets) {
    Bitset t(nf);
    for (int pos = 0; pos < nf; ++pos)
      if (c.test(f.fiber_primes[pos])) t.set(pos);
    tset.insert(t);
  }
  f.traces.assign(tset.begin(), tset.end());
  std::sort(f.traces.begin(), f.traces.end(), Bitset::canonical_less);

  if (f.bijective) {
    f.continuous = true;
    for (const Bitset& c : f.interval_space.closed_sets) {
      Bitset pre(nf);
      for (int pos = 0; pos < nf; ++pos)
        if (c.test(f.to_interval[pos])) pre.set(pos);
      if (!tset.count(pre)) {
        f.continuous = false;
        break;
      }
    }
    if (f.continuous) {
      f.homeomorphic = true;
      std::unordered_set<Bitset, BitsetHash> icl(f.interval_space.closed_sets.begin(), f.interval_space.closed_sets.end());
      for (const Bitset& t : f.traces) {
        Bitset img(f.interval_space.n_primes());
        for (int pos = 0; pos < nf; ++pos)
          if (t.test(pos)) img.set(f.to_interval[pos]);
        if (!icl.count(img)) {
          f.homeomorphic = false;
          break;
        }
      }
    }
  }
  return f;
}

struct SheafReport {
  bool pass = true;
  bool preconditions_ok = true;  // I and J lie in the action image
  std::string witness;
};

// Gluing on two opens: [I^J, top] must be the fiber product of [I, top] and
// [J, top] over [IvJ, top] under K |-> (KvI, KvJ).
inline SheafReport check_sub_sheaf(const LatticeDatum& d, int i, int j) {
  const Lattice& l = d.sub;
  SheafReport r;
  r.preconditions_ok = std::find(d.action.begin(), d.action.end(), i) != d.action.end() &&
                       std::find(d.action.begin(), d.action.end(), j) != d.action.end();

  int meet = l.meet(i, j), join = l.join(i, j);
  std::unordered_map<uint64_t, int> image;  // (k1, k2) -> K
  for (int k = 0; k < l.size(); ++k) {
    if (!l.leq(meet, k)) continue;
    int k1 = l.join(k, i), k2 = l.join(k, j);
    uint64_t key = (static_cast<uint64_t>(k1) << 32) | static_cast<uint32_t>(k2);
    auto [it, fresh] = image.emplace(key, k);
    if (!fresh) {
      r.pass = false;
      r.witness = "K=" + l.label(it->second) + " and K'=" + l.label(k) + " both map to (" + l.label(k1) + ", " +
                  l.label(k2) + ")";
      return r;
    }
  }
  for (int k1 = 0; k1 < l.size(); ++k1) {
    if (!l.leq(i, k1)) continue;
    for (int k2 = 0; k2 < l.size(); ++k2) {
      if (!l.leq(j, k2)) continue;
      if (l.join(k1, j) != l.join(k2, i)) continue;
      uint64_t key = (static_cast<uint64_t>(k1) << 32) | static_cast<uint32_t>(k2);
      if (!image.count(key)) {
        r.pass = false;
        r.witness = "compatible pair (" + l.label(k1) + ", " + l.label(k2) + ") over " + l.label(join) +
                    " is not glued by any K";
        return r;
      }
    }
  }
  return r;
}

}  // namespace ttg
