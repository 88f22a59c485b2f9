#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "ttg/bitset.hpp"
#include "ttg/errors.hpp"
#include "ttg/lattice.hpp"

namespace ttg {

// An ind-object is a nonempty, down-closed, join-closed subset of the lattice.
// Over a finite lattice every ind-object is principal, so the completion adds
// nothing; we keep the carrier form because primes are compared as carriers.
struct IndObject {
  Bitset carrier;  // over element ids
};

inline bool is_ind_object(const Lattice& l, const Bitset& s) {
  if (s.empty()) return false;
  bool ok = true;
  s.for_each([&](int x) {
    if (!l.below(x).is_subset_of(s)) ok = false;
  });
  if (!ok) return false;
  auto xs = s.to_vector();
  for (size_t i = 0; i < xs.size() && ok; ++i)
    for (size_t j = i; j < xs.size() && ok; ++j)
      if (!s.test(l.join(xs[i], xs[j]))) ok = false;
  return ok;
}

// Principal down-sets, indexed by their generator.
inline std::vector<IndObject> ind_completion(const Lattice& l) {
  std::vector<IndObject> out;
  out.reserve(l.size());
  for (int e = 0; e < l.size(); ++e) out.push_back(IndObject{l.below(e)});
  return out;
}

// Definitional route: e is prime when some element lies under every strict
// over-element of e without lying under e itself.  The empty intersection
// convention makes the top element never prime.
inline bool is_s_prime(const Lattice& l, int e) {
  Bitset over = l.strictly_above(e);
  if (over.empty()) return false;
  Bitset inter = Bitset::full(l.size());
  over.for_each([&](int c) { inter &= l.below(c); });
  return !inter.is_subset_of(l.below(e));
}

// Pairwise route.  The raw pairwise condition is vacuous at the top element;
// we exclude it so the two routes agree everywhere.
inline bool is_quasi_s_prime(const Lattice& l, int e) {
  if (e == l.top()) return false;
  auto over = l.strictly_above(e).to_vector();
  for (size_t i = 0; i < over.size(); ++i)
    for (size_t j = i; j < over.size(); ++j)
      if ((l.below(over[i]) & l.below(over[j])).is_subset_of(l.below(e))) return false;
  return true;
}

// Closes `seeds` (plus the empty and full sets) under pairwise union and
// intersection.  Result is canonically sorted.  Fixpoint by worklist: every
// appended set eventually pairs with every other.
inline std::vector<Bitset> closed_family_from_generators(int n_points, const std::vector<Bitset>& seeds,
                                                         size_t guard = size_t{1} << 18) {
  std::vector<Bitset> fam;
  std::unordered_set<Bitset, BitsetHash> seen;
  auto push = [&](const Bitset& b) {
    if (seen.insert(b).second) {
      fam.push_back(b);
      if (fam.size() > guard)
        throw Error(ErrorCode::Guard, "closed-set family exceeded " + std::to_string(guard) + " sets");
    }
  };
  push(Bitset(n_points));
  push(Bitset::full(n_points));
  for (const Bitset& s : seeds) push(s);
  for (size_t i = 1; i < fam.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      Bitset u = fam[i] | fam[j];
      Bitset v = fam[i] & fam[j];
      push(u);
      push(v);
    }
  std::sort(fam.begin(), fam.end(), Bitset::canonical_less);
  return fam;
}

struct SpectrumOptions {
  size_t closed_family_guard = size_t{1} << 18;
};

// The spectrum of a submodule lattice: its prime elements topologized by the
// closed sets that supports generate.  Primes are stored as ascending element
// ids; supp rows and closed sets are bitsets over prime *indices*.
struct SpectrumSpace {
  std::vector<int> primes;          // element ids, ascending
  std::vector<int> prime_index_of;  // element id -> index into primes, or -1
  std::vector<Bitset> supp;         // per element: primes it is not contained in
  std::vector<Bitset> closed_sets;  // canonical order

  int n_primes() const { return static_cast<int>(primes.size()); }

  // Q specializes to P (Q in the closure of P) iff Q <= P in the lattice.
  bool specializes(const Lattice& l, int qi, int pi) const { return l.leq(primes[qi], primes[pi]); }

  Bitset point_closure(const Lattice& l, int pi) const {
    Bitset c(n_primes());
    for (int qi = 0; qi < n_primes(); ++qi)
      if (specializes(l, qi, pi)) c.set(qi);
    return c;
  }
};

// On a finite lattice with meets, an element is prime exactly when it is not
// the top and has exactly one cover; this agrees with is_s_prime and avoids
// the per-element intersection scan.
inline SpectrumSpace spectrum(const Lattice& l, const SpectrumOptions& opt = {}) {
  if (!l.has_meets())
    throw Error(ErrorCode::NotALattice, "spectrum requires a lattice with meets");
  SpectrumSpace sp;
  sp.prime_index_of.assign(l.size(), -1);
  for (int e = 0; e < l.size(); ++e) {
    if (e == l.top()) continue;
    if (l.covers(e).size() == 1) {
      sp.prime_index_of[e] = static_cast<int>(sp.primes.size());
      sp.primes.push_back(e);
    }
  }
  int np = sp.n_primes();
  sp.supp.reserve(l.size());
  for (int e = 0; e < l.size(); ++e) {
    Bitset row(np);
    for (int k = 0; k < np; ++k)
      if (!l.leq(e, sp.primes[k])) row.set(k);
    sp.supp.push_back(std::move(row));
  }
  sp.closed_sets = closed_family_from_generators(np, sp.supp, opt.closed_family_guard);
  return sp;
}

inline const Bitset& supp(const SpectrumSpace& sp, int e) { return sp.supp[e]; }

// Largest element supported inside z: the join of everything whose support
// fits.  Sends supp(e) back to e and realizes every closed set that is a
// support at all.
inline int classify(const Lattice& l, const SpectrumSpace& sp, const Bitset& z) {
  Bitset fits(l.size());
  for (int e = 0; e < l.size(); ++e)
    if (sp.supp[e].is_subset_of(z)) fits.set(e);
  return l.fold_join(fits);
}

// Primes over e, as a prime-index set.  e equals the meet of these.
inline Bitset primes_over(const Lattice& l, const SpectrumSpace& sp, int e) {
  Bitset over(sp.n_primes());
  for (int k = 0; k < sp.n_primes(); ++k)
    if (l.leq(e, sp.primes[k])) over.set(k);
  return over;
}

inline int meet_of_primes_over(const Lattice& l, const SpectrumSpace& sp, int e) {
  Bitset over = primes_over(l, sp, e);
  Bitset elems(l.size());
  over.for_each([&](int k) { elems.set(sp.primes[k]); });
  return l.fold_meet(elems);
}

}  // namespace ttg
