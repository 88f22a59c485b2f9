#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ttg/bitset.hpp"
#include "ttg/errors.hpp"
#include "ttg/lattice.hpp"
#include "ttg/spectrum.hpp"

namespace ttg {

// A support datum: a finite space (points plus its closed-set family) and a
// support set for every lattice element.  The axioms live in
// check_support_datum; nothing here is validated on construction.
struct SupportDatum {
  int n_points = 0;
  std::vector<std::string> point_labels;
  std::vector<Bitset> closed_family;  // canonical order
  std::vector<Bitset> supp;           // per lattice element, over points
};

enum class SupportAxiom { SemilatticeMap, Distinguishability, Topology, T0 };

inline const char* support_axiom_name(SupportAxiom a) {
  switch (a) {
    case SupportAxiom::SemilatticeMap: return "join-to-union";
    case SupportAxiom::Distinguishability: return "distinguishability";
    case SupportAxiom::Topology: return "supports-generate-topology";
    case SupportAxiom::T0: return "T0";
  }
  return "?";
}

struct SupportCheckReport {
  bool pass = true;
  SupportAxiom axiom{};
  std::string witness;
};

namespace detail {
inline std::string label_set(const SupportDatum& y, const Bitset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int p) {
    if (!first) out += ",";
    out += y.point_labels[p];
    first = false;
  });
  return out + "}";
}
}  // namespace detail

inline SupportCheckReport check_support_datum(const Lattice& l, const SupportDatum& y) {
  if (static_cast<int>(y.supp.size()) != l.size())
    throw Error(ErrorCode::Input, "support datum has " + std::to_string(y.supp.size()) +
                                      " supports for a lattice of size " + std::to_string(l.size()));
  for (const Bitset& s : y.supp)
    if (s.size() != y.n_points) throw Error(ErrorCode::Input, "support set width mismatch");
  for (const Bitset& c : y.closed_family)
    if (c.size() != y.n_points) throw Error(ErrorCode::Input, "closed set width mismatch");

  SupportCheckReport r;
  auto fail = [&](SupportAxiom a, std::string w) {
    r.pass = false;
    r.axiom = a;
    r.witness = std::move(w);
    return r;
  };

  // supp(a v b) = supp(a) u supp(b).  Binary joins only: semilattices carry
  // no bottom in general, so there is no nullary clause, and the enumerated
  // data with an everywhere-supported point rely on that.
  for (int a = 0; a < l.size(); ++a)
    for (int b = a; b < l.size(); ++b)
      if (y.supp[l.join(a, b)] != (y.supp[a] | y.supp[b]))
        return fail(SupportAxiom::SemilatticeMap,
                    "supp(" + l.label(a) + " v " + l.label(b) + ") != supp(" + l.label(a) + ") u supp(" +
                        l.label(b) + ")");

  for (int a = 0; a < l.size(); ++a)
    for (int b = a + 1; b < l.size(); ++b)
      if (y.supp[a] == y.supp[b])
        return fail(SupportAxiom::Distinguishability,
                    "supp(" + l.label(a) + ") = supp(" + l.label(b) + ") = " + detail::label_set(y, y.supp[a]));

  // The closed family must be exactly what the supports generate.
  std::vector<Bitset> gen = closed_family_from_generators(y.n_points, y.supp);
  std::vector<Bitset> given = y.closed_family;
  std::sort(given.begin(), given.end(), Bitset::canonical_less);
  if (gen != given) {
    std::unordered_set<Bitset, BitsetHash> g(gen.begin(), gen.end());
    for (const Bitset& c : given)
      if (!g.count(c))
        return fail(SupportAxiom::Topology, "closed set " + detail::label_set(y, c) + " is not generated by supports");
    std::unordered_set<Bitset, BitsetHash> h(given.begin(), given.end());
    for (const Bitset& c : gen)
      if (!h.count(c))
        return fail(SupportAxiom::Topology, "generated set " + detail::label_set(y, c) + " is missing from the family");
  }

  for (int p = 0; p < y.n_points; ++p)
    for (int q = p + 1; q < y.n_points; ++q) {
      bool separated = false;
      for (const Bitset& c : gen)
        if (c.test(p) != c.test(q)) {
          separated = true;
          break;
        }
      if (!separated)
        return fail(SupportAxiom::T0, "points " + y.point_labels[p] + " and " + y.point_labels[q] +
                                          " lie in the same closed sets");
    }
  return r;
}

// The spectrum, packaged as a support datum over its own primes.
inline SupportDatum support_datum_of_spectrum(const Lattice& l, const SpectrumSpace& sp) {
  SupportDatum y;
  y.n_points = sp.n_primes();
  for (int k = 0; k < sp.n_primes(); ++k) y.point_labels.push_back(l.label(sp.primes[k]));
  y.closed_family = sp.closed_sets;
  y.supp = sp.supp;
  return y;
}

// The comparison map out of the spectrum: each prime P goes to the unique
// point of Y that (a) enters the support of the intersection of the strict
// over-elements of P without being in supp(P), and (b) has fingerprint
// {e | point not in supp(e)} equal to the down-set of P.  Pullback of supports
// holds by construction of (b); T0 forces uniqueness.
struct UniversalMap {
  std::vector<int> primes;          // element ids, ascending (same as SpectrumSpace)
  std::vector<int> point_of_prime;  // per prime: a point of Y
};

inline UniversalMap universal_map(const Lattice& l, const SpectrumSpace& sp, const SupportDatum& y) {
  SupportCheckReport chk = check_support_datum(l, y);
  if (!chk.pass)
    throw Error(ErrorCode::NotSupportDatum,
                std::string("not a support datum (") + support_axiom_name(chk.axiom) + "): " + chk.witness);

  UniversalMap um;
  um.primes = sp.primes;
  for (int k = 0; k < sp.n_primes(); ++k) {
    int p = sp.primes[k];
    Bitset inter = Bitset::full(l.size());
    l.strictly_above(p).for_each([&](int c) { inter &= l.below(c); });
    Bitset suppbar(y.n_points);
    inter.for_each([&](int e) { suppbar |= y.supp[e]; });
    Bitset cand = suppbar - y.supp[p];

    std::vector<int> survivors;
    cand.for_each([&](int pt) {
      Bitset fp(l.size());
      for (int e = 0; e < l.size(); ++e)
        if (!y.supp[e].test(pt)) fp.set(e);
      if (fp == l.below(p)) survivors.push_back(pt);
    });
    if (survivors.empty())
      throw Error(ErrorCode::VerificationFailed, "no point of Y is compatible with prime " + l.label(p));
    if (survivors.size() > 1)
      throw Error(ErrorCode::AmbiguousChoice, "points " + y.point_labels[survivors[0]] + " and " +
                                                  y.point_labels[survivors[1]] + " both fit prime " + l.label(p));
    um.point_of_prime.push_back(survivors[0]);
  }

  // Double-entry: pulling Y's supports back along the map must reproduce the
  // spectral supports.
  for (int e = 0; e < l.size(); ++e)
    for (int k = 0; k < sp.n_primes(); ++k)
      if (y.supp[e].test(um.point_of_prime[k]) != sp.supp[e].test(k))
        throw Error(ErrorCode::VerificationFailed,
                    "pullback of supp(" + l.label(e) + ") disagrees with the spectrum at prime " +
                        l.label(sp.primes[k]));
  return um;
}

// Every support datum on l, up to relabeling: points are drawn from the
// nonempty down-closed join-closed subsets plus an everywhere-supported extra
// point; the primes among them are mandatory, the rest are free bits.  The
// first entry (mask 0) is the spectrum itself.
inline std::vector<SupportDatum> support_data_enumerate(const Lattice& l, int max_free = 16) {
  std::vector<int> primes, free_elems;
  for (int e = 0; e < l.size(); ++e)
    (is_s_prime(l, e) ? primes : free_elems).push_back(e);

  int n_free = static_cast<int>(free_elems.size()) + 1;  // +1 for the empty-fingerprint point
  if (n_free > max_free)
    throw Error(ErrorCode::Guard,
                "support-data enumeration needs 2^" + std::to_string(n_free) + " cases; raise the guard to allow");

  std::vector<SupportDatum> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n_free); ++mask) {
    std::vector<int> gens = primes;  // element id per point; -1 = extra point
    for (int i = 0; i + 1 < n_free; ++i)
      if (mask >> i & 1) gens.push_back(free_elems[i]);
    std::sort(gens.begin(), gens.end());
    if (mask >> (n_free - 1) & 1) gens.push_back(-1);

    SupportDatum y;
    y.n_points = static_cast<int>(gens.size());
    for (int g : gens) y.point_labels.push_back(g < 0 ? "empty" : l.label(g));
    for (int e = 0; e < l.size(); ++e) {
      Bitset row(y.n_points);
      for (int pt = 0; pt < y.n_points; ++pt)
        if (gens[pt] < 0 || !l.leq(e, gens[pt])) row.set(pt);
      y.supp.push_back(std::move(row));
    }
    y.closed_family = closed_family_from_generators(y.n_points, y.supp);
    out.push_back(std::move(y));
  }
  return out;
}

}  // namespace ttg
