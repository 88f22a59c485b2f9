#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ttg/bitset.hpp"
#include "ttg/datum.hpp"
#include "ttg/errors.hpp"
#include "ttg/lattice.hpp"
#include "ttg/poset.hpp"
#include "ttg/spectrum.hpp"

namespace ttg {

// ---------------------------------------------------------------------------
// Perfect complexes over a finite spectral poset: submodules are the
// down-sets of the space, the base acts by itself, identically.
// ---------------------------------------------------------------------------

inline LatticeDatum perf_model(const Poset& x, int max_points = kDefaultMaxPoints) {
  return make_lattice_datum(down_set_lattice(x, max_points), x,
                            [](const Lattice& l, const Bitset& z) { return *l.element_of_carrier(z); }, max_points);
}

// Classification of submodules by specialization-closed subsets of a given
// space; the derived matrix factorization instance uses the relative
// singular locus as the space.  Same datum as perf_model of that space.
inline LatticeDatum classified_by_subset(const Poset& space, int max_points = kDefaultMaxPoints) {
  return perf_model(space, max_points);
}

struct RoundtripReport {
  bool pass = true;
  bool order_iso = true;
  bool homeomorphic = true;
  std::string witness;
};

// The spectrum of down_sets(X) recovers X: x corresponds to the prime
// P_x = complement of the up-set of x (its unique cover adds x back).
inline RoundtripReport roundtrip_check(const Poset& x, int max_points = kDefaultMaxPoints) {
  RoundtripReport r;
  Lattice l = down_set_lattice(x, max_points);
  SpectrumSpace sp = spectrum(l);

  if (sp.n_primes() != x.n()) {
    r.pass = r.order_iso = r.homeomorphic = false;
    r.witness = "expected " + std::to_string(x.n()) + " primes, found " + std::to_string(sp.n_primes());
    return r;
  }
  std::vector<int> prime_of_point(x.n(), -1);  // point -> prime index
  std::vector<int> point_of_prime(sp.n_primes(), -1);
  for (int p = 0; p < x.n(); ++p) {
    Bitset px = Bitset::full(x.n()) - x.above(p);
    auto e = l.element_of_carrier(px);
    int k = e ? sp.prime_index_of[*e] : -1;
    if (k < 0 || point_of_prime[k] != -1) {
      r.pass = r.order_iso = r.homeomorphic = false;
      r.witness = "witness map fails at point " + x.name(p);
      return r;
    }
    prime_of_point[p] = k;
    point_of_prime[k] = p;
  }
  for (int p = 0; p < x.n() && r.order_iso; ++p)
    for (int q = 0; q < x.n(); ++q)
      if (x.leq(p, q) != l.leq(sp.primes[prime_of_point[p]], sp.primes[prime_of_point[q]])) {
        r.order_iso = false;
        r.witness = "order mismatch at (" + x.name(p) + ", " + x.name(q) + ")";
        break;
      }
  std::vector<Bitset> transported;  // spectrum closed sets, renamed to points
  for (const Bitset& c : sp.closed_sets) {
    Bitset t(x.n());
    c.for_each([&](int k) { t.set(point_of_prime[k]); });
    transported.push_back(t);
  }
  std::sort(transported.begin(), transported.end(), Bitset::canonical_less);
  if (transported != all_down_sets(x, max_points)) {
    r.homeomorphic = false;
    if (r.witness.empty()) r.witness = "closed-set families differ";
  }
  r.pass = r.order_iso && r.homeomorphic;
  return r;
}

// ---------------------------------------------------------------------------
// Severi-Brauer, relative dimension 1.  The total space is the union of the
// y-fibers and |K| copies of the base, ordered componentwise.  A submodule
// picks, over each base point, one of three fiber shapes.
// ---------------------------------------------------------------------------

struct FiberDescriptor {
  enum class Kind { A, B, C };
  Kind kind = Kind::A;
  Bitset w;   // kind B: nonempty down-set of the y-fiber
  int n = 0;  // kind C: the excluded copy

  static FiberDescriptor a() { return {}; }
  static FiberDescriptor b(Bitset w_) { return {Kind::B, std::move(w_), 0}; }
  static FiberDescriptor c(int n_) { return {Kind::C, Bitset(0), n_}; }
};

struct SBModel {
  Poset base;
  std::vector<Poset> yfiber;  // one per base point
  int copies = 0;             // K = {0, ..., copies-1}
};

struct SBTotal {
  Poset space;
  std::vector<std::vector<int>> fiber_pt;  // [x][local] -> global id
  std::vector<std::vector<int>> copy_pt;   // [k][x] -> global id
};

// Assembles Y u (copies of X).  Cross-component specializations are not
// invented; callers may pass extra relations in global ids.
inline SBTotal sb_total_space(const SBModel& m, const std::vector<std::pair<int, int>>& cross = {}) {
  if (static_cast<int>(m.yfiber.size()) != m.base.n())
    throw Error(ErrorCode::Input, "need one y-fiber per base point");
  SBTotal t;
  std::vector<Poset> parts;
  for (int x = 0; x < m.base.n(); ++x) {
    std::vector<std::string> nm;
    for (int i = 0; i < m.yfiber[x].n(); ++i) nm.push_back(m.base.name(x) + "." + m.yfiber[x].name(i));
    parts.push_back(m.yfiber[x].renamed(nm));
  }
  for (int k = 0; k < m.copies; ++k) {
    std::vector<std::string> nm;
    for (int x = 0; x < m.base.n(); ++x) nm.push_back("K" + std::to_string(k) + "." + m.base.name(x));
    parts.push_back(m.base.renamed(nm));
  }
  std::vector<int> offsets;
  t.space = Poset::disjoint_union(parts, cross, &offsets);
  for (int x = 0; x < m.base.n(); ++x) {
    std::vector<int> ids;
    for (int i = 0; i < m.yfiber[x].n(); ++i) ids.push_back(offsets[x] + i);
    t.fiber_pt.push_back(std::move(ids));
  }
  for (int k = 0; k < m.copies; ++k) {
    std::vector<int> ids;
    for (int x = 0; x < m.base.n(); ++x) ids.push_back(offsets[m.base.n() + k] + x);
    t.copy_pt.push_back(std::move(ids));
  }
  return t;
}

inline Bitset sb_realize(const SBModel& m, const SBTotal& t, const std::vector<FiberDescriptor>& z) {
  if (static_cast<int>(z.size()) != m.base.n())
    throw Error(ErrorCode::MalformedDescriptor, "need one fiber descriptor per base point");
  Bitset out(t.space.n());
  for (int x = 0; x < m.base.n(); ++x) {
    const FiberDescriptor& d = z[x];
    switch (d.kind) {
      case FiberDescriptor::Kind::A:
        break;
      case FiberDescriptor::Kind::B: {
        if (d.w.size() != m.yfiber[x].n())
          throw Error(ErrorCode::MalformedDescriptor, "kind-B subset has the wrong width at " + m.base.name(x));
        if (d.w.empty())
          throw Error(ErrorCode::MalformedDescriptor, "kind-B descriptor with empty W at " + m.base.name(x));
        d.w.for_each([&](int i) { out.set(t.fiber_pt[x][i]); });
        for (int k = 0; k < m.copies; ++k) out.set(t.copy_pt[k][x]);
        break;
      }
      case FiberDescriptor::Kind::C: {
        if (d.n < 0 || d.n >= m.copies)
          throw Error(ErrorCode::MalformedDescriptor,
                      "kind-C copy index " + std::to_string(d.n) + " outside K at " + m.base.name(x));
        for (int i = 0; i < m.yfiber[x].n(); ++i) out.set(t.fiber_pt[x][i]);
        for (int k = 0; k < m.copies; ++k)
          if (k != d.n) out.set(t.copy_pt[k][x]);
        break;
      }
    }
  }
  return out;
}

// Fiberwise shapes are guaranteed by construction; what remains of the
// classification conditions is global specialization-closedness.
inline bool sb_is_admissible(const SBModel& m, const SBTotal& t, const std::vector<FiberDescriptor>& z) {
  return t.space.is_down_closed(sb_realize(m, t, z));
}

inline std::string sb_descriptor_label(const SBModel& m, int x, const FiberDescriptor& d) {
  switch (d.kind) {
    case FiberDescriptor::Kind::A:
      return "0";
    case FiberDescriptor::Kind::B: {
      std::string out = "{";
      bool first = true;
      d.w.for_each([&](int i) {
        if (!first) out += ",";
        out += m.yfiber[x].name(i);
        first = false;
      });
      return out + "}+K";
    }
    case FiberDescriptor::Kind::C:
      return "Y+K-" + std::to_string(d.n);
  }
  return "?";
}

inline std::string sb_element_label(const SBModel& m, const std::vector<FiberDescriptor>& z) {
  if (m.base.n() == 1) return sb_descriptor_label(m, 0, z[0]);
  std::string out;
  for (int x = 0; x < m.base.n(); ++x) {
    if (x) out += ";";
    out += m.base.name(x) + ":" + sb_descriptor_label(m, x, z[x]);
  }
  return out;
}

struct SBLattice {
  SBTotal total;
  Lattice lattice;
  std::vector<std::vector<FiberDescriptor>> descriptor;  // per element
  bool intersection_escape = false;                      // some setwise meet leaves the family
  std::string escape_witness;
};

// All admissible descriptor tuples, ordered by inclusion of realizations.
// Joins are setwise unions (the family is union-closed); meets are order
// meets, which drop below the setwise intersection exactly when the
// intersection escapes the family; that escape is surfaced, not hidden.
inline SBLattice sb_submodule_lattice(const SBModel& m, const std::vector<std::pair<int, int>>& cross = {},
                                      uint64_t guard = uint64_t{1} << 16) {
  SBLattice sb;
  sb.total = sb_total_space(m, cross);

  std::vector<std::vector<FiberDescriptor>> menu;  // per base point
  uint64_t count = 1;
  for (int x = 0; x < m.base.n(); ++x) {
    std::vector<FiberDescriptor> opts;
    opts.push_back(FiberDescriptor::a());
    for (const Bitset& w : all_down_sets(m.yfiber[x]))
      if (!w.empty()) opts.push_back(FiberDescriptor::b(w));
    for (int k = 0; k < m.copies; ++k) opts.push_back(FiberDescriptor::c(k));
    count *= opts.size();
    if (count > guard)
      throw Error(ErrorCode::Guard, "descriptor enumeration exceeds " + std::to_string(guard) + " tuples");
    menu.push_back(std::move(opts));
  }

  std::vector<Bitset> family;
  std::vector<std::string> labels;
  std::vector<int> idx(m.base.n(), 0);
  for (;;) {
    std::vector<FiberDescriptor> tup;
    for (int x = 0; x < m.base.n(); ++x) tup.push_back(menu[x][idx[x]]);
    if (sb_is_admissible(m, sb.total, tup)) {
      family.push_back(sb_realize(m, sb.total, tup));
      labels.push_back(sb_element_label(m, tup));
      sb.descriptor.push_back(std::move(tup));
    }
    int x = 0;
    while (x < m.base.n() && ++idx[x] == static_cast<int>(menu[x].size())) idx[x++] = 0;
    if (x == m.base.n()) break;
  }

  // from_family sorts by inclusion; keep descriptors aligned by re-sorting
  // the same way (carrier cardinality, then word order).
  std::vector<int> perm(family.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return Bitset::canonical_less(family[a], family[b]); });
  std::vector<Bitset> fam2;
  std::vector<std::string> lab2;
  std::vector<std::vector<FiberDescriptor>> desc2;
  for (int i : perm) {
    fam2.push_back(family[i]);
    lab2.push_back(labels[i]);
    desc2.push_back(std::move(sb.descriptor[i]));
  }
  sb.descriptor = std::move(desc2);
  sb.lattice = Lattice::from_family(fam2, lab2, Lattice::FamilyFlags{.union_joins = true, .intersection_meets = false});

  std::unordered_set<Bitset, BitsetHash> in_family(fam2.begin(), fam2.end());
  for (size_t i = 0; i < fam2.size() && !sb.intersection_escape; ++i)
    for (size_t j = i + 1; j < fam2.size(); ++j)
      if (!in_family.count(fam2[i] & fam2[j])) {
        sb.intersection_escape = true;
        sb.escape_witness = lab2[i] + " and " + lab2[j];
        break;
      }
  return sb;
}

// The base action: over Z, take everything (whole fiber and all copies).
inline LatticeDatum sb_datum(const SBModel& m, const std::vector<std::pair<int, int>>& cross = {},
                             int max_points = kDefaultMaxPoints) {
  SBLattice sb = sb_submodule_lattice(m, cross);
  auto act = [&m, &sb](const Lattice& l, const Bitset& z) -> int {
    std::vector<FiberDescriptor> tup;
    for (int x = 0; x < m.base.n(); ++x)
      tup.push_back(z.test(x) ? FiberDescriptor::b(Bitset::full(m.yfiber[x].n())) : FiberDescriptor::a());
    auto e = l.element_of_carrier(sb_realize(m, sb.total, tup));
    if (!e) throw Error(ErrorCode::Input, "base action leaves the submodule family");
    return *e;
  };
  return make_lattice_datum(sb.lattice, m.base, act, max_points);
}

// ---------------------------------------------------------------------------
// Koszul / coherent / singularity fibers.
// ---------------------------------------------------------------------------

struct SchemeModel {
  struct Attrs {
    bool regular = false;
    bool complete_intersection = false;
    int ecodim = 0;
  };
  Poset space;
  std::vector<Attrs> attrs;  // per point
};

inline SchemeModel make_scheme_model(Poset space, std::vector<SchemeModel::Attrs> attrs) {
  if (static_cast<int>(attrs.size()) != space.n())
    throw Error(ErrorCode::Input, "need one attribute record per point");
  for (int x = 0; x < space.n(); ++x) {
    if (attrs[x].ecodim < 0) throw Error(ErrorCode::Input, "negative embedding codimension at " + space.name(x));
    if (attrs[x].regular != (attrs[x].ecodim == 0))
      throw Error(ErrorCode::Input, "regular must mean embedding codimension 0 (point " + space.name(x) + ")");
    if (attrs[x].regular && !attrs[x].complete_intersection)
      throw Error(ErrorCode::Input, "regular points are complete intersections (point " + space.name(x) + ")");
  }
  return SchemeModel{std::move(space), std::move(attrs)};
}

inline bool is_hypersurface(const SchemeModel& m, int x) {
  return m.attrs[x].complete_intersection && m.attrs[x].ecodim <= 1;
}

// A finite shadow of P^m: a generic point over m nested layers (a chain),
// with optional extra closed points beside the deepest one.
inline Poset pn_model(int m, int extra_closed = 0, const std::string& prefix = "") {
  if (m < 0) throw Error(ErrorCode::Input, "negative projective dimension");
  if (m == 0) {
    if (extra_closed > 0) throw Error(ErrorCode::Input, "a point has no room for extra closed points");
    return Poset(1, {}, {prefix + "eta"});
  }
  int n = m + 1 + extra_closed;
  std::vector<std::string> names{prefix + "eta"};
  for (int i = 1; i <= m; ++i) names.push_back(prefix + "c" + std::to_string(i));
  for (int j = 0; j < extra_closed; ++j) names.push_back(prefix + "z" + std::to_string(j));
  std::vector<std::pair<int, int>> rel;
  for (int i = 1; i <= m; ++i) rel.emplace_back(i, i - 1);  // c_i <= c_{i-1} <= ... <= eta
  for (int j = 0; j < extra_closed; ++j) rel.emplace_back(m + 1 + j, m - 1);  // beside c_m, under c_{m-1}
  return Poset(n, rel, names);
}

struct KoszulFiber {
  Poset coh;   // proj_model plus one isolated extra point
  Poset sing;  // proj_model
};

// The fiber shapes of the coherent and singularity spectra at a point with
// c = ecodim: projective of dimension c-1, and the same plus the point
// itself.  The extra point is attached isolated (the set-level reading of
// the fiber formula).
inline KoszulFiber koszul_fiber(int c, const Poset& proj, const std::string& base_name = "x") {
  if (c == 0) {
    if (proj.n() != 0)
      throw Error(ErrorCode::DimensionMismatch, "c = 0 needs an empty projective model");
  } else if (proj.krull_dimension() != c - 1) {
    throw Error(ErrorCode::DimensionMismatch,
                "projective model has Krull dimension " + std::to_string(proj.krull_dimension()) + ", expected " +
                    std::to_string(c - 1));
  }
  KoszulFiber f;
  f.sing = proj;
  f.coh = Poset::disjoint_union({proj, Poset(1, {}, {base_name})}, {});
  return f;
}

struct CohSing {
  Poset coh;   // X-copy first (ids equal base ids), then the fibers
  Poset sing;  // the fibers only
  std::vector<int> coh_proj_offset;   // per base point, start of its fiber block in coh
  std::vector<int> sing_proj_offset;  // per base point, start of its fiber block in sing
  std::vector<int> coh_base_of;       // coh point -> base point
  std::vector<int> sing_base_of;      // sing point -> base point
};

inline std::vector<int> sing_offsets(const SchemeModel& m, const std::vector<Poset>& projs) {
  std::vector<int> off;
  int acc = 0;
  for (int x = 0; x < m.space.n(); ++x) {
    off.push_back(acc);
    acc += projs[x].n();
  }
  return off;
}

// Assembles X^coh = X u (fibers) and X^sing = fibers, componentwise order.
// Cross-fiber specializations are caller-supplied in the documented layouts
// (sing: fiber blocks in base order; coh: X block then the same fiber
// blocks) since the construction itself does not invent them.
inline CohSing coh_sing_spaces(const SchemeModel& m, const std::vector<Poset>& projs,
                               const std::vector<std::pair<int, int>>& cross_coh = {},
                               const std::vector<std::pair<int, int>>& cross_sing = {}) {
  if (static_cast<int>(projs.size()) != m.space.n())
    throw Error(ErrorCode::Input, "need one projective model per point");
  for (int x = 0; x < m.space.n(); ++x) {
    int c = m.attrs[x].ecodim;
    if (c == 0 ? projs[x].n() != 0 : projs[x].krull_dimension() != c - 1)
      throw Error(ErrorCode::DimensionMismatch,
                  "projective model at " + m.space.name(x) + " does not match embedding codimension " +
                      std::to_string(c));
  }

  CohSing cs;
  std::vector<Poset> fiber_parts;
  for (int x = 0; x < m.space.n(); ++x) {
    std::vector<std::string> nm;
    for (int i = 0; i < projs[x].n(); ++i) nm.push_back(m.space.name(x) + "." + projs[x].name(i));
    fiber_parts.push_back(projs[x].renamed(nm));
  }

  std::vector<int> soff;
  cs.sing = Poset::disjoint_union(fiber_parts, cross_sing, &soff);
  cs.sing_proj_offset = soff;
  for (int x = 0; x < m.space.n(); ++x)
    for (int i = 0; i < projs[x].n(); ++i) cs.sing_base_of.push_back(x);

  std::vector<Poset> coh_parts{m.space};
  for (auto& p : fiber_parts) coh_parts.push_back(p);
  std::vector<int> coff;
  cs.coh = Poset::disjoint_union(coh_parts, cross_coh, &coff);
  for (int x = 0; x < m.space.n(); ++x) cs.coh_proj_offset.push_back(coff[1 + x]);
  cs.coh_base_of.assign(cs.coh.n(), -1);
  for (int x = 0; x < m.space.n(); ++x) {
    cs.coh_base_of[x] = x;  // the X block keeps base ids
    for (int i = 0; i < projs[x].n(); ++i) cs.coh_base_of[cs.coh_proj_offset[x] + i] = x;
  }
  return cs;
}

// The coherent datum over X: submodules are down-sets of X^coh, the action
// takes a closed Z to the full preimage under the fiber projection.
inline LatticeDatum koszul_datum(const SchemeModel& m, const std::vector<Poset>& projs,
                                 const std::vector<std::pair<int, int>>& cross_coh = {},
                                 int max_points = kDefaultMaxPoints) {
  CohSing cs = coh_sing_spaces(m, projs, cross_coh);
  std::vector<int> base_of = cs.coh_base_of;
  int ncoh = cs.coh.n();
  auto act = [base_of, ncoh](const Lattice& l, const Bitset& z) -> int {
    Bitset pre(ncoh);
    for (int p = 0; p < ncoh; ++p)
      if (z.test(base_of[p])) pre.set(p);
    auto e = l.element_of_carrier(pre);
    if (!e)
      throw Error(ErrorCode::Input, "cross-fiber relations break monotonicity over the base (preimage not closed)");
    return *e;
  };
  return make_lattice_datum(down_set_lattice(cs.coh, max_points), m.space, act, max_points);
}

}  // namespace ttg
