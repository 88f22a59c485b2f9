#include <catch2/catch_amalgamated.hpp>

#include "support/catalog.hpp"
#include "ttg/support.hpp"

using namespace ttg;
using namespace ttg::testsupport;

namespace {

Lattice dvr() { return down_set_lattice(Poset::chain(2).renamed({"s", "eta"})); }

Lattice n5() {
  return Lattice::from_order({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}});
}

std::vector<Lattice> small_corpus() {
  std::vector<Lattice> out;
  for (const Poset& x : poset_catalog(3)) out.push_back(down_set_lattice(x));
  out.push_back(n5());
  out.push_back(Lattice::from_order({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
  return out;
}

}  // namespace

TEST_CASE("the spectrum is itself a support datum") {
  for (const Poset& x : poset_catalog()) {
    Lattice l = down_set_lattice(x);
    SpectrumSpace sp = spectrum(l);
    SupportDatum y = support_datum_of_spectrum(l, sp);
    SupportCheckReport r = check_support_datum(l, y);
    INFO(r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("structural mismatches are input errors, not axiom failures") {
  Lattice l = dvr();
  SupportDatum y = support_datum_of_spectrum(l, spectrum(l));
  SupportDatum short_rows = y;
  short_rows.supp.pop_back();
  CHECK_THROWS_AS(check_support_datum(l, short_rows), Error);
  SupportDatum wide = y;
  wide.supp[0] = Bitset(5);
  CHECK_THROWS_AS(check_support_datum(l, wide), Error);
}

TEST_CASE("a support that misses a join fails the semilattice axiom") {
  Lattice l = dvr();
  SupportDatum y = support_datum_of_spectrum(l, spectrum(l));
  y.supp[l.top()] = Bitset(2);  // top now unsupported while {s} is supported
  SupportCheckReport r = check_support_datum(l, y);
  REQUIRE_FALSE(r.pass);
  CHECK(r.axiom == SupportAxiom::SemilatticeMap);
  CHECK(r.witness == "supp({s} v {s,eta}) != supp({s}) u supp({s,eta})");
}

TEST_CASE("a constant support fails distinguishability") {
  Lattice l = dvr();
  SupportDatum y = support_datum_of_spectrum(l, spectrum(l));
  for (auto& row : y.supp) row = Bitset::single(2, 0);
  SupportCheckReport r = check_support_datum(l, y);
  REQUIRE_FALSE(r.pass);
  CHECK(r.axiom == SupportAxiom::Distinguishability);
}

TEST_CASE("closed sets beyond the generated topology are rejected") {
  Lattice l = dvr();
  SupportDatum y = support_datum_of_spectrum(l, spectrum(l));
  y.closed_family.push_back(Bitset::single(2, 1));  // {P1} alone is not a support
  SupportCheckReport r = check_support_datum(l, y);
  REQUIRE_FALSE(r.pass);
  CHECK(r.axiom == SupportAxiom::Topology);
  CHECK(r.witness.find("is not generated") != std::string::npos);
}

TEST_CASE("closed sets missing from the family are rejected") {
  Lattice l = dvr();
  SupportDatum y = support_datum_of_spectrum(l, spectrum(l));
  std::erase(y.closed_family, Bitset::single(2, 0));
  SupportCheckReport r = check_support_datum(l, y);
  REQUIRE_FALSE(r.pass);
  CHECK(r.axiom == SupportAxiom::Topology);
  CHECK(r.witness.find("missing from the family") != std::string::npos);
}

TEST_CASE("indistinguishable points fail T0") {
  Lattice l = dvr();
  SupportDatum y;
  y.n_points = 3;
  y.point_labels = {"u", "v", "w"};
  y.supp = {Bitset(3), Bitset::single(3, 0), Bitset::full(3)};
  y.closed_family = {Bitset(3), Bitset::single(3, 0), Bitset::full(3)};
  SupportCheckReport r = check_support_datum(l, y);
  REQUIRE_FALSE(r.pass);
  CHECK(r.axiom == SupportAxiom::T0);
  CHECK(r.witness == "points v and w lie in the same closed sets");
}

TEST_CASE("enumeration of the three-element chain yields exactly four support data") {
  Lattice l = dvr();
  auto data = support_data_enumerate(l);
  REQUIRE(data.size() == 4);  // free bits: the top element and the extra point
  for (const auto& y : data) {
    SupportCheckReport r = check_support_datum(l, y);
    INFO(r.witness);
    CHECK(r.pass);
  }
  // entry 0 is the spectrum datum itself
  SpectrumSpace sp = spectrum(l);
  SupportDatum own = support_datum_of_spectrum(l, sp);
  CHECK(data[0].point_labels == own.point_labels);
  CHECK(data[0].supp == own.supp);
  CHECK(data[0].closed_family == own.closed_family);
}

TEST_CASE("an everywhere-supported point is legal because join preservation is binary") {
  Lattice l = dvr();
  auto data = support_data_enumerate(l);
  bool saw_everywhere = false;
  for (const auto& y : data) {
    for (int pt = 0; pt < y.n_points; ++pt) {
      bool everywhere = true;
      for (const auto& row : y.supp)
        if (!row.test(pt)) everywhere = false;
      if (!everywhere) continue;
      saw_everywhere = true;
      // in particular the bottom element has nonempty support here
      CHECK(y.supp[l.bottom()].test(pt));
      CHECK(check_support_datum(l, y).pass);
    }
  }
  CHECK(saw_everywhere);
}

TEST_CASE("every enumerated support datum passes and receives a unique map from the spectrum") {
  for (const Lattice& l : small_corpus()) {
    SpectrumSpace sp = spectrum(l);
    int n_free = l.size() - sp.n_primes() + 1;
    if (n_free > 6) continue;
    auto data = support_data_enumerate(l);
    REQUIRE(data.size() == (size_t{1} << n_free));
    for (const auto& y : data) {
      CHECK(check_support_datum(l, y).pass);
      UniversalMap um = universal_map(l, sp, y);
      REQUIRE(static_cast<int>(um.point_of_prime.size()) == sp.n_primes());
      // pullback identity, recomputed here rather than trusted
      for (int e = 0; e < l.size(); ++e)
        for (int k = 0; k < sp.n_primes(); ++k)
          CHECK(y.supp[e].test(um.point_of_prime[k]) == sp.supp[e].test(k));
      // the chosen point's fingerprint is the down-set of the prime
      for (int k = 0; k < sp.n_primes(); ++k) {
        Bitset fp(l.size());
        for (int e = 0; e < l.size(); ++e)
          if (!y.supp[e].test(um.point_of_prime[k])) fp.set(e);
        CHECK(fp == l.below(sp.primes[k]));
      }
    }
  }
}

TEST_CASE("the map from the spectrum to its own datum is the identity") {
  for (const Lattice& l : small_corpus()) {
    SpectrumSpace sp = spectrum(l);
    UniversalMap um = universal_map(l, sp, support_datum_of_spectrum(l, sp));
    for (int k = 0; k < sp.n_primes(); ++k) CHECK(um.point_of_prime[k] == k);
  }
}

TEST_CASE("universal_map refuses data that fail an axiom") {
  Lattice l = dvr();
  SpectrumSpace sp = spectrum(l);
  SupportDatum y = support_datum_of_spectrum(l, sp);
  for (auto& row : y.supp) row = Bitset(2);
  CHECK_THROWS_AS(universal_map(l, sp, y), Error);
  try {
    universal_map(l, sp, y);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSupportDatum);
  }
}

TEST_CASE("enumeration guards against exponential blowups") {
  Lattice l = down_set_lattice(Poset::antichain(5));
  try {
    support_data_enumerate(l);  // 2^28 cases, must refuse up front
    FAIL("guard did not fire");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Guard);
  }
}
