#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "ttg/datum.hpp"
#include "ttg/errors.hpp"
#include "ttg/io.hpp"
#include "ttg/lattice.hpp"
#include "ttg/models.hpp"
#include "ttg/poset.hpp"
#include "ttg/spectrum.hpp"
#include "ttg/support.hpp"

namespace {

using nlohmann::json;
using namespace ttg;

int max_points_default() {
  const char* v = std::getenv("TTG_MAX_POINTS");
  if (!v) return kDefaultMaxPoints;
  try {
    size_t used = 0;
    int n = std::stoi(v, &used);
    if (used == std::string(v).size() && n > 0) return n;
  } catch (...) {
  }
  throw Error(ErrorCode::Input, "TTG_MAX_POINTS must be a positive integer");
}

std::string prime_tag(int k) { return "P" + std::to_string(k); }

// "(P0 P2)" over prime indices
std::string prime_set(const Bitset& s) {
  std::string out = "(";
  bool first = true;
  s.for_each([&](int k) {
    if (!first) out += " ";
    out += prime_tag(k);
    first = false;
  });
  return out + ")";
}

std::string prime_list(const std::vector<int>& ks) {
  std::string out = "(";
  for (size_t i = 0; i < ks.size(); ++i) {
    if (i) out += " ";
    out += prime_tag(ks[i]);
  }
  return out + ")";
}

json index_array(const Bitset& s) {
  json a = json::array();
  s.for_each([&](int k) { a.push_back(k); });
  return a;
}

// The submodule lattice a document denotes, for the spectrum command.
Lattice lattice_of(const ModelDocument& doc, int max_points) {
  switch (doc.kind) {
    case ModelDocument::Kind::Poset: return down_set_lattice(doc.poset, max_points);
    case ModelDocument::Kind::Lattice: return doc.lattice;
    case ModelDocument::Kind::Datum: return doc.datum.sub;
    default:
      throw Error(ErrorCode::Input,
                  std::string("spectrum needs a poset, lattice, or datum document, not ") + model_kind_name(doc.kind));
  }
}

// The datum a document denotes, for the datum-driven commands.
LatticeDatum datum_of(const ModelDocument& doc, int max_points) {
  switch (doc.kind) {
    case ModelDocument::Kind::Poset: return perf_model(doc.poset, max_points);
    case ModelDocument::Kind::Datum: return doc.datum;
    case ModelDocument::Kind::SB: return sb_datum(doc.sb, {}, max_points);
    case ModelDocument::Kind::Koszul: return koszul_datum(doc.scheme, doc.projs, {}, max_points);
    default:
      throw Error(ErrorCode::Input, "a bare lattice carries no base; use a datum document");
  }
}

// Cover pairs of the specialization order on primes: (j, i) with prime i in
// the closure of prime j and nothing strictly between.
std::vector<std::pair<int, int>> specialization_covers(const Lattice& l, const SpectrumSpace& sp) {
  std::vector<std::pair<int, int>> out;
  int np = sp.n_primes();
  for (int j = 0; j < np; ++j)
    for (int i = 0; i < np; ++i) {
      if (i == j || !sp.specializes(l, i, j)) continue;
      bool cover = true;
      for (int m = 0; m < np && cover; ++m)
        if (m != i && m != j && sp.specializes(l, i, m) && sp.specializes(l, m, j)) cover = false;
      if (cover) out.emplace_back(j, i);
    }
  return out;
}

std::string spectrum_dot(const Lattice& l, const SpectrumSpace& sp, const std::string& name) {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int k = 0; k < sp.n_primes(); ++k) nodes.push_back(l.label(sp.primes[k]));
  // rankdir=BT puts closed points low, generic points high
  for (auto [j, i] : specialization_covers(l, sp)) edges.emplace_back(l.label(sp.primes[i]), l.label(sp.primes[j]));
  return dot_graph(name, std::move(nodes), std::move(edges));
}

int cmd_spectrum(const ModelDocument& doc, bool as_json, bool as_dot, int max_points) {
  Lattice l = lattice_of(doc, max_points);
  SpectrumSpace sp = spectrum(l);
  auto spec = specialization_covers(l, sp);

  if (as_dot) {
    std::cout << spectrum_dot(l, sp, doc.name);
    return 0;
  }
  if (as_json) {
    json j;
    j["model"] = doc.name;
    json primes = json::array();
    for (int k = 0; k < sp.n_primes(); ++k) primes.push_back(l.label(sp.primes[k]));
    j["primes"] = primes;
    json supports = json::object();
    for (int e = 0; e < l.size(); ++e) supports[l.label(e)] = index_array(sp.supp[e]);
    j["supports"] = supports;
    json closed = json::array();
    for (const Bitset& c : sp.closed_sets) closed.push_back(index_array(c));
    j["closed-sets"] = closed;
    json spz = json::array();
    for (auto [from, to] : spec) spz.push_back({from, to});
    j["specializations"] = spz;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "model: " << doc.name << "\n";
  if (sp.n_primes() == 0)
    std::cout << "spectrum: empty\n";
  else if (spec.empty())
    std::cout << "spectrum: " << sp.n_primes() << " primes, discrete\n";
  else
    std::cout << "spectrum: " << sp.n_primes() << " primes\n";
  std::cout << "closed sets: " << sp.closed_sets.size() << "\n";
  if (sp.n_primes() > 0) {
    std::cout << "primes:\n";
    for (int k = 0; k < sp.n_primes(); ++k)
      std::cout << "  " << prime_tag(k) << " = " << l.label(sp.primes[k]) << "\n";
  }
  if (!spec.empty()) {
    std::cout << "specializations:\n";
    for (auto [from, to] : spec) std::cout << "  " << prime_tag(from) << " ~> " << prime_tag(to) << "\n";
  }
  std::cout << "supports:\n";
  for (int e = 0; e < l.size(); ++e) std::cout << "  " << l.label(e) << " -> " << prime_set(sp.supp[e]) << "\n";
  return 0;
}

int cmd_classify(const ModelDocument& doc, const std::vector<std::string>& set_args, bool as_json, int max_points) {
  Lattice l = lattice_of(doc, max_points);
  SpectrumSpace sp = spectrum(l);

  Bitset z(sp.n_primes());
  for (const std::string& s : set_args) {
    int k = -1;
    if (s.size() > 1 && s[0] == 'P') {
      try {
        size_t used = 0;
        int v = std::stoi(s.substr(1), &used);
        if (used == s.size() - 1 && v >= 0 && v < sp.n_primes()) k = v;
      } catch (...) {
      }
    }
    if (k < 0) {
      auto e = l.element_of_label(s);
      if (e && sp.prime_index_of[*e] >= 0) k = sp.prime_index_of[*e];
    }
    if (k < 0) throw Error(ErrorCode::UnknownElement, "'" + s + "' is not a prime of this lattice");
    z.set(k);
  }

  int e = classify(l, sp, z);
  bool realized = sp.supp[e] == z;

  if (as_json) {
    json j;
    j["model"] = doc.name;
    j["set"] = index_array(z);
    j["submodule"] = l.label(e);
    j["support"] = index_array(sp.supp[e]);
    j["realized"] = realized;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "model: " << doc.name << "\n";
  std::cout << "input set: " << prime_set(z) << "\n";
  std::cout << "submodule: " << l.label(e) << "\n";
  if (realized)
    std::cout << "realized: yes\n";
  else
    std::cout << "realized: no (supp = " << prime_set(sp.supp[e]) << ")\n";
  return 0;
}

int cmd_check_datum(const ModelDocument& doc, bool as_json, int max_points) {
  LatticeDatum d = datum_of(doc, max_points);
  AdmissibilityReport adm = validate_admissible(d);

  json j;
  j["model"] = doc.name;
  j["submodules"] = d.sub.size();
  j["admissible"] = adm.pass;

  if (!adm.pass) {
    if (as_json) {
      j["violated"] = adm.violated;
      j["witness"] = adm.witness;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "model: " << doc.name << "\n";
      std::cout << "admissible: no\n";
      std::cout << "violated: " << adm.violated << "\n";
      std::cout << "witness: " << adm.witness << "\n";
    }
    return 1;
  }

  SpectrumSpace sp = spectrum(d.sub);
  std::vector<int> pi(sp.n_primes());
  bool routes_agree = true;
  std::string route_witness;
  for (int k = 0; k < sp.n_primes(); ++k) {
    pi[k] = base_point_of_prime(d, sp.primes[k]);
    auto f = base_point_of_prime_by_formula(d, sp.primes[k]);
    if (!f || *f != pi[k]) {
      routes_agree = false;
      route_witness = "prime " + d.sub.label(sp.primes[k]) + ": interval route " + d.base.name(pi[k]) +
                      ", counting route " + (f ? d.base.name(*f) : std::string("(none)"));
    }
  }

  // fibers partition the spectrum exactly when pi is total, which the loop
  // above already forced; recount anyway so the claim is its own evidence
  std::vector<int> fiber_size(d.base.n(), 0);
  for (int k = 0; k < sp.n_primes(); ++k) ++fiber_size[pi[k]];
  int covered = 0;
  for (int y = 0; y < d.base.n(); ++y) covered += fiber_size[y];
  bool partitions = covered == sp.n_primes();

  bool identity = false;
  if (doc.kind == ModelDocument::Kind::Poset) {
    RoundtripReport rt = roundtrip_check(doc.poset, max_points);
    identity = rt.pass && rt.order_iso && rt.homeomorphic;
  }

  if (as_json) {
    j["primes"] = sp.n_primes();
    json pj = json::object();
    for (int k = 0; k < sp.n_primes(); ++k) pj[prime_tag(k)] = d.base.name(pi[k]);
    j["pi"] = pj;
    j["routes-agree"] = routes_agree;
    if (!routes_agree) j["routes-witness"] = route_witness;
    j["fibers-partition"] = partitions;
    if (identity) j["pi-identity"] = true;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "model: " << doc.name << "\n";
    std::cout << "submodules: " << d.sub.size() << ", primes: " << sp.n_primes() << "\n";
    std::cout << "admissible: yes\n";
    std::cout << "pi:\n";
    for (int k = 0; k < sp.n_primes(); ++k)
      std::cout << "  " << prime_tag(k) << " = " << d.sub.label(sp.primes[k]) << " -> " << d.base.name(pi[k]) << "\n";
    std::cout << "routes agree: " << (routes_agree ? "yes" : "no (" + route_witness + ")") << "\n";
    std::cout << "fibers partition the spectrum: " << (partitions ? "yes" : "no") << "\n";
    if (identity) std::cout << "pi = identity\n";
  }
  return routes_agree && partitions ? 0 : 1;
}

int cmd_fiber(const ModelDocument& doc, const std::string& at, bool as_json, bool as_dot, int max_points) {
  LatticeDatum d = datum_of(doc, max_points);
  SpectrumSpace sp = spectrum(d.sub);

  std::vector<int> points;
  if (!at.empty()) {
    auto y = d.base.point_of_name(at);
    if (!y) throw Error(ErrorCode::UnknownElement, "no base point named '" + at + "'");
    points.push_back(*y);
  } else {
    for (int y = 0; y < d.base.n(); ++y) points.push_back(y);
  }

  if (as_dot) {
    if (points.size() != 1)
      throw Error(ErrorCode::Input, "DOT output needs a single fiber; choose one with --at");
    FiberResult f = fiber(d, sp, points[0]);
    // specialization order inside the fiber: the trace topology's closures
    std::vector<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int k : f.fiber_primes) nodes.push_back(d.sub.label(sp.primes[k]));
    for (size_t a = 0; a < f.fiber_primes.size(); ++a)
      for (size_t b = 0; b < f.fiber_primes.size(); ++b) {
        if (a == b || !sp.specializes(d.sub, f.fiber_primes[b], f.fiber_primes[a])) continue;
        bool cover = true;
        for (size_t m = 0; m < f.fiber_primes.size() && cover; ++m)
          if (m != a && m != b && sp.specializes(d.sub, f.fiber_primes[b], f.fiber_primes[m]) &&
              sp.specializes(d.sub, f.fiber_primes[m], f.fiber_primes[a]))
            cover = false;
        if (cover)
          edges.emplace_back(d.sub.label(sp.primes[f.fiber_primes[b]]), d.sub.label(sp.primes[f.fiber_primes[a]]));
      }
    std::cout << dot_graph(doc.name + "-fiber-" + d.base.name(points[0]), std::move(nodes), std::move(edges));
    return 0;
  }

  bool all_ok = true;
  json out = json::array();
  if (!as_json) std::cout << "model: " << doc.name << "\n";
  for (int y : points) {
    FiberResult f = fiber(d, sp, y);
    bool ok = f.bijective && f.homeomorphic;
    all_ok = all_ok && ok;
    if (as_json) {
      json j;
      j["point"] = d.base.name(y);
      json pk = json::array();
      for (int k : f.fiber_primes) pk.push_back(k);
      j["primes"] = pk;
      j["interval"] = {{"bottom", f.interval.lattice.label(f.interval.lattice.bottom())},
                       {"top", f.interval.lattice.label(f.interval.lattice.top())},
                       {"size", f.interval.lattice.size()}};
      j["bijective"] = f.bijective;
      j["continuous"] = f.continuous;
      j["homeomorphic"] = f.homeomorphic;
      out.push_back(j);
    } else {
      std::cout << "fiber over " << d.base.name(y) << ": " << f.fiber_primes.size() << " primes "
                << prime_list(f.fiber_primes) << "\n";
      std::cout << "  interval: [" << f.interval.lattice.label(f.interval.lattice.bottom()) << ", "
                << f.interval.lattice.label(f.interval.lattice.top()) << "], " << f.interval.lattice.size()
                << " elements\n";
      if (!f.bijective)
        std::cout << "  comparison: not bijective (" << f.fiber_primes.size() << " fiber primes vs "
                  << f.interval_space.n_primes() << " interval primes)\n";
      else
        std::cout << "  comparison: bijective" << (f.continuous ? ", continuous" : ", not continuous")
                  << (f.homeomorphic ? ", homeomorphic" : "") << "\n";
    }
  }
  if (as_json) {
    json j;
    j["model"] = doc.name;
    j["fibers"] = out;
    std::cout << j.dump(2) << "\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_universal_map(const ModelDocument& doc, bool as_json, int max_points) {
  Lattice l = lattice_of(doc, max_points);
  SpectrumSpace sp = spectrum(l);
  std::vector<SupportDatum> data = support_data_enumerate(l);

  json arr = json::array();
  if (!as_json) {
    std::cout << "model: " << doc.name << "\n";
    std::cout << "spectrum: " << sp.n_primes() << " primes\n";
    std::cout << "support data: " << data.size() << "\n";
  }
  for (size_t i = 0; i < data.size(); ++i) {
    UniversalMap um = universal_map(l, sp, data[i]);
    if (as_json) {
      json j;
      j["points"] = data[i].point_labels;
      json m = json::object();
      for (int k = 0; k < sp.n_primes(); ++k) m[prime_tag(k)] = data[i].point_labels[um.point_of_prime[k]];
      j["map"] = m;
      arr.push_back(j);
    } else {
      std::cout << "  datum " << i << " (" << data[i].n_points << " points):";
      for (int k = 0; k < sp.n_primes(); ++k)
        std::cout << (k ? ", " : " ") << prime_tag(k) << " -> " << data[i].point_labels[um.point_of_prime[k]];
      std::cout << "\n";
    }
  }
  if (as_json) {
    json j;
    j["model"] = doc.name;
    j["primes"] = sp.n_primes();
    j["support-data"] = arr;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "universal map: unique for all " << data.size() << " support data\n";
  }
  return 0;
}

int cmd_sb_enumerate(const ModelDocument& doc, bool as_json, bool as_dot, int) {
  if (doc.kind != ModelDocument::Kind::SB)
    throw Error(ErrorCode::Input, "sb-enumerate needs an sb-model document");
  SBLattice sb = sb_submodule_lattice(doc.sb);
  SpectrumSpace sp = spectrum(sb.lattice);

  if (as_dot) {
    std::cout << lattice_dot(sb.lattice, doc.name);
    return 0;
  }
  if (as_json) {
    json j;
    j["model"] = doc.name;
    j["submodules"] = sb.lattice.size();
    j["primes"] = sp.n_primes();
    j["elements"] = sb.lattice.labels();
    j["intersection-closed"] = !sb.intersection_escape;
    if (sb.intersection_escape) j["escape-witness"] = sb.escape_witness;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "model: " << doc.name << "\n";
  std::cout << sb.lattice.size() << " submodules, " << sp.n_primes() << " primes\n";
  if (sb.intersection_escape)
    std::cout << "intersection-closed: no (" << sb.escape_witness << "; meets are order-meets)\n";
  else
    std::cout << "intersection-closed: yes\n";
  std::cout << "lattice:\n" << lattice_dot(sb.lattice, doc.name);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectra of submodule lattices over finite models"};
  app.require_subcommand(1);

  std::string file, at;
  std::vector<std::string> set_args;
  bool as_json = false, as_dot = false;
  uint64_t seed = 0;
  int max_points = -1;

  auto add_common = [&](CLI::App* c) {
    c->add_option("file", file, "model document (text or JSON)")->required();
    c->add_flag("--json", as_json, "emit JSON instead of text");
    c->add_flag("--dot", as_dot, "emit a DOT graph instead of text");
    c->add_option("--seed", seed, "seed for randomized runs (accepted for interface stability)");
    c->add_option("--max-points", max_points, "size guard for enumerations (default: TTG_MAX_POINTS or 24)");
  };

  auto* c_spectrum = app.add_subcommand("spectrum", "primes, specializations, and supports");
  add_common(c_spectrum);
  auto* c_classify = app.add_subcommand("classify", "submodule classified by a set of primes");
  add_common(c_classify);
  c_classify->add_option("--set", set_args, "prime (label or Pk); repeat to build the set")->type_size(1);
  auto* c_check = app.add_subcommand("check-datum", "admissibility and the morphism to the base");
  add_common(c_check);
  auto* c_fiber = app.add_subcommand("fiber", "fibers over base points, compared with interval spectra");
  add_common(c_fiber);
  c_fiber->add_option("--at", at, "base point name (default: every point)");
  auto* c_universal = app.add_subcommand("universal-map", "map every support datum to the spectrum");
  add_common(c_universal);
  auto* c_sb = app.add_subcommand("sb-enumerate", "Severi-Brauer submodule lattice");
  add_common(c_sb);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (as_json && as_dot) throw Error(ErrorCode::Input, "choose one of --json and --dot");
    if (max_points < 0) max_points = max_points_default();
    (void)seed;  // reserved for randomized subcommand modes
    ModelDocument doc = parse_model_file(file);
    if (c_spectrum->parsed()) return cmd_spectrum(doc, as_json, as_dot, max_points);
    if (c_classify->parsed()) return cmd_classify(doc, set_args, as_json, max_points);
    if (c_check->parsed()) return cmd_check_datum(doc, as_json, max_points);
    if (c_fiber->parsed()) return cmd_fiber(doc, at, as_json, as_dot, max_points);
    if (c_universal->parsed()) return cmd_universal_map(doc, as_json, max_points);
    if (c_sb->parsed()) return cmd_sb_enumerate(doc, as_json, as_dot, max_points);
    return 2;
  } catch (const ttg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_input_error() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
