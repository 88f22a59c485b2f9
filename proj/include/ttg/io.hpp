#pragma once

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ttg/bitset.hpp"
#include "ttg/datum.hpp"
#include "ttg/errors.hpp"
#include "ttg/lattice.hpp"
#include "ttg/models.hpp"
#include "ttg/poset.hpp"

namespace ttg {

// A parsed input document.  Exactly the member matching `kind` is meaningful.
struct ModelDocument {
  enum class Kind { Poset, Lattice, Datum, SB, Koszul };
  Kind kind{};
  std::string name;
  Poset poset;
  Lattice lattice;
  LatticeDatum datum;
  SBModel sb;
  SchemeModel scheme;
  std::vector<Poset> projs;  // per scheme point
};

inline const char* model_kind_name(ModelDocument::Kind k) {
  switch (k) {
    case ModelDocument::Kind::Poset: return "poset";
    case ModelDocument::Kind::Lattice: return "lattice";
    case ModelDocument::Kind::Datum: return "datum";
    case ModelDocument::Kind::SB: return "sb-model";
    case ModelDocument::Kind::Koszul: return "koszul-model";
  }
  return "?";
}

namespace iodetail {

struct Section {
  int line = 0;
  std::string key;    // e.g. "fiber"
  std::string arg;    // e.g. the point name in "fiber x:"
  std::string value;  // rest of the line
};

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline void check_name(const std::string& t, int line) {
  if (t.empty()) throw ParseError("empty name", line);
  for (char c : t)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}' || c == ',' || c == '#')
      throw ParseError("name '" + t + "' contains a reserved character", line);
}

inline std::vector<Section> split_sections(const std::string& text) {
  std::vector<Section> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", no);
    std::string head = trim(line.substr(0, colon));
    Section s;
    s.line = no;
    s.value = trim(line.substr(colon + 1));
    size_t sp = head.find_first_of(" \t");
    if (sp == std::string::npos) {
      s.key = head;
    } else {
      s.key = trim(head.substr(0, sp));
      s.arg = trim(head.substr(sp));
    }
    if (s.key.empty()) throw ParseError("missing section key", no);
    out.push_back(std::move(s));
  }
  return out;
}

inline std::pair<std::string, std::string> split_leq(const std::string& t, int line) {
  size_t p = t.find("<=");
  if (p == std::string::npos) throw ParseError("order token '" + t + "' must look like a<=b", line);
  std::string a = t.substr(0, p), b = t.substr(p + 2);
  check_name(a, line);
  check_name(b, line);
  return {a, b};
}

struct PosetSrc {
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::string>> order;
  int points_line = 0;
  bool have_points = false;
};

inline Poset build_poset(const PosetSrc& src) {
  std::unordered_map<std::string, int> id;
  for (const auto& p : src.points) {
    if (!id.emplace(p, static_cast<int>(id.size())).second)
      throw ParseError("duplicate point '" + p + "'", src.points_line);
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [a, b] : src.order) {
    auto ia = id.find(a), ib = id.find(b);
    if (ia == id.end()) throw Error(ErrorCode::UnknownElement, "order names unknown point '" + a + "'");
    if (ib == id.end()) throw Error(ErrorCode::UnknownElement, "order names unknown point '" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return Poset(static_cast<int>(src.points.size()), pairs, src.points);
}

// "{a,b}" -> point set over `base`; "{}" is the empty set
inline Bitset parse_point_set(const std::string& text, const Poset& base, int line) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError("expected a set like {a,b}, got '" + text + "'", line);
  Bitset out(base.n());
  std::string inner = s.substr(1, s.size() - 2);
  std::istringstream in(inner);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ParseError("empty name in set '" + text + "'", line);
    auto pt = base.point_of_name(item);
    if (!pt) throw Error(ErrorCode::UnknownElement, "set names unknown base point '" + item + "'");
    out.set(*pt);
  }
  return out;
}

}  // namespace iodetail

inline ModelDocument parse_model_text(const std::string& text) {
  using namespace iodetail;
  auto sections = split_sections(text);

  std::optional<ModelDocument::Kind> kind;
  for (const auto& s : sections)
    if (s.key == "kind") {
      if (kind) throw ParseError("duplicate kind", s.line);
      if (s.value == "poset") kind = ModelDocument::Kind::Poset;
      else if (s.value == "lattice") kind = ModelDocument::Kind::Lattice;
      else if (s.value == "datum") kind = ModelDocument::Kind::Datum;
      else if (s.value == "sb-model") kind = ModelDocument::Kind::SB;
      else if (s.value == "koszul-model") kind = ModelDocument::Kind::Koszul;
      else throw ParseError("unknown kind '" + s.value + "'", s.line);
    }
  if (!kind) throw ParseError("missing 'kind:' section", 1);

  ModelDocument doc;
  doc.kind = *kind;

  PosetSrc main_pts, base_pts;                         // "points:"/"order:" and "base-points:"/"base-order:"
  std::vector<std::string> elements;                   // lattice elements
  int elements_line = 0;
  std::vector<std::pair<std::string, std::string>> element_order;
  std::vector<std::tuple<int, std::string, std::string>> action_lines;  // line, set text, element
  std::map<std::string, PosetSrc> fibers, projs;
  std::map<std::string, int> ecodim;
  std::vector<std::string> ci_points;
  int copies = 0;

  auto parse_int = [](const std::string& v, int line) {
    try {
      size_t used = 0;
      int out = std::stoi(v, &used);
      if (used != v.size()) throw std::invalid_argument("");
      return out;
    } catch (...) {
      throw ParseError("expected an integer, got '" + v + "'", line);
    }
  };

  for (const auto& s : sections) {
    if (s.key == "kind") continue;
    if (s.key == "name" && s.arg.empty()) {
      doc.name = s.value;
    } else if (s.key == "points" && s.arg.empty()) {
      for (auto& t : tokens(s.value)) {
        check_name(t, s.line);
        main_pts.points.push_back(t);
      }
      main_pts.points_line = s.line;
      main_pts.have_points = true;
    } else if (s.key == "order" && s.arg.empty()) {
      // lattice and datum docs order their elements; the rest order points
      if (doc.kind == ModelDocument::Kind::Lattice || doc.kind == ModelDocument::Kind::Datum) {
        for (auto& t : tokens(s.value)) element_order.push_back(split_leq(t, s.line));
      } else {
        for (auto& t : tokens(s.value)) main_pts.order.push_back(split_leq(t, s.line));
      }
    } else if (s.key == "elements" && s.arg.empty()) {
      for (auto& t : tokens(s.value)) {
        check_name(t, s.line);
        elements.push_back(t);
      }
      elements_line = s.line;
    } else if (s.key == "base-points" && s.arg.empty()) {
      for (auto& t : tokens(s.value)) {
        check_name(t, s.line);
        base_pts.points.push_back(t);
      }
      base_pts.points_line = s.line;
      base_pts.have_points = true;
    } else if (s.key == "base-order" && s.arg.empty()) {
      for (auto& t : tokens(s.value)) base_pts.order.push_back(split_leq(t, s.line));
    } else if (s.key == "action" && s.arg.empty()) {
      size_t arrow = s.value.find("->");
      if (arrow == std::string::npos) throw ParseError("action line must look like {a,b} -> element", s.line);
      action_lines.emplace_back(s.line, trim(s.value.substr(0, arrow)), trim(s.value.substr(arrow + 2)));
    } else if (s.key == "fiber" && !s.arg.empty()) {
      auto& f = fibers[s.arg];
      for (auto& t : tokens(s.value)) {
        check_name(t, s.line);
        f.points.push_back(t);
      }
      f.points_line = s.line;
      f.have_points = true;
    } else if (s.key == "fiber-order" && !s.arg.empty()) {
      for (auto& t : tokens(s.value)) fibers[s.arg].order.push_back(split_leq(t, s.line));
    } else if (s.key == "proj" && !s.arg.empty()) {
      auto& f = projs[s.arg];
      for (auto& t : tokens(s.value)) {
        check_name(t, s.line);
        f.points.push_back(t);
      }
      f.points_line = s.line;
      f.have_points = true;
    } else if (s.key == "proj-order" && !s.arg.empty()) {
      for (auto& t : tokens(s.value)) projs[s.arg].order.push_back(split_leq(t, s.line));
    } else if (s.key == "copies" && s.arg.empty()) {
      copies = parse_int(s.value, s.line);
      if (copies < 0) throw ParseError("copies must be nonnegative", s.line);
    } else if (s.key == "ecodim" && s.arg.empty()) {
      for (auto& t : tokens(s.value)) {
        size_t eq = t.find('=');
        if (eq == std::string::npos) throw ParseError("ecodim token '" + t + "' must look like point=n", s.line);
        std::string pt = t.substr(0, eq);
        check_name(pt, s.line);
        ecodim[pt] = parse_int(t.substr(eq + 1), s.line);
      }
    } else if (s.key == "ci" && s.arg.empty()) {
      for (auto& t : tokens(s.value)) {
        check_name(t, s.line);
        ci_points.push_back(t);
      }
    } else {
      throw ParseError("unknown section '" + s.key + (s.arg.empty() ? "" : " " + s.arg) + "'", s.line);
    }
  }

  switch (doc.kind) {
    case ModelDocument::Kind::Poset: {
      doc.poset = build_poset(main_pts);
      break;
    }
    case ModelDocument::Kind::Lattice: {
      if (elements.empty()) throw ParseError("lattice needs an 'elements:' section", 1);
      std::unordered_map<std::string, int> id;
      for (const auto& e : elements)
        if (!id.emplace(e, static_cast<int>(id.size())).second)
          throw ParseError("duplicate element '" + e + "'", elements_line);
      std::vector<std::pair<int, int>> pairs;
      for (const auto& [a, b] : element_order) {
        auto ia = id.find(a), ib = id.find(b);
        if (ia == id.end()) throw Error(ErrorCode::UnknownElement, "order names unknown element '" + a + "'");
        if (ib == id.end()) throw Error(ErrorCode::UnknownElement, "order names unknown element '" + b + "'");
        pairs.emplace_back(ia->second, ib->second);
      }
      doc.lattice = Lattice::from_order(elements, pairs);
      break;
    }
    case ModelDocument::Kind::Datum: {
      if (elements.empty()) throw ParseError("datum needs an 'elements:' section for the submodule lattice", 1);
      std::unordered_map<std::string, int> id;
      for (const auto& e : elements)
        if (!id.emplace(e, static_cast<int>(id.size())).second)
          throw ParseError("duplicate element '" + e + "'", elements_line);
      std::vector<std::pair<int, int>> pairs;
      for (const auto& [a, b] : element_order) {
        auto ia = id.find(a), ib = id.find(b);
        if (ia == id.end()) throw Error(ErrorCode::UnknownElement, "order names unknown element '" + a + "'");
        if (ib == id.end()) throw Error(ErrorCode::UnknownElement, "order names unknown element '" + b + "'");
        pairs.emplace_back(ia->second, ib->second);
      }
      Lattice sub = Lattice::from_order(elements, pairs);
      Poset base = build_poset(base_pts);

      std::unordered_map<Bitset, int, BitsetHash> act;
      std::unordered_map<Bitset, bool, BitsetHash> used;
      for (const auto& [line, set_text, elem] : action_lines) {
        Bitset z = parse_point_set(set_text, base, line);
        auto e = sub.element_of_label(elem);
        if (!e) throw Error(ErrorCode::UnknownElement, "action names unknown element '" + elem + "'");
        if (!act.emplace(z, *e).second) throw ParseError("duplicate action for set " + set_text, line);
        used[z] = false;
      }
      doc.datum = make_lattice_datum(std::move(sub), base,
                                     [&](const Lattice&, const Bitset& z) -> int {
                                       auto it = act.find(z);
                                       if (it == act.end())
                                         throw Error(ErrorCode::Input, "action missing for closed set " +
                                                                           point_set_label(base, z));
                                       used[z] = true;
                                       return it->second;
                                     });
      for (const auto& [z, was_used] : used)
        if (!was_used)
          throw Error(ErrorCode::Input,
                      "action given for " + point_set_label(base, z) + ", which is not a closed subset of the base");
      break;
    }
    case ModelDocument::Kind::SB: {
      doc.sb.base = build_poset(base_pts);
      doc.sb.copies = copies;
      for (const auto& [nm, src] : fibers)
        if (!doc.sb.base.point_of_name(nm))
          throw Error(ErrorCode::UnknownElement, "fiber given for unknown base point '" + nm + "'");
      for (int x = 0; x < doc.sb.base.n(); ++x) {
        auto it = fibers.find(doc.sb.base.name(x));
        if (it == fibers.end())
          throw Error(ErrorCode::Input, "missing fiber for base point '" + doc.sb.base.name(x) + "'");
        doc.sb.yfiber.push_back(build_poset(it->second));
      }
      break;
    }
    case ModelDocument::Kind::Koszul: {
      Poset space = build_poset(main_pts);
      for (const auto& [nm, c] : ecodim) {
        if (!space.point_of_name(nm)) throw Error(ErrorCode::UnknownElement, "ecodim names unknown point '" + nm + "'");
        if (c < 0) throw Error(ErrorCode::Input, "negative embedding codimension at '" + nm + "'");
      }
      for (const auto& nm : ci_points)
        if (!space.point_of_name(nm)) throw Error(ErrorCode::UnknownElement, "ci names unknown point '" + nm + "'");
      for (const auto& [nm, src] : projs)
        if (!space.point_of_name(nm))
          throw Error(ErrorCode::UnknownElement, "proj given for unknown point '" + nm + "'");

      std::vector<SchemeModel::Attrs> attrs(space.n());
      for (int x = 0; x < space.n(); ++x) {
        auto it = ecodim.find(space.name(x));
        int c = it == ecodim.end() ? 0 : it->second;
        attrs[x].ecodim = c;
        attrs[x].regular = c == 0;
        attrs[x].complete_intersection =
            attrs[x].regular || std::find(ci_points.begin(), ci_points.end(), space.name(x)) != ci_points.end();
      }
      std::vector<Poset> pm;
      for (int x = 0; x < space.n(); ++x) {
        auto it = projs.find(space.name(x));
        if (it != projs.end()) {
          pm.push_back(build_poset(it->second));
        } else if (attrs[x].ecodim == 0) {
          pm.push_back(Poset(0, {}, {}));
        } else {
          pm.push_back(pn_model(attrs[x].ecodim - 1));
        }
      }
      doc.scheme = make_scheme_model(std::move(space), std::move(attrs));
      doc.projs = std::move(pm);
      break;
    }
  }
  return doc;
}

// ---------------------------------------------------------------------------
// JSON form of the same documents.
// ---------------------------------------------------------------------------

namespace iodetail {

inline nlohmann::json poset_to_json(const Poset& p) {
  nlohmann::json j;
  j["points"] = p.names();
  auto rel = nlohmann::json::array();
  for (int a = 0; a < p.n(); ++a)
    for (int b = 0; b < p.n(); ++b)
      if (a != b && p.leq(a, b)) rel.push_back({p.name(a), p.name(b)});
  j["order"] = rel;
  return j;
}

inline PosetSrc poset_src_from_json(const nlohmann::json& j) {
  PosetSrc src;
  src.have_points = true;
  for (const auto& p : j.at("points")) src.points.push_back(p.get<std::string>());
  if (j.contains("order"))
    for (const auto& e : j.at("order")) src.order.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  return src;
}

}  // namespace iodetail

inline nlohmann::json model_to_json(const ModelDocument& doc) {
  using iodetail::poset_to_json;
  nlohmann::json j;
  j["kind"] = model_kind_name(doc.kind);
  if (!doc.name.empty()) j["name"] = doc.name;
  switch (doc.kind) {
    case ModelDocument::Kind::Poset:
      j.update(poset_to_json(doc.poset));
      break;
    case ModelDocument::Kind::Lattice: {
      j["elements"] = doc.lattice.labels();
      auto rel = nlohmann::json::array();
      for (int a = 0; a < doc.lattice.size(); ++a)
        for (int b = 0; b < doc.lattice.size(); ++b)
          if (a != b && doc.lattice.leq(a, b)) rel.push_back({doc.lattice.label(a), doc.lattice.label(b)});
      j["order"] = rel;
      break;
    }
    case ModelDocument::Kind::Datum: {
      j["elements"] = doc.datum.sub.labels();
      auto rel = nlohmann::json::array();
      for (int a = 0; a < doc.datum.sub.size(); ++a)
        for (int b = 0; b < doc.datum.sub.size(); ++b)
          if (a != b && doc.datum.sub.leq(a, b)) rel.push_back({doc.datum.sub.label(a), doc.datum.sub.label(b)});
      j["order"] = rel;
      nlohmann::json base = poset_to_json(doc.datum.base);
      j["base-points"] = base["points"];
      j["base-order"] = base["order"];
      auto act = nlohmann::json::array();
      for (size_t i = 0; i < doc.datum.base_closed.size(); ++i) {
        std::vector<std::string> pts;
        doc.datum.base_closed[i].for_each([&](int p) { pts.push_back(doc.datum.base.name(p)); });
        act.push_back({{"set", pts}, {"to", doc.datum.sub.label(doc.datum.action[i])}});
      }
      j["action"] = act;
      break;
    }
    case ModelDocument::Kind::SB: {
      nlohmann::json base = poset_to_json(doc.sb.base);
      j["base-points"] = base["points"];
      j["base-order"] = base["order"];
      j["copies"] = doc.sb.copies;
      nlohmann::json fib;
      for (int x = 0; x < doc.sb.base.n(); ++x) fib[doc.sb.base.name(x)] = poset_to_json(doc.sb.yfiber[x]);
      j["fibers"] = fib;
      break;
    }
    case ModelDocument::Kind::Koszul: {
      j.update(poset_to_json(doc.scheme.space));
      nlohmann::json ec, pj;
      auto ci = nlohmann::json::array();
      for (int x = 0; x < doc.scheme.space.n(); ++x) {
        ec[doc.scheme.space.name(x)] = doc.scheme.attrs[x].ecodim;
        if (doc.scheme.attrs[x].complete_intersection && !doc.scheme.attrs[x].regular)
          ci.push_back(doc.scheme.space.name(x));
        pj[doc.scheme.space.name(x)] = poset_to_json(doc.projs[x]);
      }
      j["ecodim"] = ec;
      j["ci"] = ci;
      j["proj"] = pj;
      break;
    }
  }
  return j;
}

inline ModelDocument model_from_json(const nlohmann::json& j) {
  using namespace iodetail;
  ModelDocument doc;
  std::string kind = j.at("kind").get<std::string>();
  if (j.contains("name")) doc.name = j.at("name").get<std::string>();

  auto lattice_from = [&](const nlohmann::json& src) {
    std::vector<std::string> elements;
    for (const auto& e : src.at("elements")) elements.push_back(e.get<std::string>());
    std::unordered_map<std::string, int> id;
    for (size_t i = 0; i < elements.size(); ++i) id[elements[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : src.at("order")) pairs.emplace_back(id.at(e.at(0).get<std::string>()), id.at(e.at(1).get<std::string>()));
    return Lattice::from_order(elements, pairs);
  };

  if (kind == "poset") {
    doc.kind = ModelDocument::Kind::Poset;
    doc.poset = build_poset(poset_src_from_json(j));
  } else if (kind == "lattice") {
    doc.kind = ModelDocument::Kind::Lattice;
    doc.lattice = lattice_from(j);
  } else if (kind == "datum") {
    doc.kind = ModelDocument::Kind::Datum;
    Lattice sub = lattice_from(j);
    PosetSrc bsrc;
    bsrc.have_points = true;
    for (const auto& p : j.at("base-points")) bsrc.points.push_back(p.get<std::string>());
    for (const auto& e : j.at("base-order")) bsrc.order.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    Poset base = build_poset(bsrc);
    std::unordered_map<Bitset, int, BitsetHash> act;
    for (const auto& entry : j.at("action")) {
      Bitset z(base.n());
      for (const auto& p : entry.at("set")) {
        auto pt = base.point_of_name(p.get<std::string>());
        if (!pt) throw Error(ErrorCode::UnknownElement, "action names unknown base point '" + p.get<std::string>() + "'");
        z.set(*pt);
      }
      auto e = sub.element_of_label(entry.at("to").get<std::string>());
      if (!e) throw Error(ErrorCode::UnknownElement, "action names unknown element");
      act[z] = *e;
    }
    doc.datum = make_lattice_datum(std::move(sub), base, [&](const Lattice&, const Bitset& z) -> int {
      auto it = act.find(z);
      if (it == act.end())
        throw Error(ErrorCode::Input, "action missing for closed set " + point_set_label(base, z));
      return it->second;
    });
  } else if (kind == "sb-model") {
    doc.kind = ModelDocument::Kind::SB;
    PosetSrc bsrc;
    bsrc.have_points = true;
    for (const auto& p : j.at("base-points")) bsrc.points.push_back(p.get<std::string>());
    if (j.contains("base-order"))
      for (const auto& e : j.at("base-order")) bsrc.order.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    doc.sb.base = build_poset(bsrc);
    doc.sb.copies = j.at("copies").get<int>();
    for (int x = 0; x < doc.sb.base.n(); ++x)
      doc.sb.yfiber.push_back(build_poset(poset_src_from_json(j.at("fibers").at(doc.sb.base.name(x)))));
  } else if (kind == "koszul-model") {
    doc.kind = ModelDocument::Kind::Koszul;
    Poset space = build_poset(poset_src_from_json(j));
    std::vector<SchemeModel::Attrs> attrs(space.n());
    std::vector<Poset> pm;
    for (int x = 0; x < space.n(); ++x) {
      int c = 0;
      if (j.contains("ecodim") && j.at("ecodim").contains(space.name(x))) c = j.at("ecodim").at(space.name(x)).get<int>();
      attrs[x].ecodim = c;
      attrs[x].regular = c == 0;
      attrs[x].complete_intersection = c == 0;
      if (j.contains("ci"))
        for (const auto& nm : j.at("ci"))
          if (nm.get<std::string>() == space.name(x)) attrs[x].complete_intersection = true;
      if (j.contains("proj") && j.at("proj").contains(space.name(x)))
        pm.push_back(build_poset(poset_src_from_json(j.at("proj").at(space.name(x)))));
      else if (c == 0)
        pm.push_back(Poset(0, {}, {}));
      else
        pm.push_back(pn_model(c - 1));
    }
    doc.scheme = make_scheme_model(std::move(space), std::move(attrs));
    doc.projs = std::move(pm);
  } else {
    throw Error(ErrorCode::Parse, "unknown kind '" + kind + "' in JSON document");
  }
  return doc;
}

// Sniffs JSON documents by their first byte.
inline ModelDocument parse_model(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("bad JSON: ") + e.what());
      }
      try {
        return model_from_json(j);
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("bad JSON document: ") + e.what());
      }
    }
    break;
  }
  return parse_model_text(text);
}

inline ModelDocument parse_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Input, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  ModelDocument doc = parse_model(buf.str());
  if (doc.name.empty()) {
    size_t slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    size_t dot = base.find_last_of('.');
    doc.name = dot == std::string::npos ? base : base.substr(0, dot);
  }
  return doc;
}

// ---------------------------------------------------------------------------
// DOT output.  Bit-stable: node lines and edge lines are each emitted in
// lexicographic order.
// ---------------------------------------------------------------------------

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string dot_graph(const std::string& graph_name, std::vector<std::string> nodes,
                             std::vector<std::pair<std::string, std::string>> edges) {
  std::sort(nodes.begin(), nodes.end());
  std::sort(edges.begin(), edges.end());
  std::string out = "digraph " + dot_quote(graph_name) + " {\n  rankdir=BT;\n";
  for (const auto& n : nodes) out += "  " + dot_quote(n) + ";\n";
  for (const auto& [a, b] : edges) out += "  " + dot_quote(a) + " -> " + dot_quote(b) + ";\n";
  return out + "}\n";
}

// Hasse diagram of a lattice: edges are covering pairs, drawn upward.
inline std::string lattice_dot(const Lattice& l, const std::string& graph_name) {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int e = 0; e < l.size(); ++e) {
    nodes.push_back(l.label(e));
    for (int c : l.covers(e)) edges.emplace_back(l.label(e), l.label(c));
  }
  return dot_graph(graph_name, std::move(nodes), std::move(edges));
}

// Hasse diagram of a poset: edges are covering pairs, drawn upward.
inline std::string poset_dot(const Poset& p, const std::string& graph_name) {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < p.n(); ++i) nodes.push_back(p.name(i));
  for (int a = 0; a < p.n(); ++a)
    for (int b = 0; b < p.n(); ++b) {
      if (a == b || !p.leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < p.n() && cover; ++c)
        if (c != a && c != b && p.leq(a, c) && p.leq(c, b)) cover = false;
      if (cover) edges.emplace_back(p.name(a), p.name(b));
    }
  return dot_graph(graph_name, std::move(nodes), std::move(edges));
}

}  // namespace ttg
