#pragma once

// Workspace documents: a JSON file holding one surface model, named divisor
// classes, named sheaf classes and optional stability parameters.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "mumford/stability.hpp"

namespace mumford::cli {

using nlohmann::json;

struct AutoDuValChar0 {
  friend bool operator==(const AutoDuValChar0&, const AutoDuValChar0&) = default;
};

struct StabilityEntry {
  std::string h;
  std::string b;
  std::variant<Rational, AutoDuValChar0> c;
  friend bool operator==(const StabilityEntry&, const StabilityEntry&) = default;
};

struct SheafEntry {
  std::variant<MumfordChern, ResolutionSheafData> data;
  bool torsion = false;
  std::optional<HnBounds> hn;

  bool is_resolution_data() const { return std::holds_alternative<ResolutionSheafData>(data); }
  MumfordChern chern() const {
    if (const auto* f = std::get_if<ResolutionSheafData>(&data)) return chern_from_resolution(*f);
    return std::get<MumfordChern>(data);
  }
  NumericalObject object() const {
    MumfordChern m = chern();
    if (torsion) return NumericalObject::torsion(std::move(m));
    return NumericalObject::with_bounds(std::move(m), hn);
  }
};

struct WorkspaceDocument {
  SurfacePtr surface;
  std::map<std::string, DivisorClass> divisors;
  std::map<std::string, SheafEntry> sheaves;
  std::optional<StabilityEntry> stability;

  const DivisorClass& divisor(const std::string& name) const {
    auto it = divisors.find(name);
    if (it == divisors.end()) throw UsageError("unresolved reference: no divisor named '" + name + "'");
    return it->second;
  }
  const SheafEntry& sheaf(const std::string& name) const {
    auto it = sheaves.find(name);
    if (it == sheaves.end()) throw UsageError("unresolved reference: no sheaf named '" + name + "'");
    return it->second;
  }
};

namespace detail {

inline DataError field_error(const std::string& path, const std::string& what) {
  return DataError(path + ": " + what);
}

inline const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw field_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw field_error(path, "missing key '" + key + "'");
  return *it;
}

inline std::int64_t as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw field_error(path, "expected an integer");
  return j.get<std::int64_t>();
}

inline Rational as_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const DataError& e) {
      throw field_error(path, e.what());
    }
  }
  throw field_error(path, "expected an integer or a \"p/q\" string");
}

inline json rational_json(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return json(r.get_num().get_si());
  return json(to_string(r));
}

inline RationalVector as_rational_vector(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) throw field_error(path, "expected an array");
  if (j.size() != n) throw field_error(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  RationalVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(as_rational(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

inline std::vector<std::int64_t> as_int_vector(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) throw field_error(path, "expected an array");
  if (j.size() != n) throw field_error(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  std::vector<std::int64_t> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

inline SurfacePtr parse_surface(const json& j) {
  const std::string p = "surface";
  SurfaceModel s;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw field_error(p + ".name", "expected a string");
    s.name = j["name"].get<std::string>();
  }
  const json& basis = member(j, "basis", p);
  if (!basis.is_array()) throw field_error(p + ".basis", "expected an array of names");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) throw field_error(p + ".basis[" + std::to_string(i) + "]", "expected a string");
    s.basis.push_back(basis[i].get<std::string>());
  }
  const std::size_t n = s.basis.size();

  const json& gram = member(j, "gram", p);
  if (!gram.is_array() || gram.size() != n)
    throw field_error(p + ".gram", "expected " + std::to_string(n) + " rows");
  s.gram = RationalMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = as_int_vector(gram[i], n, p + ".gram[" + std::to_string(i) + "]");
    for (std::size_t k = 0; k < n; ++k) s.gram(i, k) = row[k];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      if (s.gram(i, k) != s.gram(k, i))
        throw field_error(p + ".gram", "not symmetric: entry [" + std::to_string(i) + "][" + std::to_string(k) +
                                           "] = " + to_string(s.gram(i, k)) + " but [" + std::to_string(k) + "][" +
                                           std::to_string(i) + "] = " + to_string(s.gram(k, i)));

  auto index_of = [&](const json& name, const std::string& path) {
    if (!name.is_string()) throw field_error(path, "expected a basis name");
    auto idx = s.basis_index(name.get<std::string>());
    if (!idx) throw field_error(path, "unresolved reference '" + name.get<std::string>() + "'");
    return *idx;
  };

  if (j.contains("exceptional")) {
    const json& ex = j["exceptional"];
    if (!ex.is_object()) throw field_error(p + ".exceptional", "expected an object");
    for (const auto& [name, meta] : ex.items()) {
      const std::string mp = p + ".exceptional." + name;
      std::size_t i = index_of(json(name), mp);
      s.exceptional_meta[i] = {name, as_int(member(meta, "self_intersection", mp), mp + ".self_intersection"),
                               as_int(member(meta, "genus", mp), mp + ".genus")};
    }
  }
  if (j.contains("singular_points")) {
    const json& sp = j["singular_points"];
    if (!sp.is_array()) throw field_error(p + ".singular_points", "expected an array");
    for (std::size_t k = 0; k < sp.size(); ++k) {
      const std::string xp = p + ".singular_points[" + std::to_string(k) + "]";
      SingularPoint x;
      const json& nm = member(sp[k], "name", xp);
      if (!nm.is_string()) throw field_error(xp + ".name", "expected a string");
      x.name = nm.get<std::string>();
      const json& ex = member(sp[k], "exceptional", xp);
      if (!ex.is_array()) throw field_error(xp + ".exceptional", "expected an array of basis names");
      for (std::size_t e = 0; e < ex.size(); ++e)
        x.exceptional.push_back(index_of(ex[e], xp + ".exceptional[" + std::to_string(e) + "]"));
      if (sp[k].contains("chi_local_structure"))
        x.local_structure_euler = as_int(sp[k]["chi_local_structure"], xp + ".chi_local_structure");
      s.singular_points.push_back(std::move(x));
    }
  }
  s.canonical_resolution = as_int_vector(member(j, "canonical", p), n, p + ".canonical");
  s.chi_structure_resolution = as_int(member(j, "chi_structure_resolution", p), p + ".chi_structure_resolution");
  if (j.contains("curves")) {
    const json& cs = j["curves"];
    if (!cs.is_array()) throw field_error(p + ".curves", "expected an array");
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const std::string cp = p + ".curves[" + std::to_string(k) + "]";
      const json& nm = member(cs[k], "name", cp);
      if (!nm.is_string()) throw field_error(cp + ".name", "expected a string");
      s.curve_inventory.push_back({nm.get<std::string>(), as_int_vector(member(cs[k], "coords", cp), n, cp + ".coords")});
    }
  }
  return make_surface(std::move(s));
}

// A divisor given either by name or by a coordinate array.
inline RationalVector divisor_coords(const json& j, const WorkspaceDocument& doc, const std::string& path) {
  if (j.is_string()) {
    auto it = doc.divisors.find(j.get<std::string>());
    if (it == doc.divisors.end()) throw field_error(path, "unresolved reference '" + j.get<std::string>() + "'");
    return it->second.coords();
  }
  return as_rational_vector(j, doc.surface->rank(), path);
}

inline SheafEntry parse_sheaf(const json& j, const WorkspaceDocument& doc, const std::string& path) {
  if (!j.is_object()) throw field_error(path, "expected an object");
  const SurfacePtr& s = doc.surface;
  SheafEntry entry;
  try {
    if (j.contains("rank")) {
      std::int64_t rank = as_int(j["rank"], path + ".rank");
      RationalVector c1 = divisor_coords(member(j, "c1", path), doc, path + ".c1");
      for (const auto& c : c1)
        if (!is_integer(c)) throw field_error(path + ".c1", "c1 of F must have integer coordinates");
      Rational ch2 = as_rational(member(j, "ch2", path), path + ".ch2");
      std::map<std::size_t, LocalSheafInvariant> locals;
      if (j.contains("locals")) {
        const json& lj = j["locals"];
        if (!lj.is_object()) throw field_error(path + ".locals", "expected an object");
        for (const auto& [pt, inv] : lj.items()) {
          auto x = s->point_index(pt);
          if (!x) throw field_error(path + ".locals", "unresolved reference '" + pt + "'");
          const std::string lp = path + ".locals." + pt;
          LocalSheafInvariant li;
          if (inv.contains("chi")) li.chi_local = as_int(inv["chi"], lp + ".chi");
          if (inv.contains("r1")) li.r1_length = as_int(inv["r1"], lp + ".r1");
          locals[*x] = li;
        }
      }
      entry.data = ResolutionSheafData(rank, DivisorClass::resolution(s, std::move(c1)), std::move(ch2), std::move(locals));
    } else {
      std::int64_t ch0 = as_int(member(j, "ch0", path), path + ".ch0");
      RationalVector ch1 = divisor_coords(member(j, "ch1", path), doc, path + ".ch1");
      Rational ch2 = as_rational(member(j, "ch2", path), path + ".ch2");
      entry.data = MumfordChern(ch0, DivisorClass::base(s, std::move(ch1)), std::move(ch2));
      entry.torsion = ch0 == 0;
    }
  } catch (const UsageError& e) {
    throw field_error(path, e.what());
  }
  if (j.contains("torsion")) {
    if (!j["torsion"].is_boolean()) throw field_error(path + ".torsion", "expected a boolean");
    entry.torsion = j["torsion"].get<bool>();
  }
  if (j.contains("hn")) {
    const json& hn = j["hn"];
    entry.hn = HnBounds{as_rational(member(hn, "mu_min", path + ".hn"), path + ".hn.mu_min"),
                        as_rational(member(hn, "mu_max", path + ".hn"), path + ".hn.mu_max")};
  }
  try {
    (void)entry.object();
  } catch (const UsageError& e) {
    throw field_error(path, e.what());
  }
  return entry;
}

}  // namespace detail

inline WorkspaceDocument parse_workspace_json(const json& root) {
  if (!root.is_object()) throw DataError("workspace: top level must be an object");
  for (const auto& [key, _] : root.items())
    if (key != "surface" && key != "divisors" && key != "sheaves" && key != "stability")
      throw DataError("workspace: unknown top-level key '" + key + "'");
  WorkspaceDocument doc;
  doc.surface = detail::parse_surface(detail::member(root, "surface", "workspace"));
  if (root.contains("divisors")) {
    const json& ds = root["divisors"];
    if (!ds.is_object()) throw DataError("divisors: expected an object");
    for (const auto& [name, dj] : ds.items()) {
      const std::string path = "divisors." + name;
      const json& lv = detail::member(dj, "level", path);
      if (!lv.is_string() || (lv != "base" && lv != "resolution"))
        throw detail::field_error(path + ".level", "expected \"base\" or \"resolution\"");
      RationalVector c = detail::as_rational_vector(detail::member(dj, "coords", path), doc.surface->rank(), path + ".coords");
      try {
        doc.divisors.emplace(name, lv == "base" ? DivisorClass::base(doc.surface, std::move(c))
                                                : DivisorClass::resolution(doc.surface, std::move(c)));
      } catch (const UsageError& e) {
        throw detail::field_error(path, e.what());
      }
    }
  }
  if (root.contains("sheaves")) {
    const json& ss = root["sheaves"];
    if (!ss.is_object()) throw DataError("sheaves: expected an object");
    for (const auto& [name, sj] : ss.items()) doc.sheaves.emplace(name, detail::parse_sheaf(sj, doc, "sheaves." + name));
  }
  if (root.contains("stability") && !root["stability"].is_null()) {
    const json& st = root["stability"];
    StabilityEntry entry;
    for (const char* key : {"H", "B"}) {
      const json& ref = detail::member(st, key, "stability");
      const std::string path = std::string("stability.") + key;
      if (!ref.is_string()) throw detail::field_error(path, "expected a divisor name");
      auto it = doc.divisors.find(ref.get<std::string>());
      if (it == doc.divisors.end())
        throw detail::field_error(path, "unresolved reference '" + ref.get<std::string>() + "'");
      if (it->second.level() != Level::base) throw detail::field_error(path, "must name a base-level divisor");
      (key[0] == 'H' ? entry.h : entry.b) = ref.get<std::string>();
    }
    const json& c = detail::member(st, "C", "stability");
    if (c.is_string() && c == "auto-duval-char0")
      entry.c = AutoDuValChar0{};
    else
      entry.c = detail::as_rational(c, "stability.C");
    doc.stability = entry;
  }
  return doc;
}

inline WorkspaceDocument parse_workspace_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("workspace is not valid JSON: ") + e.what());
  }
  return parse_workspace_json(root);
}

inline WorkspaceDocument parse_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open workspace '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_workspace_text(buf.str());
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

inline json serialize_workspace(const WorkspaceDocument& doc) {
  using detail::rational_json;
  const SurfaceModel& s = *doc.surface;
  json surf = json::object();
  if (!s.name.empty()) surf["name"] = s.name;
  surf["basis"] = s.basis;
  json gram = json::array();
  for (std::size_t i = 0; i < s.rank(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < s.rank(); ++k) row.push_back(rational_json(s.gram(i, k)));
    gram.push_back(row);
  }
  surf["gram"] = gram;
  json ex = json::object();
  for (const auto& [i, meta] : s.exceptional_meta)
    ex[s.basis[i]] = {{"self_intersection", meta.self_intersection}, {"genus", meta.arithmetic_genus}};
  surf["exceptional"] = ex;
  json sp = json::array();
  for (const auto& x : s.singular_points) {
    json names = json::array();
    for (std::size_t i : x.exceptional) names.push_back(s.basis[i]);
    sp.push_back({{"name", x.name}, {"exceptional", names}, {"chi_local_structure", x.local_structure_euler}});
  }
  surf["singular_points"] = sp;
  surf["canonical"] = s.canonical_resolution;
  surf["chi_structure_resolution"] = s.chi_structure_resolution;
  json curves = json::array();
  for (const auto& c : s.curve_inventory) curves.push_back({{"name", c.name}, {"coords", c.coords}});
  surf["curves"] = curves;

  auto coords_json = [&](const DivisorClass& d) {
    json a = json::array();
    for (const auto& c : d.coords()) a.push_back(rational_json(c));
    return a;
  };

  json root = json::object();
  root["surface"] = surf;
  json divs = json::object();
  for (const auto& [name, d] : doc.divisors)
    divs[name] = {{"level", std::string(to_string(d.level()))}, {"coords", coords_json(d)}};
  root["divisors"] = divs;
  json sheaves = json::object();
  for (const auto& [name, e] : doc.sheaves) {
    json sj;
    if (const auto* f = std::get_if<ResolutionSheafData>(&e.data)) {
      sj["rank"] = f->rank();
      sj["c1"] = coords_json(f->c1());
      sj["ch2"] = rational_json(f->ch2());
      json locals = json::object();
      for (const auto& [x, inv] : f->locals())
        locals[s.singular_points[x].name] = {{"chi", inv.chi_local}, {"r1", inv.r1_length}};
      sj["locals"] = locals;
    } else {
      const auto& m = std::get<MumfordChern>(e.data);
      sj["ch0"] = m.ch0;
      sj["ch1"] = coords_json(m.ch1);
      sj["ch2"] = rational_json(m.ch2);
    }
    sj["torsion"] = e.torsion;
    if (e.hn) sj["hn"] = {{"mu_min", rational_json(e.hn->mu_min)}, {"mu_max", rational_json(e.hn->mu_max)}};
    sheaves[name] = sj;
  }
  root["sheaves"] = sheaves;
  if (doc.stability) {
    json st = {{"H", doc.stability->h}, {"B", doc.stability->b}};
    if (std::holds_alternative<AutoDuValChar0>(doc.stability->c))
      st["C"] = "auto-duval-char0";
    else
      st["C"] = rational_json(std::get<Rational>(doc.stability->c));
    root["stability"] = st;
  }
  return root;
}

// Value equality of two documents (surfaces compared by content).
inline bool same_document(const WorkspaceDocument& a, const WorkspaceDocument& b) {
  if (!(*a.surface == *b.surface) || a.stability != b.stability) return false;
  if (a.divisors.size() != b.divisors.size() || a.sheaves.size() != b.sheaves.size()) return false;
  for (const auto& [name, d] : a.divisors) {
    auto it = b.divisors.find(name);
    if (it == b.divisors.end() || it->second.level() != d.level() || it->second.coords() != d.coords()) return false;
  }
  for (const auto& [name, e] : a.sheaves) {
    auto it = b.sheaves.find(name);
    if (it == b.sheaves.end()) return false;
    const SheafEntry& o = it->second;
    if (e.torsion != o.torsion || e.hn.has_value() != o.hn.has_value()) return false;
    if (e.hn && (e.hn->mu_min != o.hn->mu_min || e.hn->mu_max != o.hn->mu_max)) return false;
    if (e.is_resolution_data() != o.is_resolution_data()) return false;
    if (const auto* f = std::get_if<ResolutionSheafData>(&e.data)) {
      const auto& g = std::get<ResolutionSheafData>(o.data);
      if (f->rank() != g.rank() || f->c1().coords() != g.c1().coords() || f->ch2() != g.ch2() ||
          f->locals() != g.locals())
        return false;
    } else {
      const auto& m = std::get<MumfordChern>(e.data);
      const auto& n = std::get<MumfordChern>(o.data);
      if (m.ch0 != n.ch0 || m.ch1.coords() != n.ch1.coords() || m.ch2 != n.ch2) return false;
    }
  }
  return true;
}

// Resolves the stability section into parameters. `auto-duval-char0` takes
// the Bogomolov constant 0 (only for du Val surfaces) and enlarges it by the
// curve inventory.
inline StabilityParams stability_params(const WorkspaceDocument& doc, bool unchecked_ample) {
  if (!doc.stability) throw UsageError("workspace has no stability section");
  const DivisorClass& h = doc.divisor(doc.stability->h);
  const DivisorClass& b = doc.divisor(doc.stability->b);
  Rational c;
  if (std::holds_alternative<AutoDuValChar0>(doc.stability->c)) {
    auto base = default_bogomolov_constant(*doc.surface);
    if (!base)
      throw DataError("C = auto-duval-char0 needs every singular point to be du Val; supply C explicitly");
    c = support_constant(h, *base);
  } else {
    c = std::get<Rational>(doc.stability->c);
  }
  return StabilityParams(h, b, c, unchecked_ample);
}

}  // namespace mumford::cli
