#pragma once

// Report-producing subcommands. Every command returns a Report holding the
// text lines and a JSON object with the same content; numbers are exact and
// printed as "p/q".

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mumford/cli/svg.hpp"
#include "mumford/cli/workspace.hpp"

namespace mumford::cli {

using ordered_json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::string out;
  std::optional<PlotWindow> window;
  bool unchecked_ample = false;
};

struct Report {
  std::vector<std::string> lines;
  ordered_json data = ordered_json::object();
  std::vector<std::string> notes;
  // Files to write after the report is printed: path -> contents.
  std::map<std::string, std::string> files;

  void add(const std::string& key, const std::string& value) {
    lines.push_back(key + " = " + value);
    data[key] = value;
  }
  void note(const std::string& text) { notes.push_back(text); }

  std::string text() const {
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    for (const auto& n : notes) out += "note: " + n + "\n";
    return out;
  }
  std::string json_text() const {
    ordered_json j = data;
    if (!notes.empty()) j["notes"] = notes;
    return j.dump(2) + "\n";
  }
};

namespace detail {

inline void expect_args(const std::vector<std::string>& args, std::size_t lo, std::size_t hi, const char* usage) {
  if (args.size() < lo || args.size() > hi) throw UsageError(std::string("usage: ") + usage);
}

inline void note_defaults(Report& rep, const WorkspaceDocument& doc, const SheafEntry& e) {
  const auto* f = std::get_if<ResolutionSheafData>(&e.data);
  if (!f) return;
  for (std::size_t x : f->defaulted_points())
    rep.note("assumed chi(x,F) = 0 and l_x(R^1 f_*F) = 0 at " + doc.surface->singular_points[x].name);
}

inline std::string coords_text(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

}  // namespace detail

inline Report cmd_intersect(const WorkspaceDocument& doc, const std::vector<std::string>& a, const Options&) {
  detail::expect_args(a, 2, 2, "intersect <workspace> <divisor> <divisor>");
  Report rep;
  rep.add(a[0] + "." + a[1], to_string(intersect(doc.divisor(a[0]), doc.divisor(a[1]))));
  return rep;
}

inline Report cmd_pullback(const WorkspaceDocument& doc, const std::vector<std::string>& a, const Options&) {
  detail::expect_args(a, 1, 1, "pullback <workspace> <divisor>");
  const DivisorClass& d = doc.divisor(a[0]);
  if (d.level() != Level::base) throw UsageError("pullback needs a base-level divisor; '" + a[0] + "' is resolution-level");
  const DivisorClass p = mumford_pullback(d);
  Report rep;
  rep.add("f^*" + a[0], to_string(p));
  rep.add("coords", detail::coords_text(p.coords()));
  rep.add("denominator_bound", denominator_bound(*doc.surface).get_str());
  return rep;
}

inline Report cmd_chern(const WorkspaceDocument& doc, const std::vector<std::string>& a, const Options&) {
  detail::expect_args(a, 1, 1, "chern <workspace> <sheaf>");
  const SheafEntry& e = doc.sheaf(a[0]);
  const MumfordChern m = e.chern();
  Report rep;
  rep.add("ch0", std::to_string(m.ch0));
  rep.add("ch1", to_string(m.ch1));
  rep.add("ch2", to_string(m.ch2));
  rep.add("c2", to_string(c2_mumford(m)));
  if (const auto* f = std::get_if<ResolutionSheafData>(&e.data)) rep.add("c1(f,F)", to_string(exceptional_part(*f)));
  detail::note_defaults(rep, doc, e);
  return rep;
}

inline Report cmd_chi(const WorkspaceDocument& doc, const std::vector<std::string>& a, const Options&) {
  detail::expect_args(a, 1, 1, "chi <workspace> <sheaf>");
  const SheafEntry& e = doc.sheaf(a[0]);
  const MumfordChern m = e.chern();
  const Rational chi = riemann_roch_chi(m);
  Report rep;
  rep.add("chi", to_string(chi));
  if (!is_integer(chi)) rep.note("chi is not an integer; the class is not realized by a sheaf or the local data is inconsistent");
  detail::note_defaults(rep, doc, e);
  return rep;
}

inline Report cmd_delta(const WorkspaceDocument& doc, const std::vector<std::string>& a, const Options&) {
  detail::expect_args(a, 1, 1, "delta <workspace> <sheaf>");
  const SheafEntry& e = doc.sheaf(a[0]);
  const MumfordChern m = e.chern();
  Report rep;
  rep.add("Delta", to_string(discriminant(m)));
  if (const auto* f = std::get_if<ResolutionSheafData>(&e.data)) {
    rep.add("Delta(F)", to_string(resolution_discriminant(*f)));
    rep.add("Delta(F) - Delta", to_string(discriminant_difference(*f)));
  }
  detail::note_defaults(rep, doc, e);
  return rep;
}

namespace detail {

inline std::pair<Rational, std::string> bogomolov_constant(const WorkspaceDocument& doc) {
  if (doc.stability && std::holds_alternative<Rational>(doc.stability->c))
    return {std::get<Rational>(doc.stability->c), "from the stability section"};
  auto c = default_bogomolov_constant(*doc.surface);
  if (!c) throw DataError("surface has non-du Val singular points; supply C in the stability section");
  return {*c, "characteristic 0, du Val singularities"};
}

}  // namespace detail

inline Report cmd_bogomolov(const WorkspaceDocument& doc, const std::vector<std::string>& a, const Options&) {
  detail::expect_args(a, 1, 1, "bogomolov <workspace> <sheaf>");
  const SheafEntry& e = doc.sheaf(a[0]);
  const auto [c, why] = detail::bogomolov_constant(doc);
  const BogomolovResult r = bogomolov_check(c, e.chern());
  Report rep;
  rep.lines.push_back(std::string(r.holds ? "holds" : "violated") + ", margin = " + to_string(r.margin));
  rep.data["result"] = r.holds ? "holds" : "violated";
  rep.data["margin"] = to_string(r.margin);
  rep.add("C", to_string(c));
  rep.note("C " + why);
  detail::note_defaults(rep, doc, e);
  return rep;
}

inline Report cmd_charge(const WorkspaceDocument& doc, const std::vector<std::string>& a, const Options& opt) {
  detail::expect_args(a, 1, 1, "charge <workspace> <sheaf>");
  const StabilityParams p = stability_params(doc, opt.unchecked_ample);
  const SheafEntry& e = doc.sheaf(a[0]);
  const NumericalObject obj = e.object();
  Report rep;
  rep.add("Z", to_string(charge(p, obj.chern())));
  const HeartSide side = classify_heart(p, obj);
  rep.add("heart", std::string(to_string(side)));
  if (side == HeartSide::torsion_part || side == HeartSide::free_part)
    rep.add("phase", to_string(phase(p, obj)));
  if (side == HeartSide::insufficient_data) rep.note("no HN slope bounds given; heart membership undecided");
  detail::note_defaults(rep, doc, e);
  return rep;
}

inline Report cmd_support(const WorkspaceDocument& doc, const std::vector<std::string>& a, const Options& opt) {
  detail::expect_args(a, 0, 1000, "support <workspace> [sheaf...]");
  const StabilityParams p = stability_params(doc, opt.unchecked_ample);
  Report rep;
  const auto [bc, why] = detail::bogomolov_constant(doc);
  rep.add("C_S", to_string(p.C()));
  rep.add("inventory bound", to_string(support_constant(p.H(), bc)));
  rep.note("inventory bound is relative to the curve inventory; Bogomolov constant " + to_string(bc) + " (" + why + ")");
  for (const auto& name : a) {
    const Rational q = support_form(p, doc.sheaf(name).chern());
    rep.add("Q(" + name + ")", to_string(q));
  }
  return rep;
}

inline Report cmd_walls(const WorkspaceDocument& doc, const std::vector<std::string>& a, const Options& opt) {
  detail::expect_args(a, 2, 1000, "walls <workspace> <sheaf> <sheaf> [sheaf...]");
  const StabilityParams p = stability_params(doc, opt.unchecked_ample);
  Report rep;
  std::vector<LabeledWall> drawn;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const std::string label = a[i] + "|" + a[j];
      const WallLocus wl = wall_locus(p, doc.sheaf(a[i]).chern(), doc.sheaf(a[j]).chern());
      std::string desc(to_string(wl.kind));
      if (wl.kind == WallKind::vertical_line) desc += " b = " + to_string(wl.line_b);
      if (wl.kind == WallKind::semicircle)
        desc += " center = " + to_string(wl.center) + ", radius^2 = " + to_string(wl.radius_sq);
      rep.lines.push_back("wall(" + label + "): " + desc);
      rep.lines.push_back("  q_bb = " + to_string(wl.q_bb) + ", q_tt = " + to_string(wl.q_tt) + ", q_b = " +
                          to_string(wl.q_b) + ", q_t = " + to_string(wl.q_t) + ", q_1 = " + to_string(wl.q_1));
      ordered_json w = {{"kind", std::string(to_string(wl.kind))},
                        {"q_bb", to_string(wl.q_bb)},
                        {"q_tt", to_string(wl.q_tt)},
                        {"q_b", to_string(wl.q_b)},
                        {"q_t", to_string(wl.q_t)},
                        {"q_1", to_string(wl.q_1)}};
      if (wl.kind == WallKind::vertical_line) w["b"] = to_string(wl.line_b);
      if (wl.kind == WallKind::semicircle) {
        w["center"] = to_string(wl.center);
        w["radius_sq"] = to_string(wl.radius_sq);
      }
      rep.data["walls"][label] = w;
      drawn.push_back({label, wl});
    }
  rep.note("slice H = t*" + doc.stability->h + ", B = " + doc.stability->b + " + b*" + doc.stability->h + ", C = " +
           to_string(p.C()));
  if (!opt.out.empty()) rep.files[opt.out] = render_walls_svg(drawn, opt.window.value_or(PlotWindow{}));
  return rep;
}

using Command = std::function<Report(const WorkspaceDocument&, const std::vector<std::string>&, const Options&)>;

inline const std::map<std::string, std::pair<Command, std::string>>& command_table() {
  static const std::map<std::string, std::pair<Command, std::string>> table = {
      {"intersect", {cmd_intersect, "Mumford intersection number of two divisors"}},
      {"pullback", {cmd_pullback, "Mumford pullback of a base divisor to the resolution"}},
      {"chern", {cmd_chern, "Mumford Chern character (ch0, ch1, ch2) and c2"}},
      {"chi", {cmd_chi, "Euler characteristic by Riemann-Roch"}},
      {"delta", {cmd_delta, "discriminant, and its change from the resolution for F-data"}},
      {"bogomolov", {cmd_bogomolov, "check Delta + C ch0^2 >= 0"}},
      {"charge", {cmd_charge, "central charge, heart side and phase"}},
      {"support", {cmd_support, "support constant and support form values"}},
      {"walls", {cmd_walls, "numerical walls between classes (optionally plotted to SVG)"}},
  };
  return table;
}

}  // namespace mumford::cli
