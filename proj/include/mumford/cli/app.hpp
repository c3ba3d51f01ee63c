#pragma once

// Command-line driver. Exit codes: 0 success, 1 usage error, 2 data or
// validation error, 3 consistency error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mumford/cli/commands.hpp"

namespace mumford::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_data = 2, exit_consistency = 3 };

inline PlotWindow parse_window(const std::string& text) {
  PlotWindow w;
  double* slots[] = {&w.b_min, &w.b_max, &w.t_min, &w.t_max};
  std::stringstream ss(text);
  std::string part;
  int k = 0;
  while (std::getline(ss, part, ':')) {
    if (k == 4) throw UsageError("--window expects bmin:bmax:tmin:tmax");
    try {
      std::size_t used = 0;
      *slots[k] = std::stod(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("--window: cannot read '" + part + "' as a number");
    }
    ++k;
  }
  if (k != 4) throw UsageError("--window expects bmin:bmax:tmin:tmax");
  if (!(w.b_min < w.b_max) || !(w.t_min < w.t_max) || w.t_min < 0)
    throw UsageError("--window needs bmin < bmax and 0 <= tmin < tmax");
  return w;
}

inline int run(std::vector<std::string> argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intersection theory, Chern characters and stability numerics on normal surfaces", "mumford"};
  app.require_subcommand(1);

  std::string workspace, window;
  Options opt;
  app.add_option("--workspace", workspace, "workspace file (otherwise the first positional argument)");
  app.add_flag("--json", opt.json, "print the report as JSON");
  app.add_option("--out", opt.out, "SVG output path (walls)");
  app.add_option("--window", window, "plot window bmin:bmax:tmin:tmax (walls)");
  app.add_flag("--unchecked-ample", opt.unchecked_ample, "skip the numerical ampleness check on H");

  std::vector<std::string> positional;
  std::string chosen;
  for (const auto& [name, entry] : command_table()) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    sub->fallthrough();
    sub->add_option("args", positional, "[workspace] names...");
    sub->callback([&chosen, n = name] { chosen = n; });
  }

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (!window.empty()) opt.window = parse_window(window);
    if (workspace.empty()) {
      if (positional.empty()) throw UsageError("no workspace given");
      workspace = positional.front();
      positional.erase(positional.begin());
    }
    const WorkspaceDocument doc = parse_workspace(workspace);
    const Report rep = command_table().at(chosen).first(doc, positional, opt);
    out << (opt.json ? rep.json_text() : rep.text());
    for (const auto& [path, contents] : rep.files) {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw DataError("cannot write '" + path + "'");
      f << contents;
    }
    return exit_ok;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return exit_data;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << "\n";
    return exit_consistency;
  }
}

}  // namespace mumford::cli
