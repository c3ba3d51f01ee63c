#pragma once

#include <array>
#include <map>
#include <string_view>

#include "mumford/resolution_model.hpp"

namespace mumford {

inline constexpr std::array<std::string_view, 6> builtin_surface_names = {
    "projective-plane", "hirzebruch-2", "quadric-cone", "third-cone", "a2-cone", "p1xp1",
};

namespace detail {

inline RationalMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix m(rows.size(), rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace detail

// Built-in models. All exceptional configurations are rational, so
// local_structure_euler is 0 throughout.
//
//   projective-plane  P^2, basis {h}.
//   hirzebruch-2      F_2 itself (smooth), basis {s, F} with s^2 = -2.
//   quadric-cone      F_2 with the (-2)-section contracted: an A1 point.
//   third-cone        F_3 with the (-3)-section contracted: the 1/3(1,1) point.
//   a2-cone           F_2 blown up twice over a fibre so that the section s and
//                     the strict fibre transform C form an A2 chain; basis
//                     {s, C, G, E} where G is the strict transform of the first
//                     exceptional curve (a disjoint (-2)-curve) and E the last
//                     (-1)-curve. The chain {s, C} is contracted.
//   p1xp1             P^1 x P^1, basis {A, B}.
namespace detail {

inline SurfacePtr build_builtin_surface(std::string_view name) {
  using detail::int_matrix;
  SurfaceModel s;
  s.name = std::string(name);
  if (name == "projective-plane") {
    s.basis = {"h"};
    s.gram = int_matrix({{1}});
    s.canonical_resolution = {-3};
    s.curve_inventory = {{"h", {1}}};
  } else if (name == "hirzebruch-2" || name == "quadric-cone") {
    s.basis = {"s", "F"};
    s.gram = int_matrix({{-2, 1}, {1, 0}});
    s.canonical_resolution = {-2, -4};
    if (name == "hirzebruch-2") {
      s.curve_inventory = {{"s", {1, 0}}, {"F", {0, 1}}};
    } else {
      s.exceptional_meta[0] = {"s", -2, 0};
      s.singular_points = {{"p", {0}, 0}};
      s.curve_inventory = {{"L", {0, 1}}};
    }
  } else if (name == "third-cone") {
    s.basis = {"s", "F"};
    s.gram = int_matrix({{-3, 1}, {1, 0}});
    s.canonical_resolution = {-2, -5};
    s.exceptional_meta[0] = {"s", -3, 0};
    s.singular_points = {{"p", {0}, 0}};
    s.curve_inventory = {{"L", {0, 1}}};
  } else if (name == "a2-cone") {
    s.basis = {"s", "C", "G", "E"};
    s.gram = int_matrix({{-2, 1, 0, 0}, {1, -2, 0, 1}, {0, 0, -2, 1}, {0, 1, 1, -1}});
    s.canonical_resolution = {-2, -4, -3, -6};
    s.exceptional_meta[0] = {"s", -2, 0};
    s.exceptional_meta[1] = {"C", -2, 0};
    s.singular_points = {{"p", {0, 1}, 0}};
    s.curve_inventory = {{"G", {0, 0, 1, 0}}, {"E", {0, 0, 0, 1}}, {"F", {0, 1, 1, 2}}, {"T", {1, 2, 2, 4}}};
  } else if (name == "p1xp1") {
    s.basis = {"A", "B"};
    s.gram = int_matrix({{0, 1}, {1, 0}});
    s.canonical_resolution = {-2, -2};
    s.curve_inventory = {{"A", {1, 0}}, {"B", {0, 1}}};
  } else {
    throw UsageError("unknown built-in surface '" + std::string(name) + "'");
  }
  return make_surface(std::move(s));
}

}  // namespace detail

// One shared instance per name, so classes from separate calls can be combined.
inline SurfacePtr builtin_surface(std::string_view name) {
  static const std::map<std::string, SurfacePtr, std::less<>> cache = [] {
    std::map<std::string, SurfacePtr, std::less<>> m;
    for (auto n : builtin_surface_names) m.emplace(std::string(n), detail::build_builtin_surface(n));
    return m;
  }();
  auto it = cache.find(name);
  if (it == cache.end()) throw UsageError("unknown built-in surface '" + std::string(name) + "'");
  return it->second;
}

}  // namespace mumford
