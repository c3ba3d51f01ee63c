#pragma once

// A normal surface S presented through a resolution f: S~ -> S. The model
// stores a finite-rank sublattice of N(S~) (named basis + Gram matrix), the
// exceptional curves grouped by the singular point they contract to, K_{S~}
// and chi(O_{S~}).

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mumford/exact_core.hpp"

namespace mumford {

struct ExceptionalComponent {
  std::string name;
  std::int64_t self_intersection = -1;
  std::int64_t arithmetic_genus = 0;
  friend bool operator==(const ExceptionalComponent&, const ExceptionalComponent&) = default;
};

struct SingularPoint {
  std::string name;
  std::vector<std::size_t> exceptional;  // basis indices
  // chi(x, O_{S~}) = length of (R^1 f_* O_{S~})_x. Supplied, never computed.
  std::int64_t local_structure_euler = 0;
  friend bool operator==(const SingularPoint&, const SingularPoint&) = default;
};

struct Curve {
  std::string name;
  std::vector<std::int64_t> coords;  // class on S~ in the resolution basis
  friend bool operator==(const Curve&, const Curve&) = default;
};

struct SurfaceModel {
  std::string name;
  std::vector<std::string> basis;
  RationalMatrix gram;
  std::map<std::size_t, ExceptionalComponent> exceptional_meta;
  std::vector<SingularPoint> singular_points;
  std::vector<std::int64_t> canonical_resolution;
  std::int64_t chi_structure_resolution = 1;
  // User-curated; nef/ampleness checks are only as complete as this list.
  std::vector<Curve> curve_inventory;

  std::size_t rank() const { return basis.size(); }

  bool is_exceptional(std::size_t i) const { return exceptional_meta.contains(i); }

  std::optional<std::size_t> basis_index(std::string_view n) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == n) return i;
    return std::nullopt;
  }

  std::optional<std::size_t> point_index(std::string_view n) const {
    for (std::size_t i = 0; i < singular_points.size(); ++i)
      if (singular_points[i].name == n) return i;
    return std::nullopt;
  }

  std::vector<std::size_t> non_exceptional_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rank(); ++i)
      if (!is_exceptional(i)) out.push_back(i);
    return out;
  }

  RationalVector canonical_vector() const {
    return RationalVector(canonical_resolution.begin(), canonical_resolution.end());
  }

  RationalMatrix exceptional_block(const SingularPoint& x) const { return gram.principal(x.exceptional); }

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

using SurfacePtr = std::shared_ptr<const SurfaceModel>;

// Empty result means the model is valid.
inline std::vector<std::string> validate(const SurfaceModel& s) {
  std::vector<std::string> v;
  const std::size_t n = s.rank();
  if (n == 0) v.push_back("basis is empty");
  if (s.gram.rows() != n || s.gram.cols() != n) {
    v.push_back("gram is " + std::to_string(s.gram.rows()) + "x" + std::to_string(s.gram.cols()) +
                ", expected " + std::to_string(n) + "x" + std::to_string(n));
    return v;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integer(s.gram(i, j)))
        v.push_back("gram entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not an integer");
      if (j > i && s.gram(i, j) != s.gram(j, i))
        v.push_back("gram is not symmetric: entries (" + s.basis[i] + "," + s.basis[j] + ") and (" + s.basis[j] +
                    "," + s.basis[i] + ") differ");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (s.basis[i] == s.basis[j]) v.push_back("duplicate basis name '" + s.basis[i] + "'");

  if (s.canonical_resolution.size() != n)
    v.push_back("canonical class has " + std::to_string(s.canonical_resolution.size()) + " coordinates, expected " +
                std::to_string(n));

  std::map<std::size_t, std::string> owner;
  for (const auto& x : s.singular_points) {
    if (x.local_structure_euler < 0) v.push_back("singular point " + x.name + ": negative local_structure_euler");
    if (x.exceptional.empty()) v.push_back("singular point " + x.name + " has no exceptional components");
    for (std::size_t i : x.exceptional) {
      if (i >= n) {
        v.push_back("singular point " + x.name + ": basis index " + std::to_string(i) + " out of range");
        continue;
      }
      if (!s.is_exceptional(i))
        v.push_back("singular point " + x.name + ": " + s.basis[i] + " has no exceptional metadata");
      auto [it, fresh] = owner.emplace(i, x.name);
      if (!fresh) v.push_back(s.basis[i] + " belongs to both " + it->second + " and " + x.name);
    }
  }
  for (const auto& [i, meta] : s.exceptional_meta) {
    if (i >= n) {
      v.push_back("exceptional metadata for out-of-range index " + std::to_string(i));
      continue;
    }
    const std::string& nm = s.basis[i];
    if (!owner.contains(i)) v.push_back("exceptional " + nm + " belongs to no singular point");
    if (meta.self_intersection > -1) v.push_back("exceptional " + nm + " has self-intersection >= 0");
    if (meta.arithmetic_genus < 0) v.push_back("exceptional " + nm + " has negative genus");
    if (s.gram(i, i) != meta.self_intersection)
      v.push_back("exceptional " + nm + ": self_intersection disagrees with gram diagonal");
    if (s.canonical_resolution.size() == n) {
      Rational k_dot_e = 0;
      for (std::size_t j = 0; j < n; ++j) k_dot_e += s.canonical_resolution[j] * s.gram(j, i);
      if (k_dot_e != 2 * meta.arithmetic_genus - 2 - meta.self_intersection)
        v.push_back("adjunction fails on " + nm + ": K.E = " + to_string(k_dot_e) + ", expected " +
                    std::to_string(2 * meta.arithmetic_genus - 2 - meta.self_intersection));
    }
  }
  if (!v.empty()) return v;

  for (const auto& x : s.singular_points)
    if (definiteness(s.exceptional_block(x)) != Definiteness::negative_definite)
      v.push_back("exceptional block of " + x.name + " is not negative definite");
  for (const auto& c : s.curve_inventory)
    if (c.coords.size() != n) v.push_back("curve " + c.name + " has wrong number of coordinates");
  return v;
}

// Validates and freezes a model; throws DataError listing every violation.
inline SurfacePtr make_surface(SurfaceModel s) {
  auto violations = validate(s);
  if (!violations.empty()) {
    std::string msg = "invalid surface model '" + s.name + "':";
    for (const auto& m : violations) msg += "\n  " + m;
    throw DataError(msg);
  }
  return std::make_shared<const SurfaceModel>(std::move(s));
}

// Coefficients a_i of K_f = sum a_i E_i at x, in the order of x.exceptional,
// solving (K_{S~} - K_f) . E_j = 0.
inline RationalVector discrepancy_divisor(const SurfaceModel& s, const SingularPoint& x) {
  const RationalVector k = s.canonical_vector();
  RationalVector rhs;
  rhs.reserve(x.exceptional.size());
  for (std::size_t j : x.exceptional) {
    Rational kd = 0;
    for (std::size_t i = 0; i < s.rank(); ++i) kd += k[i] * s.gram(i, j);
    rhs.push_back(kd);
  }
  auto sol = solve_linear(s.exceptional_block(x), rhs);
  if (!sol) throw DataError("exceptional block of " + x.name + " is singular");
  return *sol;
}

inline Integer denominator_bound(const SurfaceModel& s) {
  Integer n = 1;
  for (const auto& x : s.singular_points) {
    Rational d = abs(determinant(s.exceptional_block(x)));
    n *= d.get_num();
  }
  return n;
}

inline std::int64_t chi_structure_base(const SurfaceModel& s) {
  std::int64_t chi = s.chi_structure_resolution;
  for (const auto& x : s.singular_points) chi += x.local_structure_euler;
  return chi;
}

// Every singular point rational with vanishing discrepancy (rational Gorenstein).
inline bool is_du_val(const SurfaceModel& s) {
  for (const auto& x : s.singular_points) {
    if (x.local_structure_euler != 0) return false;
    for (const Rational& a : discrepancy_divisor(s, x))
      if (a != 0) return false;
  }
  return true;
}

}  // namespace mumford
