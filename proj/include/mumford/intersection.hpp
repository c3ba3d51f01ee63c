#pragma once

// Mumford pullback/pushforward and the rational intersection pairing on the
// base surface.
//
// Base classes are written in strict-transform coordinates: a vector in the
// resolution basis vanishing on every exceptional index. Their pairing is
// a.b := f^*a . f^*b computed on the resolution.

#include <utility>

#include "mumford/resolution_model.hpp"

namespace mumford {

enum class Level { resolution, base };

inline std::string_view to_string(Level l) { return l == Level::base ? "base" : "resolution"; }

class DivisorClass {
 public:
  DivisorClass() = default;

  static DivisorClass base(SurfacePtr s, RationalVector coords) {
    check_size(*s, coords);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (s->is_exceptional(i) && coords[i] != 0)
        throw UsageError("base-level class has nonzero coordinate on exceptional " + s->basis[i]);
    return DivisorClass(std::move(s), Level::base, std::move(coords));
  }

  static DivisorClass resolution(SurfacePtr s, RationalVector coords) {
    check_size(*s, coords);
    return DivisorClass(std::move(s), Level::resolution, std::move(coords));
  }

  static DivisorClass zero(SurfacePtr s, Level level) {
    RationalVector c(s->rank());
    return DivisorClass(std::move(s), level, std::move(c));
  }

  // Basis vector of a named generator.
  static DivisorClass generator(SurfacePtr s, std::size_t i, Level level) {
    RationalVector c(s->rank());
    c.at(i) = 1;
    return level == Level::base ? base(std::move(s), std::move(c)) : resolution(std::move(s), std::move(c));
  }

  const SurfacePtr& surface() const { return surface_; }
  Level level() const { return level_; }
  const RationalVector& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  bool has_integer_coords() const {
    for (const auto& c : coords_)
      if (!is_integer(c)) return false;
    return true;
  }

  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    same_kind(a, b);
    RationalVector c(a.coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
    return DivisorClass(a.surface_, a.level_, std::move(c));
  }
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + (-1) * b; }
  friend DivisorClass operator*(const Rational& k, const DivisorClass& a) {
    RationalVector c(a.coords_);
    for (auto& x : c) x *= k;
    return DivisorClass(a.surface_, a.level_, std::move(c));
  }

  // Same surface object, level and coordinates.
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.surface_ == b.surface_ && a.level_ == b.level_ && a.coords_ == b.coords_;
  }

 private:
  DivisorClass(SurfacePtr s, Level l, RationalVector c) : surface_(std::move(s)), level_(l), coords_(std::move(c)) {}

  static void check_size(const SurfaceModel& s, const RationalVector& c) {
    if (c.size() != s.rank())
      throw UsageError("divisor has " + std::to_string(c.size()) + " coordinates, surface rank is " +
                       std::to_string(s.rank()));
  }
  static void same_kind(const DivisorClass& a, const DivisorClass& b) {
    if (a.surface_ != b.surface_) throw UsageError("divisor classes live on different surfaces");
    if (a.level_ != b.level_) throw UsageError("cannot add a base class to a resolution class");
  }

  SurfacePtr surface_;
  Level level_ = Level::resolution;
  RationalVector coords_;
};

inline std::string to_string(const DivisorClass& d) {
  const auto& s = *d.surface();
  std::string out;
  for (std::size_t i = 0; i < d.coords().size(); ++i) {
    const Rational& c = d[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    std::string term = (mag == 1 ? std::string() : to_string(mag) + "*") + s.basis[i];
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

namespace detail {

// Pairing of a resolution-level vector with basis element j.
inline Rational dot_generator(const SurfaceModel& s, const RationalVector& v, std::size_t j) {
  Rational acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) acc += v[i] * s.gram(i, j);
  return acc;
}

// Adds to v the exceptional correction at x making v orthogonal to every
// exceptional curve over x.
inline void orthogonalize_at(const SurfaceModel& s, const SingularPoint& x, RationalVector& v) {
  RationalVector rhs;
  rhs.reserve(x.exceptional.size());
  for (std::size_t j : x.exceptional) rhs.push_back(-dot_generator(s, v, j));
  auto a = solve_linear(s.exceptional_block(x), rhs);
  if (!a) throw DataError("exceptional block of " + x.name + " is singular");
  for (std::size_t k = 0; k < x.exceptional.size(); ++k) v[x.exceptional[k]] += (*a)[k];
}

}  // namespace detail

inline DivisorClass mumford_pullback(const DivisorClass& d) {
  if (d.level() != Level::base) throw UsageError("mumford_pullback expects a base-level class");
  const SurfaceModel& s = *d.surface();
  RationalVector v = d.coords();
  for (const auto& x : s.singular_points) detail::orthogonalize_at(s, x, v);
  return DivisorClass::resolution(d.surface(), std::move(v));
}

inline DivisorClass pushforward(const DivisorClass& d) {
  if (d.level() != Level::resolution) throw UsageError("pushforward expects a resolution-level class");
  const SurfaceModel& s = *d.surface();
  RationalVector v = d.coords();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (s.is_exceptional(i)) v[i] = 0;
  return DivisorClass::base(d.surface(), std::move(v));
}

inline DivisorClass as_resolution(const DivisorClass& d) {
  return d.level() == Level::base ? mumford_pullback(d) : d;
}

inline Rational intersect(const DivisorClass& a, const DivisorClass& b) {
  if (a.surface() != b.surface()) throw UsageError("intersect: classes live on different surfaces");
  DivisorClass pa = as_resolution(a);
  DivisorClass pb = as_resolution(b);
  return bilinear(a.surface()->gram, pa.coords(), pb.coords());
}

inline DivisorClass canonical_class(const SurfacePtr& s) {
  return pushforward(DivisorClass::resolution(s, s->canonical_vector()));
}

// K_f = K_{S~} - f^*K_S, supported on the exceptional locus.
inline DivisorClass relative_canonical(const SurfacePtr& s) {
  return DivisorClass::resolution(s, s->canonical_vector()) - mumford_pullback(canonical_class(s));
}

namespace detail {

inline void require_inventory(const SurfaceModel& s) {
  if (s.curve_inventory.empty())
    throw UsageError("surface '" + s.name + "' has an empty curve inventory; nef/ampleness checks are meaningless");
}

inline DivisorClass curve_class(const SurfacePtr& s, const Curve& c) {
  return DivisorClass::resolution(s, RationalVector(c.coords.begin(), c.coords.end()));
}

// Inventory curves contracted by f are points on S and are skipped.
inline bool contracted(const SurfacePtr& s, const Curve& c) { return pushforward(curve_class(s, c)).is_zero(); }

}  // namespace detail

// Relative to the surface's curve inventory.
inline bool is_nef(const DivisorClass& h) {
  if (h.level() != Level::base) throw UsageError("is_nef expects a base-level class");
  const SurfacePtr& s = h.surface();
  detail::require_inventory(*s);
  for (const auto& c : s->curve_inventory) {
    if (detail::contracted(s, c)) continue;
    if (intersect(h, detail::curve_class(s, c)) < 0) return false;
  }
  return true;
}

// Relative to the surface's curve inventory.
inline bool is_numerically_ample(const DivisorClass& h) {
  if (h.level() != Level::base) throw UsageError("is_numerically_ample expects a base-level class");
  const SurfacePtr& s = h.surface();
  detail::require_inventory(*s);
  for (const auto& c : s->curve_inventory) {
    if (detail::contracted(s, c)) continue;
    if (intersect(h, detail::curve_class(s, c)) <= 0) return false;
  }
  return intersect(h, h) > 0;
}

// Definiteness of the pairing on the projections of the probes to h^perp.
inline Definiteness hodge_index_check(const DivisorClass& h, const std::vector<DivisorClass>& probes) {
  const Rational hh = intersect(h, h);
  if (hh <= 0) throw UsageError("hodge_index_check requires h.h > 0, got " + to_string(hh));
  const SurfacePtr& s = h.surface();
  const DivisorClass ph = as_resolution(h);
  std::vector<DivisorClass> proj;
  proj.reserve(probes.size());
  for (const auto& p : probes) {
    if (p.surface() != s) throw UsageError("hodge_index_check: probe on a different surface");
    DivisorClass pp = as_resolution(p);
    proj.push_back(pp - (intersect(pp, ph) / hh) * ph);
  }
  RationalMatrix g(proj.size(), proj.size());
  for (std::size_t i = 0; i < proj.size(); ++i)
    for (std::size_t j = 0; j < proj.size(); ++j) g(i, j) = bilinear(s->gram, proj[i].coords(), proj[j].coords());
  return definiteness(g);
}

}  // namespace mumford
