#pragma once

// Mumford's Chern character on a normal surface, computed from data of a sheaf
// F on the resolution with E = (f_* F)^**, together with c2, the discriminant,
// Riemann-Roch and the discriminant change between F and E.

#include <cstdint>
#include <map>

#include "mumford/intersection.hpp"

namespace mumford {

struct LocalSheafInvariant {
  // chi(x, F) = l_x(E / f_*F) + l_x(R^1 f_*F)
  std::int64_t chi_local = 0;
  // l_x(R^1 f_*F)
  std::int64_t r1_length = 0;
  friend bool operator==(const LocalSheafInvariant&, const LocalSheafInvariant&) = default;
};

class ResolutionSheafData {
 public:
  // locals: singular point index -> invariants; missing points default to 0.
  ResolutionSheafData(std::int64_t rank, DivisorClass c1, Rational ch2,
                      std::map<std::size_t, LocalSheafInvariant> locals = {})
      : rank_(rank), c1_(std::move(c1)), ch2_(std::move(ch2)), locals_(std::move(locals)) {
    if (rank_ < 1) throw UsageError("sheaf data on the resolution needs rank >= 1");
    if (c1_.level() != Level::resolution) throw UsageError("c1 of F must be a resolution-level class");
    if (!c1_.has_integer_coords()) throw UsageError("c1 of F must have integer coordinates");
    const auto& s = *c1_.surface();
    for (const auto& [x, inv] : locals_) {
      if (x >= s.singular_points.size()) throw UsageError("local invariant for unknown singular point");
      if (inv.chi_local < 0 || inv.r1_length < 0) throw UsageError("local invariants must be nonnegative");
      if (inv.r1_length > inv.chi_local)
        throw UsageError("at " + s.singular_points[x].name + ": r1_length exceeds chi_local");
    }
  }

  const SurfacePtr& surface() const { return c1_.surface(); }
  std::int64_t rank() const { return rank_; }
  const DivisorClass& c1() const { return c1_; }
  const Rational& ch2() const { return ch2_; }
  const std::map<std::size_t, LocalSheafInvariant>& locals() const { return locals_; }

  LocalSheafInvariant local(std::size_t x) const {
    auto it = locals_.find(x);
    return it == locals_.end() ? LocalSheafInvariant{} : it->second;
  }

  // Singular points whose invariants were not supplied.
  std::vector<std::size_t> defaulted_points() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < surface()->singular_points.size(); ++x)
      if (!locals_.contains(x)) out.push_back(x);
    return out;
  }

  friend bool operator==(const ResolutionSheafData&, const ResolutionSheafData&) = default;

 private:
  std::int64_t rank_;
  DivisorClass c1_;
  Rational ch2_;
  std::map<std::size_t, LocalSheafInvariant> locals_;
};

struct MumfordChern {
  std::int64_t ch0 = 0;
  DivisorClass ch1;  // base level
  Rational ch2;

  MumfordChern() = default;
  MumfordChern(std::int64_t r, DivisorClass c, Rational d) : ch0(r), ch1(std::move(c)), ch2(std::move(d)) {
    if (ch1.level() != Level::base) throw UsageError("ch1 of a Mumford Chern character must be base-level");
  }

  const SurfacePtr& surface() const { return ch1.surface(); }

  friend MumfordChern operator+(const MumfordChern& a, const MumfordChern& b) {
    return {a.ch0 + b.ch0, a.ch1 + b.ch1, a.ch2 + b.ch2};
  }
  friend MumfordChern operator-(const MumfordChern& a) { return {-a.ch0, Rational(-1) * a.ch1, -a.ch2}; }
  friend bool operator==(const MumfordChern&, const MumfordChern&) = default;
};

inline std::string to_string(const MumfordChern& m) {
  return "(" + std::to_string(m.ch0) + ", " + to_string(m.ch1) + ", " + to_string(m.ch2) + ")";
}

// Skyscraper sheaf of a smooth point: (0, 0, 1).
inline MumfordChern skyscraper(const SurfacePtr& s) { return {0, DivisorClass::zero(s, Level::base), 1}; }

// Chern character of a Cartier line bundle O(D): (1, D, D^2/2).
inline MumfordChern cartier_line_bundle(const DivisorClass& d) {
  return {1, d.level() == Level::base ? d : pushforward(d), intersect(d, d) / 2};
}

// Tensor with a Cartier line bundle L: ch -> ch * exp(L).
inline MumfordChern twist_by_cartier(const MumfordChern& m, const DivisorClass& l) {
  const DivisorClass lb = l.level() == Level::base ? l : pushforward(l);
  return {m.ch0, m.ch1 + Rational(m.ch0) * lb, m.ch2 + intersect(m.ch1, lb) + Rational(m.ch0) * intersect(lb, lb) / 2};
}

// c_1(f, F) = c1(F) - f^* f_* c1(F), a Q-divisor on the exceptional locus.
inline DivisorClass exceptional_part(const ResolutionSheafData& f) {
  return f.c1() - mumford_pullback(pushforward(f.c1()));
}

// c_1(x, F): the part of exceptional_part supported over x.
inline DivisorClass exceptional_part_at(const ResolutionSheafData& f, std::size_t x) {
  const DivisorClass all = exceptional_part(f);
  RationalVector v(all.coords().size());
  for (std::size_t i : f.surface()->singular_points.at(x).exceptional) v[i] = all[i];
  return DivisorClass::resolution(f.surface(), std::move(v));
}

inline MumfordChern chern_from_resolution(const ResolutionSheafData& f) {
  const SurfacePtr& s = f.surface();
  const DivisorClass k = DivisorClass::resolution(s, s->canonical_vector());
  Rational ch2 = f.ch2();
  for (std::size_t x = 0; x < s->singular_points.size(); ++x) {
    const auto inv = f.local(x);
    ch2 += inv.chi_local;
    ch2 -= Rational(s->singular_points[x].local_structure_euler * f.rank());
    ch2 -= intersect(exceptional_part_at(f, x), k) / 2;
  }
  return {f.rank(), pushforward(f.c1()), ch2};
}

inline Rational c2_mumford(const MumfordChern& m) { return intersect(m.ch1, m.ch1) / 2 - m.ch2; }

inline Rational discriminant(const MumfordChern& m) { return intersect(m.ch1, m.ch1) - 2 * m.ch0 * m.ch2; }

// Discriminant of F computed on the resolution: c1^2 - 2 r ch2.
inline Rational resolution_discriminant(const ResolutionSheafData& f) {
  return intersect(f.c1(), f.c1()) - 2 * f.rank() * f.ch2();
}

inline Rational riemann_roch_chi(const MumfordChern& m) {
  const SurfacePtr& s = m.surface();
  return m.ch2 - intersect(m.ch1, canonical_class(s)) / 2 + Rational(m.ch0 * chi_structure_base(*s));
}

// The same Euler characteristic written through the discriminant; ch0 > 0.
inline Rational riemann_roch_via_discriminant(const MumfordChern& m) {
  if (m.ch0 <= 0) throw UsageError("riemann_roch_via_discriminant requires ch0 > 0");
  const SurfacePtr& s = m.surface();
  const Rational r = m.ch0;
  const DivisorClass d_minus_rk = m.ch1 - r * canonical_class(s);
  return -discriminant(m) / (2 * r) + intersect(m.ch1, d_minus_rk) / (2 * r) + r * chi_structure_base(*s);
}

// Delta(F) - Delta^M(E) evaluated from local data:
//   2r sum l_x(R^1 f_*F) - 2r^2 sum chi(x, O) + c_1(f,F)^2 - r c_1(f,F).K_{S~}.
// Agrees with resolution_discriminant(f) - discriminant(chern_from_resolution(f))
// whenever E = f_*F at every point, i.e. chi_local == r1_length.
inline Rational discriminant_difference(const ResolutionSheafData& f) {
  const SurfacePtr& s = f.surface();
  const Rational r = f.rank();
  const DivisorClass cf = exceptional_part(f);
  const DivisorClass k = DivisorClass::resolution(s, s->canonical_vector());
  Rational r1_total = 0, structure_total = 0;
  for (std::size_t x = 0; x < s->singular_points.size(); ++x) {
    r1_total += f.local(x).r1_length;
    structure_total += s->singular_points[x].local_structure_euler;
  }
  return 2 * r * r1_total - 2 * r * r * structure_total + intersect(cf, cf) - r * intersect(cf, k);
}

}  // namespace mumford
