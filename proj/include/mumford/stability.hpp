#pragma once

// Numerical side of tilt stability on a normal surface: the Bogomolov-type
// inequality, the charge Z_{H,B}, slopes and heart membership, the lattice
// vector, the support form and walls in the (b, t) slice
// (H, B) = (t H0, B0 + b H0).

#include <optional>
#include <variant>

#include "mumford/chern.hpp"

namespace mumford {

class StabilityParams {
 public:
  // H must be numerically ample relative to the curve inventory unless
  // unchecked_ample is set.
  StabilityParams(DivisorClass h, DivisorClass b, Rational c, bool unchecked_ample = false)
      : h_(std::move(h)), b_(std::move(b)), c_(std::move(c)) {
    if (h_.level() != Level::base || b_.level() != Level::base)
      throw UsageError("stability parameters H and B must be base-level classes");
    if (h_.surface() != b_.surface()) throw UsageError("H and B live on different surfaces");
    if (c_ < 0) throw UsageError("the support constant C must be nonnegative");
    if (!unchecked_ample && !is_numerically_ample(h_))
      throw UsageError("H = " + to_string(h_) + " is not numerically ample relative to the curve inventory");
  }

  const SurfacePtr& surface() const { return h_.surface(); }
  const DivisorClass& H() const { return h_; }
  const DivisorClass& B() const { return b_; }
  const Rational& C() const { return c_; }

 private:
  DivisorClass h_;
  DivisorClass b_;
  Rational c_;
};

inline Rational slope(const StabilityParams& p, const MumfordChern& m) {
  if (m.ch0 <= 0) throw UsageError("slope requires ch0 > 0");
  return intersect(m.ch1, p.H()) / m.ch0;
}

struct BogomolovResult {
  bool holds = false;
  Rational margin;
};

// Delta^M + C ch0^2 >= 0
inline BogomolovResult bogomolov_check(const Rational& c, const MumfordChern& m) {
  Rational margin = discriminant(m) + c * m.ch0 * m.ch0;
  return {margin >= 0, margin};
}

inline BogomolovResult bogomolov_check(const StabilityParams& p, const MumfordChern& m) {
  return bogomolov_check(p.C(), m);
}

// Bogomolov constant policy for characteristic 0: 0 when every singular point
// is du Val, otherwise the caller must supply a value.
inline std::optional<Rational> default_bogomolov_constant(const SurfaceModel& s) {
  if (is_du_val(s)) return Rational(0);
  return std::nullopt;
}

// Z = -(ch2 - ch1.(B + iH) + ch0/2 (B + iH)^2) + C/2 ch0
inline GaussianRational charge(const StabilityParams& p, const MumfordChern& m) {
  const Rational r = m.ch0;
  const Rational bb = intersect(p.B(), p.B());
  const Rational hh = intersect(p.H(), p.H());
  const Rational bh = intersect(p.B(), p.H());
  Rational re = -(m.ch2 - intersect(m.ch1, p.B()) + r / 2 * (bb - hh)) + p.C() / 2 * r;
  Rational im = intersect(m.ch1, p.H()) - r * bh;
  return {re, im};
}

// Checks Re Z = Delta/(2r) - (ch1^B)^2/(2r) + r/2 (H^2 + C) exactly.
inline bool real_part_identity_check(const StabilityParams& p, const MumfordChern& m) {
  if (m.ch0 <= 0) throw UsageError("real_part_identity_check requires ch0 > 0");
  const Rational r = m.ch0;
  const DivisorClass chb = m.ch1 - r * p.B();
  Rational rhs = discriminant(m) / (2 * r) - intersect(chb, chb) / (2 * r) + r / 2 * (intersect(p.H(), p.H()) + p.C());
  return charge(p, m).re == rhs;
}

// Harder-Narasimhan slope bounds of the torsion-free part.
struct HnBounds {
  Rational mu_min;
  Rational mu_max;
};

class NumericalObject {
 public:
  static NumericalObject torsion(MumfordChern m) {
    if (m.ch0 != 0) throw UsageError("a torsion object has ch0 = 0");
    return NumericalObject(std::move(m), std::nullopt, true);
  }

  static NumericalObject with_bounds(MumfordChern m, std::optional<HnBounds> hn) {
    if (m.ch0 <= 0) throw UsageError("a non-torsion sheaf has ch0 > 0");
    if (hn && hn->mu_min > hn->mu_max) throw UsageError("HN bounds need mu_min <= mu_max");
    return NumericalObject(std::move(m), std::move(hn), false);
  }

  const MumfordChern& chern() const { return chern_; }
  const std::optional<HnBounds>& hn_bounds() const { return hn_; }
  bool is_torsion() const { return torsion_; }
  // nullopt encodes +infinity, used for torsion sheaves.
  std::optional<Rational> mu_min() const {
    if (torsion_ || !hn_) return std::nullopt;
    return hn_->mu_min;
  }

 private:
  NumericalObject(MumfordChern m, std::optional<HnBounds> hn, bool t)
      : chern_(std::move(m)), hn_(std::move(hn)), torsion_(t) {}

  MumfordChern chern_;
  std::optional<HnBounds> hn_;
  bool torsion_ = false;
};

enum class HeartSide { torsion_part, free_part, mixed, insufficient_data };

inline std::string_view to_string(HeartSide h) {
  switch (h) {
    case HeartSide::torsion_part: return "T";
    case HeartSide::free_part: return "F";
    case HeartSide::mixed: return "mixed";
    case HeartSide::insufficient_data: return "insufficient-data";
  }
  return "?";
}

// With assume_semistable, a sheaf without HN data is treated as slope
// semistable (mu_min = mu_max = slope).
inline HeartSide classify_heart(const StabilityParams& p, const NumericalObject& obj, bool assume_semistable = false) {
  if (obj.is_torsion()) return HeartSide::torsion_part;
  std::optional<HnBounds> hn = obj.hn_bounds();
  if (!hn) {
    if (!assume_semistable) return HeartSide::insufficient_data;
    Rational mu = slope(p, obj.chern());
    hn = HnBounds{mu, mu};
  }
  const Rational bh = intersect(p.B(), p.H());
  if (hn->mu_min > bh) return HeartSide::torsion_part;
  if (hn->mu_max <= bh) return HeartSide::free_part;
  return HeartSide::mixed;
}

// Phase in (0, 1] reported exactly: either phase one, or the cotangent
// Re Z / Im Z with Im Z > 0.
struct Phase {
  bool phase_one = false;
  Rational cotangent;
  GaussianRational z;
};

inline std::string to_string(const Phase& ph) {
  return ph.phase_one ? std::string("1") : "arccot(" + to_string(ph.cotangent) + ")/pi";
}

inline Phase phase(const StabilityParams& p, const NumericalObject& obj, bool assume_semistable = false) {
  const HeartSide side = classify_heart(p, obj, assume_semistable);
  if (side == HeartSide::insufficient_data || side == HeartSide::mixed)
    throw UsageError("object is not in the heart (classification: " + std::string(to_string(side)) + ")");
  GaussianRational z = charge(p, obj.chern());
  if (side == HeartSide::free_part) z = -z;
  if (z.im > 0) return {false, z.re / z.im, z};
  if (z.im == 0 && z.re < 0) return {true, 0, z};
  throw ConsistencyError("charge " + to_string(z) + " of a heart object lies outside the upper half-plane");
}

struct LambdaVector {
  std::int64_t rank = 0;
  std::vector<Integer> ns_part;  // coordinates on the non-exceptional generators
  Rational degree;               // denominator_bound * ch2

  friend LambdaVector operator+(const LambdaVector& a, const LambdaVector& b) {
    LambdaVector out{a.rank + b.rank, a.ns_part, a.degree + b.degree};
    for (std::size_t i = 0; i < out.ns_part.size(); ++i) out.ns_part[i] += b.ns_part[i];
    return out;
  }
  friend bool operator==(const LambdaVector&, const LambdaVector&) = default;
};

inline LambdaVector lambda_vector(const MumfordChern& m) {
  const SurfaceModel& s = *m.surface();
  LambdaVector v;
  v.rank = m.ch0;
  for (std::size_t i : s.non_exceptional_indices()) {
    if (!is_integer(m.ch1[i]))
      throw UsageError("ch1 = " + to_string(m.ch1) + " is not an integral Weil class in this presentation");
    v.ns_part.push_back(m.ch1[i].get_num());
  }
  v.degree = Rational(denominator_bound(s)) * m.ch2;
  return v;
}

// True when a and b span a line (or one of them is zero).
inline bool proportional(const LambdaVector& a, const LambdaVector& b) {
  std::vector<Rational> x{Rational(a.rank)}, y{Rational(b.rank)};
  for (const auto& c : a.ns_part) x.emplace_back(c);
  for (const auto& c : b.ns_part) y.emplace_back(c);
  x.push_back(a.degree);
  y.push_back(b.degree);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] * y[j] != x[j] * y[i]) return false;
  return true;
}

// Smallest C >= bogomolov_c with C (H.D)^2 + D^2 >= 0 for every inventory curve D.
inline Rational support_constant(const DivisorClass& h, const Rational& bogomolov_c) {
  if (h.level() != Level::base) throw UsageError("support_constant expects a base-level H");
  const SurfacePtr& s = h.surface();
  detail::require_inventory(*s);
  Rational c = bogomolov_c;
  for (const auto& curve : s->curve_inventory) {
    if (detail::contracted(s, curve)) continue;
    const DivisorClass d = pushforward(detail::curve_class(s, curve));
    const Rational dd = intersect(d, d);
    if (dd >= 0) continue;
    const Rational hd = intersect(h, d);
    if (hd == 0)
      throw UsageError("curve " + curve.name + " has D^2 < 0 and H.D = 0: H is not numerically ample");
    const Rational need = -dd / (hd * hd);
    if (need > c) c = need;
  }
  return c;
}

// Q = Delta^M + C (ch1^B . H)^2
inline Rational support_form(const StabilityParams& p, const MumfordChern& m) {
  const Rational x = intersect(m.ch1 - Rational(m.ch0) * p.B(), p.H());
  return discriminant(m) + p.C() * x * x;
}

enum class WallKind { empty, vertical_line, semicircle, degenerate };

inline std::string_view to_string(WallKind k) {
  switch (k) {
    case WallKind::empty: return "empty";
    case WallKind::vertical_line: return "vertical-line";
    case WallKind::semicircle: return "semicircle";
    case WallKind::degenerate: return "degenerate";
  }
  return "?";
}

// The numerical wall Im(conj(Z(w)) Z(v)) = 0 in the slice
// (H, B) = (t H0, B0 + b H0), t > 0, after dividing by t:
//   q_bb b^2 + q_tt t^2 + q_b b + q_t t + q_1 = 0.
struct WallLocus {
  Rational q_bb, q_tt, q_b, q_t, q_1;
  WallKind kind = WallKind::empty;
  Rational line_b;     // vertical_line: b = line_b
  Rational center;     // semicircle: centre on the b-axis
  Rational radius_sq;  // semicircle

  Rational evaluate(const Rational& b, const Rational& t) const {
    return q_bb * b * b + q_tt * t * t + q_b * b + q_t * t + q_1;
  }
};

namespace detail {

// Z in the slice as Re = c0 + c1 b + c2 b^2 + c3 t^2 and Im = t (i0 + i1 b).
struct SliceCharge {
  Rational c0, c1, c2, c3, i0, i1;
};

inline SliceCharge slice_charge(const DivisorClass& h0, const DivisorClass& b0, const Rational& c,
                                const MumfordChern& m) {
  const Rational r = m.ch0;
  const Rational hh = intersect(h0, h0), bh = intersect(b0, h0), bb = intersect(b0, b0);
  const Rational dh = intersect(m.ch1, h0), db = intersect(m.ch1, b0);
  SliceCharge z;
  // B^2 = bb + 2 b bh + b^2 hh, H^2 = t^2 hh
  z.c0 = -m.ch2 + db - r / 2 * bb + c / 2 * r;
  z.c1 = dh - r * bh;
  z.c2 = -r / 2 * hh;
  z.c3 = r / 2 * hh;
  z.i0 = dh - r * bh;
  z.i1 = -r * hh;
  return z;
}

}  // namespace detail

inline WallLocus wall_locus(const DivisorClass& h0, const DivisorClass& b0, const Rational& c, const MumfordChern& v,
                            const MumfordChern& w) {
  if (!is_numerically_ample(h0)) throw UsageError("wall_locus: H0 is not numerically ample relative to the inventory");
  if (b0.level() != Level::base || b0.surface() != h0.surface()) throw UsageError("wall_locus: bad B0");
  const auto zv = detail::slice_charge(h0, b0, c, v);
  const auto zw = detail::slice_charge(h0, b0, c, w);
  // Re(w) Im(v)/t - Im(w)/t Re(v); the b^3 and b t^2 terms cancel.
  WallLocus wl;
  wl.q_1 = zw.c0 * zv.i0 - zw.i0 * zv.c0;
  wl.q_b = zw.c1 * zv.i0 + zw.c0 * zv.i1 - zw.i0 * zv.c1 - zw.i1 * zv.c0;
  wl.q_bb = zw.c2 * zv.i0 + zw.c1 * zv.i1 - zw.i0 * zv.c2 - zw.i1 * zv.c1;
  wl.q_tt = zw.c3 * zv.i0 - zw.i0 * zv.c3;
  wl.q_t = 0;
  if (wl.q_bb == 0 && wl.q_tt == 0 && wl.q_b == 0 && wl.q_1 == 0) {
    wl.kind = WallKind::degenerate;
  } else if (wl.q_bb == 0 && wl.q_tt == 0) {
    if (wl.q_b == 0) {
      wl.kind = WallKind::empty;
    } else {
      wl.kind = WallKind::vertical_line;
      wl.line_b = -wl.q_1 / wl.q_b;
    }
  } else {
    if (wl.q_bb != wl.q_tt) throw ConsistencyError("wall conic is not a circle: q_bb != q_tt");
    wl.center = -wl.q_b / (2 * wl.q_bb);
    wl.radius_sq = wl.center * wl.center - wl.q_1 / wl.q_bb;
    wl.kind = wl.radius_sq > 0 ? WallKind::semicircle : WallKind::empty;
  }
  return wl;
}

inline WallLocus wall_locus(const StabilityParams& p, const MumfordChern& v, const MumfordChern& w) {
  return wall_locus(p.H(), p.B(), p.C(), v, w);
}

}  // namespace mumford
