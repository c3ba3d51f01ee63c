#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace mumford;

namespace {

DivisorClass base(const SurfacePtr& s, RationalVector v) { return DivisorClass::base(s, std::move(v)); }

StabilityParams p2_params(Rational b = 0) {
  auto p2 = builtin_surface("projective-plane");
  return StabilityParams(base(p2, {1}), base(p2, {b}), 0);
}

bool is_rational_square(const Rational& q) {
  return q >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

Rational rational_sqrt(const Rational& q) {
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Im(conj(Z(w)) Z(v)) / t with the charge taken from the brute-force expansion.
Rational wall_oracle(const DivisorClass& h0, const DivisorClass& b0, const Rational& c, const MumfordChern& v,
                     const MumfordChern& w, const Rational& b, const Rational& t) {
  const DivisorClass h = t * h0;
  const DivisorClass bb = b0 + b * h0;
  const GaussianRational zv = oracle::charge_by_expansion(h, bb, c, v);
  const GaussianRational zw = oracle::charge_by_expansion(h, bb, c, w);
  return (zw.conj() * zv).im / t;
}

}  // namespace

TEST(StabilityParams, Validation) {
  auto f2 = builtin_surface("hirzebruch-2");
  EXPECT_THROW(StabilityParams(base(f2, {1, 2}), base(f2, {0, 0}), 0), UsageError);
  EXPECT_NO_THROW(StabilityParams(base(f2, {1, 2}), base(f2, {0, 0}), 0, true));
  EXPECT_THROW(StabilityParams(base(f2, {1, 3}), base(f2, {0, 0}), -1), UsageError);
  auto qc = builtin_surface("quadric-cone");
  EXPECT_THROW(StabilityParams(DivisorClass::resolution(qc, {0, 1}), base(qc, {0, 0}), 0), UsageError);
}

TEST(Slope, KnownValues) {
  auto p2 = builtin_surface("projective-plane");
  EXPECT_EQ(slope(p2_params(), MumfordChern(1, base(p2, {1}), 0)), 1);
  EXPECT_EQ(slope(p2_params(), MumfordChern(1, base(p2, {0}), 0)), 0);
  auto qc = builtin_surface("quadric-cone");
  const StabilityParams p(base(qc, {0, 1}), base(qc, {0, 0}), 0);
  EXPECT_EQ(slope(p, MumfordChern(2, base(qc, {0, 3}), 0)), Rational(3, 4));
  EXPECT_THROW(slope(p, skyscraper(qc)), UsageError);
}

TEST(Bogomolov, KnownValues) {
  auto p2 = builtin_surface("projective-plane");
  const StabilityParams p = p2_params();
  auto tangent = bogomolov_check(p, MumfordChern(2, base(p2, {3}), Rational(3, 2)));
  EXPECT_TRUE(tangent.holds);
  EXPECT_EQ(tangent.margin, 3);
  auto ideal = bogomolov_check(p, MumfordChern(1, base(p2, {0}), -1));
  EXPECT_TRUE(ideal.holds);
  EXPECT_EQ(ideal.margin, 2);
  auto bad = bogomolov_check(p, MumfordChern(1, base(p2, {0}), 1));
  EXPECT_FALSE(bad.holds);
  EXPECT_EQ(bad.margin, -2);
  EXPECT_TRUE(bogomolov_check(Rational(2), MumfordChern(1, base(p2, {0}), 1)).holds);
}

TEST(Bogomolov, DefaultConstantOnlyForDuVal) {
  EXPECT_EQ(default_bogomolov_constant(*builtin_surface("quadric-cone")), Rational(0));
  EXPECT_EQ(default_bogomolov_constant(*builtin_surface("projective-plane")), Rational(0));
  EXPECT_FALSE(default_bogomolov_constant(*builtin_surface("third-cone")));
}

TEST(Charge, KnownValues) {
  auto p2 = builtin_surface("projective-plane");
  const StabilityParams p = p2_params();
  EXPECT_EQ(charge(p, MumfordChern(1, base(p2, {0}), 0)), GaussianRational(Rational(1, 2)));
  EXPECT_EQ(charge(p, skyscraper(p2)), GaussianRational(-1));
  EXPECT_EQ(charge(p, MumfordChern(1, base(p2, {1}), Rational(1, 2))), GaussianRational(0, 1));
}

TEST(Charge, MatchesExpansionOracle) {
  oracle::Gen g(41);
  for (auto name : builtin_surface_names) {
    auto s = builtin_surface(name);
    for (int trial = 0; trial < 100; ++trial) {
      const DivisorClass h = g.base_class(s), b = g.base_class(s);
      const Rational c = abs(g.rational());
      const StabilityParams p(h, b, c, true);
      const MumfordChern m = g.chern(s);
      EXPECT_EQ(charge(p, m), oracle::charge_by_expansion(h, b, c, m)) << name;
    }
  }
}

TEST(Charge, AdditiveAndRealPartIdentity) {
  oracle::Gen g(43);
  for (auto name : builtin_surface_names) {
    auto s = builtin_surface(name);
    for (int trial = 0; trial < 100; ++trial) {
      const StabilityParams p(g.base_class(s), g.base_class(s), abs(g.rational()), true);
      const MumfordChern a = g.chern(s), b = g.chern(s);
      EXPECT_EQ(charge(p, a + b), charge(p, a) + charge(p, b));
      const MumfordChern pos = g.chern(s, 1, 5);
      EXPECT_TRUE(real_part_identity_check(p, pos));
    }
  }
  auto p2 = builtin_surface("projective-plane");
  EXPECT_TRUE(real_part_identity_check(p2_params(), MumfordChern(1, base(p2, {0}), 0)));
  auto qc = builtin_surface("quadric-cone");
  const StabilityParams pq(base(qc, {0, 1}), base(qc, {0, 0}), 0);
  EXPECT_TRUE(real_part_identity_check(pq, MumfordChern(1, base(qc, {0, 1}), 0)));
  EXPECT_THROW(real_part_identity_check(pq, skyscraper(qc)), UsageError);
}

// Z(m) = r Z(O) + sum n_i Z(g_i) + (degree / N) Z(point): the charge only sees Lambda.
TEST(Charge, FactorsThroughLattice) {
  oracle::Gen g(47);
  for (auto name : builtin_surface_names) {
    auto s = builtin_surface(name);
    const Rational n(denominator_bound(*s));
    for (int trial = 0; trial < 50; ++trial) {
      const StabilityParams p(g.base_class(s), g.base_class(s), abs(g.rational()), true);
      const MumfordChern m(g.integer(-3, 3), g.base_class(s, true), g.rational());
      const LambdaVector lam = lambda_vector(m);
      GaussianRational z = GaussianRational(Rational(lam.rank)) * charge(p, MumfordChern(1, DivisorClass::zero(s, Level::base), 0));
      std::size_t k = 0;
      for (std::size_t i : s->non_exceptional_indices()) {
        const MumfordChern gen(0, DivisorClass::generator(s, i, Level::base), 0);
        z = z + GaussianRational(Rational(lam.ns_part[k++])) * charge(p, gen);
      }
      z = z + GaussianRational(lam.degree / n) * charge(p, skyscraper(s));
      EXPECT_EQ(z, charge(p, m)) << name;
    }
  }
}

// Re Z >= ch0/2 H^2 > 0 when the slope sits at B.H and the Bogomolov margin is nonnegative.
TEST(Charge, PositivityAtTheSlopeBoundary) {
  oracle::Gen g(53);
  for (auto name : builtin_surface_names) {
    auto s = builtin_surface(name);
    for (int trial = 0; trial < 100; ++trial) {
      const DivisorClass h = g.ample_class(s);
      const DivisorClass b = g.base_class(s);
      const Rational c = abs(g.rational());
      const StabilityParams p(h, b, c);
      const Rational hh = intersect(h, h);
      const DivisorClass x = g.base_class(s);
      const DivisorClass d = x - (intersect(x, h) / hh) * h;  // H-orthogonal
      const Rational dd = intersect(d, d);
      ASSERT_LE(dd, 0) << "Hodge index on " << name;
      const std::int64_t r = g.integer(1, 4);
      const DivisorClass ch1 = Rational(r) * b + d;
      const Rational top = (intersect(ch1, ch1) + c * r * r) / (2 * r);
      const MumfordChern m(r, ch1, top - abs(g.rational()));
      ASSERT_EQ(slope(p, m), intersect(b, h));
      ASSERT_TRUE(bogomolov_check(p, m).holds);
      const Rational re = charge(p, m).re;
      EXPECT_GE(re, Rational(r) / 2 * hh) << name;
      EXPECT_GT(re, 0);
    }
  }
}

TEST(Heart, KnownValues) {
  auto p2 = builtin_surface("projective-plane");
  const StabilityParams p = p2_params();
  const auto point = NumericalObject::torsion(skyscraper(p2));
  EXPECT_EQ(classify_heart(p, point), HeartSide::torsion_part);
  const auto o = NumericalObject::with_bounds(MumfordChern(1, base(p2, {0}), 0), HnBounds{0, 0});
  EXPECT_EQ(classify_heart(p, o), HeartSide::free_part);
  const auto o1 = NumericalObject::with_bounds(MumfordChern(1, base(p2, {1}), Rational(1, 2)), std::nullopt);
  EXPECT_EQ(classify_heart(p, o1), HeartSide::insufficient_data);
  EXPECT_EQ(classify_heart(p, o1, true), HeartSide::torsion_part);
  const auto mixed = NumericalObject::with_bounds(MumfordChern(2, base(p2, {1}), 0), HnBounds{-1, 1});
  EXPECT_EQ(classify_heart(p, mixed), HeartSide::mixed);
}

TEST(Heart, ObjectInvariants) {
  auto p2 = builtin_surface("projective-plane");
  EXPECT_THROW(NumericalObject::torsion(MumfordChern(1, base(p2, {0}), 0)), UsageError);
  EXPECT_THROW(NumericalObject::with_bounds(skyscraper(p2), std::nullopt), UsageError);
  EXPECT_THROW(NumericalObject::with_bounds(MumfordChern(1, base(p2, {0}), 0), HnBounds{1, 0}), UsageError);
  EXPECT_FALSE(NumericalObject::torsion(skyscraper(p2)).mu_min());
}

TEST(Phase, KnownValues) {
  auto p2 = builtin_surface("projective-plane");
  const StabilityParams p = p2_params();
  const Phase pt = phase(p, NumericalObject::torsion(skyscraper(p2)));
  EXPECT_TRUE(pt.phase_one);
  EXPECT_EQ(to_string(pt), "1");
  const Phase o = phase(p, NumericalObject::with_bounds(MumfordChern(1, base(p2, {0}), 0), HnBounds{0, 0}));
  EXPECT_TRUE(o.phase_one);
  EXPECT_EQ(o.z, GaussianRational(Rational(-1, 2)));
  const Phase o1 = phase(p, NumericalObject::with_bounds(MumfordChern(1, base(p2, {1}), Rational(1, 2)), std::nullopt), true);
  EXPECT_FALSE(o1.phase_one);
  EXPECT_EQ(o1.cotangent, 0);
  EXPECT_EQ(to_string(o1), "arccot(0)/pi");
}

TEST(Phase, Errors) {
  auto p2 = builtin_surface("projective-plane");
  const StabilityParams p = p2_params();
  EXPECT_THROW(phase(p, NumericalObject::with_bounds(MumfordChern(1, base(p2, {1}), 0), std::nullopt)), UsageError);
  // A torsion class with negative length lands in the forbidden region.
  EXPECT_THROW(phase(p, NumericalObject::torsion(MumfordChern(0, base(p2, {0}), -1))), ConsistencyError);
}

TEST(LambdaVector, KnownValues) {
  auto qc = builtin_surface("quadric-cone");
  EXPECT_EQ(lambda_vector(MumfordChern(1, base(qc, {0, 0}), 0)), (LambdaVector{1, {Integer(0)}, 0}));
  EXPECT_EQ(lambda_vector(MumfordChern(1, base(qc, {0, 1}), 0)), (LambdaVector{1, {Integer(1)}, 0}));
  EXPECT_EQ(lambda_vector(MumfordChern(1, base(qc, {0, 1}), Rational(1, 2))), (LambdaVector{1, {Integer(1)}, 1}));
  EXPECT_THROW(lambda_vector(MumfordChern(1, base(qc, {0, Rational(1, 2)}), 0)), UsageError);
}

TEST(LambdaVector, Additive) {
  oracle::Gen g(59);
  for (auto name : builtin_surface_names) {
    auto s = builtin_surface(name);
    for (int trial = 0; trial < 100; ++trial) {
      const MumfordChern a(g.integer(-3, 3), g.base_class(s, true), g.rational());
      const MumfordChern b(g.integer(-3, 3), g.base_class(s, true), g.rational());
      EXPECT_EQ(lambda_vector(a + b), lambda_vector(a) + lambda_vector(b));
    }
  }
}

TEST(SupportConstant, KnownValues) {
  auto f2 = builtin_surface("hirzebruch-2");
  EXPECT_EQ(support_constant(base(f2, {1, 3}), 0), 2);
  EXPECT_EQ(support_constant(base(f2, {1, 3}), 5), 5);
  auto qc = builtin_surface("quadric-cone");
  EXPECT_EQ(support_constant(base(qc, {0, 1}), 0), 0);
  EXPECT_EQ(support_constant(base(builtin_surface("projective-plane"), {1}), 0), 0);
  EXPECT_THROW(support_constant(base(f2, {1, 2}), 0), UsageError);
}

TEST(SupportConstant, DominatesEveryInventoryCurve) {
  oracle::Gen g(61);
  for (auto name : builtin_surface_names) {
    auto s = builtin_surface(name);
    for (int trial = 0; trial < 100; ++trial) {
      const DivisorClass h = g.ample_class(s);
      const Rational c = support_constant(h, 0);
      for (const auto& curve : s->curve_inventory) {
        const DivisorClass d = pushforward(detail::curve_class(s, curve));
        const Rational hd = intersect(h, d);
        EXPECT_GE(c * hd * hd + intersect(d, d), 0) << name << " " << curve.name;
      }
    }
  }
}

TEST(SupportForm, KnownValues) {
  auto p2 = builtin_surface("projective-plane");
  EXPECT_EQ(support_form(p2_params(), cartier_line_bundle(base(p2, {2}))), 0);
  EXPECT_EQ(support_form(p2_params(), MumfordChern(2, base(p2, {3}), Rational(3, 2))), 3);
  auto f2 = builtin_surface("hirzebruch-2");
  const StabilityParams p(base(f2, {1, 3}), base(f2, {0, 0}), 2);
  const MumfordChern m(1, base(f2, {1, 0}), -1);
  EXPECT_EQ(discriminant(m), 0);
  EXPECT_EQ(support_form(p, m), 2);
}

TEST(Walls, KnownValues) {
  auto p2 = builtin_surface("projective-plane");
  const DivisorClass h = base(p2, {1}), b0 = base(p2, {0});
  const MumfordChern o(1, b0, 0), o1(1, h, Rational(1, 2));

  const WallLocus line = wall_locus(h, b0, 0, o, skyscraper(p2));
  EXPECT_EQ(line.kind, WallKind::vertical_line);
  EXPECT_EQ(line.line_b, 0);

  EXPECT_EQ(wall_locus(h, b0, 0, o, o).kind, WallKind::degenerate);

  const WallLocus circle = wall_locus(h, b0, 0, o, o1);
  EXPECT_EQ(circle.kind, WallKind::semicircle);
  EXPECT_EQ(circle.center, Rational(1, 2));
  EXPECT_EQ(circle.radius_sq, Rational(1, 4));
  const std::vector<std::pair<Rational, Rational>> samples{
      {0, 1}, {Rational(1, 3), Rational(2, 5)}, {-2, Rational(7, 3)}, {Rational(5, 2), Rational(1, 7)}, {1, 3}};
  for (const auto& [b, t] : samples) EXPECT_EQ(circle.evaluate(b, t), wall_oracle(h, b0, 0, o, o1, b, t));

  EXPECT_THROW(wall_locus(base(builtin_surface("hirzebruch-2"), {1, 2}), base(builtin_surface("hirzebruch-2"), {0, 0}),
                          0, o, o1),
               UsageError);
}

TEST(Walls, CoefficientsMatchOracleEverywhere) {
  oracle::Gen g(67);
  for (auto name : builtin_surface_names) {
    auto s = builtin_surface(name);
    for (int trial = 0; trial < 30; ++trial) {
      const DivisorClass h0 = g.ample_class(s);
      const DivisorClass b0 = g.base_class(s);
      const Rational c = abs(g.rational());
      const MumfordChern v = g.chern(s), w = g.chern(s);
      const WallLocus wl = wall_locus(h0, b0, c, v, w);
      EXPECT_EQ(wl.q_t, 0);
      EXPECT_EQ(wl.q_bb, wl.q_tt);
      for (int k = 0; k < 5; ++k) {
        const Rational b = g.rational(), t = abs(g.rational()) + Rational(1, 7);
        EXPECT_EQ(wl.evaluate(b, t), wall_oracle(h0, b0, c, v, w, b, t)) << name;
      }
    }
  }
}

// Rational points on walls with rational radius vanish under the oracle.
TEST(Walls, RationalPointsOnSemicircles) {
  oracle::Gen g(71);
  auto p2 = builtin_surface("projective-plane");
  const DivisorClass h = base(p2, {1}), b0 = base(p2, {0});
  int circles = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const MumfordChern v = g.chern(p2), w = g.chern(p2);
    const WallLocus wl = wall_locus(h, b0, 0, v, w);
    if (wl.kind != WallKind::semicircle || !is_rational_square(wl.radius_sq)) continue;
    ++circles;
    const Rational r = rational_sqrt(wl.radius_sq);
    for (long k = 1; k <= 4; ++k) {
      const Rational u = Rational(k) / 3;
      const Rational b = wl.center + r * (1 - u * u) / (1 + u * u);
      const Rational t = r * 2 * u / (1 + u * u);
      EXPECT_EQ(wl.evaluate(b, t), 0);
      EXPECT_EQ(wall_oracle(h, b0, 0, v, w, b, t), 0);
    }
  }
  EXPECT_GT(circles, 0);
}

// With N(S) of rank one the locus vanishes identically exactly for proportional classes.
TEST(Walls, DegenerateIffProportionalInRankOne) {
  oracle::Gen g(73);
  for (auto name : {"projective-plane", "quadric-cone", "third-cone"}) {
    auto s = builtin_surface(name);
    for (int trial = 0; trial < 200; ++trial) {
      const DivisorClass hh = g.ample_class(s);
      const DivisorClass b0 = g.base_class(s);
      const MumfordChern v(g.integer(-3, 3), g.base_class(s, true), g.rational());
      MumfordChern w(g.integer(-3, 3), g.base_class(s, true), g.rational());
      if (trial % 4 == 0) {
        const std::int64_t k = g.integer(-3, 3);
        w = MumfordChern(k * v.ch0, Rational(k) * v.ch1, k * v.ch2);
      }
      const WallLocus wl = wall_locus(hh, b0, abs(g.rational()), v, w);
      EXPECT_EQ(wl.kind == WallKind::degenerate, proportional(lambda_vector(v), lambda_vector(w))) << name;
    }
  }
}

// In higher Picard rank a class can have Z = 0 on the whole slice without
// being proportional: sigma - F is H0-orthogonal for H0 = sigma + 3F on F2.
TEST(Walls, HigherRankDegenerateWithoutProportionality) {
  auto f2 = builtin_surface("hirzebruch-2");
  const MumfordChern v(1, base(f2, {0, 0}), 0), w(0, base(f2, {1, -1}), 0);
  const WallLocus wl = wall_locus(base(f2, {1, 3}), base(f2, {0, 0}), 2, v, w);
  EXPECT_EQ(wl.kind, WallKind::degenerate);
  EXPECT_FALSE(proportional(lambda_vector(v), lambda_vector(w)));
}
