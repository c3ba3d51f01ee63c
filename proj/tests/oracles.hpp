#pragma once

// Independent oracles and deterministic random generators for the tests.
// Nothing here calls into the elimination routines it is used to check.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "mumford/mumford.hpp"

namespace oracle {

using mumford::Rational;
using mumford::RationalMatrix;
using mumford::RationalVector;

// Leibniz expansion over all permutations.
inline Rational leibniz_determinant(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Signs of v^T m v over every integer vector with entries in [-range, range].
struct ProbeSigns {
  bool saw_positive = false;
  bool saw_negative = false;
  bool saw_nonzero_vector_with_zero_value = false;
};

inline ProbeSigns probe_signs(const RationalMatrix& m, int range = 2) {
  const std::size_t n = m.rows();
  ProbeSigns out;
  std::vector<int> v(n, -range);
  while (true) {
    bool nonzero = std::any_of(v.begin(), v.end(), [](int x) { return x != 0; });
    if (nonzero) {
      Rational q = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q += m(i, j) * v[i] * v[j];
      if (q > 0) out.saw_positive = true;
      if (q < 0) out.saw_negative = true;
      if (q == 0) out.saw_nonzero_vector_with_zero_value = true;
    }
    std::size_t k = 0;
    while (k < n && v[k] == range) v[k++] = -range;
    if (k == n) break;
    ++v[k];
  }
  return out;
}

// Probe results that would contradict a classification.
inline bool contradicts(mumford::Definiteness d, const ProbeSigns& p) {
  using mumford::Definiteness;
  switch (d) {
    case Definiteness::negative_definite:
      return p.saw_positive || p.saw_nonzero_vector_with_zero_value;
    case Definiteness::negative_semidefinite: return p.saw_positive;
    case Definiteness::positive_definite: return p.saw_negative || p.saw_nonzero_vector_with_zero_value;
    case Definiteness::positive_semidefinite: return p.saw_negative;
    case Definiteness::zero: return p.saw_positive || p.saw_negative;
    case Definiteness::indefinite: return false;
  }
  return true;
}

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long num_range = 9, long max_den = 6) {
    Rational r(mumford::Integer(integer(-num_range, num_range)), mumford::Integer(integer(1, max_den)));
    r.canonicalize();
    return r;
  }

  RationalVector rational_vector(std::size_t n) {
    RationalVector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational());
    return v;
  }

  // Random base class (zero on exceptional indices).
  mumford::DivisorClass base_class(const mumford::SurfacePtr& s, bool integral = false) {
    RationalVector v(s->rank());
    for (std::size_t i = 0; i < s->rank(); ++i)
      if (!s->is_exceptional(i)) v[i] = integral ? Rational(integer(-6, 6)) : rational();
    return mumford::DivisorClass::base(s, std::move(v));
  }

  mumford::DivisorClass resolution_class(const mumford::SurfacePtr& s, bool integral = false) {
    RationalVector v(s->rank());
    for (auto& x : v) x = integral ? Rational(integer(-6, 6)) : rational();
    return mumford::DivisorClass::resolution(s, std::move(v));
  }

  // Integral class that is numerically ample relative to the inventory, by rejection.
  mumford::DivisorClass ample_class(const mumford::SurfacePtr& s) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
      RationalVector v(s->rank());
      for (std::size_t i = 0; i < s->rank(); ++i)
        if (!s->is_exceptional(i)) v[i] = integer(-20, 20);
      mumford::DivisorClass h = mumford::DivisorClass::base(s, std::move(v));
      if (mumford::is_numerically_ample(h)) return h;
    }
    throw std::runtime_error("no ample class found on " + s->name);
  }

  mumford::MumfordChern chern(const mumford::SurfacePtr& s, long min_rank = -3, long max_rank = 5) {
    return {integer(min_rank, max_rank), base_class(s), rational()};
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

// Z_{H,B} evaluated straight from the defining expansion
//   -(ch2 - ch1.(B + iH) + ch0/2 (B + iH)^2) + C/2 ch0
// with (B + iH)^2 = B^2 - H^2 + 2i B.H, by plugging explicit coordinate
// vectors into the Gram matrix of the pulled-back classes.
inline mumford::GaussianRational charge_by_expansion(const mumford::DivisorClass& h, const mumford::DivisorClass& b,
                                                     const Rational& c, const mumford::MumfordChern& m) {
  using mumford::GaussianRational;
  const auto& g = h.surface()->gram;
  const auto ph = mumford::mumford_pullback(h).coords();
  const auto pb = mumford::mumford_pullback(b).coords();
  const auto pd = mumford::mumford_pullback(m.ch1).coords();
  auto dot = [&](const RationalVector& x, const RationalVector& y) {
    Rational acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) acc += x[i] * g(i, j) * y[j];
    return acc;
  };
  GaussianRational b_plus_ih_sq{dot(pb, pb) - dot(ph, ph), 2 * dot(pb, ph)};
  GaussianRational ch1_dot{dot(pd, pb), dot(pd, ph)};
  GaussianRational inner = GaussianRational{m.ch2} - ch1_dot + (Rational(m.ch0) / 2) * b_plus_ih_sq;
  return -inner + GaussianRational{c * m.ch0 / 2};
}

}  // namespace oracle
