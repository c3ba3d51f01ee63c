#pragma once

// Exact scalars and dense linear algebra over Q.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mumford/errors.hpp"

namespace mumford {

// mpq_class keeps values canonical (lowest terms, positive denominator) after
// every arithmetic operation; parse_rational canonicalizes string input.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DataError("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  std::size_t start = (!s.empty() && s.front() == '-') ? 1 : 0;
  std::size_t slash = s.find('/');
  auto digits_only = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  bool ok = slash == std::string::npos
                ? digits_only(start, s.size())
                : digits_only(start, slash) && digits_only(slash + 1, s.size());
  if (!ok) throw DataError("malformed rational literal '" + std::string(text) + "'");
  Rational r;
  r.set_str(s, 10);
  if (r.get_den() == 0) throw DataError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline int sign(const Rational& r) { return sgn(r); }

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {}

  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator*(const Rational& s, const GaussianRational& a) {
    return {s * a.re, s * a.im};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string im_part;
  Rational mag = abs(z.im);
  im_part = (mag == 1 ? std::string() : to_string(mag) + "*") + "i";
  if (z.re == 0) return (z.im < 0 ? "-" : "") + im_part;
  return to_string(z.re) + (z.im < 0 ? " - " : " + ") + im_part;
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << to_string(z);
}

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw UsageError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const { return !first_asymmetry().has_value(); }

  // First (i, j) with i < j and m(i,j) != m(j,i), if any.
  std::optional<std::pair<std::size_t, std::size_t>> first_asymmetry() const {
    if (!is_square()) return std::pair<std::size_t, std::size_t>{0, 0};
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return std::pair{i, j};
    return std::nullopt;
  }

  // Principal submatrix on the given indices.
  RationalMatrix principal(std::span<const std::size_t> idx) const {
    RationalMatrix out(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) out(a, b) = (*this)(idx[a], idx[b]);
    return out;
  }

  RationalVector operator*(std::span<const Rational> v) const {
    if (v.size() != cols_) throw UsageError("matrix-vector dimension mismatch");
    RationalVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// v^T m w
inline Rational bilinear(const RationalMatrix& m, std::span<const Rational> v, std::span<const Rational> w) {
  if (!m.is_square() || v.size() != m.rows() || w.size() != m.cols())
    throw UsageError("bilinear form dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < w.size(); ++j) row += m(i, j) * w[j];
    acc += v[i] * row;
  }
  return acc;
}

// Exact Gauss-Jordan elimination. nullopt signals a singular matrix.
inline std::optional<RationalVector> solve_linear(const RationalMatrix& m, std::span<const Rational> b) {
  if (!m.is_square()) throw UsageError("solve_linear: matrix is not square");
  if (b.size() != m.rows()) throw UsageError("solve_linear: right-hand side has wrong length");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalVector x(b.begin(), b.end());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      std::swap(x[pivot], x[col]);
    }
    Rational inv = 1 / a(col, col);
    for (std::size_t j = col; j < n; ++j) a(col, j) *= inv;
    x[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      x[r] -= f * x[col];
    }
  }
  return x;
}

inline Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw UsageError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Rational f = a(r, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Sylvester inertia by symmetric elimination. A nonzero diagonal entry is used
// as pivot; when the remaining diagonal is all zero but some a_ij != 0, the
// congruence e_i -> e_i + e_j produces the nonzero diagonal entry 2*a_ij.
inline Inertia inertia(const RationalMatrix& m) {
  if (auto bad = m.first_asymmetry())
    throw UsageError("inertia: matrix is not symmetric at (" + std::to_string(bad->first) + "," +
                     std::to_string(bad->second) + ")");
  RationalMatrix a = m;
  std::vector<std::size_t> live(m.rows());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  Inertia out;
  while (!live.empty()) {
    std::size_t p = live.size();
    for (std::size_t k = 0; k < live.size(); ++k)
      if (a(live[k], live[k]) != 0) { p = k; break; }
    if (p == live.size()) {
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t k = 0; k < live.size() && !off; ++k)
        for (std::size_t l = k + 1; l < live.size(); ++l)
          if (a(live[k], live[l]) != 0) { off = std::pair{k, l}; break; }
      if (!off) {
        out.zero += live.size();
        break;
      }
      const std::size_t i = live[off->first], j = live[off->second];
      for (std::size_t r : live) a(i, r) += a(j, r);
      for (std::size_t r : live) a(r, i) = (r == i) ? a(i, i) + a(j, i) : a(i, r);
      p = off->first;
    }
    const std::size_t piv = live[p];
    const Rational d = a(piv, piv);
    (d > 0 ? out.positive : out.negative) += 1;
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(p));
    for (std::size_t r : live) {
      if (a(r, piv) == 0) continue;
      Rational f = a(r, piv) / d;
      for (std::size_t c : live) a(r, c) -= f * a(piv, c);
    }
  }
  return out;
}

enum class Definiteness {
  negative_definite,
  negative_semidefinite,
  indefinite,
  positive_definite,
  positive_semidefinite,
  zero,
};

inline std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::negative_definite: return "negative-definite";
    case Definiteness::negative_semidefinite: return "negative-semidefinite";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::positive_definite: return "positive-definite";
    case Definiteness::positive_semidefinite: return "positive-semidefinite";
    case Definiteness::zero: return "zero";
  }
  return "?";
}

inline Definiteness classify(const Inertia& in) {
  if (in.positive > 0 && in.negative > 0) return Definiteness::indefinite;
  if (in.positive == 0 && in.negative == 0) return Definiteness::zero;
  if (in.negative > 0)
    return in.zero == 0 ? Definiteness::negative_definite : Definiteness::negative_semidefinite;
  return in.zero == 0 ? Definiteness::positive_definite : Definiteness::positive_semidefinite;
}

inline Definiteness definiteness(const RationalMatrix& m) { return classify(inertia(m)); }

}  // namespace mumford
