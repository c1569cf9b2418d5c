// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#pragma once

#include "knotforge/cyclotomic.hpp"

namespace knotforge {

/// An element of Z[zeta_2r][A^+-1] known modulo (A^r - A^-r)^precision.
///
/// Holds one representative. Arithmetic keeps the representative reduced;
/// equality is membership of the difference in the ideal.
class CycSeries {
 public:
  CycSeries(int r, int precision, const CycLaurentA& value);

  static CycSeries one(int r, int precision);
  /// The generator {r alpha} = A^r - A^-r.
  static CycSeries brace(int r, int precision);

  int r() const noexcept { return r_; }
  int precision() const noexcept { return precision_; }
  const CycLaurentA& value() const noexcept { return value_; }

  /// Same element at a lower precision.
  CycSeries truncated(int precision) const;

  CycSeries& operator+=(const CycSeries& o);
  CycSeries& operator-=(const CycSeries& o);
  CycSeries& operator*=(const CycSeries& o);
  friend CycSeries operator+(CycSeries a, const CycSeries& b) { return a += b; }
  friend CycSeries operator-(CycSeries a, const CycSeries& b) { return a -= b; }
  friend CycSeries operator*(CycSeries a, const CycSeries& b) { return a *= b; }
  /// Equal modulo the smaller of the two precisions.
  friend bool operator==(const CycSeries& a, const CycSeries& b);

  /// Coefficients x_k with x = sum_{k < precision} x_k {r alpha}^k, each x_k
  /// supported on A^0 .. A^{2r-1}.
  std::vector<CycLaurentA> brace_expansion() const;

 private:
  int r_;
  int precision_;
  CycLaurentA value_;  // canonical representative
};

}  // namespace knotforge
