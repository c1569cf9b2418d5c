// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "knotforge/laurent.hpp"

namespace knotforge {

using Rational = mpq_class;

/// Truncated power series in h with exact rational coefficients, known
/// through h^order.
class RationalSeriesH {
 public:
  explicit RationalSeriesH(int order);
  RationalSeriesH(int order, std::vector<Rational> coeffs);

  int order() const noexcept { return order_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const Rational& operator[](int k) const { return coeffs_.at(k); }
  Rational& operator[](int k) { return coeffs_.at(k); }

  RationalSeriesH& operator+=(const RationalSeriesH& o);
  RationalSeriesH& operator-=(const RationalSeriesH& o);
  friend RationalSeriesH operator+(RationalSeriesH a, const RationalSeriesH& b) {
    return a += b;
  }
  friend RationalSeriesH operator-(RationalSeriesH a, const RationalSeriesH& b) {
    return a -= b;
  }
  /// Product truncated at the smaller order.
  friend RationalSeriesH operator*(const RationalSeriesH& a, const RationalSeriesH& b);
  friend bool operator==(const RationalSeriesH& a, const RationalSeriesH& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplicative inverse; requires a nonzero constant term.
  RationalSeriesH inverse() const;

  std::string to_string() const;

 private:
  int order_;
  std::vector<Rational> coeffs_;  // size order_ + 1
};

/// Taylor coefficients of p(e^{h * num / den}) through h^order.
RationalSeriesH h_expand(const LaurentQ& p, int scale_num, int scale_den, int order);

}  // namespace knotforge
