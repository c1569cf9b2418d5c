// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#include "knotforge/hseries.hpp"

#include <algorithm>

#include "knotforge/error.hpp"

namespace knotforge {

RationalSeriesH::RationalSeriesH(int order) : order_(order) {
  if (order < 0) throw ArgumentError("series order must be nonnegative");
  coeffs_.assign(order + 1, Rational(0));
}

RationalSeriesH::RationalSeriesH(int order, std::vector<Rational> coeffs)
    : RationalSeriesH(order) {
  for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k)
    coeffs_[k] = coeffs[k];
}

RationalSeriesH& RationalSeriesH::operator+=(const RationalSeriesH& o) {
  if (o.order_ < order_) {
    order_ = o.order_;
    coeffs_.resize(order_ + 1);
  }
  for (int k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

RationalSeriesH& RationalSeriesH::operator-=(const RationalSeriesH& o) {
  if (o.order_ < order_) {
    order_ = o.order_;
    coeffs_.resize(order_ + 1);
  }
  for (int k = 0; k <= order_; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

RationalSeriesH operator*(const RationalSeriesH& a, const RationalSeriesH& b) {
  RationalSeriesH out(std::min(a.order_, b.order_));
  for (int i = 0; i <= out.order_; ++i)
    for (int j = 0; i + j <= out.order_; ++j)
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return out;
}

RationalSeriesH RationalSeriesH::inverse() const {
  if (sgn(coeffs_[0]) == 0)
    throw DomainError("series with zero constant term is not invertible");
  RationalSeriesH out(order_);
  out.coeffs_[0] = 1 / coeffs_[0];
  for (int k = 1; k <= order_; ++k) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j) s += coeffs_[j] * out.coeffs_[k - j];
    out.coeffs_[k] = -s / coeffs_[0];
  }
  return out;
}

std::string RationalSeriesH::to_string() const {
  std::string out;
  for (int k = 0; k <= order_; ++k) {
    if (k) out += " + ";
    out += "(" + coeffs_[k].get_str() + ")";
    if (k == 1) out += "h";
    if (k > 1) out += "h^" + std::to_string(k);
  }
  return out;
}

RationalSeriesH h_expand(const LaurentQ& p, int scale_num, int scale_den, int order) {
  if (scale_den == 0) throw ArgumentError("h_expand: zero scale denominator");
  RationalSeriesH out(order);
  // q^e -> exp(e * s * h) contributes (e s)^k / k! to h^k.
  Rational s(scale_num, scale_den);
  s.canonicalize();
  p.for_each_term([&](int e, const Int& c) {
    Rational term(c);
    const Rational es = Rational(e) * s;
    for (int k = 0; k <= order; ++k) {
      out[k] += term;
      term *= es;
      term /= k + 1;
    }
  });
  for (int k = 0; k <= order; ++k) out[k].canonicalize();
  return out;
}

}  // namespace knotforge
