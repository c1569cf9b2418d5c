// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#include "knotforge/cycseries.hpp"

#include <algorithm>

#include "knotforge/error.hpp"

namespace knotforge {

CycSeries::CycSeries(int r, int precision, const CycLaurentA& value)
    : r_(r), precision_(precision), value_(reduce_mod_brace_power(value, r, precision)) {
  if (r < 1) throw ArgumentError("CycSeries: r must be >= 1");
  if (precision < 0) throw ArgumentError("CycSeries: negative precision");
  if (value.order() != 2 * r)
    throw DomainError("CycSeries: coefficient order " + std::to_string(value.order()) +
                      " does not match r = " + std::to_string(r));
}

CycSeries CycSeries::one(int r, int precision) {
  return CycSeries(r, precision, CycLaurentA::monomial(2 * r, 0));
}

CycSeries CycSeries::brace(int r, int precision) {
  return CycSeries(r, precision,
                   CycLaurentA::monomial(2 * r, r) - CycLaurentA::monomial(2 * r, -r));
}

CycSeries CycSeries::truncated(int precision) const {
  if (precision > precision_) throw ArgumentError("cannot raise the precision of a series");
  return CycSeries(r_, precision, value_);
}

namespace {

void check_compatible(const CycSeries& a, const CycSeries& b) {
  if (a.r() != b.r()) throw DomainError("CycSeries: mismatched r");
}

}  // namespace

CycSeries& CycSeries::operator+=(const CycSeries& o) {
  check_compatible(*this, o);
  precision_ = std::min(precision_, o.precision_);
  value_ = reduce_mod_brace_power(value_ + o.value_, r_, precision_);
  return *this;
}

CycSeries& CycSeries::operator-=(const CycSeries& o) {
  check_compatible(*this, o);
  precision_ = std::min(precision_, o.precision_);
  value_ = reduce_mod_brace_power(value_ - o.value_, r_, precision_);
  return *this;
}

CycSeries& CycSeries::operator*=(const CycSeries& o) {
  check_compatible(*this, o);
  precision_ = std::min(precision_, o.precision_);
  value_ = reduce_mod_brace_power(value_ * o.value_, r_, precision_);
  return *this;
}

bool operator==(const CycSeries& a, const CycSeries& b) {
  check_compatible(a, b);
  const int m = std::min(a.precision_, b.precision_);
  return divisibility_by_brace_r(a.value_ - b.value_, a.r_, m).divisible;
}

std::vector<CycLaurentA> CycSeries::brace_expansion() const {
  std::vector<CycLaurentA> out;
  CycLaurentA rest = value_;
  for (int k = 0; k < precision_; ++k) {
    const CycLaurentA low = reduce_mod_brace_power(rest, r_, 1);
    out.push_back(low);
    const BraceDivision div = divisibility_by_brace_r(rest - low, r_, 1);
    if (!div.divisible) throw InconsistencyError("brace_expansion: inexact division");
    rest = div.quotient;
  }
  return out;
}

}  // namespace knotforge
