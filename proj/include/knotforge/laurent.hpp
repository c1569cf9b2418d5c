// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace knotforge {

using Int = mpz_class;

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored densely: coeffs_[i] multiplies q^(offset_ + i). Both ends are
/// trimmed so the representation is canonical and the zero polynomial has
/// no coefficients at all.
class LaurentQ {
 public:
  LaurentQ() = default;
  explicit LaurentQ(long c);
  explicit LaurentQ(const Int& c);

  static LaurentQ monomial(int exp, const Int& coeff = 1);
  static LaurentQ from_terms(const std::map<int, Int>& terms);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const;
  /// Lowest and highest exponent; only meaningful when !is_zero().
  int min_exp() const noexcept { return offset_; }
  int max_exp() const noexcept {
    return offset_ + static_cast<int>(coeffs_.size()) - 1;
  }
  std::size_t term_count() const;

  Int coeff(int exp) const;
  std::map<int, Int> terms() const;

  template <class Fn>
  void for_each_term(Fn&& fn) const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (sgn(coeffs_[i]) != 0) fn(offset_ + static_cast<int>(i), coeffs_[i]);
  }

  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  LaurentQ& operator*=(const LaurentQ& o);
  LaurentQ& operator*=(const Int& c);
  /// this += x * y without a temporary.
  void add_product(const LaurentQ& x, const LaurentQ& y);
  /// this += c * q^shift * x.
  void add_scaled(const LaurentQ& x, const Int& c, int shift);

  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  friend LaurentQ operator-(LaurentQ a);
  friend bool operator==(const LaurentQ& a, const LaurentQ& b) {
    return a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiply by q^e.
  LaurentQ shifted(int e) const;
  /// Substitute q -> q^k for k != 0.
  LaurentQ with_exponents_scaled(int k) const;
  /// Substitute q -> q^-1.
  LaurentQ mirrored() const { return with_exponents_scaled(-1); }
  Int at_one() const;

  /// Exact division; nullopt when the remainder is nonzero.
  static std::optional<LaurentQ> divide_exact(const LaurentQ& num,
                                              const LaurentQ& den);

  std::string to_string() const;

 private:
  void trim();

  int offset_ = 0;
  std::vector<Int> coeffs_;
};

/// Laurent polynomial in q and A = q^alpha, keyed by A-exponent.
///
/// No zero LaurentQ is ever stored, so equality of the maps is equality of
/// polynomials.
class LaurentQA {
 public:
  LaurentQA() = default;
  explicit LaurentQA(long c) : LaurentQA(LaurentQ(c)) {}
  explicit LaurentQA(const LaurentQ& p);

  static LaurentQA monomial(int q_exp, int a_exp, const Int& coeff = 1);
  static LaurentQA from_triples(
      const std::vector<std::tuple<int, int, Int>>& triples);

  bool is_zero() const noexcept { return by_a_.empty(); }
  const std::map<int, LaurentQ>& by_a_exponent() const noexcept { return by_a_; }
  Int coeff(int q_exp, int a_exp) const;
  std::size_t term_count() const;
  /// (q_exp, A_exp, coeff), sorted by (q_exp, A_exp).
  std::vector<std::tuple<int, int, Int>> triples() const;

  LaurentQA& operator+=(const LaurentQA& o);
  LaurentQA& operator-=(const LaurentQA& o);
  LaurentQA& operator*=(const LaurentQA& o);
  void add_product(const LaurentQA& x, const LaurentQA& y);

  friend LaurentQA operator+(LaurentQA a, const LaurentQA& b) { return a += b; }
  friend LaurentQA operator-(LaurentQA a, const LaurentQA& b) { return a -= b; }
  friend LaurentQA operator*(const LaurentQA& a, const LaurentQA& b);
  friend LaurentQA operator-(LaurentQA a);
  friend bool operator==(const LaurentQA& a, const LaurentQA& b) {
    return a.by_a_ == b.by_a_;
  }

  /// Multiply by q^qe A^ae.
  LaurentQA shifted(int q_exp, int a_exp) const;
  /// The specialization A := q^n.
  LaurentQ at_a_power(int n) const;

  std::string to_string() const;

 private:
  std::map<int, LaurentQ> by_a_;
};

// Quantum integers. All results are honest Laurent polynomials.

/// {n} = q^n - q^-n.
LaurentQ qbrace(int n);
/// [n] = {n}/{1}, n >= 0.
LaurentQ qint(int n);
/// {1}{2}...{n}, n >= 0.
LaurentQ qbrace_fact(int n);
/// Balanced q-binomial, 0 <= k <= n. Cached.
const LaurentQ& qbinom(int n, int k);

/// {alpha + m} = A q^m - A^-1 q^-m.
LaurentQA brace_alpha(int m);
/// {alpha + m; n} = prod_{i<n} {alpha + m - i}. Cached.
const LaurentQA& brace_alpha_falling(int m, int n);

}  // namespace knotforge
