// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotforge/laurent.hpp"

namespace knotforge {

/// Integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<Int>;

/// Phi_m. Cached per order; safe to call concurrently.
const IntPoly& cyclotomic_polynomial(int m);
int euler_phi(int m);

/// Element of Z[zeta] with zeta a primitive root of unity of the given order,
/// stored as its residue modulo the cyclotomic polynomial of that order.
class CycInt {
 public:
  explicit CycInt(int order = 2);
  CycInt(int order, const Int& c);

  /// zeta^e for any integer e.
  static CycInt zeta_power(int order, long e);
  /// Reduces an arbitrary integer polynomial in zeta.
  static CycInt from_poly(int order, const IntPoly& coeffs);

  int order() const noexcept { return order_; }
  const std::vector<Int>& residue() const noexcept { return residue_; }
  bool is_zero() const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  CycInt& operator*=(const Int& c);
  /// this += x * y.
  void add_product(const CycInt& x, const CycInt& y);

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator-(CycInt a);
  friend bool operator==(const CycInt& a, const CycInt& b) {
    return a.order_ == b.order_ && a.residue_ == b.residue_;
  }

  /// If this equals sign * zeta^j, returns (sign, j) with 0 <= j < order.
  std::optional<std::pair<int, int>> as_signed_root() const;

  std::string to_string() const;

 private:
  int order_;
  std::vector<Int> residue_;  // length euler_phi(order_)
};

/// Laurent polynomial in A over Z[zeta]; no zero coefficient is stored.
class CycLaurentA {
 public:
  explicit CycLaurentA(int order = 2);
  explicit CycLaurentA(const CycInt& c);

  static CycLaurentA monomial(int order, int a_exp, const CycInt& c);
  static CycLaurentA monomial(int order, int a_exp, const Int& c = 1);

  int order() const noexcept { return order_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<int, CycInt>& terms() const noexcept { return terms_; }
  CycInt coeff(int a_exp) const;
  int min_exp() const { return terms_.begin()->first; }
  int max_exp() const { return terms_.rbegin()->first; }

  CycLaurentA& operator+=(const CycLaurentA& o);
  CycLaurentA& operator-=(const CycLaurentA& o);
  CycLaurentA& operator*=(const CycLaurentA& o);
  CycLaurentA& operator*=(const CycInt& c);
  void add_product(const CycLaurentA& x, const CycLaurentA& y);
  /// this += c * A^a_exp.
  void add_term(int a_exp, const CycInt& c);

  friend CycLaurentA operator+(CycLaurentA a, const CycLaurentA& b) { return a += b; }
  friend CycLaurentA operator-(CycLaurentA a, const CycLaurentA& b) { return a -= b; }
  friend CycLaurentA operator*(const CycLaurentA& a, const CycLaurentA& b);
  friend CycLaurentA operator-(CycLaurentA a);
  friend bool operator==(const CycLaurentA& a, const CycLaurentA& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  /// Multiply by A^e.
  CycLaurentA shifted(int e) const;
  /// Substitute A -> zeta^k A.
  CycLaurentA twisted(int k) const;
  /// Substitute A -> A^k. Integer coefficients (order 2) may be re-embedded
  /// in a larger order.
  CycLaurentA with_a_scaled(int k, int new_order) const;
  /// The specialization A := zeta^n.
  CycInt at_zeta_power(long n) const;

  std::string to_string() const;

 private:
  int order_;
  std::map<int, CycInt> terms_;
};

/// Evaluation q -> zeta_{2r}, A -> A.
CycLaurentA ev_root(const LaurentQA& p, int r);
/// Evaluation of a one-variable polynomial at q = zeta_{2r}.
CycInt ev_root(const LaurentQ& p, int r);

/// The unique representative of x modulo (A^r - A^-r)^n whose A-exponents
/// lie in [0, 2rn).
CycLaurentA reduce_mod_brace_power(const CycLaurentA& x, int r, int n);

struct BraceDivision {
  bool divisible = false;
  /// x / (A^r - A^-r)^n when divisible.
  CycLaurentA quotient;
  /// Canonical residue of x modulo (A^r - A^-r)^n; zero iff divisible.
  CycLaurentA remainder;
};

/// Exact membership test of x in the ideal generated by (A^r - A^-r)^n.
BraceDivision divisibility_by_brace_r(const CycLaurentA& x, int r, int n);

}  // namespace knotforge
