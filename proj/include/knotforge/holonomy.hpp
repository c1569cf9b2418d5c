// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "knotforge/cyclotomic.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/laurent.hpp"
#include "knotforge/statesum.hpp"

namespace knotforge {

/// Colored Jones values J_n(q^2) over a contiguous range of n.
struct JonesSequence {
  std::string knot;
  std::map<int, LaurentQ> values;

  /// Throws RangeError when n is missing.
  const LaurentQ& at(int n) const;
  bool contains(int n) const { return values.count(n) != 0; }
  int first() const;
  int last() const;
};

JonesSequence jones_sequence(const TangleDiagram& d, int n_min, int n_max,
                             Engine engine = Engine::DP);

/// Adds n <= -2 using J_{-n-2} = J_n: the normalized colored Jones function
/// is even in the dimension n + 1. The value at dimension 0 stays absent.
JonesSequence with_reflection(const JonesSequence& s);

/// Sum of c_{j,k}(q) Q^j E^k in Q-before-E normal order, where
/// (Q f)(n) = q^{2n} f(n), (E f)(n) = f(n + 1) and E Q = q^2 Q E.
class RecurrencePoly {
 public:
  using Key = std::pair<int, int>;  // (j, k)

  /// Throws ArgumentError when every coefficient is zero or a degree is negative.
  explicit RecurrencePoly(std::map<Key, LaurentQ> terms);

  static RecurrencePoly Q() { return RecurrencePoly({{{1, 0}, LaurentQ(1)}}); }
  static RecurrencePoly E() { return RecurrencePoly({{{0, 1}, LaurentQ(1)}}); }
  static RecurrencePoly constant(const LaurentQ& c) { return RecurrencePoly({{{0, 0}, c}}); }

  const std::map<Key, LaurentQ>& terms() const noexcept { return terms_; }
  int degree_q() const;
  int degree_e() const;

  RecurrencePoly& operator+=(const RecurrencePoly& o);
  RecurrencePoly& operator-=(const RecurrencePoly& o);
  friend RecurrencePoly operator+(RecurrencePoly a, const RecurrencePoly& b) { return a += b; }
  friend RecurrencePoly operator-(RecurrencePoly a, const RecurrencePoly& b) { return a -= b; }
  /// Composition, renormalized with E^b Q^c = q^{2bc} Q^c E^b.
  friend RecurrencePoly operator*(const RecurrencePoly& a, const RecurrencePoly& b);
  friend bool operator==(const RecurrencePoly&, const RecurrencePoly&) = default;

  std::string to_string() const;

 private:
  std::map<Key, LaurentQ> terms_;  // no zero coefficients
};

/// (p s)(n). Throws RangeError when s lacks n..n + degree_e(p).
LaurentQ apply_to_sequence(const RecurrencePoly& p, const JonesSequence& s, int n);

/// Nonzero recurrence with Q-degree <= deg_q and E-degree <= deg_e whose
/// coefficients fit in q^0..q^max_qdeg, annihilating every shift available
/// in with_reflection(s). The coefficient window is shrunk to the smallest
/// that admits a solution, which makes the answer unique up to sign. The
/// window is chosen without the last value of s, which must then be
/// predicted. nullopt when no such recurrence exists.
///
/// Throws RangeError unless s covers a contiguous range of n >= 0 with at
/// least deg_e + 3 values.
std::optional<RecurrencePoly> fit_recurrence(const JonesSequence& s, int deg_q, int deg_e,
                                             int max_qdeg = 48);

struct RecurrenceFit {
  int deg_q = 0;
  int deg_e = 0;
  RecurrencePoly poly;
};

/// First success of fit_recurrence scanning deg_e = 1.., then deg_q = 0...
std::optional<RecurrenceFit> search_recurrence(const JonesSequence& s, int max_deg_q,
                                               int max_deg_e, int max_qdeg = 48);

/// Pushes p through the root-of-unity operators: Q multiplies by A^2, E
/// substitutes A -> zeta_2r A and coefficients are evaluated at q = zeta_2r.
/// Throws ScopeError unless a.framing == 0.
CycLaurentA apply_to_ado(const RecurrencePoly& p, const AdoResult& a);

}  // namespace knotforge
