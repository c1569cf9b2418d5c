// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#include "knotforge/completion.hpp"

#include <algorithm>

#include "knotforge/statesum.hpp"
#include "render.hpp"

namespace knotforge {

// ----------------------------------------------------------- AlexanderPoly

AlexanderPoly::AlexanderPoly(std::map<int, Int> coeffs) : coeffs_(std::move(coeffs)) {
  std::erase_if(coeffs_, [](const auto& kv) { return sgn(kv.second) == 0; });
}

Int AlexanderPoly::at_one() const {
  Int s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

bool AlexanderPoly::is_symmetric() const {
  for (const auto& [e, c] : coeffs_) {
    auto it = coeffs_.find(-e);
    if (it == coeffs_.end() || it->second != c) return false;
  }
  return true;
}

LaurentQ AlexanderPoly::as_laurent() const { return LaurentQ::from_terms(coeffs_); }

CycLaurentA AlexanderPoly::at_a_power(int r) const {
  CycLaurentA out(2 * r);
  for (const auto& [e, c] : coeffs_) out.add_term(2 * r * e, CycInt(2 * r, c));
  return out;
}

AlexanderPoly& AlexanderPoly::operator+=(const AlexanderPoly& o) {
  for (const auto& [e, c] : o.coeffs_) coeffs_[e] += c;
  std::erase_if(coeffs_, [](const auto& kv) { return sgn(kv.second) == 0; });
  return *this;
}

std::string AlexanderPoly::to_string() const {
  // descending powers of t
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const bool negative = sgn(it->second) < 0;
    const Int mag = abs(it->second);
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    const std::string mono = detail::render_power("t", it->first);
    if (mono.empty())
      out += mag.get_str();
    else
      out += (mag == 1 ? "" : mag.get_str() + " ") + mono;
  }
  return out.empty() ? "0" : out;
}

// ------------------------------------------------------------------ series

CycSeries invert_series(const CycSeries& s) {
  const int r = s.r();
  const int order = 2 * r;
  const CycLaurentA lead = reduce_mod_brace_power(s.value(), r, 1);
  std::optional<std::pair<int, int>> root;
  if (lead.terms().size() == 1) root = lead.terms().begin()->second.as_signed_root();
  if (!root)
    throw DomainError("invert_series: constant term " + lead.to_string() +
                      " is not a signed root of unity times a power of A");
  const int k = lead.terms().begin()->first;
  const auto [sign, j] = *root;
  CycInt c_inv = CycInt::zeta_power(order, -j);
  if (sign < 0) c_inv = -c_inv;
  const CycSeries unit_inv(r, s.precision(), CycLaurentA::monomial(order, -k, c_inv));
  // s = u (1 - t) with t in the ideal; 1/s = u^-1 sum_{i < m} t^i.
  const CycSeries one = CycSeries::one(r, s.precision());
  const CycSeries t = one - unit_inv * s;
  CycSeries sum = one;
  CycSeries power = one;
  for (int i = 1; i < s.precision(); ++i) {
    power *= t;
    sum += power;
  }
  return unit_inv * sum;
}

CycSeries lift_c_series(const CycSeries& s1, int r_target) {
  if (s1.r() != 1) throw ArgumentError("lift_c_series: input must be a series at r = 1");
  if (r_target < 1) throw ArgumentError("lift_c_series: target r must be >= 1");
  return CycSeries(r_target, s1.precision(),
                   s1.value().with_a_scaled(r_target, 2 * r_target));
}

// --------------------------------------------------------------- Alexander

int alexander_degree_bound(const TangleDiagram& d) {
  // deg <= genus <= (crossings - circles + 1) / 2
  return std::max(0, (d.crossing_count() - d.seifert_circles() + 1) / 2);
}

int alexander_min_precision(const TangleDiagram& d) {
  return 2 * alexander_degree_bound(d) + 1;
}

AlexanderPoly alexander_from_diagram(const TangleDiagram& d, int m) {
  const int degree = alexander_degree_bound(d);
  if (m < alexander_min_precision(d))
    throw PrecisionError("alexander_from_diagram: precision " + std::to_string(m) +
                         " cannot certify a polynomial of degree up to " +
                         std::to_string(degree) + "; use m >= " +
                         std::to_string(alexander_min_precision(d)));
  const CycSeries inv = invert_series(c_series(d, 1, m));
  const CycSeries framed =
      inv * CycSeries(1, m, CycLaurentA::monomial(2, d.framing()));
  const std::vector<CycLaurentA> expansion = framed.brace_expansion();

  // A(A^2) is even in A and symmetric, hence a polynomial in {alpha}^2.
  std::vector<Int> even(degree + 1);
  for (int k = 0; k < m; ++k) {
    const CycLaurentA& x = expansion[k];
    if (!x.coeff(1).is_zero())
      throw InconsistencyError("alexander_from_diagram: odd power of A at {alpha}^" +
                               std::to_string(k));
    const Int a = x.coeff(0).residue()[0];
    if (sgn(a) == 0) continue;
    if (k % 2)
      throw InconsistencyError("alexander_from_diagram: odd power of {alpha} survives");
    if (k > 2 * degree)
      throw InconsistencyError("alexander_from_diagram: terms beyond the degree bound");
    even[k / 2] = a;
  }
  // {alpha}^2 = t - 2 + t^-1
  const LaurentQ brace2 = LaurentQ::monomial(1) - LaurentQ(2) + LaurentQ::monomial(-1);
  LaurentQ poly;
  LaurentQ power(1);
  for (int j = 0; j <= degree; ++j) {
    poly.add_scaled(power, even[j], 0);
    power *= brace2;
  }
  AlexanderPoly out(poly.terms());
  if (out.at_one() != 1)
    throw InconsistencyError("alexander_from_diagram: A(1) = " + out.at_one().get_str());
  if (!out.is_symmetric())
    throw InconsistencyError("alexander_from_diagram: result is not symmetric");
  return out;
}

// ----------------------------------------------------------- factorization

FactorizationReport verify_factorization(const TangleDiagram& d, int r, int bound, int m,
                                         const AlexanderPoly& alexander) {
  if (r < 1 || bound < 0 || m < 1)
    throw ArgumentError("verify_factorization: need r >= 1, B >= 0, m >= 1");
  if (m > (bound + 1) / r)
    throw ArgumentError("verify_factorization: precision m = " + std::to_string(m) +
                        " exceeds floor((B + 1) / r) = " + std::to_string((bound + 1) / r));
  const CycLaurentA unified = unified_at_root(d, bound, r);
  const CycLaurentA adov = ado(d, r).value;
  const CycLaurentA defect =
      unified * alexander.at_a_power(r) - adov.shifted(r * d.framing());
  const BraceDivision div = divisibility_by_brace_r(defect, r, m);
  return {r, bound, m, div.divisible, div.remainder};
}

FactorizationReport verify_factorization(const TangleDiagram& d, int r, int bound, int m) {
  return verify_factorization(d, r, bound, m,
                              alexander_from_diagram(d, alexander_min_precision(d)));
}

// ------------------------------------------------------------- consistency

ConsistencyReport verify_jones_ado_consistency(const TangleDiagram& d, int r, int n) {
  if (r < 1 || n < 0 || n >= r)
    throw ArgumentError("verify_jones_ado_consistency: need r >= 1 and 0 <= n < r");
  // F(zeta, zeta^n) = zeta^{fn} J_n = zeta^{rfn} ado(zeta^n)
  CycInt adov = ado(d, r).value.at_zeta_power(n);
  adov *= CycInt::zeta_power(2 * r, static_cast<long>(d.framing()) * n * (r - 1));
  CycInt jv = ev_root(jones(d, n).value, r);
  const bool holds = adov == jv;
  return {r, n, holds, std::move(adov), std::move(jv)};
}

// --------------------------------------------------------------------- MMR

RationalSeriesH inverse_alexander_expansion(const AlexanderPoly& alexander, int order) {
  return h_expand(alexander.as_laurent(), 1, 1, order).inverse();
}

std::vector<MmrPoint> mmr_trend(const TangleDiagram& d, const std::vector<int>& colors,
                                int order) {
  const RationalSeriesH target = inverse_alexander_expansion(
      alexander_from_diagram(d, alexander_min_precision(d)), order);
  std::vector<MmrPoint> out;
  for (int n : colors) {
    if (n < 1) throw ArgumentError("mmr_trend: colors must be >= 1");
    // jones() stores J_n(q^2) in q, so J_n(e^{h/n}) needs q = e^{h/(2n)}.
    RationalSeriesH jn = h_expand(jones(d, n).value, 1, 2 * n, order);
    out.push_back({n, jn, jn - target});
  }
  return out;
}

}  // namespace knotforge
