// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#include "knotforge/cyclotomic.hpp"

#include <mutex>
#include <shared_mutex>

#include "knotforge/error.hpp"
#include "render.hpp"

namespace knotforge {

namespace {

// Quotient of num by a monic divisor; throws if the division is not exact.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) throw InconsistencyError("divide_monic: degree too small");
  IntPoly quot(num.size() - dd);
  for (std::size_t k = num.size(); k-- > dd;) {
    const Int c = num[k];
    if (sgn(c) == 0) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (sgn(r) != 0) throw InconsistencyError("divide_monic: nonzero remainder");
  return quot;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(int m) {
  if (m < 1) throw DomainError("cyclotomic_polynomial: order must be >= 1");
  static std::shared_mutex mutex;
  static std::map<int, IntPoly> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  IntPoly p(m + 1);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = divide_monic(std::move(p), cyclotomic_polynomial(d));
  std::unique_lock lock(mutex);
  return cache.try_emplace(m, std::move(p)).first->second;
}

int euler_phi(int m) {
  return static_cast<int>(cyclotomic_polynomial(m).size()) - 1;
}

// ------------------------------------------------------------------ CycInt

CycInt::CycInt(int order) : order_(order), residue_(euler_phi(order)) {}

CycInt::CycInt(int order, const Int& c) : CycInt(order) { residue_[0] = c; }

CycInt CycInt::from_poly(int order, const IntPoly& coeffs) {
  CycInt out(order);
  const IntPoly& phi = cyclotomic_polynomial(order);
  const std::size_t d = phi.size() - 1;
  IntPoly p = coeffs;
  for (std::size_t k = p.size(); k-- > d;) {
    if (sgn(p[k]) == 0) continue;
    const Int c = p[k];
    for (std::size_t j = 0; j <= d; ++j)
      mpz_submul(p[k - d + j].get_mpz_t(), c.get_mpz_t(), phi[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < d && i < p.size(); ++i) out.residue_[i] = p[i];
  return out;
}

CycInt CycInt::zeta_power(int order, long e) {
  long k = e % order;
  if (k < 0) k += order;
  IntPoly p(k + 1);
  p[k] = 1;
  return from_poly(order, p);
}

bool CycInt::is_zero() const {
  for (const auto& c : residue_)
    if (sgn(c) != 0) return false;
  return true;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  for (std::size_t i = 0; i < residue_.size(); ++i) residue_[i] += o.residue_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  for (std::size_t i = 0; i < residue_.size(); ++i) residue_[i] -= o.residue_[i];
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  if (a.order_ != b.order_) throw DomainError("CycInt: order mismatch");
  const std::size_t d = a.residue_.size();
  if (d == 1) return CycInt(a.order_, a.residue_[0] * b.residue_[0]);
  IntPoly prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a.residue_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      mpz_addmul(prod[i + j].get_mpz_t(), a.residue_[i].get_mpz_t(),
                 b.residue_[j].get_mpz_t());
  }
  return CycInt::from_poly(a.order_, prod);
}

void CycInt::add_product(const CycInt& x, const CycInt& y) { *this += x * y; }

CycInt& CycInt::operator*=(const CycInt& o) {
  *this = *this * o;
  return *this;
}

CycInt& CycInt::operator*=(const Int& c) {
  for (auto& x : residue_) x *= c;
  return *this;
}

CycInt operator-(CycInt a) {
  for (auto& x : a.residue_) x = -x;
  return a;
}

std::optional<std::pair<int, int>> CycInt::as_signed_root() const {
  for (int j = 0; j < order_; ++j) {
    const CycInt z = zeta_power(order_, j);
    if (z == *this) return std::pair(1, j);
    if (-z == *this) return std::pair(-1, j);
  }
  return std::nullopt;
}

std::string CycInt::to_string() const {
  std::vector<detail::RenderTerm> terms;
  for (std::size_t i = 0; i < residue_.size(); ++i)
    if (sgn(residue_[i]) != 0)
      terms.push_back({residue_[i], static_cast<int>(i), 0});
  return detail::render_terms(terms, "z");
}

// ------------------------------------------------------------- CycLaurentA

CycLaurentA::CycLaurentA(int order) : order_(order) {}

CycLaurentA::CycLaurentA(const CycInt& c) : order_(c.order()) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

CycLaurentA CycLaurentA::monomial(int order, int a_exp, const CycInt& c) {
  CycLaurentA out(order);
  out.add_term(a_exp, c);
  return out;
}

CycLaurentA CycLaurentA::monomial(int order, int a_exp, const Int& c) {
  return monomial(order, a_exp, CycInt(order, c));
}

CycInt CycLaurentA::coeff(int a_exp) const {
  auto it = terms_.find(a_exp);
  return it == terms_.end() ? CycInt(order_) : it->second;
}

void CycLaurentA::add_term(int a_exp, const CycInt& c) {
  if (c.order() != order_) throw DomainError("CycLaurentA: order mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(a_exp, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CycLaurentA& CycLaurentA::operator+=(const CycLaurentA& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CycLaurentA& CycLaurentA::operator-=(const CycLaurentA& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

void CycLaurentA::add_product(const CycLaurentA& x, const CycLaurentA& y) {
  if (x.order_ != order_ || y.order_ != order_)
    throw DomainError("CycLaurentA: order mismatch");
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) {
      auto [it, fresh] = terms_.try_emplace(ex + ey, order_);
      it->second.add_product(cx, cy);
    }
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

CycLaurentA operator*(const CycLaurentA& a, const CycLaurentA& b) {
  CycLaurentA out(a.order_);
  out.add_product(a, b);
  return out;
}

CycLaurentA& CycLaurentA::operator*=(const CycLaurentA& o) {
  *this = *this * o;
  return *this;
}

CycLaurentA& CycLaurentA::operator*=(const CycInt& c) {
  for (auto& [e, x] : terms_) x *= c;
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return *this;
}

CycLaurentA operator-(CycLaurentA a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

CycLaurentA CycLaurentA::shifted(int e) const {
  CycLaurentA out(order_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k + e, c);
  return out;
}

CycLaurentA CycLaurentA::twisted(int k) const {
  CycLaurentA out(order_);
  for (const auto& [e, c] : terms_)
    out.add_term(e, c * CycInt::zeta_power(order_, static_cast<long>(k) * e));
  return out;
}

CycLaurentA CycLaurentA::with_a_scaled(int k, int new_order) const {
  if (k == 0) throw DomainError("with_a_scaled: k must be nonzero");
  if (new_order != order_ && euler_phi(order_) != 1)
    throw DomainError("with_a_scaled: only integer coefficients can change order");
  CycLaurentA out(new_order);
  for (const auto& [e, c] : terms_)
    out.add_term(e * k, new_order == order_ ? c : CycInt(new_order, c.residue()[0]));
  return out;
}

CycInt CycLaurentA::at_zeta_power(long n) const {
  CycInt out(order_);
  for (const auto& [e, c] : terms_) out += c * CycInt::zeta_power(order_, n * e);
  return out;
}

std::string CycLaurentA::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::size_t nonzero = 0;
    for (const auto& x : c.residue())
      if (sgn(x) != 0) ++nonzero;
    const std::string apow = detail::render_power("A", e);
    if (nonzero == 1 && sgn(c.residue()[0]) != 0) {
      // integer coefficient: fold the sign into the separator
      const Int& v = c.residue()[0];
      out += out.empty() ? (sgn(v) < 0 ? "-" : "") : (sgn(v) < 0 ? " - " : " + ");
      const Int mag = abs(v);
      if (apow.empty())
        out += mag.get_str();
      else
        out += (mag == 1 ? std::string() : mag.get_str() + " ") + apow;
      continue;
    }
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")" + (apow.empty() ? "" : " " + apow);
  }
  return out;
}

// -------------------------------------------------------------- evaluation

CycInt ev_root(const LaurentQ& p, int r) {
  if (r < 1) throw ArgumentError("ev_root: r must be >= 1");
  const int order = 2 * r;
  std::vector<CycInt> powers;
  for (int j = 0; j < order; ++j) powers.push_back(CycInt::zeta_power(order, j));
  CycInt out(order);
  std::vector<Int> sums(order);
  p.for_each_term([&](int e, const Int& c) {
    int j = e % order;
    if (j < 0) j += order;
    sums[j] += c;
  });
  for (int j = 0; j < order; ++j)
    if (sgn(sums[j]) != 0) {
      CycInt t = powers[j];
      t *= sums[j];
      out += t;
    }
  return out;
}

CycLaurentA ev_root(const LaurentQA& p, int r) {
  CycLaurentA out(2 * r);
  for (const auto& [ae, poly] : p.by_a_exponent()) out.add_term(ae, ev_root(poly, r));
  return out;
}

namespace {

// (A^{2r} - 1)^n as sparse exponent -> coefficient.
std::vector<std::pair<int, Int>> brace_power_poly(int r, int n) {
  std::vector<std::pair<int, Int>> out;
  Int binom = 1;
  for (int j = 0; j <= n; ++j) {
    out.emplace_back(2 * r * j, (n - j) % 2 ? Int(-binom) : binom);
    binom = binom * (n - j) / (j + 1);
  }
  return out;
}

}  // namespace

CycLaurentA reduce_mod_brace_power(const CycLaurentA& x, int r, int n) {
  if (r < 1 || n < 0) throw ArgumentError("reduce_mod_brace_power: need r >= 1, n >= 0");
  if (n == 0) return CycLaurentA(x.order());
  const auto m = brace_power_poly(r, n);
  const int width = 2 * r * n;
  const Int lowest = m.front().second;  // (-1)^n, its own inverse
  std::map<int, CycInt> t = x.terms();
  auto add = [&](int e, const CycInt& c) {
    auto [it, fresh] = t.try_emplace(e, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  };
  while (!t.empty() && t.begin()->first < 0) {
    const int e = t.begin()->first;
    CycInt c = t.begin()->second;
    c *= lowest;
    for (const auto& [k, mk] : m) {
      CycInt d = c;
      d *= -mk;
      add(e + k, d);
    }
  }
  while (!t.empty() && t.rbegin()->first >= width) {
    const int e = t.rbegin()->first;
    const CycInt c = t.rbegin()->second;
    for (const auto& [k, mk] : m) {
      CycInt d = c;
      d *= -mk;
      add(e - width + k, d);
    }
  }
  CycLaurentA out(x.order());
  for (const auto& [e, c] : t) out.add_term(e, c);
  return out;
}

BraceDivision divisibility_by_brace_r(const CycLaurentA& x, int r, int n) {
  BraceDivision out{false, CycLaurentA(x.order()), reduce_mod_brace_power(x, r, n)};
  if (!out.remainder.is_zero()) return out;
  out.divisible = true;
  // A^r - A^-r = A^-r (A^{2r} - 1): divide by A^{2r} - 1 n times from the top.
  std::map<int, CycInt> t = x.shifted(r * n).terms();
  for (int step = 0; step < n && !t.empty(); ++step) {
    const int floor_exp = t.begin()->first;
    std::map<int, CycInt> quot;
    while (!t.empty()) {
      const auto [e, c] = *t.rbegin();
      if (e - 2 * r < floor_exp)
        throw InconsistencyError("divisibility_by_brace_r: inexact division");
      quot.emplace(e - 2 * r, c);
      t.erase(e);
      auto [it, fresh] = t.try_emplace(e - 2 * r, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
      }
    }
    t = std::move(quot);
  }
  for (const auto& [e, c] : t) out.quotient.add_term(e, c);
  return out;
}

}  // namespace knotforge
