// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#include "knotforge/laurent.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "knotforge/error.hpp"
#include "render.hpp"

namespace knotforge {

// ---------------------------------------------------------------- LaurentQ

LaurentQ::LaurentQ(long c) : LaurentQ(Int(c)) {}

LaurentQ::LaurentQ(const Int& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

LaurentQ LaurentQ::monomial(int exp, const Int& coeff) {
  LaurentQ p(coeff);
  if (!p.is_zero()) p.offset_ = exp;
  return p;
}

LaurentQ LaurentQ::from_terms(const std::map<int, Int>& terms) {
  LaurentQ p;
  if (terms.empty()) return p;
  p.offset_ = terms.begin()->first;
  p.coeffs_.resize(terms.rbegin()->first - p.offset_ + 1);
  for (const auto& [e, c] : terms) p.coeffs_[e - p.offset_] += c;
  p.trim();
  return p;
}

bool LaurentQ::is_one() const {
  return offset_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1;
}

std::size_t LaurentQ::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) ++n;
  return n;
}

Int LaurentQ::coeff(int exp) const {
  if (is_zero() || exp < min_exp() || exp > max_exp()) return 0;
  return coeffs_[exp - offset_];
}

std::map<int, Int> LaurentQ::terms() const {
  std::map<int, Int> out;
  for_each_term([&](int e, const Int& c) { out.emplace(e, c); });
  return out;
}

void LaurentQ::trim() {
  std::size_t lo = 0;
  while (lo < coeffs_.size() && sgn(coeffs_[lo]) == 0) ++lo;
  if (lo == coeffs_.size()) {
    coeffs_.clear();
    offset_ = 0;
    return;
  }
  std::size_t hi = coeffs_.size();
  while (sgn(coeffs_[hi - 1]) == 0) --hi;
  coeffs_.erase(coeffs_.begin() + hi, coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lo);
  offset_ += static_cast<int>(lo);
}

void LaurentQ::add_scaled(const LaurentQ& x, const Int& c, int shift) {
  if (x.is_zero() || sgn(c) == 0) return;
  const int lo = x.min_exp() + shift;
  const int hi = x.max_exp() + shift;
  if (is_zero()) {
    offset_ = lo;
    coeffs_.assign(x.coeffs_.size(), Int(0));
  } else {
    if (lo < offset_) {
      coeffs_.insert(coeffs_.begin(), offset_ - lo, Int(0));
      offset_ = lo;
    }
    if (hi > max_exp()) coeffs_.resize(hi - offset_ + 1);
  }
  const std::size_t base = lo - offset_;
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
    mpz_addmul(coeffs_[base + i].get_mpz_t(), x.coeffs_[i].get_mpz_t(),
               c.get_mpz_t());
  trim();
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  add_scaled(o, 1, 0);
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
  add_scaled(o, -1, 0);
  return *this;
}

void LaurentQ::add_product(const LaurentQ& x, const LaurentQ& y) {
  if (x.is_zero() || y.is_zero()) return;
  const int lo = x.min_exp() + y.min_exp();
  const int hi = x.max_exp() + y.max_exp();
  if (is_zero()) {
    offset_ = lo;
    coeffs_.assign(hi - lo + 1, Int(0));
  } else {
    if (lo < offset_) {
      coeffs_.insert(coeffs_.begin(), offset_ - lo, Int(0));
      offset_ = lo;
    }
    if (hi > max_exp()) coeffs_.resize(hi - offset_ + 1);
  }
  const std::size_t base = lo - offset_;
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (sgn(x.coeffs_[i]) == 0) continue;
    const mpz_srcptr xi = x.coeffs_[i].get_mpz_t();
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
      mpz_addmul(coeffs_[base + i + j].get_mpz_t(), xi,
                 y.coeffs_[j].get_mpz_t());
  }
  trim();
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ out;
  out.add_product(a, b);
  return out;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) {
  *this = *this * o;
  return *this;
}

LaurentQ& LaurentQ::operator*=(const Int& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    offset_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentQ operator-(LaurentQ a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

LaurentQ LaurentQ::shifted(int e) const {
  LaurentQ out = *this;
  if (!out.is_zero()) out.offset_ += e;
  return out;
}

LaurentQ LaurentQ::with_exponents_scaled(int k) const {
  if (k == 0) throw DomainError("with_exponents_scaled: k must be nonzero");
  std::map<int, Int> t;
  for_each_term([&](int e, const Int& c) { t.emplace(e * k, c); });
  return from_terms(t);
}

Int LaurentQ::at_one() const {
  Int s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

std::optional<LaurentQ> LaurentQ::divide_exact(const LaurentQ& num,
                                               const LaurentQ& den) {
  if (den.is_zero()) throw DomainError("division by the zero polynomial");
  if (num.is_zero()) return LaurentQ();
  // Polynomial long division from the top, on the shifted coefficient arrays.
  std::vector<Int> rem = num.coeffs_;
  const std::vector<Int>& d = den.coeffs_;
  if (rem.size() < d.size()) return std::nullopt;
  const std::size_t qlen = rem.size() - d.size() + 1;
  std::vector<Int> quot(qlen);
  const Int& lead = d.back();
  for (std::size_t s = qlen; s-- > 0;) {
    Int& top = rem[s + d.size() - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Int c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < d.size(); ++j)
      mpz_submul(rem[s + j].get_mpz_t(), c.get_mpz_t(), d[j].get_mpz_t());
    quot[s] = c;
  }
  for (const auto& r : rem)
    if (sgn(r) != 0) return std::nullopt;
  LaurentQ out;
  out.offset_ = num.offset_ - den.offset_;
  out.coeffs_ = std::move(quot);
  out.trim();
  return out;
}

std::string LaurentQ::to_string() const {
  std::vector<detail::RenderTerm> terms;
  for_each_term([&](int e, const Int& c) { terms.push_back({c, e, 0}); });
  return detail::render_terms(terms);
}

// --------------------------------------------------------------- LaurentQA

LaurentQA::LaurentQA(const LaurentQ& p) {
  if (!p.is_zero()) by_a_.emplace(0, p);
}

LaurentQA LaurentQA::monomial(int q_exp, int a_exp, const Int& coeff) {
  LaurentQA out;
  if (sgn(coeff) != 0) out.by_a_.emplace(a_exp, LaurentQ::monomial(q_exp, coeff));
  return out;
}

LaurentQA LaurentQA::from_triples(
    const std::vector<std::tuple<int, int, Int>>& triples) {
  std::map<int, std::map<int, Int>> grouped;
  for (const auto& [qe, ae, c] : triples) grouped[ae][qe] += c;
  LaurentQA out;
  for (const auto& [ae, t] : grouped) {
    LaurentQ p = LaurentQ::from_terms(t);
    if (!p.is_zero()) out.by_a_.emplace(ae, std::move(p));
  }
  return out;
}

Int LaurentQA::coeff(int q_exp, int a_exp) const {
  auto it = by_a_.find(a_exp);
  return it == by_a_.end() ? Int(0) : it->second.coeff(q_exp);
}

std::size_t LaurentQA::term_count() const {
  std::size_t n = 0;
  for (const auto& [ae, p] : by_a_) n += p.term_count();
  return n;
}

std::vector<std::tuple<int, int, Int>> LaurentQA::triples() const {
  std::vector<std::tuple<int, int, Int>> out;
  for (const auto& [ae, p] : by_a_)
    p.for_each_term([&](int qe, const Int& c) { out.emplace_back(qe, ae, c); });
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::pair(std::get<0>(x), std::get<1>(x)) <
           std::pair(std::get<0>(y), std::get<1>(y));
  });
  return out;
}

LaurentQA& LaurentQA::operator+=(const LaurentQA& o) {
  for (const auto& [ae, p] : o.by_a_) {
    auto [it, fresh] = by_a_.try_emplace(ae, p);
    if (fresh) continue;
    it->second += p;
    if (it->second.is_zero()) by_a_.erase(it);
  }
  return *this;
}

LaurentQA& LaurentQA::operator-=(const LaurentQA& o) {
  for (const auto& [ae, p] : o.by_a_) {
    auto [it, fresh] = by_a_.try_emplace(ae);
    it->second -= p;
    if (it->second.is_zero()) by_a_.erase(it);
  }
  return *this;
}

void LaurentQA::add_product(const LaurentQA& x, const LaurentQA& y) {
  for (const auto& [ax, px] : x.by_a_)
    for (const auto& [ay, py] : y.by_a_) by_a_[ax + ay].add_product(px, py);
  std::erase_if(by_a_, [](const auto& kv) { return kv.second.is_zero(); });
}

LaurentQA operator*(const LaurentQA& a, const LaurentQA& b) {
  LaurentQA out;
  out.add_product(a, b);
  return out;
}

LaurentQA& LaurentQA::operator*=(const LaurentQA& o) {
  *this = *this * o;
  return *this;
}

LaurentQA operator-(LaurentQA a) {
  for (auto& [ae, p] : a.by_a_) p = -p;
  return a;
}

LaurentQA LaurentQA::shifted(int q_exp, int a_exp) const {
  LaurentQA out;
  for (const auto& [ae, p] : by_a_) out.by_a_.emplace(ae + a_exp, p.shifted(q_exp));
  return out;
}

LaurentQ LaurentQA::at_a_power(int n) const {
  LaurentQ out;
  for (const auto& [ae, p] : by_a_) out.add_scaled(p, 1, n * ae);
  return out;
}

std::string LaurentQA::to_string() const {
  std::vector<detail::RenderTerm> terms;
  for (const auto& [ae, p] : by_a_)
    p.for_each_term([&](int qe, const Int& c) { terms.push_back({c, qe, ae}); });
  return detail::render_terms(terms);
}

// ---------------------------------------------------------- quantum numbers

LaurentQ qbrace(int n) {
  return LaurentQ::monomial(n) - LaurentQ::monomial(-n);
}

LaurentQ qint(int n) {
  if (n < 0) throw DomainError("qint: negative argument " + std::to_string(n));
  if (n == 0) return LaurentQ();
  auto r = LaurentQ::divide_exact(qbrace(n), qbrace(1));
  if (!r) throw InconsistencyError("qint: inexact division");
  return *r;
}

LaurentQ qbrace_fact(int n) {
  if (n < 0) throw DomainError("qbrace_fact: negative argument " + std::to_string(n));
  LaurentQ out(1);
  for (int i = 1; i <= n; ++i) out *= qbrace(i);
  return out;
}

namespace {

template <class Key, class Value>
class ConcurrentCache {
 public:
  template <class Make>
  const Value& get(const Key& key, Make&& make) {
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    Value v = make();
    std::unique_lock lock(mutex_);
    return map_.try_emplace(key, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Value> map_;  // node-based: references stay valid
};

}  // namespace

const LaurentQ& qbinom(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw DomainError("qbinom(" + std::to_string(n) + ", " + std::to_string(k) +
                      ") outside 0 <= k <= n");
  static ConcurrentCache<std::pair<int, int>, LaurentQ> cache;
  return cache.get({n, k}, [&] {
    const LaurentQ den = qbrace_fact(k) * qbrace_fact(n - k);
    auto r = LaurentQ::divide_exact(qbrace_fact(n), den);
    if (!r) throw InconsistencyError("qbinom: nonzero remainder");
    return *r;
  });
}

LaurentQA brace_alpha(int m) {
  return LaurentQA::monomial(m, 1) - LaurentQA::monomial(-m, -1);
}

const LaurentQA& brace_alpha_falling(int m, int n) {
  if (n < 0) throw DomainError("brace_alpha_falling: negative length");
  static ConcurrentCache<std::pair<int, int>, LaurentQA> cache;
  return cache.get({m, n}, [&] {
    if (n == 0) return LaurentQA(1);
    return brace_alpha_falling(m, n - 1) * brace_alpha(m - n + 1);
  });
}

}  // namespace knotforge
