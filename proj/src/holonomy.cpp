// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#include "knotforge/holonomy.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "knotforge/error.hpp"

namespace knotforge {

// ---------------------------------------------------------- JonesSequence

const LaurentQ& JonesSequence::at(int n) const {
  auto it = values.find(n);
  if (it == values.end())
    throw RangeError("jones sequence" + (knot.empty() ? "" : " for " + knot) +
                     " has no value at n = " + std::to_string(n));
  return it->second;
}

int JonesSequence::first() const {
  if (values.empty()) throw RangeError("empty jones sequence");
  return values.begin()->first;
}

int JonesSequence::last() const {
  if (values.empty()) throw RangeError("empty jones sequence");
  return values.rbegin()->first;
}

JonesSequence jones_sequence(const TangleDiagram& d, int n_min, int n_max, Engine engine) {
  if (n_min < 0 || n_max < n_min)
    throw ArgumentError("jones_sequence: need 0 <= n_min <= n_max");
  JonesSequence s{d.name(), {}};
  for (int n = n_min; n <= n_max; ++n) s.values.emplace(n, jones(d, n, engine).value);
  return s;
}

JonesSequence with_reflection(const JonesSequence& s) {
  JonesSequence out = s;
  for (const auto& [n, v] : s.values)
    if (n >= 0) out.values.emplace(-n - 2, v);
  return out;
}

// --------------------------------------------------------- RecurrencePoly

RecurrencePoly::RecurrencePoly(std::map<Key, LaurentQ> terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  if (terms_.empty()) throw ArgumentError("recurrence has no nonzero term");
  for (const auto& [key, c] : terms_)
    if (key.first < 0 || key.second < 0)
      throw ArgumentError("recurrence degrees must be >= 0");
}

int RecurrencePoly::degree_q() const {
  int out = 0;
  for (const auto& [key, c] : terms_) out = std::max(out, key.first);
  return out;
}

int RecurrencePoly::degree_e() const {
  int out = 0;
  for (const auto& [key, c] : terms_) out = std::max(out, key.second);
  return out;
}

namespace {

void accumulate(std::map<RecurrencePoly::Key, LaurentQ>& into,
                const std::map<RecurrencePoly::Key, LaurentQ>& from, int sign) {
  for (const auto& [key, c] : from) {
    LaurentQ& slot = into[key];
    if (sign > 0)
      slot += c;
    else
      slot -= c;
  }
  std::erase_if(into, [](const auto& kv) { return kv.second.is_zero(); });
}

}  // namespace

RecurrencePoly& RecurrencePoly::operator+=(const RecurrencePoly& o) {
  std::map<Key, LaurentQ> sum = terms_;
  accumulate(sum, o.terms_, +1);
  *this = RecurrencePoly(std::move(sum));
  return *this;
}

RecurrencePoly& RecurrencePoly::operator-=(const RecurrencePoly& o) {
  std::map<Key, LaurentQ> diff = terms_;
  accumulate(diff, o.terms_, -1);
  *this = RecurrencePoly(std::move(diff));
  return *this;
}

RecurrencePoly operator*(const RecurrencePoly& a, const RecurrencePoly& b) {
  std::map<RecurrencePoly::Key, LaurentQ> out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      // Q^ja E^ka Q^jb E^kb = q^{2 ka jb} Q^{ja+jb} E^{ka+kb}
      LaurentQ c = ca * cb;
      out[{ka.first + kb.first, ka.second + kb.second}] += c.shifted(2 * ka.second * kb.first);
    }
  return RecurrencePoly(std::move(out));
}

std::string RecurrencePoly::to_string() const {
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    if (key.first) mono += key.first == 1 ? "Q" : "Q^" + std::to_string(key.first);
    if (key.second) {
      if (!mono.empty()) mono += " ";
      mono += key.second == 1 ? "E" : "E^" + std::to_string(key.second);
    }
    if (mono.empty())
      out += "(" + c.to_string() + ")";
    else if (c.is_one())
      out += mono;
    else
      out += "(" + c.to_string() + ") " + mono;
  }
  return out;
}

LaurentQ apply_to_sequence(const RecurrencePoly& p, const JonesSequence& s, int n) {
  LaurentQ out;
  for (const auto& [key, c] : p.terms()) out.add_product(c, s.at(n + key.second).shifted(2 * n * key.first));
  return out;
}

// ------------------------------------------------------------------ fitting

namespace {

using u64 = std::uint64_t;

struct Layout {
  int deg_q, deg_e, width;  // width = qdeg + 1
  int cols() const { return (deg_q + 1) * (deg_e + 1) * width; }
  int col(int j, int k, int d) const { return (j * (deg_e + 1) + k) * width + d; }
};

u64 mod_of(const Int& c, u64 p) {
  Int r = c % static_cast<unsigned long>(p);
  if (sgn(r) < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 out = 1;
  b %= p;
  while (e) {
    if (e & 1) out = out * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return out;
}

/// Row echelon form mod p of the system; only pivot rows are kept. With
/// p < 2^26 a product of two residues stays below 2^52, so a working row
/// can absorb kLazy updates before it must be reduced.
struct ModEchelon {
  static constexpr int kLazy = 4000;

  u64 p;
  int cols;
  std::vector<int> row_of_pivot;  // -1 when column is free
  std::vector<std::vector<std::uint32_t>> rows;

  ModEchelon(u64 prime, int n) : p(prime), cols(n), row_of_pivot(n, -1) {}

  bool full() const { return static_cast<int>(rows.size()) == cols; }

  /// Entries of row must already be reduced mod p.
  void insert(std::vector<u64> row) {
    int lead = -1;
    int pending = 0;
    for (int c = 0; c < cols; ++c) {
      const u64 v = row[c] % p;
      row[c] = v;
      if (v == 0) continue;
      const int r = row_of_pivot[c];
      if (r < 0) {
        lead = c;
        break;
      }
      const u64 f = p - v;
      const std::uint32_t* b = rows[r].data();
      u64* w = row.data();
      for (int t = c; t < cols; ++t) w[t] += f * b[t];
      if (++pending == kLazy) {
        for (int t = c; t < cols; ++t) w[t] %= p;
        pending = 0;
      }
    }
    if (lead < 0) return;
    const u64 inv = pow_mod(row[lead], p - 2, p);
    std::vector<std::uint32_t> stored(cols, 0);
    for (int t = lead; t < cols; ++t) stored[t] = static_cast<std::uint32_t>(row[t] % p * inv % p);
    row_of_pivot[lead] = static_cast<int>(rows.size());
    rows.push_back(std::move(stored));
  }

  /// Clears every pivot column above its pivot.
  void reduce() {
    for (int c = cols - 1; c >= 0; --c) {
      const int r = row_of_pivot[c];
      if (r < 0) continue;
      for (auto& other : rows) {
        if (&other == &rows[r] || other[c] == 0) continue;
        const u64 f = p - other[c];
        for (int t = c; t < cols; ++t)
          if (rows[r][t]) other[t] = static_cast<std::uint32_t>((other[t] + f * rows[r][t]) % p);
      }
    }
  }

  int first_free() const {
    for (int c = 0; c < cols; ++c)
      if (row_of_pivot[c] < 0) return c;
    return -1;
  }
};

bool covers(const JonesSequence& s, int n, int deg_e) {
  for (int k = 0; k <= deg_e; ++k)
    if (!s.contains(n + k)) return false;
  return true;
}

/// Builds the scalar equations (one per q-exponent per shift n) and feeds
/// them to the echelon form, stopping early once it is full rank.
ModEchelon eliminate(const JonesSequence& s, const Layout& lay, u64 p) {
  ModEchelon ech(p, lay.cols());
  const int n_last = s.last() - lay.deg_e;
  for (int n = s.first(); n <= n_last && !ech.full(); ++n) {
    if (!covers(s, n, lay.deg_e)) continue;
    std::map<int, std::vector<u64>> by_exp;
    for (int j = 0; j <= lay.deg_q; ++j)
      for (int k = 0; k <= lay.deg_e; ++k)
        s.at(n + k).for_each_term([&](int e, const Int& c) {
          const u64 cm = mod_of(c, p);
          for (int d = 0; d < lay.width; ++d) {
            auto& row = by_exp[e + 2 * n * j + d];
            if (row.empty()) row.assign(lay.cols(), 0);
            u64& slot = row[lay.col(j, k, d)];
            slot = (slot + cm) % p;
          }
        });
    for (auto& [e, row] : by_exp) {
      ech.insert(std::move(row));
      if (ech.full()) break;
    }
  }
  return ech;
}

/// Nullspace vector mod p with the first free column set to 1.
std::vector<u64> null_vector(ModEchelon& ech) {
  ech.reduce();
  const int f = ech.first_free();
  std::vector<u64> x(ech.cols, 0);
  x[f] = 1;
  for (int c = 0; c < f; ++c) {
    const int r = ech.row_of_pivot[c];
    if (r >= 0) x[c] = (ech.p - ech.rows[r][f]) % ech.p;
  }
  return x;
}

std::optional<std::pair<Int, Int>> rational_reconstruct(const Int& a, const Int& m) {
  // Extended Euclid on (m, a) until the remainder drops below sqrt(m / 2).
  Int bound;
  mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
  Int r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    const Int qt = r0 / r1;
    Int tmp = r0 - qt * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - qt * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (sgn(t1) == 0 || abs(t1) > bound) return std::nullopt;
  if (sgn(t1) < 0) return std::make_pair(Int(-r1), Int(-t1));
  return std::make_pair(r1, t1);
}

std::vector<u64> fitting_primes(int count) {
  std::vector<u64> out;
  Int x = Int(1) << 26;
  for (int i = 0; i < count; ++i) {
    x -= 1 << 12;
    Int p;
    mpz_nextprime(p.get_mpz_t(), x.get_mpz_t());
    out.push_back(p.get_ui());
  }
  return out;
}

bool annihilates(const RecurrencePoly& p, const JonesSequence& s) {
  for (int n = s.first(); n + p.degree_e() <= s.last(); ++n)
    if (covers(s, n, p.degree_e()) && !apply_to_sequence(p, s, n).is_zero()) return false;
  return true;
}

std::optional<RecurrencePoly> reconstruct(const JonesSequence& s, const Layout& lay) {
  static const std::vector<u64> primes = fitting_primes(24);
  std::vector<Int> residues;
  Int modulus = 1;
  std::vector<bool> pattern;
  for (u64 p : primes) {
    ModEchelon ech = eliminate(s, lay, p);
    if (ech.full()) continue;
    std::vector<bool> pivots(lay.cols());
    for (int c = 0; c < lay.cols(); ++c) pivots[c] = ech.row_of_pivot[c] >= 0;
    if (pattern.empty()) {
      pattern = pivots;
    } else if (pivots != pattern) {
      continue;  // unlucky prime
    }
    const std::vector<u64> x = null_vector(ech);
    const Int pm = static_cast<unsigned long>(p);
    if (residues.empty()) {
      for (u64 v : x) residues.emplace_back(static_cast<unsigned long>(v));
    } else {
      // CRT: r' = r + modulus * ((v - r) * modulus^-1 mod p)
      Int inv;
      mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pm.get_mpz_t());
      for (int c = 0; c < lay.cols(); ++c) {
        Int t = (Int(static_cast<unsigned long>(x[c])) - residues[c]) % pm;
        t = t * inv % pm;
        if (sgn(t) < 0) t += pm;
        residues[c] += modulus * t;
      }
    }
    modulus *= pm;

    std::vector<Int> nums(lay.cols());
    Int den = 1;
    bool ok = true;
    std::vector<std::pair<Int, Int>> fracs;
    for (int c = 0; c < lay.cols() && ok; ++c) {
      auto fr = rational_reconstruct(residues[c], modulus);
      if (!fr) ok = false;
      else fracs.push_back(*fr);
    }
    if (!ok) continue;
    for (const auto& [nu, de] : fracs) den = lcm(den, de);
    Int content = 0;
    for (int c = 0; c < lay.cols(); ++c) {
      nums[c] = fracs[c].first * (den / fracs[c].second);
      content = gcd(content, nums[c]);
    }
    if (sgn(content) == 0) continue;
    Int sign = 1;
    for (const Int& v : nums)
      if (sgn(v) != 0) {
        sign = sgn(v) < 0 ? -1 : 1;
        break;
      }
    content *= sign;

    std::map<RecurrencePoly::Key, LaurentQ> terms;
    for (int j = 0; j <= lay.deg_q; ++j)
      for (int k = 0; k <= lay.deg_e; ++k) {
        std::map<int, Int> coeffs;
        for (int d = 0; d < lay.width; ++d) {
          const Int& v = nums[lay.col(j, k, d)];
          if (sgn(v) != 0) coeffs[d] = v / content;
        }
        if (!coeffs.empty()) terms[{j, k}] = LaurentQ::from_terms(coeffs);
      }
    RecurrencePoly candidate(std::move(terms));
    if (annihilates(candidate, s)) return candidate;
  }
  return std::nullopt;
}

}  // namespace

std::optional<RecurrencePoly> fit_recurrence(const JonesSequence& s, int deg_q, int deg_e,
                                             int max_qdeg) {
  if (deg_q < 0 || deg_e < 0 || max_qdeg < 0)
    throw ArgumentError("fit_recurrence: degrees must be >= 0");
  const int have = static_cast<int>(s.values.size());
  if (have == 0 || s.first() < 0 || s.last() - s.first() + 1 != have)
    throw RangeError("fit_recurrence: sequence must cover a contiguous range of n >= 0");
  if (have < deg_e + 3)
    throw RangeError("fit_recurrence: " + std::to_string(have) + " values, need at least " +
                     std::to_string(deg_e + 3));

  // Fit without the last value and keep the result only if it predicts it.
  // Wide windows otherwise admit spurious solutions that merely exhaust the
  // available equations.
  JonesSequence train = s;
  train.values.erase(std::prev(train.values.end()));
  const JonesSequence full = with_reflection(s);
  train = with_reflection(train);

  const u64 probe = fitting_primes(1)[0];
  auto solvable = [&](const JonesSequence& data, int qdeg) {
    return !eliminate(data, Layout{deg_q, deg_e, qdeg + 1}, probe).full();
  };
  int lo = 0, hi = 0;
  while (!solvable(train, hi)) {
    if (hi == max_qdeg) return std::nullopt;
    lo = hi + 1;
    hi = std::min(max_qdeg, 2 * hi + 1);
  }
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (solvable(train, mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  if (!solvable(full, lo)) return std::nullopt;
  auto out = reconstruct(full, Layout{deg_q, deg_e, lo + 1});
  if (!out)
    throw InconsistencyError("fit_recurrence: modular solution did not lift to an exact one");
  return out;
}

std::optional<RecurrenceFit> search_recurrence(const JonesSequence& s, int max_deg_q,
                                               int max_deg_e, int max_qdeg) {
  for (int e = 1; e <= max_deg_e; ++e)
    for (int q = 0; q <= max_deg_q; ++q) {
      if (static_cast<int>(s.values.size()) < e + 3) return std::nullopt;
      if (auto p = fit_recurrence(s, q, e, max_qdeg)) return RecurrenceFit{q, e, *p};
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------- ADO

CycLaurentA apply_to_ado(const RecurrencePoly& p, const AdoResult& a) {
  if (a.framing != 0)
    throw ScopeError("apply_to_ado: the diagram has framing " + std::to_string(a.framing) +
                     "; annihilation is only asserted for 0-framed diagrams");
  const int order = 2 * a.r;
  CycLaurentA out(order);
  for (const auto& [key, c] : p.terms()) {
    CycLaurentA term = a.value.twisted(key.second).shifted(2 * key.first);
    term *= ev_root(c, a.r);
    out += term;
  }
  return out;
}

}  // namespace knotforge
