// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#include "knotforge/statesum.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <thread>
#include <tuple>

#include "knotforge/error.hpp"

namespace knotforge {

Engine parse_engine(const std::string& s) {
  if (s == "dp") return Engine::DP;
  if (s == "naive") return Engine::Naive;
  throw ArgumentError("unknown engine '" + s + "' (expected dp or naive)");
}

std::string to_string(Engine e) { return e == Engine::DP ? "dp" : "naive"; }

namespace {

constexpr long kNoCap = LONG_MAX;

// The crossing weight of the unified sum, with a and b the labels entering on
// the F side and the E side and i the crossing index.
LaurentQA unified_crossing(int sign, int a, int b, int i) {
  LaurentQA w = LaurentQA(qbinom(a + i, i)) * brace_alpha_falling(-a, i);
  const long tri = static_cast<long>(i) * (i - 1) / 2;
  if (sign > 0) return w.shifted(tri + 2L * (a + i) * (b - i), -(a + b));
  w = w.shifted(-tri - 2L * a * b, a + b);
  return i % 2 ? -w : w;
}

// Memoized weights keyed by crossing data or turn-back data.
template <class V>
class WeightTable {
 public:
  template <class Make>
  const V& crossing(int sign, int a, int b, int i, Make&& make) {
    auto key = std::tuple(sign, a, b, i);
    auto it = crossings_.find(key);
    if (it == crossings_.end()) it = crossings_.emplace(key, make()).first;
    return it->second;
  }
  template <class Make>
  const V& turn(int sign, int eps, Make&& make) {
    auto key = std::pair(sign, eps);
    auto it = turns_.find(key);
    if (it == turns_.end()) it = turns_.emplace(key, make()).first;
    return it->second;
  }

 private:
  std::map<std::tuple<int, int, int, int>, V> crossings_;
  std::map<std::pair<int, int>, V> turns_;
};

// Weight policies. Each supplies the ring, the index range per crossing, the
// largest admissible strand label, and the local weights.

struct UnifiedWeights {
  using Value = LaurentQA;
  int index_bound;
  long label_cap = kNoCap;
  WeightTable<Value> table;

  Value zero() const { return {}; }
  Value one() const { return LaurentQA(1); }
  bool admits(std::span<const int>) const { return true; }
  const Value& crossing(int sign, int a, int b, int i) {
    return table.crossing(sign, a, b, i, [&] { return unified_crossing(sign, a, b, i); });
  }
  // q^{s (alpha - 2 eps)}
  const Value& turn(int s, int eps) {
    return table.turn(s, eps, [&] { return LaurentQA::monomial(-2 * s * eps, s); });
  }
};

struct JonesWeights {
  using Value = LaurentQ;
  int n;
  int index_bound;
  long label_cap;
  WeightTable<Value> table;

  explicit JonesWeights(int color) : n(color), index_bound(color), label_cap(color) {}

  Value zero() const { return {}; }
  Value one() const { return LaurentQ(1); }
  bool admits(std::span<const int>) const { return true; }
  const Value& crossing(int sign, int a, int b, int i) {
    return table.crossing(sign, a, b, i, [&] {
      LaurentQ w = qbinom(a + i, i);
      for (int j = 0; j < i; ++j) w *= qbrace(n - a - j);
      const long tri = static_cast<long>(i) * (i - 1) / 2;
      if (sign > 0) return w.shifted(tri + 2L * (a + i) * (b - i) - n * (a + b));
      w = w.shifted(-tri - 2L * a * b + n * (a + b));
      return i % 2 ? -w : w;
    });
  }
  const Value& turn(int s, int eps) {
    return table.turn(s, eps, [&] { return LaurentQ::monomial(s * (n - 2 * eps)); });
  }
};

// Unified or ADO weights evaluated at q = zeta_{2r}.
struct RootWeights {
  using Value = CycLaurentA;
  int r;
  bool ado;
  int index_bound;
  long label_cap;
  WeightTable<Value> table;

  RootWeights(int r_, bool ado_, int bound)
      : r(r_),
        ado(ado_),
        index_bound(ado_ ? r_ - 1 : bound),
        label_cap(ado_ ? r_ - 1 : kNoCap) {}

  Value zero() const { return CycLaurentA(2 * r); }
  Value one() const { return CycLaurentA::monomial(2 * r, 0); }
  bool admits(std::span<const int>) const { return true; }
  const Value& crossing(int sign, int a, int b, int i) {
    return table.crossing(sign, a, b, i,
                          [&] { return ev_root(unified_crossing(sign, a, b, i), r); });
  }
  const Value& turn(int s, int eps) {
    return table.turn(s, eps, [&] {
      // ADO: zeta^{-s (r-1)(alpha - 2 eps)}; unified: q^{s (alpha - 2 eps)}.
      if (ado)
        return CycLaurentA::monomial(
            2 * r, -s * (r - 1), CycInt::zeta_power(2 * r, 2L * s * (r - 1) * eps));
      return CycLaurentA::monomial(2 * r, s, CycInt::zeta_power(2 * r, -2L * s * eps));
    });
  }
};

// Quotient-label weights of the series at zeta_{2r}.
struct SeriesWeights {
  using Value = CycLaurentA;
  int r;
  int m;
  int index_bound;
  long label_cap = kNoCap;
  WeightTable<Value> table;
  CycLaurentA brace;

  SeriesWeights(int r_, int m_)
      : r(r_),
        m(m_),
        index_bound(m_ - 1),
        brace(CycLaurentA::monomial(2 * r_, r_) - CycLaurentA::monomial(2 * r_, -r_)) {}

  Value zero() const { return CycLaurentA(2 * r); }
  Value one() const { return CycLaurentA::monomial(2 * r, 0); }
  bool admits(std::span<const int> idx) const {
    long total = 0;
    for (int l : idx) total += l;
    return total < m;
  }
  const Value& crossing(int sign, int u, int v, int l) {
    return table.crossing(sign, u, v, l, [&] {
      Int binom;
      mpz_bin_uiui(binom.get_mpz_t(), u + l, l);
      if (sign < 0 && l % 2) binom = -binom;
      CycLaurentA w = CycLaurentA::monomial(2 * r, -sign * r * (u + v), binom);
      for (int j = 0; j < l; ++j) w *= brace;
      return w;
    });
  }
  const Value& turn(int s, int) {
    return table.turn(s, 0, [&] { return CycLaurentA::monomial(2 * r, s * r); });
  }
};

template <class W>
typename W::Value run_dp(const TangleDiagram& d, W& w) {
  using V = typename W::Value;
  using State = std::vector<int>;
  const Traversal& tr = d.traversal();
  std::map<State, V> cur;
  cur.emplace(State{0}, w.one());
  for (std::size_t s = 0; s < d.slices().size() && !cur.empty(); ++s) {
    const auto [kind, p] = d.slices()[s];
    const int rec = tr.record_of_slice[s];
    std::map<State, V> next;
    auto deposit = [&](State key, const V& val, const V* weight) {
      auto [it, fresh] = next.try_emplace(std::move(key), w.zero());
      if (weight)
        it->second.add_product(val, *weight);
      else
        it->second += val;
    };
    switch (kind) {
      case SliceKind::Cup: {
        const CupCapRecord& cc = tr.cupcaps[rec];
        const long top = std::min(w.label_cap, cc.label.max_over_box(w.index_bound));
        for (const auto& [state, val] : cur)
          for (int x = 0; x <= top; ++x) {
            State ns = state;
            ns.insert(ns.begin() + p, {x, x});
            deposit(std::move(ns), val, cc.weight_sign ? &w.turn(cc.weight_sign, x) : nullptr);
          }
        break;
      }
      case SliceKind::Cap: {
        const CupCapRecord& cc = tr.cupcaps[rec];
        for (const auto& [state, val] : cur) {
          if (state[p] != state[p + 1]) continue;
          const int x = state[p];
          State ns = state;
          ns.erase(ns.begin() + p, ns.begin() + p + 2);
          deposit(std::move(ns), val, cc.weight_sign ? &w.turn(cc.weight_sign, x) : nullptr);
        }
        break;
      }
      case SliceKind::PosCross:
      case SliceKind::NegCross: {
        const bool pos = kind == SliceKind::PosCross;
        for (const auto& [state, val] : cur) {
          // F enters bottom-right and leaves top-left on a positive crossing;
          // mirrored on a negative one.
          const int a = pos ? state[p + 1] : state[p];
          const int b = pos ? state[p] : state[p + 1];
          const int top = std::min(b, w.index_bound);
          for (int i = 0; i <= top; ++i) {
            if (a + i > w.label_cap) break;
            State ns = state;
            ns[p] = pos ? a + i : b - i;
            ns[p + 1] = pos ? b - i : a + i;
            deposit(std::move(ns), val, &w.crossing(pos ? 1 : -1, a, b, i));
          }
        }
        break;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    cur = std::move(next);
  }
  auto it = cur.find(State{0});
  return it == cur.end() ? w.zero() : it->second;
}

// Sum over every tuple whose first index lies in [first_lo, first_hi).
template <class W>
typename W::Value naive_range(const TangleDiagram& d, W& w, int first_lo, int first_hi) {
  using V = typename W::Value;
  const Traversal& tr = d.traversal();
  const int n = d.crossing_count();
  V sum = w.zero();
  std::vector<int> idx(n, 0);
  if (n > 0) idx[0] = first_lo;
  if (n > 0 && first_lo >= first_hi) return sum;
  while (true) {
    bool ok = w.admits(idx);
    V term = w.one();
    for (const auto& c : tr.crossings) {
      if (!ok) break;
      const long a = c.f_side_in.evaluate(idx);
      const long b = c.e_side_in.evaluate(idx);
      const int i = idx[c.index_id - 1];
      if (a < 0 || b - i < 0 || a + i > w.label_cap) {
        ok = false;
        break;
      }
      term = term * w.crossing(c.sign, static_cast<int>(a), static_cast<int>(b), i);
    }
    for (const auto& t : tr.cupcaps) {
      if (!ok) break;
      const long eps = t.label.evaluate(idx);
      if (eps < 0 || eps > w.label_cap) {
        ok = false;
        break;
      }
      if (t.weight_sign) term = term * w.turn(t.weight_sign, static_cast<int>(eps));
    }
    if (ok) sum += term;
    // odometer, last index fastest; the first index stays in its range
    int k = n - 1;
    while (k >= 0) {
      if (++idx[k] <= (k == 0 ? first_hi - 1 : w.index_bound)) break;
      idx[k] = k == 0 ? first_lo : 0;
      --k;
    }
    if (k < 0) break;
  }
  return sum;
}

template <class W>
typename W::Value run_naive(const TangleDiagram& d, const W& proto) {
  using V = typename W::Value;
  const int range = proto.index_bound + 1;
  if (d.crossing_count() == 0) {
    W w = proto;
    return naive_range(d, w, 0, 1);
  }
  const int workers = static_cast<int>(
      std::clamp<unsigned>(std::thread::hardware_concurrency(), 1u, static_cast<unsigned>(range)));
  std::vector<V> partial(workers, proto.zero());
  std::vector<std::thread> pool;
  auto job = [&](int t) {
    W w = proto;
    const int lo = range * t / workers;
    const int hi = range * (t + 1) / workers;
    partial[t] = naive_range(d, w, lo, hi);
  };
  for (int t = 1; t < workers; ++t) pool.emplace_back(job, t);
  job(0);
  for (auto& th : pool) th.join();
  V sum = proto.zero();
  for (const auto& v : partial) sum += v;
  return sum;
}

template <class W>
typename W::Value run(const TangleDiagram& d, W&& w, Engine engine) {
  return engine == Engine::DP ? run_dp(d, w) : run_naive(d, w);
}

}  // namespace

AdoResult ado(const TangleDiagram& d, int r, Engine engine) {
  if (r < 1) throw ArgumentError("ado: r must be >= 1");
  return {r, d.framing(), run(d, RootWeights(r, true, 0), engine)};
}

TruncatedUnified unified_truncated(const TangleDiagram& d, int bound, Engine engine) {
  if (bound < 0) throw ArgumentError("unified_truncated: bound must be >= 0");
  return {d.framing(), bound, bound + 1, run(d, UnifiedWeights{bound, kNoCap, {}}, engine)};
}

CycLaurentA unified_at_root(const TangleDiagram& d, int bound, int r, Engine engine) {
  if (bound < 0) throw ArgumentError("unified_at_root: bound must be >= 0");
  if (r < 1) throw ArgumentError("unified_at_root: r must be >= 1");
  return run(d, RootWeights(r, false, bound), engine);
}

JonesValue jones(const TangleDiagram& d, int n, Engine engine) {
  if (n < 0) throw ArgumentError("jones: n must be >= 0");
  const LaurentQ stored = run(d, JonesWeights(n), engine);
  // Together with the prefactor q^{f n^2/2}, dividing by q^{f n^2/2 + f n}
  // leaves a plain shift.
  return {n, stored.shifted(-d.framing() * n)};
}

CycSeries c_series(const TangleDiagram& d, int r, int m, Engine engine) {
  if (r < 1) throw ArgumentError("c_series: r must be >= 1");
  if (m < 1) throw ArgumentError("c_series: m must be >= 1");
  return CycSeries(r, m, run(d, SeriesWeights(r, m), engine));
}

PlanResult evaluate(const TangleDiagram& d, const Plan& plan, Engine engine) {
  switch (plan.kind) {
    case Plan::Kind::Ado: return ado(d, plan.r, engine);
    case Plan::Kind::Jones: return jones(d, plan.n, engine);
    case Plan::Kind::Unified: return unified_truncated(d, plan.bound, engine);
    case Plan::Kind::CSeries: return c_series(d, plan.r, plan.m, engine);
  }
  throw ArgumentError("unknown plan");
}

}  // namespace knotforge
