// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#include "reference.hpp"

#include <numeric>
#include <stdexcept>

namespace knotforge::reference {

namespace {

template <class Map>
void prune(Map& m) {
  std::erase_if(m, [](const auto& kv) { return sgn(kv.second) == 0; });
}

Poly2 mono(int q_exp, int a_exp, long c = 1) { return {{{q_exp, a_exp}, Int(c)}}; }

Poly2 lift(const Poly1& p) {
  Poly2 out;
  for (const auto& [e, c] : p) out[{e, 0}] = c;
  return out;
}

/// prod_{i < n} (q^{m-i} A - q^{-(m-i)} A^-1)
Poly2 falling(int m, int n) {
  Poly2 out = mono(0, 0);
  for (int i = 0; i < n; ++i) out = mul(out, add(mono(m - i, 1), mono(i - m, -1, -1)));
  return out;
}

int tri(int i) { return i * (i - 1) / 2; }

long sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

ClosedSum trefoil(int bound) {
  Poly2 t;
  for (int i = 0; i <= bound; ++i) t = add(t, mul(mono(-2 * i + tri(i), 1 - 3 * i), falling(0, i)));
  return {3, t};
}

ClosedSum figure_eight(int bound) {
  Poly2 t;
  for (int i = 0; i <= bound; ++i)
    for (int j = 0; j <= bound; ++j) {
      Poly2 w = mono(2 * (i - j) - tri(i) - tri(j), j - i, sign_pow(i));
      w = mul(w, lift(gaussian_binomial(i + j, j)));
      t = add(t, mul(w, falling(0, i + j)));
    }
  return {0, t};
}

ClosedSum torus_2_5(int bound) {
  Poly2 t;
  for (int i = 0; i <= bound; ++i)
    for (int j = 0; j <= bound; ++j)
      for (int k = 0; k <= bound; ++k) {
        if (k - j < 0 || i - j + k < 0) continue;
        const int s = i - j + k;
        if (k > s) continue;  // [s; k] vanishes
        Poly2 w = mono(-2 * s + 2 * i * (k - j) + 2 * k * (i - j) + tri(i) + tri(j) + tri(k),
                       1 - 5 * s);
        w = mul(w, falling(0, i));
        w = mul(w, falling(j - k, j));
        w = mul(w, falling(j - i, k));
        w = mul(w, lift(gaussian_binomial(k, k - j)));
        w = mul(w, lift(gaussian_binomial(s, k)));
        t = add(t, w);
      }
  return {5, t};
}

ClosedSum three_twist(int bound) {
  Poly2 t;
  for (int i = 0; i <= bound; ++i)
    for (int j = 0; j <= bound; ++j)
      for (int k = 0; k <= bound; ++k) {
        if (j - k < 0) continue;
        Poly2 w = mono(2 * (i - j + k) + 2 * i * j + 2 * (j - k) * (i + j) + tri(i) + tri(j) +
                           tri(k),
                       -1 + 5 * i + 5 * j - 3 * k, sign_pow(i + j + k));
        w = mul(w, falling(0, i));
        w = mul(w, falling(-i, j));
        w = mul(w, falling(k - j, k));
        w = mul(w, lift(gaussian_binomial(j, j - k)));
        w = mul(w, lift(gaussian_binomial(i + j, j)));
        t = add(t, w);
      }
  return {-5, t};
}

// Disjoint-set forest over the arc endpoints of a braid closure.
struct Forest {
  std::vector<int> parent;
  explicit Forest(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
  int components() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) c += find(i) == i;
    return c;
  }
};

}  // namespace

Poly1 add(const Poly1& a, const Poly1& b) {
  Poly1 out = a;
  for (const auto& [e, c] : b) out[e] += c;
  prune(out);
  return out;
}

Poly1 mul(const Poly1& a, const Poly1& b) {
  Poly1 out;
  for (const auto& [e1, c1] : a)
    for (const auto& [e2, c2] : b) out[e1 + e2] += c1 * c2;
  prune(out);
  return out;
}

Poly2 add(const Poly2& a, const Poly2& b) {
  Poly2 out = a;
  for (const auto& [e, c] : b) out[e] += c;
  prune(out);
  return out;
}

Poly2 mul(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [e1, c1] : a)
    for (const auto& [e2, c2] : b) out[{e1.first + e2.first, e1.second + e2.second}] += c1 * c2;
  prune(out);
  return out;
}

Poly1 at_a_power(const Poly2& p, int n) {
  Poly1 out;
  for (const auto& [e, c] : p) out[e.first + n * e.second] += c;
  prune(out);
  return out;
}

Poly1 shifted(const Poly1& p, int e) {
  Poly1 out;
  for (const auto& [x, c] : p) out[x + e] = c;
  return out;
}

Poly1 gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("gaussian_binomial: need 0 <= k <= n");
  // rows[k] = Gaussian binomial in x = q^2, x-exponent -> coefficient
  std::vector<std::vector<Int>> row(1, std::vector<Int>{1});
  for (int m = 1; m <= n; ++m) {
    std::vector<std::vector<Int>> next(m + 1);
    for (int j = 0; j <= m; ++j) {
      // [m, j] = [m-1, j-1] + x^j [m-1, j]
      std::vector<Int> v(j * (m - j) + 1);
      if (j >= 1)
        for (std::size_t e = 0; e < row[j - 1].size(); ++e) v[e] += row[j - 1][e];
      if (j <= m - 1)
        for (std::size_t e = 0; e < row[j].size(); ++e) v[e + j] += row[j][e];
      next[j] = std::move(v);
    }
    row = std::move(next);
  }
  Poly1 out;
  for (std::size_t e = 0; e < row[k].size(); ++e)
    if (sgn(row[k][e]) != 0) out[2 * static_cast<int>(e) - k * (n - k)] = row[k][e];
  return out;
}

Poly1 bracket_jones(const std::vector<int>& word, int strands) {
  const int levels = static_cast<int>(word.size());
  // Endpoint (p, l) for strand p at height l; height `levels` is height 0.
  auto node = [&](int p, int l) { return p * levels + (levels == 0 ? 0 : l % levels); };
  const int nodes = strands * std::max(levels, 1);
  const Poly1 loop = {{2, Int(-1)}, {-2, Int(-1)}};

  Poly1 bracket;
  for (unsigned long state = 0; state < (1ul << levels); ++state) {
    Forest forest(nodes);
    int a_minus_b = 0;
    for (int l = 0; l < levels; ++l) {
      const int gen = std::abs(word[l]) - 1;
      const bool smooth_a = (state >> l) & 1;
      a_minus_b += smooth_a ? 1 : -1;
      // The A-smoothing of a positive crossing follows the strands.
      const bool vertical = smooth_a == (word[l] > 0);
      for (int p = 0; p < strands; ++p) {
        if (p == gen || p == gen + 1) continue;
        forest.join(node(p, l), node(p, l + 1));
      }
      if (vertical) {
        forest.join(node(gen, l), node(gen, l + 1));
        forest.join(node(gen + 1, l), node(gen + 1, l + 1));
      } else {
        forest.join(node(gen, l), node(gen + 1, l));
        forest.join(node(gen, l + 1), node(gen + 1, l + 1));
      }
    }
    Poly1 term = {{a_minus_b, Int(1)}};
    for (int i = 1; i < forest.components(); ++i) term = mul(term, loop);
    bracket = add(bracket, term);
  }

  int writhe = 0;
  for (int g : word) writhe += g > 0 ? 1 : -1;
  // f(A) = (-A^3)^-w <D>, V(t) = f(t^{-1/4}); t = q^-2 means A = q^{1/2}.
  Poly1 out;
  for (const auto& [e, c] : bracket) {
    const int a_exp = e - 3 * writhe;
    if (a_exp % 2 != 0) throw std::logic_error("bracket_jones: odd A-exponent for a knot");
    out[a_exp / 2] = writhe % 2 == 0 ? c : Int(-c);
  }
  return out;
}

std::vector<int> braid_word(const std::string& knot, int* strands) {
  const std::string base = knot.substr(0, knot.find('_', 2));
  if (base == "unknot") {
    *strands = 1;
    return {};
  }
  if (base == "3_1") {
    *strands = 2;
    return {1, 1, 1};
  }
  if (base == "4_1") {
    *strands = 3;
    return {1, -2, 1, -2};
  }
  if (base == "5_1") {
    *strands = 2;
    return {1, 1, 1, 1, 1};
  }
  if (base == "5_2") {
    *strands = 3;
    return {1, 1, 1, 2, -1, 2};
  }
  throw std::invalid_argument("braid_word: no word for " + knot);
}

ClosedSum closed_sum(const std::string& knot, int bound) {
  if (knot == "3_1") return trefoil(bound);
  if (knot == "4_1") return figure_eight(bound);
  if (knot == "5_1") return torus_2_5(bound);
  if (knot == "5_2") return three_twist(bound);
  throw std::invalid_argument("closed_sum: no sum for " + knot);
}

}  // namespace knotforge::reference
