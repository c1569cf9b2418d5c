// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#include <doctest.h>

#include <thread>

#include "generators.hpp"
#include "knotforge/cyclotomic.hpp"
#include "knotforge/cycseries.hpp"
#include "knotforge/error.hpp"

using namespace knotforge;

namespace {

IntPoly ints(std::initializer_list<long> cs) {
  IntPoly p;
  for (long c : cs) p.emplace_back(c);
  return p;
}

/// A^r - A^-r over Z[zeta_2r].
CycLaurentA brace_r(int r) {
  return CycLaurentA::monomial(2 * r, r) - CycLaurentA::monomial(2 * r, -r);
}

CycLaurentA power(CycLaurentA x, int n) {
  CycLaurentA out = CycLaurentA::monomial(x.order(), 0);
  for (int i = 0; i < n; ++i) out *= x;
  return out;
}

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == ints({1, 1}));
    CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
    CHECK(euler_phi(12) == 4);
    CHECK_THROWS_AS(cyclotomic_polynomial(0), DomainError);
  }

  TEST_CASE("cyclotomic cache under concurrent lookup") {
    std::vector<std::thread> pool;
    std::vector<IntPoly> got(8);
    for (int t = 0; t < 8; ++t)
      pool.emplace_back([&got, t] { got[t] = cyclotomic_polynomial(30 + t % 2); });
    for (auto& th : pool) th.join();
    for (int t = 0; t < 8; ++t) CHECK(got[t] == cyclotomic_polynomial(30 + t % 2));
  }

  TEST_CASE("roots of unity reduce canonically") {
    for (int r = 1; r <= 6; ++r) {
      const int order = 2 * r;
      CHECK(CycInt::zeta_power(order, r) == CycInt(order, -1));
      CHECK(CycInt::zeta_power(order, order) == CycInt(order, 1));
      CHECK(CycInt::zeta_power(order, -1) * CycInt::zeta_power(order, 1) == CycInt(order, 1));
      CHECK(CycInt::from_poly(order, cyclotomic_polynomial(order)).is_zero());
    }
  }

  TEST_CASE("signed roots are recognized") {
    const CycInt z = -CycInt::zeta_power(6, 2);
    const auto root = z.as_signed_root();
    REQUIRE(root.has_value());
    CHECK(z == (root->first < 0 ? -CycInt::zeta_power(6, root->second)
                                : CycInt::zeta_power(6, root->second)));
    CHECK_FALSE((CycInt(6, 1) + CycInt::zeta_power(6, 1) * CycInt(6, 2)).as_signed_root());
  }

  TEST_CASE("ev_root examples") {
    const CycLaurentA q = ev_root(LaurentQA::monomial(1, 0), 1);
    CHECK(q == CycLaurentA::monomial(2, 0, -1));
    for (int r = 1; r <= 4; ++r) {
      const LaurentQA x = LaurentQA::monomial(0, 1) - LaurentQA::monomial(0, -1);
      CHECK(ev_root(x, r) ==
            CycLaurentA::monomial(2 * r, 1) - CycLaurentA::monomial(2 * r, -1));
    }
  }

  TEST_CASE("falling brace of length r collapses to a multiple of the r-brace") {
    for (int r = 2; r <= 3; ++r)
      for (int k = 0; k <= 2; ++k) {
        CycInt c = CycInt::zeta_power(2 * r, -r * (r - 1) / 2);
        if (k % 2) c = -c;
        CycLaurentA expected = brace_r(r);
        expected *= c;
        CHECK(ev_root(brace_alpha_falling(-k, r), r) == expected);
      }
  }

  TEST_CASE("ev_root is a ring homomorphism") {
    std::mt19937 rng(17);
    for (int r = 1; r <= 4; ++r)
      for (int trial = 0; trial < 15; ++trial) {
        const LaurentQA x = testing::random_qa(rng), y = testing::random_qa(rng);
        CHECK(ev_root(x * y, r) == ev_root(x, r) * ev_root(y, r));
        CHECK(ev_root(x + y, r) == ev_root(x, r) + ev_root(y, r));
      }
  }

  TEST_CASE("ev_root sends completion generators into powers of the r-brace") {
    for (int r = 1; r <= 3; ++r)
      for (int n = 1; n <= 2; ++n)
        for (int l = -3; l <= 3; ++l) {
          const CycLaurentA x = ev_root(brace_alpha_falling(l, r * n), r);
          CHECK(divisibility_by_brace_r(x, r, n).divisible);
        }
  }

  TEST_CASE("divisibility examples") {
    for (int r = 1; r <= 3; ++r)
      for (int n = 0; n <= 3; ++n) {
        const BraceDivision d = divisibility_by_brace_r(CycLaurentA(2 * r), r, n);
        CHECK(d.divisible);
        CHECK(d.quotient.is_zero());
      }
    const BraceDivision exact = divisibility_by_brace_r(brace_r(2), 2, 1);
    CHECK(exact.divisible);
    CHECK(exact.quotient == CycLaurentA::monomial(4, 0));
    const CycLaurentA small = CycLaurentA::monomial(4, 1) - CycLaurentA::monomial(4, -1);
    const BraceDivision no = divisibility_by_brace_r(small, 2, 1);
    CHECK_FALSE(no.divisible);
    CHECK_FALSE(no.remainder.is_zero());
  }

  TEST_CASE("division recovers the cofactor") {
    std::mt19937 rng(23);
    for (int r = 1; r <= 3; ++r)
      for (int n = 1; n <= 3; ++n) {
        const CycLaurentA g = testing::random_cyc(rng, 2 * r);
        if (g.is_zero()) continue;
        const BraceDivision d = divisibility_by_brace_r(g * power(brace_r(r), n), r, n);
        CHECK(d.divisible);
        CHECK(d.quotient == g);
      }
  }

  TEST_CASE("reduction is canonical modulo the ideal") {
    std::mt19937 rng(29);
    for (int r = 1; r <= 3; ++r)
      for (int trial = 0; trial < 10; ++trial) {
        const CycLaurentA x = testing::random_cyc(rng, 2 * r);
        const CycLaurentA y = testing::random_cyc(rng, 2 * r);
        const CycLaurentA reduced = reduce_mod_brace_power(x, r, 2);
        CHECK(reduced == reduce_mod_brace_power(x + y * power(brace_r(r), 2), r, 2));
        if (!reduced.is_zero()) {
          CHECK(reduced.min_exp() >= 0);
          CHECK(reduced.max_exp() < 4 * r);
        }
      }
  }

  TEST_CASE("twists and specializations") {
    // A -> zeta A fixes A^{2r}
    const int r = 3;
    const CycLaurentA x = CycLaurentA::monomial(6, 6, 5) + CycLaurentA::monomial(6, -6, 2);
    CHECK(x.twisted(1) == x);
    CHECK(CycLaurentA::monomial(6, 1).twisted(1) ==
          CycLaurentA::monomial(6, 1, CycInt::zeta_power(6, 1)));
    CHECK(CycLaurentA::monomial(6, 2).at_zeta_power(2) == CycInt::zeta_power(6, 4));
    const CycLaurentA lifted = CycLaurentA::monomial(2, 1, 3).with_a_scaled(r, 2 * r);
    CHECK(lifted == CycLaurentA::monomial(6, 3, 3));
  }

  TEST_CASE("text rendering folds integer signs") {
    const CycLaurentA x = CycLaurentA::monomial(2, -5) - CycLaurentA::monomial(2, -3) +
                          CycLaurentA::monomial(2, -1);
    CHECK(x.to_string() == "A^-5 - A^-3 + A^-1");
  }
}

TEST_SUITE("cycseries") {
  TEST_CASE("arithmetic respects the ideal") {
    const int r = 2;
    const CycSeries b = CycSeries::brace(r, 3);
    CHECK(b * b * b == CycSeries(r, 3, CycLaurentA(4)));
    CHECK_FALSE(b * b == CycSeries(r, 3, CycLaurentA(4)));
    CHECK(b * b == CycSeries(r, 2, CycLaurentA(4)));
  }

  TEST_CASE("brace expansion reconstructs the value") {
    std::mt19937 rng(31);
    for (int r = 1; r <= 3; ++r) {
      const CycSeries s(r, 4, testing::random_cyc(rng, 2 * r, 6, 6));
      const std::vector<CycLaurentA> parts = s.brace_expansion();
      REQUIRE(parts.size() == 4);
      CycLaurentA sum(2 * r);
      for (int k = 0; k < 4; ++k) {
        for (const auto& [e, c] : parts[k].terms()) {
          CHECK(e >= 0);
          CHECK(e < 2 * r);
        }
        sum += parts[k] * power(brace_r(r), k);
      }
      CHECK(CycSeries(r, 4, sum) == s);
    }
  }

  TEST_CASE("truncation") {
    const CycSeries s(1, 4, CycLaurentA::monomial(2, 5));
    CHECK(s.truncated(2).precision() == 2);
    CHECK(s.truncated(2) == s);
    CHECK_THROWS_AS(s.truncated(5), ArgumentError);
  }
}
