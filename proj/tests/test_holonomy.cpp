// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "knotforge/completion.hpp"
#include "knotforge/error.hpp"
#include "knotforge/holonomy.hpp"

using namespace knotforge;

namespace {

using Terms = std::map<RecurrencePoly::Key, LaurentQ>;

LaurentQ mq(int e, long c = 1) { return LaurentQ::monomial(e, c); }

JonesSequence constant_sequence(int n_max, const LaurentQ& v = LaurentQ(1)) {
  JonesSequence s{"const", {}};
  for (int n = 0; n <= n_max; ++n) s.values[n] = v;
  return s;
}

/// Annihilator of the trefoil colored Jones function found by the fitter at
/// degQ = 6, degE = 2; kept as a regression target.
RecurrencePoly trefoil_recurrence() {
  return RecurrencePoly(Terms{
      {{0, 0}, mq(2)},       {{0, 1}, mq(0, -1)},   {{1, 0}, mq(4, -1)},
      {{1, 1}, mq(4)},       {{2, 0}, mq(12, -1)},  {{2, 1}, mq(6)},
      {{3, 0}, mq(14)},      {{3, 2}, mq(14, -1)},  {{4, 1}, mq(14, -1)},
      {{4, 2}, mq(20)},      {{5, 1}, mq(20, -1)},  {{5, 2}, mq(20)},
      {{6, 1}, mq(24)},      {{6, 2}, mq(26, -1)},
  });
}

/// (p s)(n) for n in [lo, hi], as a new sequence.
JonesSequence applied(const RecurrencePoly& p, const JonesSequence& s, int lo, int hi) {
  JonesSequence out{s.knot, {}};
  for (int n = lo; n <= hi; ++n) out.values[n] = apply_to_sequence(p, s, n);
  return out;
}

}  // namespace

TEST_SUITE("holonomy") {
  TEST_CASE("sequences") {
    const JonesSequence s = jones_sequence(corpus_diagram("3_1"), 0, 3);
    CHECK(s.first() == 0);
    CHECK(s.last() == 3);
    CHECK(s.at(0) == LaurentQ(1));
    CHECK_THROWS_AS(s.at(4), RangeError);
    CHECK_THROWS_AS(jones_sequence(corpus_diagram("3_1"), 3, 1), ArgumentError);
  }

  TEST_CASE("reflection through dimension zero") {
    const JonesSequence s = jones_sequence(corpus_diagram("4_1"), 0, 3);
    const JonesSequence r = with_reflection(s);
    for (int n = 0; n <= 3; ++n) CHECK(r.at(-n - 2) == s.at(n));
    CHECK_FALSE(r.contains(-1));
  }

  TEST_CASE("recurrence polynomials") {
    CHECK_THROWS_AS(RecurrencePoly(Terms{}), ArgumentError);
    CHECK_THROWS_AS(RecurrencePoly(Terms{{{0, 0}, LaurentQ()}}), ArgumentError);
    CHECK_THROWS_AS(RecurrencePoly(Terms{{{-1, 0}, LaurentQ(1)}}), ArgumentError);
    const RecurrencePoly p = RecurrencePoly::E() - RecurrencePoly::constant(LaurentQ(1));
    CHECK(p.degree_e() == 1);
    CHECK(p.degree_q() == 0);
    CHECK(p.to_string() == "(-1) + E");
    // E Q = q^2 Q E
    CHECK(RecurrencePoly::E() * RecurrencePoly::Q() ==
          RecurrencePoly(Terms{{{1, 1}, mq(2)}}));
    CHECK(RecurrencePoly::Q() * RecurrencePoly::E() == RecurrencePoly(Terms{{{1, 1}, mq(0)}}));
    CHECK(trefoil_recurrence().degree_q() == 6);
    CHECK(trefoil_recurrence().degree_e() == 2);
  }

  TEST_CASE("applying operators to sequences") {
    const RecurrencePoly p = RecurrencePoly::E() - RecurrencePoly::constant(LaurentQ(1));
    const JonesSequence ones = constant_sequence(6);
    for (int n = 0; n <= 5; ++n) CHECK(apply_to_sequence(p, ones, n).is_zero());
    const JonesSequence unknot = jones_sequence(corpus_diagram("unknot"), 0, 4);
    CHECK(apply_to_sequence(RecurrencePoly::Q(), unknot, 2) == mq(4));
    CHECK_THROWS_AS(apply_to_sequence(p, ones, 6), RangeError);
  }

  TEST_CASE("normal ordering matches composition") {
    std::mt19937 rng(7);
    JonesSequence s{"random", {}};
    for (int n = 0; n <= 10; ++n) s.values[n] = testing::random_q(rng);
    const RecurrencePoly a(Terms{{{1, 1}, mq(1, 2)}, {{0, 2}, mq(-1)}, {{2, 0}, mq(0, -3)}});
    const RecurrencePoly b(Terms{{{0, 1}, mq(3)}, {{1, 0}, mq(0, 5)}, {{1, 2}, mq(2, -1)}});
    // (a b) s = a (b s)
    const JonesSequence bs = applied(b, s, 0, 8);
    for (int n = 0; n <= 6; ++n) CHECK(apply_to_sequence(a * b, s, n) == apply_to_sequence(a, bs, n));
    // E then Q versus q^2 Q E
    const JonesSequence qs = applied(RecurrencePoly::Q(), s, 0, 10);
    const RecurrencePoly qe(Terms{{{1, 1}, mq(2)}});
    for (int n = 0; n <= 8; ++n)
      CHECK(apply_to_sequence(RecurrencePoly::E(), qs, n) == apply_to_sequence(qe, s, n));
  }

  TEST_CASE("fitting") {
    const auto ones = fit_recurrence(constant_sequence(5), 0, 1);
    REQUIRE(ones.has_value());
    const RecurrencePoly e_minus_1 = RecurrencePoly::E() - RecurrencePoly::constant(LaurentQ(1));
    CHECK((*ones == e_minus_1 || RecurrencePoly::constant(LaurentQ(-1)) * *ones == e_minus_1));

    const JonesSequence fig8 = jones_sequence(corpus_diagram("4_1"), 0, 6);
    CHECK_FALSE(fit_recurrence(fig8, 0, 0).has_value());
    CHECK_THROWS_AS(fit_recurrence(constant_sequence(2), 0, 1), RangeError);
    JonesSequence gap = constant_sequence(6);
    gap.values.erase(3);
    CHECK_THROWS_AS(fit_recurrence(gap, 0, 1), RangeError);
  }

  TEST_CASE("trefoil recurrence regression") {
    const RecurrencePoly p = trefoil_recurrence();
    const JonesSequence s = jones_sequence(corpus_diagram("3_1"), 0, 10);
    for (int n = 0; n + 2 <= 10; ++n) CHECK(apply_to_sequence(p, s, n).is_zero());
    const TangleDiagram z = corpus_diagram("3_1_zero");
    for (int r = 1; r <= 3; ++r) CHECK(apply_to_ado(p, ado(z, r)).is_zero());
    CHECK_THROWS_AS(apply_to_ado(p, ado(corpus_diagram("3_1"), 2)), ScopeError);
  }

  TEST_CASE("operators on ado values") {
    const RecurrencePoly p = RecurrencePoly::E() - RecurrencePoly::constant(LaurentQ(1));
    for (int r = 1; r <= 3; ++r) {
      CHECK(apply_to_ado(p, ado(corpus_diagram("unknot"), r)).is_zero());
      const AdoResult one{r, 0, CycLaurentA::monomial(2 * r, 0)};
      CHECK(apply_to_ado(RecurrencePoly::Q(), one) == CycLaurentA::monomial(2 * r, 2));
    }
  }

  TEST_CASE("the Alexander denominator is fixed by the shift") {
    for (const char* name : {"3_1", "4_1", "5_1", "5_2"}) {
      const TangleDiagram d = corpus_diagram(name);
      const AlexanderPoly a = alexander_from_diagram(d, alexander_min_precision(d));
      for (int r = 1; r <= 4; ++r) CHECK(a.at_a_power(r).twisted(1) == a.at_a_power(r));
    }
  }
}
