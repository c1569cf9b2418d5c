// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#include <doctest.h>

#include "knotforge/error.hpp"
#include "knotforge/statesum.hpp"
#include "reference.hpp"

using namespace knotforge;

namespace {

LaurentQ from_reference(const reference::Poly1& p) {
  return LaurentQ::from_terms(std::map<int, Int>(p.begin(), p.end()));
}

CycLaurentA one(int r) { return CycLaurentA::monomial(2 * r, 0); }

}  // namespace

TEST_SUITE("statesum") {
  TEST_CASE("jones examples") {
    const TangleDiagram t = corpus_diagram("3_1");
    LaurentQ expected = LaurentQ::monomial(-2) + LaurentQ::monomial(-6) - LaurentQ::monomial(-8);
    CHECK(jones(t, 1).value == expected);
    CHECK(jones(t, 0).value == LaurentQ(1));
    const TangleDiagram u = corpus_diagram("unknot");
    for (int n = 0; n <= 5; ++n) CHECK(jones(u, n).value == LaurentQ(1));
    CHECK_THROWS_AS(jones(t, -1), ArgumentError);
  }

  TEST_CASE("jones matches the Kauffman bracket") {
    for (const std::string& name : corpus_names()) {
      int strands = 0;
      const std::vector<int> word = reference::braid_word(name, &strands);
      CHECK_MESSAGE(jones(corpus_diagram(name), 1).value ==
                        from_reference(reference::bracket_jones(word, strands)),
                    name);
    }
  }

  TEST_CASE("jones does not see the framing") {
    for (const char* base : {"3_1", "5_1", "5_2"}) {
      const TangleDiagram d = corpus_diagram(base);
      const TangleDiagram z = corpus_diagram(std::string(base) + "_zero");
      for (int n = 0; n <= 2; ++n) CHECK(jones(d, n).value == jones(z, n).value);
    }
  }

  TEST_CASE("ado at r = 1 and on the unknot") {
    for (const std::string& name : corpus_names()) {
      const AdoResult a = ado(corpus_diagram(name), 1);
      CHECK(a.value == one(1));
      CHECK(a.framing == corpus_diagram(name).framing());
    }
    const TangleDiagram u = corpus_diagram("unknot");
    for (int r = 1; r <= 4; ++r) CHECK(ado(u, r).value == one(r));
  }

  TEST_CASE("trefoil ado at r = 2 specializes to jones") {
    const TangleDiagram t = corpus_diagram("3_1");
    const AdoResult a = ado(t, 2);
    CHECK_FALSE(a.value.is_zero());
    for (int n = 0; n <= 1; ++n) {
      CycInt lhs = a.value.at_zeta_power(n);
      lhs *= CycInt::zeta_power(4, static_cast<long>(t.framing()) * n);
      CHECK(lhs == ev_root(jones(t, n).value, 2));
    }
  }

  TEST_CASE("unified examples") {
    for (int b = 0; b <= 3; ++b) {
      const TruncatedUnified u = unified_truncated(corpus_diagram("unknot"), b);
      CHECK(u.value == LaurentQA(1));
      CHECK(u.framing == 0);
      CHECK(u.certified_order == b + 1);
    }
    // A + q^-2 A^-2 (A - A^-1)
    const LaurentQA expected =
        LaurentQA::monomial(0, 1) +
        LaurentQA::monomial(-2, -2) * (LaurentQA::monomial(0, 1) - LaurentQA::monomial(0, -1));
    const TruncatedUnified t = unified_truncated(corpus_diagram("3_1"), 1);
    CHECK(t.value == expected);
    CHECK(t.framing == 3);
    const TangleDiagram f = corpus_diagram("4_1");
    CHECK(unified_truncated(f, 2).value.at_a_power(2) == unified_truncated(f, 4).value.at_a_power(2));
  }

  TEST_CASE("unified specializes to jones") {
    for (const std::string& name : corpus_names()) {
      const TangleDiagram d = corpus_diagram(name);
      for (int n = 0; n <= 2; ++n) {
        const LaurentQ at_n = unified_truncated(d, n).value.at_a_power(n).shifted(-d.framing() * n);
        CHECK_MESSAGE(at_n == jones(d, n).value, name << " n = " << n);
      }
    }
  }

  TEST_CASE("trefoil tail certificate") {
    const TangleDiagram t = corpus_diagram("3_1");
    for (int b = 0; b <= 4; ++b) {
      const LaurentQA tail = unified_truncated(t, b + 1).value - unified_truncated(t, b).value;
      CHECK(divisibility_by_brace_r(ev_root(tail, 1), 1, b + 1).divisible);
    }
  }

  TEST_CASE("unified at a root equals the evaluated truncation") {
    for (const char* name : {"3_1", "4_1", "5_2"}) {
      const TangleDiagram d = corpus_diagram(name);
      for (int r = 1; r <= 3; ++r)
        CHECK(unified_at_root(d, 3, r) == ev_root(unified_truncated(d, 3).value, r));
    }
  }

  TEST_CASE("diagrams differing by a cancelling pair agree") {
    const TangleDiagram a = corpus_diagram("3_1");
    const TangleDiagram b = corpus_diagram("3_1_pair");
    for (int n = 0; n <= 4; ++n) CHECK(jones(a, n).value == jones(b, n).value);
    for (int r = 1; r <= 3; ++r) CHECK(ado(a, r).value == ado(b, r).value);
  }

  TEST_CASE("quotient series examples") {
    CHECK(c_series(corpus_diagram("unknot"), 2, 3) == CycSeries::one(2, 3));
    const CycLaurentA a = CycLaurentA::monomial(2, 1);
    const CycLaurentA brace = CycLaurentA::monomial(2, 1) - CycLaurentA::monomial(2, -1);
    const CycLaurentA trefoil = a * (one(1) + CycLaurentA::monomial(2, -3) * brace);
    CHECK(c_series(corpus_diagram("3_1"), 1, 2) == CycSeries(1, 2, trefoil));
    const CycSeries fig8 = c_series(corpus_diagram("4_1"), 1, 3);
    CHECK(fig8 == CycSeries(1, 3, one(1) + brace * brace));
    CHECK(fig8.precision() == 3);
  }

  TEST_CASE("dp agrees with naive enumeration") {
    const TangleDiagram d51 = corpus_diagram("5_1");
    CHECK(jones(d51, 2, Engine::DP).value == jones(d51, 2, Engine::Naive).value);
    const TangleDiagram d52 = corpus_diagram("5_2");
    CHECK(ado(d52, 3, Engine::DP).value == ado(d52, 3, Engine::Naive).value);
    for (const std::string& name : corpus_names()) {
      const TangleDiagram d = corpus_diagram(name);
      CHECK(unified_truncated(d, 2, Engine::DP).value ==
            unified_truncated(d, 2, Engine::Naive).value);
      CHECK(c_series(d, 2, 2, Engine::DP) == c_series(d, 2, 2, Engine::Naive));
    }
  }

  TEST_CASE("plans") {
    const TangleDiagram u = corpus_diagram("unknot");
    CHECK(std::get<AdoResult>(evaluate_dp(u, Plan::ado(3))).value == one(3));
    CHECK(std::get<JonesValue>(evaluate_dp(u, Plan::jones(4))).value == LaurentQ(1));
    CHECK(std::get<TruncatedUnified>(evaluate_dp(u, Plan::unified(2))).value == LaurentQA(1));
    CHECK(std::get<CycSeries>(evaluate_dp(u, Plan::cseries(2, 2))) == CycSeries::one(2, 2));
    const TangleDiagram t = corpus_diagram("3_1");
    CHECK(std::get<JonesValue>(evaluate(t, Plan::jones(2), Engine::Naive)).value ==
          jones(t, 2).value);
  }

  TEST_CASE("engine names") {
    CHECK(parse_engine("dp") == Engine::DP);
    CHECK(parse_engine("naive") == Engine::Naive);
    CHECK(to_string(Engine::Naive) == "naive");
    CHECK_THROWS_AS(parse_engine("fast"), ArgumentError);
  }

  TEST_CASE("parameter checks") {
    const TangleDiagram t = corpus_diagram("3_1");
    CHECK_THROWS_AS(ado(t, 0), ArgumentError);
    CHECK_THROWS_AS(unified_truncated(t, -1), ArgumentError);
    CHECK_THROWS_AS(c_series(t, 1, 0), ArgumentError);
  }
}
