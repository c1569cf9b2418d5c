// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "knotforge/completion.hpp"
#include "knotforge/cyclotomic.hpp"
#include "knotforge/cycseries.hpp"
#include "knotforge/hseries.hpp"
#include "knotforge/holonomy.hpp"
#include "knotforge/laurent.hpp"

namespace knotforge {

// Integers are written as decimal strings so that no precision is lost.
// Readers throw ValidationError on any schema violation.

using Json = nlohmann::json;

/// [[q_exp, A_exp, "coeff"], ...] sorted by (q_exp, A_exp).
Json to_json(const LaurentQA& p);
LaurentQA laurent_qa_from_json(const Json& j);

/// The same triples with A_exp = 0.
Json to_json(const LaurentQ& p);
LaurentQ laurent_q_from_json(const Json& j);

/// Residue coefficients c_0..c_{phi-1}.
Json to_json(const CycInt& c);

/// {order, terms: [[A_exp, [c_0, ...]], ...]}.
Json to_json(const CycLaurentA& p);
CycLaurentA cyc_laurent_from_json(const Json& j);

/// {r, precision, value}.
Json to_json(const CycSeries& s);
/// {terms: [[t_exp, "coeff"], ...]}.
Json to_json(const AlexanderPoly& a);
AlexanderPoly alexander_from_json(const Json& j);
/// {terms: [[j, k, laurent triples], ...]}.
Json to_json(const RecurrencePoly& p);
RecurrencePoly recurrence_from_json(const Json& j);
/// Coefficients of h^0.. as "p/q" strings.
Json to_json(const RationalSeriesH& s);
/// {r, B, m, holds} plus the witness when the check fails.
Json to_json(const FactorizationReport& rep);
Json to_json(const ConsistencyReport& rep);

struct ResultMeta {
  std::string knot;
  std::string operation;
  Json parameters = Json::object();
  int framing = 0;
  std::optional<int> certified_order;
};

/// {knot, operation, parameters, framing, certified_order?, value}.
Json result_json(const ResultMeta& meta, Json value);

}  // namespace knotforge
