#pragma once

#include "braidcover/braid.hpp"
#include "braidcover/exact_matrix.hpp"
#include "braidcover/laurent.hpp"
#include "braidcover/ordering.hpp"
#include "braidcover/topology.hpp"

#include <nlohmann/json.hpp>

namespace braidcover {

using nlohmann::json;

// Words: {"strands": n, "letters": [...]}.
void to_json(json& j, const BraidWord& w);
void from_json(const json& j, BraidWord& w);

// Laurent polynomials: [[exponent, "coefficient"], ...], exponents descending.
void to_json(json& j, const LaurentPoly& p);
void from_json(const json& j, LaurentPoly& p);

// Matrices: {"ring": "int"|"laurent", "rows": r, "cols": c, "entries": [...]}
// with integer entries as decimal strings.
void to_json(json& j, const IntMatrix& m);
void to_json(json& j, const PolyMatrix& m);
void from_json(const json& j, IntMatrix& m);
void from_json(const json& j, PolyMatrix& m);

// {"lower": "p/q", "upper": "p/q", "pinned": "p/q" | null, "power_used": N}.
void to_json(json& j, const FdtcEstimate& e);

void to_json(json& j, const Page& p);
void to_json(json& j, const OpenBookReport& r);
void to_json(json& j, const DeterminantTableRow& r);
void to_json(json& j, const Theorem12Report& r);

} // namespace braidcover
