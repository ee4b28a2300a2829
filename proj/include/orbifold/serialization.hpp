#pragma once

/**
 * @file serialization.hpp
 * @brief JSON, CSV and text renderings of the library's results, and the
 * parameter loader used by the command line.
 *
 * Group-algebra elements are written as coefficient arrays [c0, ..., c(p-1)].
 * The loaders also accept the textual grammar of parse_element.
 */

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "orbifold/chain_maps.hpp"
#include "orbifold/pbw_checker.hpp"
#include "orbifold/rewriting.hpp"
#include "orbifold/solver.hpp"

namespace orbifold {

using Json = nlohmann::ordered_json;

Json to_json(GroupAlgebraElement const& x);
/// Accepts a coefficient array, a string in the element grammar, or an
/// object {"p": ..., "coeffs": [...]}. Throws ParseError or Error.
GroupAlgebraElement element_from_json(Json const& j, Prime p);

/// {"v1": [...], "v2": [...]}
Json to_json(VGroupElement const& x);

/// {"p", "lambda": [[lambda(g^i, v1), lambda(g^i, v2)] for each i], "kappaC", "kappaL": {"v1", "v2"}}
Json to_json(DeformationParams const& params);
/// Inverse of to_json; throws Error on shape errors.
DeformationParams params_from_json(Json const& j);
DeformationParams load_params(std::istream& in);

Json to_json(ConditionReport const& report);
Json to_json(AssociativityResult const& result);
Json to_json(DimensionResult const& result);
Json to_json(ChainMapReport const& report);

/// {"p", "records": [{"b", "k", "kernel": [...], "solutions": [{"c", "a"}]}]}
Json records_to_json(Prime p, std::vector<SolutionRecord> const& records);
Json census_to_json(Prime p, std::vector<CensusRow> const& rows);

/// Header "b,a" then one quoted row per solution, elements in to_string form.
void write_solutions_csv(std::ostream& out, std::vector<SolutionRecord> const& records);

/// One line per table row: "k=<k> | b: <b>; <b>; ... | a: <a>; ...". The
/// b = 0 row abbreviates its a-set as "F_pG (all p^p elements)".
void write_table_text(std::ostream& out, Prime p, std::vector<TableRow> const& rows);
Json table_to_json(Prime p, std::vector<TableRow> const& rows);

}  // namespace orbifold
