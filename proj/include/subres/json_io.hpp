#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "subres/poly.hpp"

namespace subres {

/* Coefficients that fit in 64 bits are emitted as JSON numbers, larger
 * ones as decimal strings; the parser takes both. Exact round-trip. */
nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

/* Ascending coefficient array; the zero polynomial is []. */
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

/* Instance document: {"polys": [[...], ...]} with optional "degrees" and
 * "seed" echoed by the generator. Parse errors carry the offending field. */
struct Instance {
  std::vector<Poly> polys;
};

Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);

/* Reads and parses a file; throws std::runtime_error with the path on
 * open/parse failure. */
Instance load_instance(const std::string& path);

}  // namespace subres
