#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "kron/expansion.hpp"
#include "kron/partition.hpp"

namespace kron::cli {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) { return Json(p.parts()); }

/// Terms in descending lex order; coefficients as decimal strings.
inline Json to_json(const SchurExpansion& e) {
  Json terms = Json::array();
  for (const auto& [nu, c] : e) terms.push_back(Json{{"nu", to_json(nu)}, {"coeff", c.str()}});
  return terms;
}

/// One `nu : coeff` line per term.
inline void print_terms(std::ostream& os, const SchurExpansion& e) {
  for (const auto& [nu, c] : e) os << "(" << to_string(nu) << ") : " << c.str() << "\n";
}

}  // namespace kron::cli
