#pragma once

// JSON encoding of groups, tables and bundles. Objects use sorted keys and
// integers beyond 53 bits are written as decimal strings, so dump() of a
// value is its canonical form.

#include <string>

#include <json.hpp>

#include "gammalab/braided.hpp"
#include "gammalab/classify.hpp"
#include "gammalab/gamma3.hpp"
#include "gammalab/torsors.hpp"

namespace gammalab::io {

using Json = nlohmann::json;

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

/// {"generators": g, "relations": [[r_1..r_g], ...]}, one list per relator.
Json group_to_json(const Group& g);
/// Accepts the object form or a shorthand such as "Z/2", "Z/2+Z/4", "Z^2", "0".
Group group_from_json(const Json& j);
Group parse_group(const std::string& text);

/// Elements of a one-generator group are plain integers, otherwise lists.
Json element_to_json(const Group& g, const IntVector& x);
IntVector element_from_json(const Group& g, const Json& j);

/// Sparse table over B^arity: [[x1,..,xk,value], ...] for nonzero entries
/// in table order.
Json table_to_json(const FiniteGroup& fb, const Group& a, const std::vector<IntVector>& t, std::size_t arity);
std::vector<IntVector> table_from_json(const FiniteGroup& fb, const Group& a, const Json& j, std::size_t arity);

std::string canonical(const Json& j);
Json parse(const std::string& text);
Json read_file(const std::string& path);

/// The "kind" tag of a bundle; throws InputError when absent.
std::string bundle_kind(const Json& j);

Json to_json(const AbelianCocyclePair& p);
AbelianCocyclePair cocycle_pair_from_json(const Json& j);
Json to_json(const QuadraticMap& q);
QuadraticMap quadratic_from_json(const Json& j);
Json to_json(const BiextensionData& d);
BiextensionData biextension_from_json(const Json& j);
Json to_json(const SigmaData& d);
SigmaData sigma_from_json(const Json& j);
Json to_json(const Gamma3Pair& p);
Gamma3Pair gamma3_from_json(const Json& j);
/// {"kind":"section","B","A","s"}: a trivialization of E.
Json section_to_json(const Group& b, const Group& a, const std::vector<IntVector>& s);
std::vector<IntVector> section_from_json(const Json& j, const Group& b, const Group& a);

Json convention_to_json(const Convention& c);
Convention convention_from_json(const Json& j);

// Reports.
Json to_json(const AxiomReport& r, const FiniteGroup& fb, const Group& a);
Json to_json(const DiagramReport& r, const FiniteGroup& fb, const Group& a);
Json to_json(const PairReport& r, const FiniteGroup& fb, const Group& a);
Json group_summary(const Group& g);

}  // namespace gammalab::io
