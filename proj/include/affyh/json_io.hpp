#pragma once

// Canonical JSON forms.  Keys keep insertion order and terms are emitted in
// canonical order, so equal values serialize to identical bytes.
//
//   Scalar      {"terms": [{"qexp": k, "cyc": ["p/q", ...]}]}
//   GroupIndex  {"beta": [...], "lambda": [...], "sigma": [...]}
//   Element     {"r", "n", "field" (when != r), "terms": [{"index", "coeff"}]}
//   Report      {"presentation", "r", "n", "results": [{"label", "pass", ...}]}

#include "json.hpp"

#include "affyh/decomposition.hpp"
#include "affyh/modified.hpp"
#include "affyh/presentations.hpp"

namespace affyh {

using Json = nlohmann::ordered_json;

Json to_json(const CycRational& c);
CycRational cyc_from_json(const Json& j, int field);

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, int field);

Json to_json(const GroupIndex& g);
GroupIndex index_from_json(const Json& j);

Json to_json(const Element& e);
Element element_from_json(const Json& j);

Json to_json(const Report& rep);
Json to_json(const VandermondeData& v);
Json to_json(const BlockMatrix& m);

}  // namespace affyh
