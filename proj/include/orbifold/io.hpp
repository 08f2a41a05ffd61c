#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "json.hpp"
#include "orbifold/class_function.hpp"
#include "orbifold/cycle_index.hpp"
#include "orbifold/lattice.hpp"
#include "orbifold/series.hpp"

namespace orbifold::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; errors carry line and column.
Json parse_json(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);

/// {"degree": d, "generators": [[images…], …]} or a built-in name such as "S3".
PermGroup group_from_json(const Json& j, const Bounds& bounds = default_bounds());
Json group_to_json(const PermGroup& g);

/// {"generators": ["a","b"], "relators": ["abAB"]} or a built-in name.
std::shared_ptr<const Presentation> presentation_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// Polynomials as polynomial JSON, numbers as {"re": x, "im": y}. Strings are
/// read as a rational or as a single variable.
Json ring_to_json(const RingElem& r);
RingElem ring_from_json(const Json& j);

Json hnf_to_json(const HnfMatrix& h);
HnfMatrix hnf_from_json(const Json& j);

Json series_to_json(const TruncatedSeries& s);
Json cycle_index_to_json(const CycleIndex& c);

/// {"domain": "Z"|"ZxZ"|"general", "kind": "symbolic"|"numeric"|"table"|"constant", …}
ClassFunction class_function_from_json(const Json& j);

struct FullGroup {};
using Handle = std::variant<FullGroup, BigInt, HnfMatrix>;

struct TransformRequest {
  std::shared_ptr<const Presentation> group;
  ClassFunction class_function;
  std::shared_ptr<const PermGroup> omega;
  Handle handle;
};

/// {"group": …, "class_function": …, "omega": …, "handle": …}; "handle" may be
/// omitted (H = G), an integer index for ℤ, or an HNF object for ℤ⊕ℤ.
TransformRequest transform_request_from_json(const Json& j, const Bounds& bounds = default_bounds());

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& text);
std::string hex64(std::uint64_t v);

}  // namespace orbifold::io
