#pragma once

#include <json.hpp>

#include "leviflat/series.hpp"

namespace leviflat {

using Json = nlohmann::ordered_json;

/// Canonical series form:
/// {"vars":[...], "weights":[...], "pairs":[[i,j],...], "trunc":N,
///  "terms":[{"exp":[...], "re":"p/q", "im":"p/q"},...]}
/// Terms are emitted in graded-lex order; trunc -1 encodes an entire series.
Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);
SpacePtr space_from_json(const Json& j);

Json rational_to_json(const GaussianRational& c);
GaussianRational rational_from_json(const Json& j);

}  // namespace leviflat
