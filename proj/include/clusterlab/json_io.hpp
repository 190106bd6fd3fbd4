// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>
#include <string>

#include "clusterlab/exchange.hpp"
#include "clusterlab/gentle.hpp"
#include "clusterlab/linalg.hpp"
#include "clusterlab/tiling.hpp"

namespace clusterlab {

using nlohmann::json;

/// Malformed input documents.
struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json to_json(const IntMatrix& m);
json to_json(std::span<const std::int64_t> v);

/// {"n": 2, "B": [[0,1],[-1,0]]}; "n" is optional but checked when present.
ExchangeMatrix exchange_matrix_from_json(const json& j);
json exchange_matrix_to_json(const ExchangeMatrix& b);

/// {"vertices": 2, "arrows": [{"id": "a", "src": 1, "tgt": 2}],
///  "relations": [["a", "b"]]} with 1-based vertices; ["a", "b"] is "a then b".
BoundQuiver quiver_from_json(const json& j);
json quiver_to_json(const BoundQuiver& q);

/// {"surface": "disc", "marked": 5, "chords": [[1,3],[1,4]]}
DiscTiling disc_from_json(const json& j);
json disc_to_json(const DiscTiling& d);

/// Disc documents are expanded with disc_complex. General documents:
/// {"surface": "general",
///  "arcs": [{"id": "l", "ends": [1, 1]}, ...],
///  "tiles": [{"type": "I", "unmarked": 1,
///             "sides": [{"arc": "l", "reversed": false}, {"boundary": [1, 2]}]}]}
/// with sides listed anticlockwise. "type" and "unmarked" are optional.
TilingComplex tiling_from_json(const json& j);
json tiling_to_json(const TilingComplex& t);

json read_json_file(const std::string& path);

}  // namespace clusterlab
