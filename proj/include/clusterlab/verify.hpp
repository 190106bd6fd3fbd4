// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "clusterlab/json_io.hpp"
#include "clusterlab/laurent.hpp"
#include "clusterlab/tiling.hpp"

namespace clusterlab {

enum class Verdict { pass, fail, truncated };

std::string to_string(Verdict v);

/// Outcome of one experiment. A fail carries its counterexample under
/// witnesses["counterexample"]; a truncated run names the bound it hit in notes.
struct VerifyReport {
  std::string id;
  json params = json::object();
  Verdict verdict = Verdict::pass;
  json witnesses = json::object();
  std::vector<std::string> notes;
  double seconds = 0;

  json to_json() const;
  /// Hex digest of the parameters, stable across runs.
  std::string parameter_hash() const;
  /// "<id>-<parameter hash>.json"
  std::string file_name() const;
  void fail(json counterexample);
  void truncate(std::string note);
};

/// Random skew-symmetrizable walks: mutation is an involution and keeps the
/// skew-symmetrizer.
VerifyReport verify_mutation_core(std::size_t walks, std::size_t rank_max, std::size_t length_max,
                                  std::uint64_t seed);

/// A2 closes with 5 clusters and 5 variables of the expected d-vectors, and
/// exact division never fails along random walks in small ranks.
VerifyReport verify_laurent(std::size_t walks, std::uint64_t seed);

/// G^T S C = S on fully explored A2, A3, B2, C2, C3 and along random walks.
VerifyReport verify_tropical_duality(std::size_t walks, std::uint64_t seed);

/// F and C against their Langlands duals for every B2/C2 walk up to length_max.
VerifyReport verify_langlands(std::size_t length_max);

/// f-vector = d-vector for every non-initial variable of A1..A3, B2, C2, C3.
VerifyReport verify_f_equals_d();

/// Intersection-vector injectivity over disc tilings with 4..marked_max points
/// that pass the forbidden-tile scan, the converse search on the ones that
/// fail it, the segment-profile check and the string/geometry cross-check.
VerifyReport verify_thm1(int marked_max, std::size_t mult_cap);

/// Even full-relation cycle iff two distinct tau-rigid modules share a
/// dimension vector, over gentle quivers within the bounds; also det C = 0
/// iff an even full-relation cycle exists.
VerifyReport verify_thm2(std::size_t vertex_max, std::size_t arrow_max, std::size_t mult_cap = 3);

/// f-bar injectivity on cluster monomials of A1..A_{n_max} plus the
/// polygon cross-check (f-vector = intersection vector) for ranks 2..n_max.
VerifyReport verify_fvector_injectivity(std::size_t n_max, std::size_t degree_cap);

/// d-vector injectivity and D-matrix independence for ranks 2..n_max (1..n_max
/// for A), re-rooted at every cluster when all_seeds is set. B and C runs are
/// paired with the Langlands dual series and the verdicts must agree.
VerifyReport verify_denominator(char series, std::size_t n_max, std::size_t degree_cap, bool all_seeds);

/// Tau-rigid pairs of the type C quiver against cluster monomials of C_n,
/// n = 2..n_max, via the vector (m1/2, m2, ..., mn) minus the projective part.
VerifyReport verify_type_c_categorification(std::size_t n_max, std::size_t degree_cap = 3);

/// Cluster variable attached to a chord by flipping from a triangulation.
struct ChordVariable {
  std::pair<int, int> chord;
  LaurentPoly variable;
  IntVector f;
  IntVector intersection;  // crossings with the initial triangulation
};

/// Breadth-first search over flips of a disc triangulation, mutating the seed
/// of its tiling quiver alongside. Throws std::logic_error if the tiling
/// quiver of a flipped triangulation is not the mutated exchange matrix, or a
/// chord is reached with two different variables.
std::vector<ChordVariable> disc_cluster_variables(const DiscTiling& triangulation);

}  // namespace clusterlab
