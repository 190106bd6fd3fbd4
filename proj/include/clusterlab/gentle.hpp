// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clusterlab/exchange.hpp"
#include "clusterlab/linalg.hpp"

namespace clusterlab {

struct Arrow {
  std::string id;
  std::size_t src = 0;
  std::size_t tgt = 0;
};

/// Quiver with monomial length-two relations. A relation (a, b) stands for
/// the path "a then b", so it requires tgt(a) == src(b). Vertices are 0-based.
struct BoundQuiver {
  std::size_t num_vertices = 0;
  std::vector<Arrow> arrows;
  std::set<std::pair<std::size_t, std::size_t>> relations;

  std::size_t add_arrow(std::string id, std::size_t src, std::size_t tgt);
  void add_relation(std::size_t a, std::size_t b);
  bool is_relation(std::size_t a, std::size_t b) const { return relations.count({a, b}) > 0; }
  std::optional<std::size_t> find_arrow(const std::string& id) const;
  std::vector<std::size_t> out_arrows(std::size_t v) const;
  std::vector<std::size_t> in_arrows(std::size_t v) const;
};

struct GentleCheck {
  bool gentle = true;
  std::string condition;  // "G1".."G4" for the first violation
  std::string witness;
};

GentleCheck check_gentle(const BoundQuiver& q);

/// All oriented cycles with full relations, as arrow sequences starting at
/// their smallest arrow index. Loops with a square relation have length 1.
std::vector<std::vector<std::size_t>> full_relation_cycles(const BoundQuiver& q);

std::optional<std::vector<std::size_t>> detect_even_full_cycle(const BoundQuiver& q);

struct InfiniteDimensional : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// No oriented cycle avoids the relations.
bool is_finite_dimensional(const BoundQuiver& q);

/// Column i = dimension vector of the projective at vertex i. Throws
/// InfiniteDimensional.
IntMatrix cartan_matrix(const BoundQuiver& q);

/// The nonzero paths of a finite-dimensional monomial bound quiver.
class PathTable {
 public:
  struct Path {
    std::size_t start = 0;
    std::size_t end = 0;
    std::vector<std::size_t> arrows;
  };

  explicit PathTable(const BoundQuiver& q);

  const BoundQuiver& quiver() const { return q_; }
  const std::vector<Path>& paths() const { return paths_; }
  const std::vector<std::size_t>& starting_at(std::size_t v) const { return from_[v]; }
  const std::vector<std::size_t>& ending_at(std::size_t v) const { return to_[v]; }
  std::size_t trivial(std::size_t v) const { return from_[v].front(); }
  /// p then arrow a, if that path is nonzero.
  std::optional<std::size_t> extend(std::size_t p, std::size_t a) const;
  /// arrow a then p, if nonzero.
  std::optional<std::size_t> prepend(std::size_t a, std::size_t p) const;
  /// y with x = y then p, if any.
  std::optional<std::size_t> strip_suffix(std::size_t x, std::size_t p) const;

 private:
  BoundQuiver q_;
  std::vector<Path> paths_;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index_;
  std::vector<std::vector<std::size_t>> from_;
  std::vector<std::vector<std::size_t>> to_;
};

struct Letter {
  std::size_t arrow = 0;
  bool inverse = false;

  auto operator<=>(const Letter&) const = default;
};

/// Walk in the quiver: a start vertex followed by letters. A direct letter a
/// walks from src(a) to tgt(a); an inverse letter walks backwards.
struct StringWord {
  std::size_t start = 0;
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
  auto operator<=>(const StringWord&) const = default;
};

/// Empty if valid, otherwise the reason.
std::optional<std::string> string_defect(const BoundQuiver& q, const StringWord& w);
std::vector<std::size_t> walk_vertices(const BoundQuiver& q, const StringWord& w);
StringWord inverse_word(const BoundQuiver& q, const StringWord& w);
/// The smaller of w and its inverse.
StringWord canonical_word(const BoundQuiver& q, const StringWord& w);
std::string to_string(const BoundQuiver& q, const StringWord& w);

/// Quiver representation over the rationals. maps[a] is dims[tgt] x dims[src].
struct QuiverRep {
  std::vector<std::size_t> dims;
  std::vector<RatMatrix> maps;

  std::size_t total_dim() const;
  IntVector dim_vector() const;
  bool is_zero() const { return total_dim() == 0; }
};

/// Shapes match and every relation composes to zero.
bool is_valid_rep(const BoundQuiver& q, const QuiverRep& m);

QuiverRep zero_rep(const BoundQuiver& q);
QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);
/// Throws std::invalid_argument on an invalid word.
QuiverRep string_module(const BoundQuiver& q, const StringWord& w);
QuiverRep projective_rep(const PathTable& t, std::size_t v);
QuiverRep injective_rep(const PathTable& t, std::size_t v);

/// Minimal projective presentation P1 -> P0 -> M -> 0. Generator g of P0 sits
/// at p0_tops[g]; generator h of P1 maps to sum of coeff * (g, path) where the
/// path runs from p0_tops[g] to p1_tops[h].
struct ProjectivePresentation {
  struct Term {
    std::size_t generator;
    std::size_t path;
    mpq_class coeff;
  };
  std::vector<std::size_t> p0_tops;
  std::vector<std::size_t> p1_tops;
  std::vector<std::vector<Term>> relations;
};

ProjectivePresentation minimal_presentation(const PathTable& t, const QuiverRep& m);

/// Auslander-Reiten translate, computed as the kernel of the Nakayama functor
/// applied to the minimal projective presentation.
QuiverRep ar_translate(const PathTable& t, const QuiverRep& m);
QuiverRep ar_translate(const BoundQuiver& q, const QuiverRep& m);

/// Dimension of Hom(M, N), from the linear system of intertwiners.
std::size_t hom_dim(const BoundQuiver& q, const QuiverRep& m, const QuiverRep& n);

/// Whether Hom(p, Y): Hom(P0, Y) -> Hom(P1, Y) is onto. For the minimal
/// presentation p of M this holds iff Hom(Y, tau M) = 0.
bool presentation_hom_surjective(const PathTable& t, const ProjectivePresentation& p, const QuiverRep& y);

bool is_tau_rigid(const PathTable& t, const QuiverRep& m);

struct TauRigidModule {
  StringWord word;
  IntVector dim;
  QuiverRep module;
  QuiverRep tau;
};

struct TauRigidInventory {
  std::vector<StringWord> strings;     // every string up to the cap, canonical
  std::vector<TauRigidModule> rigid;   // the tau-rigid ones
  bool cap_reached = false;            // strings longer than the cap exist
  bool representation_infinite = false;
};

/// All strings up to length `cap` up to inversion, keeping the tau-rigid ones.
/// representation_infinite is set when a string repeats a letter in the same
/// direction, which makes its powers strings too.
TauRigidInventory enumerate_tau_rigid(const BoundQuiver& q, std::size_t cap);

/// Default cap: 2 * arrows + 2.
std::size_t default_string_cap(const BoundQuiver& q);

/// hom(M, tau N) = 0 = hom(N, tau M).
bool compatible(const BoundQuiver& q, const TauRigidModule& a, const TauRigidModule& b);

/// Tau-rigid pair (M, P): M a compatible multiset of indecomposables, P a
/// multiset of indecomposable projectives P_v with Hom(P_v, M) = 0, that is
/// M vanishes at v.
struct TauRigidPair {
  std::vector<std::pair<std::size_t, std::size_t>> module;               // (index into rigid, multiplicity)
  std::vector<std::pair<std::size_t, std::size_t>> projective_vertices;  // (vertex, multiplicity)

  std::size_t degree() const;
};

/// Pairs with total multiplicity (module plus projective part) <= mult_cap,
/// the empty pair included.
std::vector<TauRigidPair> enumerate_tau_rigid_pairs(const BoundQuiver& q, const TauRigidInventory& inv,
                                                    std::size_t mult_cap);

/// Loop at vertex 1, b_ij arrows i->j for j != 1, b_i1/2 arrows i->1; relations
/// are the square of the loop and every length-two path inside an oriented
/// 3-cycle. Requires the skew-symmetrizer diag(2, 1, ..., 1).
BoundQuiver type_c_quiver(const ExchangeMatrix& b);

struct QbConditions {
  bool a = false;
  bool b = false;
  bool c = false;
  bool d = false;
  bool e = false;

  bool all() const { return a && b && c && d && e; }
};

QbConditions check_qb_conditions(const BoundQuiver& q);

/// Gentle bound quivers with 1..max_vertices vertices and at most max_arrows
/// arrows, connected and finite-dimensional, one per isomorphism class.
std::vector<BoundQuiver> enumerate_gentle_quivers(std::size_t max_vertices, std::size_t max_arrows);

/// Isomorphism-invariant code of a bound quiver.
std::vector<int> canonical_code(const BoundQuiver& q);

}  // namespace clusterlab
