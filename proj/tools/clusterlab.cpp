// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "clusterlab/explorer.hpp"
#include "clusterlab/gentle.hpp"
#include "clusterlab/json_io.hpp"
#include "clusterlab/tiling.hpp"
#include "clusterlab/vectors.hpp"
#include "clusterlab/verify.hpp"

using namespace clusterlab;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTruncated = 3;

struct Globals {
  std::string format = "text";
  std::string out;
};

void render_text(std::ostream& os, const json& j, int indent) {
  const std::string pad(indent, ' ');
  auto scalar_array = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& x) { return !x.is_structured(); });
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !(v.is_array() && scalar_array(v)) && !v.empty()) {
        os << pad << k << ":\n";
        render_text(os, v, indent + 2);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        os << pad << "-\n";
        render_text(os, v, indent + 2);
      } else {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Globals& g, const json& j) {
  if (g.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    render_text(std::cout, j, 0);
  if (!g.out.empty()) {
    std::ofstream f(g.out);
    if (!f) throw std::runtime_error("cannot write " + g.out);
    f << j.dump(2) << "\n";
  }
}

// Reports accumulate: the target file holds an array of runs.
void append_report(const std::string& out, const VerifyReport& r) {
  std::filesystem::path path(out);
  if (std::filesystem::is_directory(path)) path /= r.file_name();
  json runs = json::array();
  if (std::filesystem::exists(path)) {
    json old = read_json_file(path.string());
    if (old.is_array())
      runs = std::move(old);
    else
      runs.push_back(std::move(old));
  }
  runs.push_back(r.to_json());
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << runs.dump(2) << "\n";
}

int emit_report(const Globals& g, const VerifyReport& r) {
  if (g.format == "json") {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    std::cout << r.id << ": " << to_string(r.verdict) << " (" << r.seconds << " s)\n";
    render_text(std::cout, json{{"params", r.params}, {"witnesses", r.witnesses}}, 2);
    for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
  }
  if (!g.out.empty()) append_report(g.out, r);
  if (r.verdict == Verdict::fail) return kExitFail;
  if (r.verdict == Verdict::truncated) return kExitTruncated;
  return 0;
}

json seed_json(const TrackedSeed& t) {
  json cluster = json::array();
  for (const auto& x : t.seed.cluster) cluster.push_back(to_string(x));
  return {{"B", to_json(t.matrix().b())}, {"cluster", cluster}, {"C", to_json(t.c)},
          {"G", to_json(t.g)},             {"F", to_json(t.f)},     {"D", to_json(d_matrix(t))}};
}

TrackedSeed walk_from(const std::string& matrix_file, const std::string& seq) {
  const ExchangeMatrix b = exchange_matrix_from_json(read_json_file(matrix_file));
  const auto walk = seq.empty() ? std::vector<std::size_t>{} : parse_mutation_sequence(seq, b.n());
  return mutate_tracked(TrackedSeed::root(b), walk);
}

std::vector<std::int64_t> parse_exponents(const std::string& text, std::size_t n) {
  std::vector<std::int64_t> e;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) e.push_back(std::stoll(item));
  if (e.size() != n) throw std::invalid_argument("monomial \"" + text + "\" needs " + std::to_string(n) + " exponents");
  return e;
}

json tau_rigid_json(const BoundQuiver& q, const TauRigidInventory& inv) {
  json rigid = json::array();
  for (const auto& m : inv.rigid)
    rigid.push_back({{"string", to_string(q, m.word)}, {"dim", m.dim}, {"tau_dim", m.tau.dim_vector()}});
  return {{"strings", inv.strings.size()},
          {"tau_rigid", rigid},
          {"cap_reached", inv.cap_reached},
          {"representation_infinite", inv.representation_infinite}};
}

json arc_trace_json(const PermissibleArc& a, const BoundQuiver& q) {
  json crossings = json::array();
  for (const auto& c : a.crossings) crossings.push_back({{"tile", c.tile + 1}, {"corner", c.index + 1}});
  return {{"string", to_string(q, a.word)},
          {"ends", {a.start_point, a.end_point}},
          {"intersection", a.int_vector},
          {"start", {{"tile", a.start.tile + 1}, {"vertex", a.start.index + 1}}},
          {"end", {{"tile", a.end.tile + 1}, {"vertex", a.end.index + 1}}},
          {"angles", crossings}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cluster-algebra, gentle-algebra and tiling computations"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", g.out, "Write the JSON result here (reports append; a directory gets <id>-<hash>.json)");
  std::function<int()> action;

  std::string matrix_file, seq;
  auto* mutate = app.add_subcommand("mutate", "Mutate the initial seed along a sequence");
  mutate->add_option("--matrix", matrix_file, "Exchange matrix JSON")->required();
  mutate->add_option("--seq", seq, "Comma-separated 1-based directions");
  mutate->callback([&] {
    action = [&] {
      emit(g, seed_json(walk_from(matrix_file, seq)));
      return 0;
    };
  });

  std::size_t max_seeds = 100000, classify_depth = 8;
  std::string order = "bfs";
  bool with_variables = false;
  auto* explore_cmd = app.add_subcommand("explore", "Enumerate the exchange graph");
  explore_cmd->add_option("--matrix", matrix_file, "Exchange matrix JSON")->required();
  explore_cmd->add_option("--max-seeds", max_seeds, "Stop after this many clusters");
  explore_cmd->add_option("--order", order, "Traversal order")->check(CLI::IsMember({"bfs", "dfs"}));
  explore_cmd->add_option("--classify-depth", classify_depth, "Mutation depth searched for a finite-type label");
  explore_cmd->add_flag("--variables", with_variables, "Include the variable table");
  explore_cmd->callback([&] {
    action = [&] {
      const ExchangeMatrix b = exchange_matrix_from_json(read_json_file(matrix_file));
      const ExchangeGraph eg =
          explore(b, max_seeds, order == "bfs" ? ExploreOrder::breadth_first : ExploreOrder::depth_first);
      json j{{"clusters", eg.num_clusters()},
             {"variables", eg.num_variables()},
             {"complete", eg.complete},
             {"finite_type", classify_finite_type(b, classify_depth).name()}};
      if (with_variables) {
        const auto vecs = variable_vectors(eg);
        json table = json::array();
        for (std::size_t i = 0; i < eg.num_variables(); ++i)
          table.push_back({{"id", i + 1}, {"laurent", to_string(eg.variables[i])}, {"d", vecs[i].d},
                           {"g", vecs[i].g}, {"f", vecs[i].f}});
        j["variable_table"] = table;
      }
      emit(g, j);
      return eg.complete ? 0 : kExitTruncated;
    };
  });

  std::vector<std::string> monomials;
  auto* vectors_cmd = app.add_subcommand("vectors", "C, G, F, D matrices and monomial vectors after a walk");
  vectors_cmd->add_option("--matrix", matrix_file, "Exchange matrix JSON")->required();
  vectors_cmd->add_option("--seq", seq, "Comma-separated 1-based directions");
  vectors_cmd->add_option("--monomial", monomials, "Exponents of a cluster monomial, e.g. 1,0,2");
  vectors_cmd->callback([&] {
    action = [&] {
      const TrackedSeed t = walk_from(matrix_file, seq);
      json j = seed_json(t);
      j["Fbar"] = to_json(fbar_matrix(t));
      j["tropical_duality"] = check_tropical_duality(t);
      json ms = json::array();
      for (const auto& text : monomials) {
        const auto e = parse_exponents(text, t.n());
        const auto v = vectors_of_monomial(t, e);
        ms.push_back({{"exponents", e}, {"d", v.d}, {"g", v.g}, {"f", v.f}, {"fbar", v.fbar}});
      }
      j["monomials"] = ms;
      emit(g, j);
      return 0;
    };
  });

  std::string quiver_file;
  std::optional<std::size_t> string_cap;
  auto* gentle = app.add_subcommand("gentle", "Gentle bound quivers");
  gentle->require_subcommand(1);
  auto* analyze = gentle->add_subcommand("analyze", "Gentleness, cycles, Cartan matrix and tau-rigid modules");
  analyze->add_option("--quiver", quiver_file, "Quiver JSON")->required();
  analyze->add_option("--cap", string_cap, "String length cap (default 2 * arrows + 2)");
  analyze->callback([&] {
    action = [&] {
      const BoundQuiver q = quiver_from_json(read_json_file(quiver_file));
      const GentleCheck gc = check_gentle(q);
      json j{{"gentle", gc.gentle}};
      if (!gc.gentle) j["violation"] = gc.condition + ": " + gc.witness;
      json cycle = nullptr;
      if (const auto c = detect_even_full_cycle(q)) {
        cycle = json::array();
        for (auto a : *c) cycle.push_back(q.arrows[a].id);
      }
      j["even_full_cycle"] = cycle;
      j["finite_dimensional"] = is_finite_dimensional(q);
      if (gc.gentle && is_finite_dimensional(q)) {
        const IntMatrix c = cartan_matrix(q);
        j["cartan"] = to_json(c);
        j["det_cartan"] = determinant(c).get_str();
        j.update(tau_rigid_json(q, enumerate_tau_rigid(q, string_cap.value_or(default_string_cap(q)))));
      }
      emit(g, j);
      return 0;
    };
  });

  std::string tiling_file;
  int marked_max = 8;
  std::size_t mult_cap = 3;
  auto* tiling = app.add_subcommand("tiling", "Partial triangulations, tiling algebras and permissible arcs");
  tiling->require_subcommand(1);
  auto* classify = tiling->add_subcommand("classify", "Tile types and the forbidden-tile scan");
  auto* algebra = tiling->add_subcommand("algebra", "The tiling algebra as a bound quiver");
  auto* arcs = tiling->add_subcommand("arcs", "Permissible arcs with intersection vectors and segment traces");
  for (auto* sub : {classify, algebra, arcs}) sub->add_option("--tiling", tiling_file, "Tiling JSON")->required();
  arcs->add_option("--cap", string_cap, "String length cap (default 2 * arcs + 2)");
  classify->callback([&] {
    action = [&] {
      const TilingComplex t = tiling_from_json(read_json_file(tiling_file));
      const auto types = classify_tiles(t);
      json tiles = json::array();
      for (std::size_t i = 0; i < types.size(); ++i)
        tiles.push_back({{"tile", i + 1}, {"type", to_string(types[i])}, {"sides", t.tiles[i].sides.size()}});
      emit(g, {{"tiles", tiles}, {"forbidden_tile_scan", forbidden_tile_scan(t)}});
      return 0;
    };
  });
  algebra->callback([&] {
    action = [&] {
      const TilingComplex t = tiling_from_json(read_json_file(tiling_file));
      classify_tiles(t);
      const TilingAlgebra alg = tiling_algebra(t);
      json j = quiver_to_json(alg.quiver);
      json vertices = json::array();
      for (const auto& a : t.arcs) vertices.push_back(a.id);
      j["vertex_arcs"] = vertices;
      j["gentle"] = check_gentle(alg.quiver).gentle;
      emit(g, j);
      return 0;
    };
  });
  arcs->callback([&] {
    action = [&] {
      const TilingComplex t = tiling_from_json(read_json_file(tiling_file));
      classify_tiles(t);
      const ArcInventory inv = enumerate_permissible_arcs(t, string_cap.value_or(default_arc_cap(t)));
      json list = json::array();
      for (const auto& a : inv.arcs) list.push_back(arc_trace_json(a, inv.algebra.quiver));
      emit(g, {{"arcs", list}, {"cap_reached", inv.cap_reached}});
      if (inv.cap_reached) std::cerr << "warning: strings longer than the cap exist\n";
      return inv.cap_reached ? kExitTruncated : 0;
    };
  });
  auto* tiling_thm1 = tiling->add_subcommand("verify-thm1", "Intersection-vector injectivity over disc tilings");
  tiling_thm1->add_option("--marked-max", marked_max, "Largest number of marked points");
  tiling_thm1->add_option("--mult-cap", mult_cap, "Total multiplicity cap");
  tiling_thm1->callback([&] { action = [&] { return emit_report(g, verify_thm1(marked_max, mult_cap)); }; });

  auto* verify = app.add_subcommand("verify", "Verification experiments producing JSON reports");
  verify->require_subcommand(1);
  auto* v_thm1 = verify->add_subcommand("thm1", "Intersection-vector injectivity over disc tilings");
  v_thm1->add_option("--marked-max", marked_max, "Largest number of marked points");
  v_thm1->add_option("--mult-cap", mult_cap, "Total multiplicity cap");
  v_thm1->callback([&] { action = [&] { return emit_report(g, verify_thm1(marked_max, mult_cap)); }; });

  std::size_t vertex_max = 4, arrow_max = 6;
  auto* v_thm2 = verify->add_subcommand("thm2", "Dimension-vector dichotomy for gentle algebras");
  v_thm2->add_option("--vertex-max", vertex_max, "Largest number of vertices");
  v_thm2->add_option("--arrow-max", arrow_max, "Largest number of arrows");
  v_thm2->add_option("--mult-cap", mult_cap, "Total multiplicity cap for direct sums");
  v_thm2->callback([&] { action = [&] { return emit_report(g, verify_thm2(vertex_max, arrow_max, mult_cap)); }; });

  std::size_t rank_max = 3, degree_cap = 3;
  auto* v_fvec = verify->add_subcommand("fvector", "f-bar injectivity in type A and the polygon cross-check");
  v_fvec->add_option("--rank-max", rank_max, "Largest rank");
  v_fvec->add_option("--degree-cap", degree_cap, "Largest monomial degree");
  v_fvec->callback([&] { action = [&] { return emit_report(g, verify_fvector_injectivity(rank_max, degree_cap)); }; });

  std::string series = "C", seeds = "all";
  auto* v_den = verify->add_subcommand("denominator", "d-vector injectivity and D-matrix independence");
  v_den->add_option("--series", series, "A, B or C")->check(CLI::IsMember({"A", "B", "C"}));
  v_den->add_option("--rank-max", rank_max, "Largest rank");
  v_den->add_option("--degree-cap", degree_cap, "Largest monomial degree");
  v_den->add_option("--initial-seeds", seeds, "Re-root at every cluster or only the root")
      ->check(CLI::IsMember({"all", "root"}));
  v_den->callback([&] {
    action = [&] { return emit_report(g, verify_denominator(series[0], rank_max, degree_cap, seeds == "all")); };
  });

  auto* v_typec = verify->add_subcommand("typec", "Tau-rigid pairs of the type C quiver against d-vectors");
  v_typec->add_option("--rank-max", rank_max, "Largest rank (at least 2)");
  v_typec->add_option("--degree-cap", degree_cap, "Largest monomial degree");
  v_typec->callback(
      [&] { action = [&] { return emit_report(g, verify_type_c_categorification(rank_max, degree_cap)); }; });

  std::size_t walks = 1000, length_max = 20;
  std::uint64_t rng_seed = 1;
  auto* v_mut = verify->add_subcommand("mutation", "Involution and symmetrizer checks along random walks");
  v_mut->add_option("--walks", walks, "Number of walks");
  v_mut->add_option("--rank-max", rank_max, "Largest rank");
  v_mut->add_option("--length-max", length_max, "Longest walk");
  v_mut->add_option("--seed", rng_seed, "Random seed");
  v_mut->callback(
      [&] { action = [&] { return emit_report(g, verify_mutation_core(walks, rank_max, length_max, rng_seed)); }; });

  auto* v_laurent = verify->add_subcommand("laurent", "Exact division along walks and the A2 closure");
  v_laurent->add_option("--walks", walks, "Number of walks");
  v_laurent->add_option("--seed", rng_seed, "Random seed");
  v_laurent->callback([&] { action = [&] { return emit_report(g, verify_laurent(walks, rng_seed)); }; });

  auto* v_trop = verify->add_subcommand("tropical", "G^T S C = S on finite types and random walks");
  v_trop->add_option("--walks", walks, "Number of random walks");
  v_trop->add_option("--seed", rng_seed, "Random seed");
  v_trop->callback([&] { action = [&] { return emit_report(g, verify_tropical_duality(walks, rng_seed)); }; });

  std::size_t dual_length = 6;
  auto* v_lang = verify->add_subcommand("langlands", "F and C against the Langlands dual for B2 and C2");
  v_lang->add_option("--length-max", dual_length, "Longest walk");
  v_lang->callback([&] { action = [&] { return emit_report(g, verify_langlands(dual_length)); }; });

  auto* v_fd = verify->add_subcommand("f-equals-d", "f-vector = d-vector in small finite types");
  v_fd->callback([&] { action = [&] { return emit_report(g, verify_f_equals_d()); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
