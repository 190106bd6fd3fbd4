// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "clusterlab/verify.hpp"

using namespace clusterlab;

TEST_CASE("report hashing depends only on parameters") {
  VerifyReport a;
  a.id = "thm1";
  a.params = {{"marked_max", 6}, {"mult_cap", 2}};
  VerifyReport b = a;
  b.seconds = 12.5;
  b.notes.push_back("note");
  CHECK(a.parameter_hash() == b.parameter_hash());
  CHECK(a.file_name() == "thm1-" + a.parameter_hash() + ".json");
  b.params["mult_cap"] = 3;
  CHECK(a.parameter_hash() != b.parameter_hash());
  const json j = a.to_json();
  CHECK(j.at("verdict") == "pass");
  CHECK(j.at("id") == "thm1");
}

TEST_CASE("fail and truncate set the verdict") {
  VerifyReport r;
  r.truncate("cap reached");
  CHECK(r.verdict == Verdict::truncated);
  r.fail({{"x", 1}});
  CHECK(r.verdict == Verdict::fail);
  r.truncate("later");
  CHECK(r.verdict == Verdict::fail);
}

TEST_CASE("small runs of each check pass") {
  CHECK(verify_mutation_core(50, 4, 20, 1).verdict == Verdict::pass);
  CHECK(verify_laurent(10, 1).verdict == Verdict::pass);
  CHECK(verify_tropical_duality(20, 1).verdict == Verdict::pass);
  CHECK(verify_langlands(4).verdict == Verdict::pass);
  CHECK(verify_f_equals_d().verdict == Verdict::pass);
  CHECK(verify_fvector_injectivity(2, 2).verdict == Verdict::pass);
  CHECK(verify_denominator('A', 2, 2, true).verdict == Verdict::pass);
  CHECK(verify_denominator('C', 2, 2, false).verdict == Verdict::pass);
  CHECK(verify_type_c_categorification(2, 2).verdict == Verdict::pass);
  CHECK(verify_thm2(2, 2, 2).verdict == Verdict::pass);
}

TEST_CASE("bounded tiling run on discs up to six points") {
  const VerifyReport r = verify_thm1(6, 2);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.seconds >= 0);
  CHECK_THROWS(verify_thm1(3, 2));
}

TEST_CASE("hexagon cluster variables from flips") {
  // Fan triangulation at vertex 1; every diagonal gets exactly one variable.
  const auto vars = disc_cluster_variables(DiscTiling{6, {{1, 3}, {1, 4}, {1, 5}}});
  CHECK(vars.size() == 9);
  for (const auto& v : vars) {
    const bool initial = v.chord.first == 1 && v.chord.second >= 3 && v.chord.second <= 5;
    if (initial) {
      CHECK(v.variable.size() == 1);
    } else {
      // f-vector = number of crossings with the fan, entry by entry.
      CHECK(v.f == v.intersection);
      CHECK(denominator_vector(v.variable) == v.intersection);
    }
  }
}
