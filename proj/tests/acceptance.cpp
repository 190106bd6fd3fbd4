// SPDX-FileCopyrightText: (c) 2026 The clusterlab authors
//
// SPDX-License-Identifier: Apache-2.0

// Full-size acceptance runs. One line per criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "clusterlab/verify.hpp"

using namespace clusterlab;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

Outcome from_report(const VerifyReport& r) {
  Outcome o;
  o.ok = r.verdict == Verdict::pass;
  o.detail = to_string(r.verdict) + " " + r.witnesses.dump();
  if (o.detail.size() > 400) o.detail = o.detail.substr(0, 400) + "...";
  return o;
}

int failures = 0;

void criterion(int number, const std::string& name, double limit_seconds, const std::function<Outcome()>& run) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_seconds) {
    o.ok = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit)";
  }
  if (!o.ok) ++failures;
  std::printf("[%s] %2d %-32s %8.2f s  %s\n", o.ok ? "PASS" : "FAIL", number, name.c_str(), secs, o.detail.c_str());
  std::fflush(stdout);
}

std::set<std::pair<int, int>> chord_set(const json& disc) {
  std::set<std::pair<int, int>> s;
  for (const auto& c : disc.at("chords")) s.insert(c.get<std::pair<int, int>>());
  return s;
}

}  // namespace

int main() {
  criterion(1, "mutation core", 5, [] { return from_report(verify_mutation_core(1000, 5, 20, 2026)); });
  criterion(2, "Laurent phenomenon", 1, [] { return from_report(verify_laurent(20, 2026)); });
  criterion(3, "tropical duality", 30, [] { return from_report(verify_tropical_duality(100, 2026)); });
  criterion(4, "Langlands duality", 10, [] { return from_report(verify_langlands(6)); });
  criterion(5, "finite type f = d", 60, [] { return from_report(verify_f_equals_d()); });

  // Criterion 7 reuses the enumeration run under criterion 6.
  VerifyReport thm1;
  std::string thm1_error;
  double thm1_secs = 0;
  criterion(6, "intersection injectivity", 300, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      thm1 = verify_thm1(8, 3);
    } catch (const std::exception& e) {
      thm1_error = e.what();
    }
    thm1_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!thm1_error.empty()) return Outcome{false, "exception: " + thm1_error};
    Outcome o = from_report(thm1);
    const std::set<std::pair<int, int>> square{{1, 3}, {3, 5}, {5, 7}, {1, 7}};
    bool square_witness = false;
    for (const auto& w : thm1.witnesses.value("converse", json::array()))
      if (chord_set(w.at("tiling")) == square && w.at("vector") == json{1, 1, 1, 1}) square_witness = true;
    if (!square_witness) {
      o.ok = false;
      o.detail = "no equal-vector pair on the octagon central square; " + o.detail;
    }
    return o;
  });
  criterion(7, "segment profile equality", 300 - thm1_secs, [&] {
    if (!thm1_error.empty()) return Outcome{false, "exception: " + thm1_error};
    Outcome o = from_report(thm1);
    const auto compared = thm1.witnesses.value("seg_profiles_compared", std::size_t{0});
    if (compared == 0) o.ok = false;
    o.detail = "profiles compared " + std::to_string(compared) + "; " + to_string(thm1.verdict);
    return o;
  });

  criterion(8, "gentle even-cycle biconditional", 300, [] { return from_report(verify_thm2(4, 6, 3)); });
  criterion(9, "f-bar injectivity (type A)", 120, [] { return from_report(verify_fvector_injectivity(3, 3)); });
  criterion(10, "d-vector injectivity (A/B/C)", 600, [] {
    Outcome o{true, ""};
    for (char s : {'A', 'C'}) {
      const VerifyReport r = verify_denominator(s, 3, 3, true);
      const Outcome part = from_report(r);
      o.ok = o.ok && part.ok;
      o.detail += std::string(1, s) + ": " + part.detail + "  ";
    }
    return o;
  });
  criterion(11, "type C categorification", 300, [] { return from_report(verify_type_c_categorification(3, 3)); });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
