#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polargrass/geometry.hpp"
#include "polargrass/serialize.hpp"

namespace polargrass {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<std::string> rows;  // tab-separated evidence lines
  double seconds = 0;
};

// Geometry override for a lemma check; an empty type keeps the lemma's defaults.
struct LemmaParams {
  std::string type;
  int n = 0;  // for type A: m
  int k = 0;  // for type A: j
  int q = 0;
  int threads = 0;
  std::size_t budget = 200'000;
  std::string golden;  // reference distance diagram
};

struct LemmaInfo {
  std::string name;
  std::string summary;
};

const std::vector<LemmaInfo>& lemma_catalog();
// Throws InvalidArgument for an unknown name.
CheckResult verify_lemma(const std::string& name, const LemmaParams& params = {});

// Building blocks shared with the acceptance suite.
CheckResult check_trichotomy(const Geometry& G, int threads = 0);
CheckResult check_parabolic_convexity(const Geometry& G, int threads = 0);
CheckResult check_diameter_law(int max_m, int q);
CheckResult check_distance_classes(int q = 2);
CheckResult check_distance_diagram(const std::string& golden_path, int q = 2);
CheckResult check_no_a53(int n = 5, int q = 2);
CheckResult check_dual_polar(const Geometry& G);

enum class A32Expectation { all_parabolic, exceptional_exists, none };
CheckResult check_main_theorem(const Geometry& G, A32Expectation expect, std::size_t budget = 200'000,
                               int threads = 0);

// D_{5,3}-style apartment of D_{n,n-2}(q) with base <e_1, ..., e_{n-2}>.
Geometry oriflamme_apartment(int n, int q);
// Directory of the reference files shipped with the sources.
std::string default_data_dir();
std::string default_golden_path();

// Counts recomputed by the engine under the keys of the standalone oracle file.
Json engine_oracle_counts();
CheckResult check_oracle_counts(const std::string& path);

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0: no limit
};
const std::vector<Criterion>& acceptance_criteria();
// Runs one criterion; passed also requires the time limit to hold.
CheckResult run_criterion(int id, int threads = 0, const std::string& data_dir = default_data_dir());

}  // namespace polargrass
