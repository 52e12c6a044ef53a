// One line per acceptance criterion: id, verdict, observed time against the
// pinned limit, title and detail. Evidence rows follow failing criteria.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <set>
#include <vector>

#include "polargrass/error.hpp"
#include "polargrass/lemmas.hpp"

namespace {

// Criteria whose stated property is false for the computed geometry. They are
// still run and reported as FAIL; the analysis lives in the evidence rows.
// 7: in D_{5,3}(2) the middle set of a 2g pair contains full lines, and that of
//    a 2s pair is three punctured lines through the common neighbour with no
//    isolated points.
const std::set<int> kKnownRed = {7};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  bool strict = false;
  int threads = 0;
  std::vector<int> only;
  std::string data_dir = POLARGRASS_SOURCE_DIR "/tests/golden";
  app.add_flag("--strict", strict, "fail on every red criterion, including known ones");
  app.add_option("--threads", threads, "worker threads (0: hardware)");
  app.add_option("--only", only, "criterion ids to run");
  app.add_option("--data", data_dir, "directory with reference files");
  CLI11_PARSE(app, argc, argv);

  std::set<int> red;
  std::size_t ran = 0;
  for (const auto& c : polargrass::acceptance_criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    ++ran;
    polargrass::CheckResult r;
    try {
      r = polargrass::run_criterion(c.id, threads, data_dir);
    } catch (const polargrass::Error& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    char timing[64];
    if (c.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", r.seconds, c.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", r.seconds);
    const bool known = kKnownRed.count(c.id) > 0;
    std::cout << "criterion " << c.id << "\t" << (r.passed ? "PASS" : (known ? "FAIL (known)" : "FAIL")) << "\t"
              << timing << "\t" << c.title << "\t" << r.detail << std::endl;
    if (!r.passed)
      for (const auto& row : r.rows) std::cout << "\t" << row << "\n";
    if (!r.passed) red.insert(c.id);
  }

  std::set<int> expected;
  for (int id : kKnownRed)
    if (only.empty() || std::find(only.begin(), only.end(), id) != only.end()) expected.insert(id);
  std::cout << "summary\t" << ran - red.size() << "/" << ran << " passed";
  if (!red.empty()) {
    std::cout << "\tred:";
    for (int id : red) std::cout << " " << id;
  }
  std::cout << "\n";
  if (strict) return red.empty() ? 0 : 1;
  if (red != expected) {
    std::cout << "red set differs from the documented known-red set\n";
    return 1;
  }
  return 0;
}
