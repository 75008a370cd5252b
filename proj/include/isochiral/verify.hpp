#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace isochiral::verify {

struct PropertyResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct Options {
  unsigned seed = 20250811;
  int j_max_twice = 7;
  std::string inject_fault;  // e.g. "recursion_sign"; test harness use only
  int threads = 1;           // capped by ISOCHIRAL_THREADS in the CLI
  std::map<std::string, double> tolerance_overrides;
};

// the registered property-group names, in run order
std::vector<std::string> property_names();

// run every group (or the named subset) and return one result per group
std::vector<PropertyResult> run_all(const Options& opt,
                                    const std::vector<std::string>& only = {});

}  // namespace isochiral::verify
