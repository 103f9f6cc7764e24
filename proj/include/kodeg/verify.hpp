#pragma once

#include <string>
#include <vector>

namespace kodeg {

struct VerifyOptions {
  int max_n = 6;        // mu/nu identity up to n (at most 6)
  int max_m = 6;        // mT4 pattern checks up to m
  int trials = 200;     // randomized character and lattice trials
  unsigned long long seed = 7;
};

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_passed() const;
  const VerifyCheck* find(const std::string& name) const;
};

// Check names, in run order.
const std::vector<std::string>& verify_check_names();

VerifyCheck run_check(const std::string& name, const VerifyOptions& opts = {});
VerifyReport run_verify(const VerifyOptions& opts = {});
std::string render(const VerifyReport& r);

}  // namespace kodeg
