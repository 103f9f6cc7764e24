#pragma once

#include <string>
#include <vector>

#include "kodeg/lattice.hpp"
#include "kodeg/manifold.hpp"

namespace kodeg {

int epsilon(Int dtilde, Int l);

// 2k + |S| - 2 d_S + eps(k + d_S, l)
Int main1_rhs(Int k, Int l, int sizeS, int dS);
// -sign/8 + |S| - 2 d_S + eps(-sign/16 + d_S, b2plus)
Int main2_rhs(Int sign, Int b2plus, int sizeS, int dS);
Int empty_set_rhs(Int sign, Int b2plus);
Int torus_pattern_rhs(int m, Int sign, Int b2plus);
// 5m + eps(-sign/16 + m, b2plus - 3m) - sign/8
Int connected_sum_bound(int m, Int sign, Int b2plus);

// Smallest l >= 1 with l >= 2k + |S| - 2 d_S + eps(k + d_S, l).
Int main1_min_l(Int k, const ActiveFamily& f, Mask S);

struct BoundEntry {
  Mask S = 0;
  Int N = 0;
  int d = 0;
  Int rhs = 0;
  bool satisfied = false;
};

struct BoundReport {
  std::string name;
  Int sign = 0;
  Int b2plus = 0;
  std::vector<BoundEntry> entries;  // |S| even, N_S != 0, sorted by |S| then mask
  Int best_rhs = 0;
  Mask best_S = 0;
  std::vector<std::string> warnings;
  bool all_satisfied() const;
};

BoundReport bound_report(Int sign, Int b2plus, const ActiveFamily& f);
BoundReport main2_bound(const ManifoldData& m);

std::string render_text(const BoundReport& r);
std::string render_json(const BoundReport& r);

}  // namespace kodeg
