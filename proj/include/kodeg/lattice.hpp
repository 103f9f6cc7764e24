#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kodeg/arith.hpp"

namespace kodeg {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
// "{1,2,4}" with 1-based indices; "{}" for the empty set.
std::string subset_str(Mask m);

// Active subsets T (2 <= |T| <= 4) of {1..n}.
struct ActiveFamily {
  int n = 0;
  std::vector<Mask> sets;

  // Throws std::domain_error describing the first violated invariant.
  void validate() const;
  // "1,2;2,3" -> {{1,2},{2,3}}; n defaults to the largest index used.
  static ActiveFamily parse(const std::string& text, int n = -1);
};

// Element of Z[X_1..X_n]/(X_i^2 - X_i), keyed by subset.
class LatticePoly {
 public:
  LatticePoly() { terms_[0] = 1; }
  static LatticePoly zero() {
    LatticePoly p;
    p.terms_.clear();
    return p;
  }

  // this * (1 - 2 X_T)
  void mul_one_minus_2X(Mask T);
  Int coeff(Mask S) const;
  const std::map<Mask, Int>& terms() const { return terms_; }
  bool operator==(const LatticePoly&) const = default;

 private:
  std::map<Mask, Int> terms_;
};

LatticePoly expand_family(const ActiveFamily& f);
Int cover_count(Mask S, int m, const ActiveFamily& f);
// S -> (m -> number of m-element subfamilies with union S), over the whole support.
std::map<Mask, std::map<int, Int>> cover_table(const ActiveFamily& f);
int d_of(Int N);

// Union-closure of the family, plus the empty set.
std::vector<Mask> union_closure(const ActiveFamily& f);

// Subsets sorted by size, then mask.
std::vector<Mask> sorted_support(const LatticePoly& p);

// m disjoint blocks {4b+1..4b+4}.
ActiveFamily mtorus_family(int m);

}  // namespace kodeg
