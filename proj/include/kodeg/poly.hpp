#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kodeg/arith.hpp"

namespace kodeg {

// Dense polynomial in one variable.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Int> coeffs);
  static UniPoly x();
  static UniPoly constant(Int c);
  static UniPoly one_minus_x_pow(int e);  // (1 - x)^e

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Int coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  const std::vector<Int>& coeffs() const { return c_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(Int s) const;
  UniPoly derivative() const;
  bool operator==(const UniPoly& o) const = default;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Int> c_;
};

// Sparse polynomial in x_0..x_{nvars-1}; exponents packed 8 bits per variable,
// terms kept sorted by packed key.
class MultiPoly {
 public:
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxExp = 255;
  using Key = std::uint64_t;

  explicit MultiPoly(int nvars = 1);
  static MultiPoly one(int nvars);
  static MultiPoly monomial(int nvars, const std::vector<int>& exps, Int c = 1);

  static Key pack(const std::vector<int>& exps);
  static int exponent(Key k, int var) { return static_cast<int>((k >> (8 * var)) & 0xff); }

  int nvars() const { return nvars_; }
  const std::vector<std::pair<Key, Int>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const std::vector<int>& exps) const;

  // this * (1 - m) for a monomial key m.
  MultiPoly times_one_minus(Key m) const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  // Exact quotient by (1 - x_var); std::logic_error on nonzero remainder.
  MultiPoly divide_one_minus(int var) const;
  // Set x_1..x_{nvars-1} to 1.
  UniPoly specialize_to_x0() const;

  bool operator==(const MultiPoly& o) const = default;
  // Graded order: total degree ascending, then x0-exponent descending.
  std::string str() const;

 private:
  int nvars_;
  std::vector<std::pair<Key, Int>> terms_;
  std::vector<int> max_exp_;
};

MultiPoly mu_poly(int n);   // 1 <= n <= 6
UniPoly nu_poly(int n);     // n >= 1

}  // namespace kodeg
