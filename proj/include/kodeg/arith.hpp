#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kodeg {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline Int checked_pow2(int e) {
  if (e < 0 || e > 62) throw std::overflow_error("2^" + std::to_string(e) + " out of range");
  return Int{1} << e;
}

// Residue in [0, m) for any sign of a.
inline Int mod_floor(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

// 2-adic valuation; a must be nonzero.
inline int v2(Int a) {
  if (a == 0) throw std::domain_error("2-adic valuation of 0");
  return __builtin_ctzll(static_cast<unsigned long long>(a));
}

Int binomial(int n, int k);

// num * 2^exp, kept normalized (num odd, or num == 0 with exp == 0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(Int num, int exp = 0);

  Int num() const { return num_; }
  int exp() const { return exp_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ >= 0; }
  // Throws std::domain_error when not an integer.
  Int to_int() const;

  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-() const { return Dyadic(-num_, exp_); }
  Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
  Dyadic operator*(const Dyadic& o) const;
  bool operator==(const Dyadic& o) const = default;

  std::string str() const;

 private:
  Int num_ = 0;
  int exp_ = 0;
};

}  // namespace kodeg
