#include "kodeg/arith.hpp"

namespace kodeg {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

Dyadic::Dyadic(Int num, int exp) : num_(num), exp_(exp) {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while ((num_ & 1) == 0) {
    num_ /= 2;
    ++exp_;
  }
}

Int Dyadic::to_int() const {
  if (!is_integer()) throw std::domain_error("dyadic value " + str() + " is not an integer");
  return checked_mul(num_, checked_pow2(exp_));
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int e = exp_ < o.exp_ ? exp_ : o.exp_;
  Int a = checked_mul(num_, checked_pow2(exp_ - e));
  Int b = checked_mul(o.num_, checked_pow2(o.exp_ - e));
  return Dyadic(checked_add(a, b), e);
}

Dyadic Dyadic::operator*(const Dyadic& o) const {
  return Dyadic(checked_mul(num_, o.num_), exp_ + o.exp_);
}

std::string Dyadic::str() const {
  if (exp_ >= 0 && exp_ <= 62) return std::to_string(to_int());
  if (exp_ >= 0) return std::to_string(num_) + "*2^" + std::to_string(exp_);
  return std::to_string(num_) + "/2^" + std::to_string(-exp_);
}

}  // namespace kodeg
