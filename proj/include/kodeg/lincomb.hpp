#pragma once

#include <map>
#include <utility>

#include "kodeg/arith.hpp"

namespace kodeg {

// Finite Z-linear combination over an ordered label set; zero entries are never stored.
template <class Label>
class LinComb {
 public:
  using Map = std::map<Label, Int>;

  LinComb() = default;
  explicit LinComb(const Label& l, Int c = 1) { add_term(l, c); }

  void add_term(const Label& l, Int c) {
    if (c == 0) return;
    auto it = terms_.find(l);
    if (it == terms_.end()) {
      terms_.emplace(l, c);
      return;
    }
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  Int coeff(const Label& l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? 0 : it->second;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [l, c] : o.terms_) add_term(l, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [l, c] : o.terms_) add_term(l, checked_sub(0, c));
    return *this;
  }
  LinComb& operator*=(Int s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [l, c] : terms_) c = checked_mul(c, s);
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= -1; }
  friend LinComb operator*(Int s, LinComb a) { return a *= s; }
  friend LinComb operator*(LinComb a, Int s) { return a *= s; }
  bool operator==(const LinComb& o) const = default;

 private:
  Map terms_;
};

}  // namespace kodeg
