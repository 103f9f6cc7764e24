#include "kodeg/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kodeg {

// ---- UniPoly -------------------------------------------------------------------

UniPoly::UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::x() { return UniPoly({0, 1}); }
UniPoly UniPoly::constant(Int c) { return UniPoly({c}); }

UniPoly UniPoly::one_minus_x_pow(int e) {
  if (e < 0) throw std::domain_error("negative power of (1 - x)");
  UniPoly r = constant(1), f({1, -1});
  for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = checked_add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return UniPoly(r);
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o * Int{-1}; }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
  return UniPoly(r);
}

UniPoly UniPoly::operator*(Int s) const {
  std::vector<Int> r = c_;
  for (auto& v : r) v = checked_mul(v, s);
  return UniPoly(r);
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = checked_mul(c_[i], static_cast<Int>(i));
  return UniPoly(r);
}

std::string UniPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    Int c = c_[i];
    if (c == 0) continue;
    Int mag = c < 0 ? -c : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

// ---- MultiPoly -------------------------------------------------------------------

MultiPoly::MultiPoly(int nvars) : nvars_(nvars), max_exp_(nvars, 0) {
  if (nvars < 1 || nvars > kMaxVars) throw std::domain_error("MultiPoly supports 1..8 variables");
}

MultiPoly MultiPoly::one(int nvars) {
  MultiPoly p(nvars);
  p.terms_.push_back({0, 1});
  return p;
}

MultiPoly::Key MultiPoly::pack(const std::vector<int>& exps) {
  Key k = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > kMaxExp) throw std::domain_error("exponent out of packed range");
    k |= static_cast<Key>(exps[i]) << (8 * i);
  }
  return k;
}

MultiPoly MultiPoly::monomial(int nvars, const std::vector<int>& exps, Int c) {
  if (static_cast<int>(exps.size()) > nvars) throw std::domain_error("too many exponents");
  MultiPoly p(nvars);
  if (c != 0) p.terms_.push_back({pack(exps), c});
  for (size_t i = 0; i < exps.size(); ++i) p.max_exp_[i] = exps[i];
  return p;
}

Int MultiPoly::coeff(const std::vector<int>& exps) const {
  Key k = pack(exps);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::make_pair(k, Int{0}),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  return it != terms_.end() && it->first == k ? it->second : 0;
}

namespace {

// Merge two sorted term lists, adding coefficients; sb scales the second list.
std::vector<std::pair<MultiPoly::Key, Int>> merge(const std::vector<std::pair<MultiPoly::Key, Int>>& a,
                                                  const std::vector<std::pair<MultiPoly::Key, Int>>& b,
                                                  MultiPoly::Key shift_b, Int sb) {
  std::vector<std::pair<MultiPoly::Key, Int>> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first + shift_b)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first + shift_b < a[i].first) {
      out.push_back({b[j].first + shift_b, checked_mul(sb, b[j].second)});
      ++j;
    } else {
      Int c = checked_add(a[i].second, checked_mul(sb, b[j].second));
      if (c != 0) out.push_back({a[i].first, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly MultiPoly::times_one_minus(Key m) const {
  MultiPoly r(nvars_);
  for (int v = 0; v < nvars_; ++v) {
    r.max_exp_[v] = max_exp_[v] + exponent(m, v);
    if (r.max_exp_[v] > kMaxExp) throw std::overflow_error("MultiPoly exponent overflow");
  }
  // Adding a fixed key without byte carries preserves the sort order.
  r.terms_ = merge(terms_, terms_, m, -1);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::domain_error("variable count mismatch");
  MultiPoly r(nvars_);
  for (int v = 0; v < nvars_; ++v) r.max_exp_[v] = std::max(max_exp_[v], o.max_exp_[v]);
  r.terms_ = merge(terms_, o.terms_, 0, 1);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::domain_error("variable count mismatch");
  MultiPoly r(nvars_);
  for (int v = 0; v < nvars_; ++v) r.max_exp_[v] = std::max(max_exp_[v], o.max_exp_[v]);
  r.terms_ = merge(terms_, o.terms_, 0, -1);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::domain_error("variable count mismatch");
  for (int v = 0; v < nvars_; ++v)
    if (max_exp_[v] + o.max_exp_[v] > kMaxExp) throw std::overflow_error("MultiPoly exponent overflow");
  std::map<Key, Int> acc;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      Int& slot = acc[ka + kb];
      slot = checked_add(slot, checked_mul(ca, cb));
    }
  MultiPoly r(nvars_);
  for (int v = 0; v < nvars_; ++v) r.max_exp_[v] = max_exp_[v] + o.max_exp_[v];
  for (const auto& [k, c] : acc)
    if (c != 0) r.terms_.push_back({k, c});
  return r;
}

namespace {

// LSD radix sort on the low nbytes bytes of the key; passes where every key agrees are skipped.
void radix_sort(std::vector<std::pair<MultiPoly::Key, Int>>& v, int nbytes) {
  std::vector<std::pair<MultiPoly::Key, Int>> buf(v.size());
  for (int b = 0; b < nbytes; ++b) {
    const int shift = 8 * b;
    size_t count[257] = {0};
    for (const auto& t : v) ++count[((t.first >> shift) & 0xff) + 1];
    if (std::any_of(count + 1, count + 257, [&](size_t c) { return c == v.size(); })) continue;
    for (int i = 0; i < 256; ++i) count[i + 1] += count[i];
    for (const auto& t : v) buf[count[(t.first >> shift) & 0xff]++] = t;
    v.swap(buf);
  }
}

}  // namespace

MultiPoly MultiPoly::divide_one_minus(int var) const {
  if (var < 0 || var >= nvars_) throw std::domain_error("variable out of range");
  if (nvars_ == kMaxVars) throw std::domain_error("division needs a spare byte; use at most 7 variables");
  const int shift = 8 * var;
  const Key mask = Key{0xff} << shift;
  // Rotated key (other exponents, exponent of var): each fibre becomes a contiguous sorted run.
  std::vector<std::pair<Key, Int>> t;
  t.reserve(terms_.size());
  for (const auto& [k, c] : terms_) t.push_back({((k & ~mask) << 8) | ((k >> shift) & 0xff), c});
  radix_sort(t, nvars_ + 1);
  // P = Q (1 - x): q_e = sum_{e' <= e} p_{e'}, and the full fibre sum must vanish.
  std::vector<std::pair<Key, Int>> q;
  size_t i = 0;
  while (i < t.size()) {
    const Key f = t[i].first >> 8;  // the original key with var's byte cleared
    Int run = 0;
    int e = static_cast<int>(t[i].first & 0xff);
    while (i < t.size() && (t[i].first >> 8) == f) {
      const int next = static_cast<int>(t[i].first & 0xff);
      for (; e < next; ++e)
        if (run != 0) q.push_back({f | (static_cast<Key>(e) << shift), run});
      run = checked_add(run, t[i].second);
      ++i;
    }
    if (run != 0) throw std::logic_error("division by (1 - x" + std::to_string(var) + ") is not exact");
  }
  radix_sort(q, nvars_);
  MultiPoly r(nvars_);
  r.max_exp_ = max_exp_;
  r.max_exp_[var] = std::max(0, max_exp_[var] - 1);
  r.terms_ = std::move(q);
  return r;
}

UniPoly MultiPoly::specialize_to_x0() const {
  std::vector<Int> c(max_exp_[0] + 1, 0);
  for (const auto& [k, v] : terms_) {
    int e = exponent(k, 0);
    c[e] = checked_add(c[e], v);
  }
  return UniPoly(c);
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  auto total = [&](Key k) {
    int s = 0;
    for (int v = 0; v < nvars_; ++v) s += exponent(k, v);
    return s;
  };
  std::vector<std::pair<Key, Int>> t = terms_;
  std::sort(t.begin(), t.end(), [&](const auto& a, const auto& b) {
    int ta = total(a.first), tb = total(b.first);
    if (ta != tb) return ta < tb;
    for (int v = 0; v < nvars_; ++v) {
      int ea = exponent(a.first, v), eb = exponent(b.first, v);
      if (ea != eb) return ea > eb;
    }
    return false;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t) {
    Int mag = c < 0 ? -c : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    std::string mono;
    for (int v = 0; v < nvars_; ++v) {
      int e = exponent(k, v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) os << mag;
    else if (mag == 1) os << mono;
    else os << mag << "*" << mono;
    first = false;
  }
  return os.str();
}

// ---- mu and nu -------------------------------------------------------------------------

MultiPoly mu_poly(int n) {
  if (n < 1) throw std::domain_error("mu_n requires n >= 1");
  if (n > 6) throw std::domain_error("mu_n is supported for n <= 6");
  const int nv = n + 1;
  MultiPoly even = MultiPoly::one(nv), odd = MultiPoly::one(nv);
  for (unsigned s = 0; s < (1u << n); ++s) {
    std::vector<int> e(nv, 0);
    e[0] = 1;
    for (int i = 0; i < n; ++i)
      if (s & (1u << i)) e[i + 1] = 1;
    MultiPoly::Key m = MultiPoly::pack(e);
    if (__builtin_popcount(s) % 2 == 0) even = even.times_one_minus(m);
    else odd = odd.times_one_minus(m);
  }
  MultiPoly q = even - odd;
  for (int i = 1; i <= n; ++i) q = q.divide_one_minus(i);
  return q;
}

UniPoly nu_poly(int n) {
  if (n < 1) throw std::domain_error("nu_n requires n >= 1");
  if (n > 30) throw std::domain_error("nu_n is supported for n <= 30");
  // s_k = N_k / (1 - x)^(k+1); s_0 = x / (1 - x).
  UniPoly num = UniPoly::x();
  const UniPoly one_minus_x({1, -1});
  for (int k = 1; k <= n - 1; ++k) {
    // k-th step: s_k = x s_{k-1}', with s_{k-1} = N / (1-x)^k.
    num = UniPoly::x() * (num.derivative() * one_minus_x + num * Int{k});
  }
  const int shift = (1 << (n - 1)) - n;
  if (shift < 0) throw std::logic_error("nu_n is not polynomial");
  return (UniPoly::one_minus_x_pow(shift) * num) * Int{-1};
}

}  // namespace kodeg
