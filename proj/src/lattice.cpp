#include "kodeg/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kodeg {

std::string subset_str(Mask m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i = 0; i < 64; ++i)
    if (m & (Mask{1} << i)) {
      if (!first) os << ",";
      os << i + 1;
      first = false;
    }
  os << "}";
  return os.str();
}

void ActiveFamily::validate() const {
  if (n < 0 || n > 64) throw std::domain_error("ground set size must be in 0..64, got " + std::to_string(n));
  std::set<Mask> seen;
  for (Mask T : sets) {
    int k = popcount(T);
    if (k < 2 || k > 4) throw std::domain_error("active set " + subset_str(T) + " must have 2 to 4 elements");
    if (n < 64 && (T >> n) != 0) throw std::domain_error("active set " + subset_str(T) + " exceeds 1.." + std::to_string(n));
    if (!seen.insert(T).second) throw std::domain_error("duplicate active set " + subset_str(T));
  }
}

ActiveFamily ActiveFamily::parse(const std::string& text, int n) {
  ActiveFamily f;
  int max_index = 0;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    if (group.find_first_not_of(" \t") == std::string::npos) continue;
    Mask T = 0;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      size_t pos = 0;
      int idx = 0;
      try {
        idx = std::stoi(item, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad index '" + item + "' in family '" + text + "'");
      }
      if (item.find_first_not_of(" \t", pos) != std::string::npos)
        throw std::invalid_argument("bad index '" + item + "' in family '" + text + "'");
      if (idx < 1 || idx > 64) throw std::invalid_argument("index " + std::to_string(idx) + " outside 1..64");
      if (T & (Mask{1} << (idx - 1))) throw std::invalid_argument("repeated index in '" + group + "'");
      T |= Mask{1} << (idx - 1);
      max_index = std::max(max_index, idx);
    }
    f.sets.push_back(T);
  }
  f.n = n < 0 ? max_index : n;
  f.validate();
  return f;
}

void LatticePoly::mul_one_minus_2X(Mask T) {
  std::map<Mask, Int> out = terms_;
  for (const auto& [S, c] : terms_) {
    Int& slot = out[S | T];
    slot = checked_sub(slot, checked_mul(2, c));
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  terms_ = std::move(out);
}

Int LatticePoly::coeff(Mask S) const {
  auto it = terms_.find(S);
  return it == terms_.end() ? 0 : it->second;
}

LatticePoly expand_family(const ActiveFamily& f) {
  f.validate();
  LatticePoly p;
  for (Mask T : f.sets) p.mul_one_minus_2X(T);
  return p;
}

namespace {

constexpr size_t kMaxEnumerated = 24;

void require_enumerable(const ActiveFamily& f) {
  if (f.sets.size() > kMaxEnumerated)
    throw std::domain_error("cover enumeration supports at most 24 active sets");
}

}  // namespace

Int cover_count(Mask S, int m, const ActiveFamily& f) {
  if (m < 0) throw std::domain_error("cover size must be >= 0");
  require_enumerable(f);
  const size_t k = f.sets.size();
  Int count = 0;
  for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << k); ++sub) {
    if (__builtin_popcount(sub) != m) continue;
    Mask u = 0;
    for (size_t i = 0; i < k; ++i)
      if (sub & (1u << i)) u |= f.sets[i];
    if (u == S) ++count;
  }
  return count;
}

std::map<Mask, std::map<int, Int>> cover_table(const ActiveFamily& f) {
  require_enumerable(f);
  const size_t k = f.sets.size();
  std::map<Mask, std::map<int, Int>> out;
  for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << k); ++sub) {
    Mask u = 0;
    for (size_t i = 0; i < k; ++i)
      if (sub & (1u << i)) u |= f.sets[i];
    ++out[u][__builtin_popcount(sub)];
  }
  return out;
}

int d_of(Int N) {
  if (N == 0) throw std::domain_error("d_S defined only for N_S != 0");
  return v2(N);
}

std::vector<Mask> union_closure(const ActiveFamily& f) {
  std::set<Mask> acc = {0};
  for (Mask T : f.sets) {
    std::set<Mask> next = acc;
    for (Mask S : acc) next.insert(S | T);
    acc.swap(next);
  }
  return {acc.begin(), acc.end()};
}

std::vector<Mask> sorted_support(const LatticePoly& p) {
  std::vector<Mask> v;
  for (const auto& [S, c] : p.terms()) v.push_back(S);
  std::sort(v.begin(), v.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return v;
}

ActiveFamily mtorus_family(int m) {
  if (m < 0 || m > 16) throw std::domain_error("m must be in 0..16");
  ActiveFamily f;
  f.n = 4 * m;
  for (int b = 0; b < m; ++b) f.sets.push_back(Mask{0xf} << (4 * b));
  return f;
}

}  // namespace kodeg
