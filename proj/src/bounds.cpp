#include "kodeg/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace kodeg {

int epsilon(Int dtilde, Int l) {
  switch (mod_floor(dtilde, 4)) {
    case 0: return l >= 4 ? 3 : 1;
    case 1: return 1;
    case 2: return 2;
    default: return 3;
  }
}

namespace {

Int k_of(Int sign) {
  if (sign % 16 != 0) throw std::domain_error("sign not divisible by 16");
  return -sign / 16;
}

}  // namespace

Int main1_rhs(Int k, Int l, int sizeS, int dS) { return 2 * k + sizeS - 2 * dS + epsilon(k + dS, l); }

Int main2_rhs(Int sign, Int b2plus, int sizeS, int dS) {
  const Int k = k_of(sign);
  return -sign / 8 + sizeS - 2 * dS + epsilon(k + dS, b2plus);
}

Int empty_set_rhs(Int sign, Int b2plus) { return main2_rhs(sign, b2plus, 0, 0); }

Int torus_pattern_rhs(int m, Int sign, Int b2plus) { return -sign / 8 + 2 * m + epsilon(k_of(sign) + m, b2plus); }

Int connected_sum_bound(int m, Int sign, Int b2plus) {
  if (m < 0) throw std::domain_error("m must be >= 0");
  return 5 * Int{m} + epsilon(k_of(sign) + m, b2plus - 3 * Int{m}) - sign / 8;
}

Int main1_min_l(Int k, const ActiveFamily& f, Mask S) {
  if (popcount(S) % 2 != 0) throw std::domain_error("|S| must be even");
  const Int N = expand_family(f).coeff(S);
  if (N == 0) throw std::domain_error("N_S = 0: the inequality does not apply");
  const int d = d_of(N);
  // The threshold differs by at most 2 between l < 4 and l >= 4, so a short scan suffices.
  const Int upper = std::max<Int>(1, 2 * k + popcount(S) - 2 * d + 3);
  for (Int l = 1; l <= upper; ++l)
    if (l >= main1_rhs(k, l, popcount(S), d)) return l;
  return upper;
}

bool BoundReport::all_satisfied() const {
  for (const auto& e : entries)
    if (!e.satisfied) return false;
  return true;
}

BoundReport bound_report(Int sign, Int b2plus, const ActiveFamily& f) {
  BoundReport r;
  r.sign = sign;
  r.b2plus = b2plus;
  if (k_of(sign) < 0) r.warnings.push_back("positive signature (k < 0): the bound is weak");
  LatticePoly p = expand_family(f);
  bool first = true;
  for (Mask S : sorted_support(p)) {
    const int size = popcount(S);
    if (size % 2 != 0) continue;
    BoundEntry e;
    e.S = S;
    e.N = p.coeff(S);
    e.d = d_of(e.N);
    e.rhs = main2_rhs(sign, b2plus, size, e.d);
    e.satisfied = b2plus >= e.rhs;
    if (first || e.rhs > r.best_rhs) {
      r.best_rhs = e.rhs;
      r.best_S = S;
      first = false;
    }
    r.entries.push_back(e);
  }
  return r;
}

BoundReport main2_bound(const ManifoldData& m) {
  validate(m);
  std::vector<std::string> warnings;
  ActiveFamily f = to_family(m, &warnings);
  BoundReport r = bound_report(m.sign, m.b2plus, f);
  r.name = m.name;
  r.warnings.insert(r.warnings.begin(), warnings.begin(), warnings.end());
  return r;
}

namespace {

std::string set_label(Mask S) { return S == 0 ? "∅" : subset_str(S); }

}  // namespace

std::string render_text(const BoundReport& r) {
  std::ostringstream os;
  if (!r.name.empty()) os << r.name << ": ";
  os << "sign = " << r.sign << ", b2plus = " << r.b2plus << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  os << "  S                     N_S      d_S   rhs  ok\n";
  for (const auto& e : r.entries) {
    std::string s = set_label(e.S);
    os << "  " << s;
    for (size_t pad = s == "∅" ? 1 : s.size(); pad < 20; ++pad) os << ' ';
    os << "  " << e.N;
    for (size_t pad = std::to_string(e.N).size(); pad < 8; ++pad) os << ' ';
    os << " " << e.d << "     " << e.rhs << "    " << (e.satisfied ? "yes" : "NO") << "\n";
  }
  os << "best rhs = " << r.best_rhs << " at S=" << set_label(r.best_S) << "; "
     << (r.all_satisfied() ? "satisfied" : "violated (" + std::to_string(r.best_rhs) + " > " +
                                               std::to_string(r.b2plus) + ")")
     << "\n";
  return os.str();
}

std::string render_json(const BoundReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["sign"] = r.sign;
  j["b2plus"] = r.b2plus;
  j["best_rhs"] = r.best_rhs;
  j["best_S"] = nlohmann::json::array();
  for (int i = 0; i < 64; ++i)
    if (r.best_S & (Mask{1} << i)) j["best_S"].push_back(i + 1);
  j["satisfied"] = r.all_satisfied();
  j["warnings"] = r.warnings;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json s = nlohmann::json::array();
    for (int i = 0; i < 64; ++i)
      if (e.S & (Mask{1} << i)) s.push_back(i + 1);
    j["entries"].push_back({{"S", s}, {"N", e.N}, {"d", e.d}, {"rhs", e.rhs}, {"satisfied", e.satisfied}});
  }
  return j.dump(2) + "\n";
}

}  // namespace kodeg
