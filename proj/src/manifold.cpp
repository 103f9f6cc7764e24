#include "kodeg/manifold.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace kodeg {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& p : v) s += (s.empty() ? "" : "; ") + p;
  return s;
}

Mask mask_of(const std::vector<int>& subset) {
  Mask m = 0;
  for (int i : subset)
    if (i >= 1 && i <= 64) m |= Mask{1} << (i - 1);
  return m;
}

void check_list(const std::vector<SubsetValue>& list, const std::string& field, size_t size, int b1, bool bits,
                std::vector<std::string>& out) {
  std::set<Mask> seen;
  for (size_t i = 0; i < list.size(); ++i) {
    const std::string path = field + "[" + std::to_string(i) + "]";
    const auto& e = list[i];
    if (e.subset.size() != size)
      out.push_back(path + ".subset: expected " + std::to_string(size) + " indices, got " +
                    std::to_string(e.subset.size()));
    std::set<int> distinct(e.subset.begin(), e.subset.end());
    if (distinct.size() != e.subset.size()) out.push_back(path + ".subset: indices must be distinct");
    for (int idx : e.subset)
      if (idx < 1 || idx > b1)
        out.push_back(path + ".subset: index " + std::to_string(idx) + " outside 1.." + std::to_string(b1));
    if (!seen.insert(mask_of(e.subset)).second) out.push_back(path + ".subset: duplicate subset");
    if (bits && e.value != 0 && e.value != 1) out.push_back(path + ".bit: must be 0 or 1");
  }
}

std::vector<SubsetValue> read_list(const json& arr, const std::string& field, const char* value_key,
                                   std::vector<std::string>& problems) {
  std::vector<SubsetValue> out;
  if (!arr.is_array()) {
    problems.push_back(field + ": expected an array");
    return out;
  }
  for (size_t i = 0; i < arr.size(); ++i) {
    const std::string path = field + "[" + std::to_string(i) + "]";
    const json& e = arr[i];
    if (!e.is_object()) {
      problems.push_back(path + ": expected an object");
      continue;
    }
    SubsetValue sv;
    bool good = true;
    for (const auto& [key, val] : e.items())
      if (key != "subset" && key != value_key) {
        problems.push_back(path + "." + key + ": unknown field");
        good = false;
      }
    if (!e.contains("subset") || !e["subset"].is_array()) {
      problems.push_back(path + ".subset: required array of indices");
      good = false;
    } else {
      for (const auto& x : e["subset"]) {
        if (!x.is_number_integer()) {
          problems.push_back(path + ".subset: indices must be integers");
          good = false;
          break;
        }
        sv.subset.push_back(x.get<int>());
      }
    }
    if (!e.contains(value_key) || !e[value_key].is_number_integer()) {
      problems.push_back(path + "." + value_key + ": required integer");
      good = false;
    } else {
      sv.value = e[value_key].get<Int>();
    }
    if (good) out.push_back(std::move(sv));
  }
  return out;
}

json list_json(const std::vector<SubsetValue>& list, const char* value_key) {
  json arr = json::array();
  for (const auto& e : list) arr.push_back({{"subset", e.subset}, {value_key, e.value}});
  return arr;
}

std::vector<SubsetValue> shifted(const std::vector<SubsetValue>& list, int by) {
  std::vector<SubsetValue> out = list;
  for (auto& e : out)
    for (int& i : e.subset) i += by;
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> problems)
    : std::runtime_error("invalid manifold data: " + join(problems)), problems_(std::move(problems)) {}

std::vector<std::string> validation_problems(const ManifoldData& m, ValidationMode mode) {
  std::vector<std::string> out;
  if (m.b1 < 0 || m.b1 > 64) out.push_back("b1: must be in 0..64");
  if (m.sign % 16 != 0) out.push_back("sign: not divisible by 16");
  if (mode == ValidationMode::Manifold) {
    if (m.b2plus <= 0) out.push_back("b2plus: l > 0 required");
    if (m.b2minus() <= 0) out.push_back("sign: b2minus = b2plus - sign must be positive (indefinite form)");
  } else {
    if (m.b2plus < 0) out.push_back("b2plus: must be >= 0");
    if (m.b2minus() < 0) out.push_back("sign: b2minus = b2plus - sign must be >= 0");
  }
  check_list(m.quad, "quad", 4, m.b1, false, out);
  if (m.pair_parity) check_list(*m.pair_parity, "pair_parity", 2, m.b1, true, out);
  if (m.triple_parity) check_list(*m.triple_parity, "triple_parity", 3, m.b1, true, out);
  return out;
}

void validate(const ManifoldData& m, ValidationMode mode) {
  auto p = validation_problems(m, mode);
  if (!p.empty()) throw ValidationError(std::move(p));
}

ManifoldData parse_manifold(const std::string& text, ValidationMode mode) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("manifold description must be a JSON object");
  std::vector<std::string> problems;
  static const std::set<std::string> known = {"name", "b1", "sign", "b2plus", "quad", "pair_parity", "triple_parity"};
  for (const auto& [key, val] : j.items())
    if (!known.count(key)) problems.push_back(key + ": unknown field");
  ManifoldData m;
  auto integer = [&](const char* key, bool required, Int fallback) -> Int {
    if (!j.contains(key)) {
      if (required) problems.push_back(std::string(key) + ": required integer");
      return fallback;
    }
    if (!j[key].is_number_integer()) {
      problems.push_back(std::string(key) + ": must be an integer");
      return fallback;
    }
    return j[key].get<Int>();
  };
  if (j.contains("name")) {
    if (j["name"].is_string()) m.name = j["name"].get<std::string>();
    else problems.push_back("name: must be a string");
  }
  m.b1 = static_cast<int>(integer("b1", true, 0));
  m.sign = integer("sign", true, 0);
  m.b2plus = integer("b2plus", true, 0);
  if (j.contains("quad")) m.quad = read_list(j["quad"], "quad", "value", problems);
  if (j.contains("pair_parity")) m.pair_parity = read_list(j["pair_parity"], "pair_parity", "bit", problems);
  if (j.contains("triple_parity")) m.triple_parity = read_list(j["triple_parity"], "triple_parity", "bit", problems);
  for (auto& p : validation_problems(m, mode)) problems.push_back(std::move(p));
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return m;
}

ManifoldData load(const std::string& path, ValidationMode mode) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_manifold(ss.str(), mode);
}

std::string to_json(const ManifoldData& m) {
  json j;
  j["name"] = m.name;
  j["b1"] = m.b1;
  j["sign"] = m.sign;
  j["b2plus"] = m.b2plus;
  j["quad"] = list_json(m.quad, "value");
  if (m.pair_parity) j["pair_parity"] = list_json(*m.pair_parity, "bit");
  if (m.triple_parity) j["triple_parity"] = list_json(*m.triple_parity, "bit");
  return j.dump(2) + "\n";
}

void save(const ManifoldData& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << to_json(m);
}

ActiveFamily to_family(const ManifoldData& m, std::vector<std::string>* warnings) {
  validate(m, ValidationMode::Summand);
  ActiveFamily f;
  f.n = m.b1;
  for (const auto& q : m.quad)
    if (q.value % 2 != 0) f.sets.push_back(mask_of(q.subset));
  auto parity = [&](const std::optional<std::vector<SubsetValue>>& list, const char* what) {
    if (!list) {
      if (warnings && m.b1 >= (what[0] == 'p' ? 2 : 3))
        warnings->push_back(std::string(what) + " bits not given; treated as 0");
      return;
    }
    for (const auto& e : *list)
      if (e.value == 1) f.sets.push_back(mask_of(e.subset));
  };
  parity(m.pair_parity, "pair_parity");
  parity(m.triple_parity, "triple_parity");
  f.validate();
  return f;
}

ManifoldData connected_sum(const ManifoldData& a, const ManifoldData& b) {
  validate(a, ValidationMode::Summand);
  validate(b, ValidationMode::Summand);
  ManifoldData r;
  r.name = a.name.empty() || b.name.empty() ? a.name + b.name : a.name + " # " + b.name;
  r.b1 = a.b1 + b.b1;
  r.sign = checked_add(a.sign, b.sign);
  r.b2plus = checked_add(a.b2plus, b.b2plus);
  r.quad = a.quad;
  for (auto& e : shifted(b.quad, a.b1)) r.quad.push_back(e);
  auto merge_parity = [&](const auto& pa, const auto& pb) -> std::optional<std::vector<SubsetValue>> {
    if (!pa && !pb) return std::nullopt;
    std::vector<SubsetValue> out = pa ? *pa : std::vector<SubsetValue>{};
    if (pb)
      for (auto& e : shifted(*pb, a.b1)) out.push_back(e);
    return out;
  };
  r.pair_parity = merge_parity(a.pair_parity, b.pair_parity);
  r.triple_parity = merge_parity(a.triple_parity, b.triple_parity);
  validate(r, ValidationMode::Summand);
  return r;
}

ManifoldData mtorus(int m) {
  if (m < 0 || m > 16) throw std::domain_error("mtorus: m must be in 0..16");
  ManifoldData r;
  r.name = m == 1 ? "T4" : std::to_string(m) + "T4";
  r.b1 = 4 * m;
  r.sign = 0;
  r.b2plus = 3 * m;
  for (int b = 0; b < m; ++b) r.quad.push_back({{4 * b + 1, 4 * b + 2, 4 * b + 3, 4 * b + 4}, 1});
  return r;
}

std::string ChernSummary::str() const {
  std::ostringstream os;
  os << constant;
  for (const auto& [S, v] : quartic) {
    os << (v < 0 ? " - " : " + ") << (v < 0 ? -v : v) << "*dxi" << subset_str(S);
  }
  return os.str();
}

ChernSummary chern_summary(Int k, const std::vector<SubsetValue>& values) {
  ChernSummary out;
  out.constant = checked_mul(2, k);
  std::vector<std::string> problems;
  std::map<Mask, Int> quartic;
  for (size_t i = 0; i < values.size(); ++i) {
    const auto& e = values[i];
    const std::string path = "values[" + std::to_string(i) + "]";
    Mask S = mask_of(e.subset);
    if (popcount(S) != static_cast<int>(e.subset.size())) {
      problems.push_back(path + ": indices must be distinct and within 1..64");
      continue;
    }
    if (e.subset.size() == 8) {
      if (e.value != 0) problems.push_back(path + ": a_S must vanish for |S| = 8");
    } else if (e.subset.size() == 4) {
      Int& slot = quartic[S];
      slot = checked_add(slot, e.value);
    } else {
      problems.push_back(path + ": only |S| = 4 and |S| = 8 entries are allowed");
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  for (const auto& [S, v] : quartic)
    if (v != 0) out.quartic.push_back({S, v});
  return out;
}

}  // namespace kodeg
