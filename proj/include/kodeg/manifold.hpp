#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kodeg/lattice.hpp"

namespace kodeg {

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SubsetValue {
  std::vector<int> subset;  // 1-based indices
  Int value = 0;
  bool operator==(const SubsetValue&) const = default;
};

struct ManifoldData {
  std::string name;
  int b1 = 0;
  Int sign = 0;
  Int b2plus = 0;
  std::vector<SubsetValue> quad;
  std::optional<std::vector<SubsetValue>> pair_parity;    // values are bits
  std::optional<std::vector<SubsetValue>> triple_parity;

  Int b2minus() const { return b2plus - sign; }
  Int k() const { return -sign / 16; }
  bool operator==(const ManifoldData&) const = default;
};

// Summand mode admits the trivial pieces of a connected sum (b2plus = 0, definite forms).
enum class ValidationMode { Manifold, Summand };

// Problems as "field.path: message"; empty when valid.
std::vector<std::string> validation_problems(const ManifoldData& m, ValidationMode mode = ValidationMode::Manifold);
void validate(const ManifoldData& m, ValidationMode mode = ValidationMode::Manifold);

ManifoldData parse_manifold(const std::string& json_text, ValidationMode mode = ValidationMode::Manifold);
ManifoldData load(const std::string& path, ValidationMode mode = ValidationMode::Manifold);
std::string to_json(const ManifoldData& m);
void save(const ManifoldData& m, const std::string& path);

ActiveFamily to_family(const ManifoldData& m, std::vector<std::string>* warnings = nullptr);
ManifoldData connected_sum(const ManifoldData& a, const ManifoldData& b);
ManifoldData mtorus(int m);

struct ChernSummary {
  Int constant = 0;                       // 2k
  std::vector<std::pair<Mask, Int>> quartic;  // 4-subset -> a_S
  std::string str() const;
};

// Entries of size 8 must vanish; other sizes than 4 and 8 are rejected.
ChernSummary chern_summary(Int k, const std::vector<SubsetValue>& values);

}  // namespace kodeg
