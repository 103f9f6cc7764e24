#include "kodeg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>

#include "kodeg/bounds.hpp"
#include "kodeg/euler.hpp"
#include "kodeg/gen.hpp"
#include "kodeg/kograded.hpp"
#include "kodeg/lattice.hpp"
#include "kodeg/manifold.hpp"
#include "kodeg/poly.hpp"

namespace kodeg {

namespace {

// Collects the first few failures of a check.
class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 5) msgs_.push_back(what);
  }
  bool empty() const { return count_ == 0; }
  std::string str(const std::string& ok_detail) const {
    if (count_ == 0) return ok_detail;
    std::ostringstream os;
    os << count_ << " failure(s)";
    for (const auto& m : msgs_) os << "; " << m;
    return os.str();
  }

 private:
  int count_ = 0;
  std::vector<std::string> msgs_;
};

Gauss eval_at_one(const Laurent& p) {
  Gauss s;
  for (const auto& [e, g] : p.terms()) {
    s.re = checked_add(s.re, g.re);
    s.im = checked_add(s.im, g.im);
  }
  return s;
}

VerifyCheck check_mu_nu(const VerifyOptions& o) {
  Failures f;
  const int top = std::min(o.max_n, 6);
  for (int n = 1; n <= top; ++n) {
    UniPoly specialized = mu_poly(n).specialize_to_x0();
    UniPoly nu = nu_poly(n);
    if (!(specialized == nu)) f.add("n=" + std::to_string(n) + ": " + specialized.str() + " != " + nu.str());
  }
  if (top >= 1 && mu_poly(1).str() != "-x0") f.add("mu1 = " + mu_poly(1).str());
  if (top >= 2 && mu_poly(2).str() != "-x0") f.add("mu2 = " + mu_poly(2).str());
  if (top >= 3 && mu_poly(3).str() != "-x0 + x0^3*x1*x2*x3") f.add("mu3 = " + mu_poly(3).str());
  return {"mu-nu", f.empty(), f.str("n = 1.." + std::to_string(top))};
}

VerifyCheck check_characters(const VerifyOptions& o) {
  Failures f;
  std::mt19937_64 rng(o.seed);
  for (int t = 0; t < o.trials; ++t) {
    CplxRepElem a = random_cplx(rng), b = random_cplx(rng), c = random_cplx(rng);
    CplxRepElem ab = tensor_complex(a, b);
    if (!(character(ab) == character(a) * character(b))) f.add("complex pair " + to_string(a) + " * " + to_string(b));
    if (!(character(tensor_complex(ab, c)) == character(a) * character(b) * character(c)))
      f.add("complex triple " + to_string(a) + " * " + to_string(b) + " * " + to_string(c));
    if (!(decompose_character(character(ab)) == ab)) f.add("complex decomposition of " + to_string(ab));

    RepElem x = random_rep(rng), y = random_rep(rng), z = random_rep(rng);
    RepElem xy = tensor_real(x, y);
    if (!(character(xy) == character(x) * character(y))) f.add("real pair " + to_string(x) + " * " + to_string(y));
    if (!(character(tensor_real(xy, z)) == character(x) * character(y) * character(z)))
      f.add("real triple " + to_string(x) + " * " + to_string(y) + " * " + to_string(z));
    if (!(decompose_real_character(character(xy)) == xy)) f.add("real decomposition of " + to_string(xy));
    if (!(character(cmap(xy)) == character(xy))) f.add("complexification changes the character of " + to_string(xy));
  }
  return {"characters", f.empty(), f.str(std::to_string(o.trials) + " pairs and triples in both rings")};
}

VerifyCheck check_euler_h1(const VerifyOptions&) {
  Failures f;
  for (int m = 1; m <= 4; ++m) {
    KOElem closed = euler_h1_power(2 * m), ring = euler_h1_power_ring(2 * m);
    std::string tag = "e(H1)^" + std::to_string(2 * m);
    if (!(closed == ring)) f.add(tag + ": closed " + to_string(closed) + " != ring " + to_string(ring));
    Int a = closed.coeff(IrrLabel::R()), b = closed.coeff(IrrLabel::Rt());
    if (a - b != checked_pow2(2 * m)) f.add(tag + ": a - b = " + std::to_string(a - b));
    if (a + b != binomial(4 * m, 2 * m)) f.add(tag + ": a + b = " + std::to_string(a + b));
    CharTable ch = character(ko_complexify(closed).value);
    Gauss trj = eval_at_one(ch.coset[1]), dim = eval_at_one(ch.coset[0]);
    if (!(trj == Gauss{checked_pow2(2 * m), 0})) f.add(tag + ": tr(j) = " + std::to_string(trj.re));
    if (!(dim == Gauss{0, 0})) f.add(tag + ": virtual dimension " + std::to_string(dim.re));
  }
  return {"euler-h1", f.empty(), f.str("m = 1..4")};
}

VerifyCheck check_euler_rtilde(const VerifyOptions&) {
  Failures f;
  for (int m = 1; m <= 8; ++m) {
    GradedCplx c = ko_complexify(euler_rtilde(m));
    CplxRepElem want = rtilde_complex_expansion(m);
    CplxRepElem direct = cplx_C(0);
    for (int k = 0; k < m; ++k) direct = tensor_complex(direct, cplx_C(3) - cplx_C(1));
    if (!(want == direct)) f.add("expansion m=" + std::to_string(m));
    if (!(c.value == direct))
      f.add("m=" + std::to_string(m) + ": " + to_string(c.value) + " != " + to_string(direct));
  }
  return {"euler-rtilde", f.empty(), f.str("m = 1..8")};
}

VerifyCheck check_divis(const VerifyOptions&) {
  Failures f;
  long instances = 0, solvable = 0;
  for (int c : {0, 2, 4}) {
    for (int d = -4; d <= 6; d += 2) {
      const int n = divis_num_coeffs(c, d);
      if (n == 0) continue;
      DivisVerifier v(c, d);
      std::vector<Int> a(n, -2);
      for (;;) {
        for (int i : {0, 1}) {
          DivisCheck r = v.check(i, a);
          ++instances;
          if (r.solvable) ++solvable;
          if (!r.ok) {
            std::ostringstream os;
            os << "c=" << c << " d=" << d << " i=" << i << " a=(";
            for (size_t j = 0; j < a.size(); ++j) os << (j ? "," : "") << a[j];
            os << "): " << r.detail;
            f.add(os.str());
          }
        }
        size_t j = 0;
        while (j < a.size() && a[j] == 2) a[j++] = -2;
        if (j == a.size()) break;
        ++a[j];
      }
    }
  }
  if (instances < 500) f.add("only " + std::to_string(instances) + " instances");
  return {"divis", f.empty(),
          f.str(std::to_string(instances) + " instances, " + std::to_string(solvable) + " solvable")};
}

VerifyCheck check_keyrelation(const VerifyOptions&) {
  Failures f;
  for (int s : {1, -1}) {
    KeyRelationResult r = keyrelation_check(s);
    if (!r.holds) f.add("sign " + std::to_string(s) + ": " + r.lhs + " != " + r.rhs);
    KeyRelationResult bad = keyrelation_check(s, KOElem::basis(RealKind::Rt, 0, 0));
    if (bad.holds) f.add("sign " + std::to_string(s) + ": perturbed gamma0 = [Rt] still holds");
  }
  return {"keyrelation", f.empty(), f.str("both signs; perturbed gamma0 rejected")};
}

VerifyCheck check_lattice(const VerifyOptions& o) {
  Failures f;
  std::mt19937_64 rng(o.seed + 1);
  for (int t = 0; t < o.trials; ++t) {
    ActiveFamily fam = random_family(rng, 10, 6);
    LatticePoly p = expand_family(fam);
    std::vector<Mask> closure = union_closure(fam);
    std::string tag = "n=" + std::to_string(fam.n) + " sets=" + std::to_string(fam.sets.size());
    for (const auto& [S, c] : p.terms())
      if (std::find(closure.begin(), closure.end(), S) == closure.end())
        f.add(tag + ": support " + subset_str(S) + " outside the union-closure");
    for (Mask S : closure) {
      Int oracle = 0, w = 1;
      for (int m = 0; m <= static_cast<int>(fam.sets.size()); ++m, w *= -2) oracle += w * cover_count(S, m, fam);
      if (oracle != p.coeff(S))
        f.add(tag + ": N" + subset_str(S) + " = " + std::to_string(p.coeff(S)) + ", oracle " + std::to_string(oracle));
    }
    ActiveFamily shuffled = fam;
    std::shuffle(shuffled.sets.begin(), shuffled.sets.end(), rng);
    if (!(expand_family(shuffled) == p)) f.add(tag + ": order dependence");
  }
  for (int m = 1; m <= o.max_m; ++m) {
    ActiveFamily fam = to_family(mtorus(m));
    Mask top = (Mask{1} << (4 * m)) - 1;
    Int N = expand_family(fam).coeff(top), want = 1;
    for (int j = 0; j < m; ++j) want *= -2;
    if (N != want) f.add("mT4 m=" + std::to_string(m) + ": N = " + std::to_string(N));
    else if (d_of(N) != m) f.add("mT4 m=" + std::to_string(m) + ": d = " + std::to_string(d_of(N)));
  }
  return {"lattice", f.empty(),
          f.str(std::to_string(o.trials) + " random families; mT4 m = 1.." + std::to_string(o.max_m))};
}

VerifyCheck check_bounds(const VerifyOptions& o) {
  Failures f;
  // epsilon, case by case
  const std::vector<std::tuple<Int, Int, int>> eps_cases = {
      {0, 4, 3}, {0, 3, 1}, {1, 7, 1}, {2, 1, 2}, {3, 2, 3}, {-2, 5, 2}, {-4, 9, 3}, {-1, 1, 3}};
  for (auto [d, l, want] : eps_cases)
    if (epsilon(d, l) != want)
      f.add("epsilon(" + std::to_string(d) + "," + std::to_string(l) + ") = " + std::to_string(epsilon(d, l)));

  // S = {} against k -> 2k + eps(k, l), l >= 4
  const Int cor_table[9] = {3, 3, 6, 9, 11, 11, 14, 17, 19};
  for (int k = 0; k <= 8; ++k) {
    ManifoldData m;
    m.name = "k=" + std::to_string(k);
    m.sign = -16 * k;
    m.b2plus = 20;
    BoundReport r = main2_bound(m);
    if (r.entries.empty() || r.entries.front().S != 0 || r.entries.front().rhs != cor_table[k])
      f.add("k=" + std::to_string(k) + ": S={} rhs " +
            (r.entries.empty() ? std::string("missing") : std::to_string(r.entries.front().rhs)));
  }

  // mT4 pattern: S_max entry is -sign/8 + 2m + eps(k + m, b2plus)
  for (int m = 1; m <= o.max_m; ++m) {
    for (Int sign : {Int{0}, Int{-16}, Int{-32}, Int{16}}) {
      for (Int b2plus : {Int{1}, Int{3 * m}, Int{3 * m + 5}}) {
        ManifoldData x = mtorus(m);
        x.sign = sign;
        x.b2plus = b2plus;
        if (!validation_problems(x).empty()) continue;
        BoundReport r = main2_bound(x);
        Mask top = (Mask{1} << (4 * m)) - 1;
        Int want = -sign / 8 + 2 * m + epsilon(-sign / 16 + m, b2plus);
        auto it = std::find_if(r.entries.begin(), r.entries.end(), [&](const BoundEntry& e) { return e.S == top; });
        if (it == r.entries.end() || it->rhs != want || torus_pattern_rhs(m, sign, b2plus) != want)
          f.add("mT4 m=" + std::to_string(m) + " sign=" + std::to_string(sign) + " b2plus=" + std::to_string(b2plus));
      }
    }
  }

  // 5m + eps(k + m, b2plus - 3m) - sign/8, and m = 0 gives the S = {} bound
  for (int m = 0; m <= o.max_m; ++m) {
    for (Int sign : {Int{0}, Int{-16}, Int{-48}}) {
      for (Int b2plus = 3 * m + 1; b2plus <= 3 * m + 6; ++b2plus) {
        Int want = 5 * m + epsilon(-sign / 16 + m, b2plus - 3 * m) - sign / 8;
        if (connected_sum_bound(m, sign, b2plus) != want)
          f.add("X # mT4 m=" + std::to_string(m) + " sign=" + std::to_string(sign));
        if (m == 0 && connected_sum_bound(0, sign, b2plus) != empty_set_rhs(sign, b2plus))
          f.add("X # mT4 at m=0 differs from the S={} bound");
      }
    }
  }
  return {"bounds", f.empty(), f.str("epsilon cases, S={} table k = 0..8, mT4 pattern, connected sums")};
}

int row_degree_sum(const std::string& row) {
  static const std::regex deg("_([0-9])");
  int s = 0;
  for (auto it = std::sregex_iterator(row.begin(), row.end(), deg); it != std::sregex_iterator(); ++it)
    s += std::stoi((*it)[1]);
  return s;
}

VerifyCheck check_tables(const VerifyOptions&) {
  Failures f;
  TableReport r = ko_verify_tables();
  for (const auto& l : r.law_failures) f.add("ring law: " + l);
  std::set<std::string> got = r.discrepant_rows();
  for (const auto& row : got)
    if (!documented_discrepancies().count(row)) f.add("undocumented discrepancy " + row);
  for (const auto& row : documented_discrepancies())
    if (!got.count(row)) f.add("documented discrepancy not reproduced: " + row);
  for (const auto& row : r.rows)
    if (row_degree_sum(row.row) % 4 != 0 && !row.free_ok) f.add("free part of " + row.instance);
  std::ostringstream os;
  os << r.law_checks << " ring-law checks, " << r.rows.size() << " table instances, " << got.size()
     << " discrepant rows as documented";
  return {"tables", f.empty(), f.str(os.str())};
}

const std::map<std::string, std::function<VerifyCheck(const VerifyOptions&)>>& registry() {
  static const std::map<std::string, std::function<VerifyCheck(const VerifyOptions&)>> r = {
      {"mu-nu", check_mu_nu},         {"characters", check_characters}, {"euler-h1", check_euler_h1},
      {"euler-rtilde", check_euler_rtilde}, {"divis", check_divis},     {"keyrelation", check_keyrelation},
      {"lattice", check_lattice},     {"bounds", check_bounds},         {"tables", check_tables},
  };
  return r;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

const VerifyCheck* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = {"mu-nu",       "characters", "euler-h1", "euler-rtilde", "divis",
                                                 "keyrelation", "lattice",    "bounds",   "tables"};
  return names;
}

VerifyCheck run_check(const std::string& name, const VerifyOptions& opts) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown check " + name);
  auto t0 = std::chrono::steady_clock::now();
  VerifyCheck c;
  try {
    c = it->second(opts);
  } catch (const std::exception& e) {
    c = {name, false, std::string("exception: ") + e.what()};
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

VerifyReport run_verify(const VerifyOptions& opts) {
  VerifyReport r;
  for (const auto& n : verify_check_names()) r.checks.push_back(run_check(n, opts));
  return r;
}

std::string render(const VerifyReport& r) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& c : r.checks) {
    passed += c.passed;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", c.seconds);
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << buf << "): " << c.detail << "\n";
  }
  os << passed << "/" << r.checks.size() << " checks passed\n";
  return os.str();
}

}  // namespace kodeg
