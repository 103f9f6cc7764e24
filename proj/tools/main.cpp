#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kodeg/bounds.hpp"
#include "kodeg/euler.hpp"
#include "kodeg/expr.hpp"
#include "kodeg/lattice.hpp"
#include "kodeg/manifold.hpp"
#include "kodeg/poly.hpp"
#include "kodeg/verify.hpp"

using namespace kodeg;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitViolated = 2;
constexpr int kExitVerify = 3;

std::vector<int> indices(Mask S) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (S & (Mask{1} << i)) out.push_back(i + 1);
  return out;
}

int cmd_bound(const std::string& path, bool json) {
  ManifoldData m = load(path);
  BoundReport r = main2_bound(m);
  std::cout << (json ? render_json(r) : render_text(r));
  return r.all_satisfied() ? 0 : kExitViolated;
}

int cmd_ns(const std::string& path, const std::string& family, int n, bool json) {
  ActiveFamily f;
  std::vector<std::string> warnings;
  if (!family.empty()) {
    f = ActiveFamily::parse(family, n);
  } else {
    f = to_family(load(path), &warnings);
  }
  for (const auto& w : warnings) std::cerr << "kodeg: warning: " << w << "\n";
  LatticePoly p = expand_family(f);
  std::vector<Mask> support = sorted_support(p);
  if (json) {
    nlohmann::json rows = nlohmann::json::array();
    for (Mask S : support) {
      Int N = p.coeff(S);
      rows.push_back({{"S", indices(S)}, {"N", N}, {"d", d_of(N)}});
    }
    nlohmann::json j = {{"n", f.n}, {"rows", rows}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "S                     N_S      d_S\n";
  for (Mask S : support) {
    Int N = p.coeff(S);
    std::string s = S == 0 ? "∅" : subset_str(S);
    std::cout << s << std::string(s == "∅" ? 21 : (s.size() < 22 ? 22 - s.size() : 1), ' ') << N
              << std::string(std::max<size_t>(1, 9 - std::to_string(N).size()), ' ') << d_of(N) << "\n";
  }
  return 0;
}

int cmd_euler(std::optional<int> rtilde, std::optional<int> h1, std::optional<int> mu, std::optional<int> nu) {
  int given = rtilde.has_value() + h1.has_value() + mu.has_value() + nu.has_value();
  if (given != 1) throw CLI::ValidationError("euler", "exactly one of --rtilde, --h1-power, --mu, --nu is required");
  if (rtilde) std::cout << to_string(euler_rtilde(*rtilde)) << "\n";
  if (h1) std::cout << to_string(euler_h1_power_any(*h1)) << "\n";
  if (mu) std::cout << mu_poly(*mu).str() << "\n";
  if (nu) std::cout << nu_poly(*nu).str() << "\n";
  return 0;
}

int cmd_ring(const std::string& expr, bool complexify) {
  KOElem v = eval_ko(expr);
  std::cout << to_string(v) << "\n";
  if (complexify) {
    GradedCplx c = ko_complexify(v);
    std::cout << "complexification (degree " << c.degree << "): " << to_string(c.value) << "\n";
  }
  return 0;
}

int cmd_verify(const VerifyOptions& opts) {
  VerifyReport r = run_verify(opts);
  std::cout << render(r);
  if (!r.all_passed()) {
    std::cerr << "kodeg: verify failed\n";
    return kExitVerify;
  }
  return 0;
}

int cmd_consum(const std::string& a, const std::string& b, const std::string& out) {
  ManifoldData x = connected_sum(load(a, ValidationMode::Summand), load(b, ValidationMode::Summand));
  if (out.empty()) {
    std::cout << to_json(x) << "\n";
  } else {
    save(x, out);
    std::cout << "wrote " << out << " (b1 = " << x.b1 << ", sign = " << x.sign << ", b2plus = " << x.b2plus << ")\n";
  }
  return 0;
}

int cmd_mtorus(int m, Int sign, Int b2plus, const std::string& out) {
  if (m < 1) throw CLI::ValidationError("--m", "m >= 1 required");
  ManifoldData x = mtorus(m);
  if (!out.empty()) {
    save(x, out);
    std::cout << "wrote " << out << "\n";
  }
  if (sign % 16 != 0) throw ValidationError({"sign: not divisible by 16"});
  if (b2plus <= 0) throw ValidationError({"b2plus: l > 0 required"});
  const Int rhs2 = torus_pattern_rhs(m, sign, b2plus);
  const Int rhs3 = connected_sum_bound(m, sign, b2plus);
  std::cout << "m = " << m << ", sign = " << sign << ", b2plus = " << b2plus << "\n";
  std::cout << "S_max of the mT4 pattern: b2plus >= " << rhs2 << "; " << (b2plus >= rhs2 ? "satisfied" : "violated")
            << "\n";
  std::cout << "X' # mT4: b2plus >= " << rhs3 << "; " << (b2plus >= rhs3 ? "satisfied" : "violated") << "\n";
  return b2plus >= rhs2 && b2plus >= rhs3 ? 0 : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant KO-theory toolkit for spin 4-manifold bounds", "kodeg"};
  app.require_subcommand(1, 1);

  std::string path, family, out, expr, file_a, file_b;
  bool json = false, complexify = false;
  int ns_n = -1;
  std::optional<int> rtilde, h1, mu, nu;
  VerifyOptions vopts;
  int mt_m = 1;
  Int mt_sign = 0, mt_b2plus = 0;

  auto* bound = app.add_subcommand("bound", "Evaluate the b2plus bound for a manifold description");
  bound->add_option("file", path, "Manifold JSON file")->required();
  bound->add_flag("--json", json, "JSON output");

  auto* ns = app.add_subcommand("ns", "Tabulate N_S and d_S");
  auto* ns_file = ns->add_option("file", path, "Manifold JSON file");
  auto* ns_fam = ns->add_option("--family", family, "Active sets, e.g. \"1,2;2,3\"");
  ns_file->excludes(ns_fam);
  ns->add_option("--n", ns_n, "Number of indices for --family (default: largest used)");
  ns->add_flag("--json", json, "JSON output");

  auto* euler = app.add_subcommand("euler", "Closed forms for Euler classes and the mu/nu polynomials");
  euler->add_option("--rtilde", rtilde, "e(Rt^{2m})")->check(CLI::Range(0, 1000));
  euler->add_option("--h1-power", h1, "e(H1)^p")->check(CLI::Range(0, 1000));
  euler->add_option("--mu", mu, "mu_n")->check(CLI::Range(1, 6));
  euler->add_option("--nu", nu, "nu_n")->check(CLI::Range(1, 30));

  auto* ring = app.add_subcommand("ring", "Evaluate a graded ring expression");
  ring->add_option("--eval", expr, "Expression, e.g. \"[R]_4 * [C0]_2\"")->required();
  ring->add_flag("--complexify", complexify, "Also print the complexification");

  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  verify->add_option("--max-n", vopts.max_n, "mu/nu identity up to n")->check(CLI::Range(1, 6));
  verify->add_option("--max-m", vopts.max_m, "mT4 checks up to m")->check(CLI::Range(1, 15));
  verify->add_option("--trials", vopts.trials, "Randomized trials")->check(CLI::Range(1, 100000));
  verify->add_option("--seed", vopts.seed, "Random seed");

  auto* consum = app.add_subcommand("consum", "Connected sum of two descriptions");
  consum->add_option("a", file_a, "First summand")->required();
  consum->add_option("b", file_b, "Second summand")->required();
  consum->add_option("-o,--output", out, "Output file (default: standard output)");

  auto* mt = app.add_subcommand("mtorus", "Bounds for the mT4 pattern and X' # mT4");
  mt->add_option("--m", mt_m, "Number of T4 summands")->required();
  mt->add_option("--sign", mt_sign, "Signature")->required();
  mt->add_option("--b2plus", mt_b2plus, "b2plus")->required();
  mt->add_option("-o,--output", out, "Also write the mT4 description to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "kodeg: usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*bound) return cmd_bound(path, json);
    if (*ns) {
      if (path.empty() && family.empty()) throw CLI::ValidationError("ns", "a file or --family is required");
      return cmd_ns(path, family, ns_n, json);
    }
    if (*euler) return cmd_euler(rtilde, h1, mu, nu);
    if (*ring) return cmd_ring(expr, complexify);
    if (*verify) return cmd_verify(vopts);
    if (*consum) return cmd_consum(file_a, file_b, out);
    if (*mt) return cmd_mtorus(mt_m, mt_sign, mt_b2plus, out);
  } catch (const CLI::Error& e) {
    std::cerr << "kodeg: usage error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    std::cerr << "kodeg: validation error:\n";
    for (const auto& p : e.problems()) std::cerr << "  " << p << "\n";
  } catch (const ParseError& e) {
    std::cerr << "kodeg: parse error: " << e.what() << "\n";
  } catch (const InconsistentProduct& e) {
    std::cerr << "kodeg: inconsistent product: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "kodeg: error: " << e.what() << "\n";
  }
  return kExitUsage;
}
