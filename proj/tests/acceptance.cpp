// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// Usage: acceptance <path-to-kodeg> <data-dir>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

#include "kodeg/verify.hpp"

using namespace kodeg;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& cmd) {
  Run r;
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << title << ": " << detail << std::endl;
}

void from_checks(int id, const std::string& title, std::initializer_list<const char*> names, double max_seconds = 0) {
  bool ok = true;
  std::string detail;
  for (const char* n : names) {
    VerifyCheck c = run_check(n);
    ok &= c.passed;
    if (max_seconds > 0 && c.seconds >= max_seconds) {
      ok = false;
      detail += "too slow; ";
    }
    char t[32];
    std::snprintf(t, sizeof t, " (%.2fs)", c.seconds);
    detail += std::string(n) + ": " + c.detail + t + "; ";
  }
  report(id, title, ok, detail.substr(0, detail.size() - 2));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <path-to-kodeg> <data-dir>\n";
    return 2;
  }
  const std::string cli = argv[1], data = argv[2];

  from_checks(1, "mu/nu identity and small mu", {"mu-nu"}, 10.0);
  from_checks(2, "character oracle", {"characters"});
  from_checks(3, "Euler classes", {"euler-h1", "euler-rtilde"});
  from_checks(4, "divisibility grid", {"divis"});
  from_checks(5, "key relation", {"keyrelation"});
  from_checks(6, "lattice expansion", {"lattice"});
  from_checks(7, "bound formulas", {"bounds"});
  from_checks(8, "table diagnostics", {"tables"});

  Run good = run("'" + cli + "' bound '" + data + "/k3.json'");
  Run bad = run("'" + cli + "' bound '" + data + "/inconsistent.json'");
  bool ok9 = good.status == 0 && good.out.find("best rhs = 3 at S=∅; satisfied") != std::string::npos &&
             bad.status == 2 && bad.out.find("violated (6 > 5)") != std::string::npos;
  report(9, "end-to-end bound", ok9,
         "k3.json exit " + std::to_string(good.status) + ", inconsistent.json exit " + std::to_string(bad.status));

  std::cout << (9 - failures) << "/9 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
