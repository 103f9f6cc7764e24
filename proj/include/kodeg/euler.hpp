#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kodeg/kograded.hpp"
#include "kodeg/lattice.hpp"
#include "kodeg/poly.hpp"

namespace kodeg {

// ---- Euler classes ------------------------------------------------------------------

// e(Rt^{2m}) in KO^{2m}(pt), m >= 0 (m = 0 gives [R]).
KOElem euler_rtilde(int m);
// (C(3) - C(1))^m in R(C4).
CplxRepElem rtilde_complex_expansion(int m);

KOElem euler_h1();                       // [R]_4 - [H1]_4
KOElem euler_h1_power(int p);            // closed form, p even >= 0
KOElem euler_h1_power_ring(int p);       // repeated ko_mul, any p >= 0
KOElem euler_h1_power_any(int p);        // closed form for the even part times e(H1) if p is odd
Int h1_power_a(int m);                   // coefficient of [R] in e(H1)^{2m}
Int h1_power_b(int m);                   // coefficient of [Rt] in e(H1)^{2m}

// ---- torus cells ---------------------------------------------------------------------

// e(Rt^p) beta(Rt^S); S is a bitmask.
struct TorusCell {
  int p = 0;
  std::uint64_t S = 0;
  auto operator<=>(const TorusCell&) const = default;
};

TorusCell torus_cell_product(const TorusCell& u, const TorusCell& v);
std::string to_string(const TorusCell& c);

// Formal sum of KO(pt)-coefficients times cells; even Euler powers are folded into the
// coefficient so stored cells have p in {0, 1}.
class CellElem {
 public:
  CellElem() = default;
  CellElem(const KOElem& coeff, TorusCell cell);

  const std::map<TorusCell, KOElem>& terms() const { return terms_; }
  const KOElem* coeff(const TorusCell& c) const;
  bool is_zero() const { return terms_.empty(); }

  CellElem& operator+=(const CellElem& o);
  friend CellElem operator+(CellElem a, const CellElem& b) { return a += b; }
  friend CellElem operator*(const CellElem& a, const CellElem& b);
  bool operator==(const CellElem& o) const = default;

 private:
  void add(const KOElem& coeff, TorusCell cell);
  std::map<TorusCell, KOElem> terms_;
};

std::string to_string(const CellElem& x);

// ---- key relation at k = 0 ----------------------------------------------------------

struct KeyRelationResult {
  bool holds = false;
  std::string lhs, rhs;
};

// sign = +1 or -1 selects the bundle; gamma0 defaults to -[Rt].
KeyRelationResult keyrelation_check(int sign, std::optional<KOElem> gamma0 = std::nullopt);
bool keyrelation_check();  // both signs with the standard gamma0

// ---- divisibility by e(H1)^c ------------------------------------------------------

struct DivisAlpha {
  int degree = 0;              // d mod 8
  Dyadic coefficient;          // on basis_class
  KOElem basis_class;          // [R]_d - [Rt]_d or [C0]_d
  TorusCell tag;               // beta(Rt^{2i})
  bool torsion_free_case = false;  // d = 2 mod 8 with a_n = 0 beyond c + d/4 - 1
  std::optional<KOElem> value;     // coefficient * basis_class when the coefficient is integral
};

DivisAlpha divis_alpha(int c, int d, int i, const std::vector<Int>& a);

struct DivisCheck {
  bool ok = false;
  bool integral = false;   // closed-form coefficient is an integer
  bool solvable = false;   // some alpha satisfies the equation exactly
  std::string lhs, rhs, detail;
};

// Number of coefficients a_n, i.e. #{n >= 0 : n < c + d/4}.
int divis_num_coeffs(int c, int d);

DivisCheck divis_verify(int c, int d, int i, const std::vector<Int>& a);

// Caches e(H1)^c, the right-hand basis products and torsion images for one (c, d).
class DivisVerifier {
 public:
  DivisVerifier(int c, int d);
  DivisCheck check(int i, const std::vector<Int>& a) const;
  KOElem rhs(const std::vector<Int>& a) const;

 private:
  int c_, d_, q_;
  KOElem e_pow_;
  std::vector<KOElem> rhs_basis_;
  KOElem basis_class_;
  KOElem basis_image_;
  std::vector<KOElem> torsion_classes_;
  std::vector<KOElem> torsion_images_;
};

// ---- key equation ----------------------------------------------------------------------

struct KeyTerm {
  int m = 0;
  Int cover_count = 0;   // N(S, m)
  int h1_power = 0;      // y + A - m
  int rtilde_power = 0;  // l + 4m - |S|
};

struct KeyEquationEntry {
  std::uint64_t S = 0;
  std::vector<KeyTerm> terms;
  std::optional<KOElem> coefficient;  // sum of the terms in KO(pt), for even |S|
  TorusCell cell;                     // beta(Rt^S)
};

std::map<std::uint64_t, KeyEquationEntry> keyequation_rhs(int l, int k, int y, int A, const ActiveFamily& f);

// ---- KO-degree component ------------------------------------------------------------------

struct KODegreeComponent {
  int degree = 0;             // d = l - 4k - |S| mod 8
  Dyadic magnitude;           // N_S 2^{...}; overall sign is not determined
  KOElem basis_class;
  bool may_have_torsion = false;
  bool integral = false;
  bool extra_condition_applies = false;  // d = 2 mod 8 and l >= 4
  bool extra_condition_holds = true;     // N_S 2^{l/2-k-|S|/2-2} integral
  bool consistent() const { return integral && (!extra_condition_applies || extra_condition_holds); }
  std::string sign() const { return "unknown (+/-1)"; }
};

KODegreeComponent calc_ko_degree_component(int l, int k, int sizeS, Int N_S);

}  // namespace kodeg
