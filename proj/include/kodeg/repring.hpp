#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>

#include "kodeg/lincomb.hpp"

namespace kodeg {

// ---- Real irreducibles of C4 x| U(1) --------------------------------------

enum class RealKind : std::uint8_t { R, Rt, C0, D, H };
enum class Field : std::uint8_t { Real, Complex, Quaternionic };

struct IrrLabel {
  RealKind kind = RealKind::R;
  int index = 0;  // >= 1 for D and H, 0 otherwise

  static IrrLabel R() { return {RealKind::R, 0}; }
  static IrrLabel Rt() { return {RealKind::Rt, 0}; }
  static IrrLabel C0() { return {RealKind::C0, 0}; }
  static IrrLabel D(int m);
  static IrrLabel H(int m);

  int dim() const;
  Field field() const;
  std::string str() const;  // "R", "Rt", "C0", "D3", "H1"

  auto operator<=>(const IrrLabel&) const = default;
};

using RepElem = LinComb<IrrLabel>;

// D(0) and H(0) are expanded here: D0 = R + Rt, H0 = 2 C0.
RepElem rep_D(int m);
RepElem rep_H(int m);
RepElem rep_of(RealKind kind, int index);

Int dim(const RepElem& x);
RepElem tensor_real(const RepElem& a, const RepElem& b);
RepElem irr_product(const IrrLabel& a, const IrrLabel& b);
std::string to_string(const RepElem& x);

// ---- Complex representations -----------------------------------------------
// C(i): j acts by i^i, U(1) trivially.  WD(m) = cD_m, WH(m) = c'H_m (m >= 1).

enum class CplxKind : std::uint8_t { C, WD, WH };

struct CplxLabel {
  CplxKind kind = CplxKind::C;
  int index = 0;

  static CplxLabel C(int i);
  static CplxLabel WD(int m);
  static CplxLabel WH(int m);

  int dim() const { return kind == CplxKind::C ? 1 : 2; }
  std::string str() const;  // "C(1)", "cD2", "c'H3"

  auto operator<=>(const CplxLabel&) const = default;
};

using CplxRepElem = LinComb<CplxLabel>;

CplxRepElem cplx_C(int i);      // any integer i, reduced mod 4
CplxRepElem cplx_WD(int m);     // m >= 0; WD(0) = C(0) + C(2)
CplxRepElem cplx_WH(int m);     // m >= 0; WH(0) = C(1) + C(3)

Int dim(const CplxRepElem& x);
CplxRepElem tensor_complex(const CplxRepElem& a, const CplxRepElem& b);
std::string to_string(const CplxRepElem& x);

// ---- Quaternionic representations -----------------------------------------

enum class QuatKind : std::uint8_t { QcR, QcRt, QcD, QC0, H };

struct QuatLabel {
  QuatKind kind = QuatKind::QcR;
  int index = 0;

  static QuatLabel QcR() { return {QuatKind::QcR, 0}; }
  static QuatLabel QcRt() { return {QuatKind::QcRt, 0}; }
  static QuatLabel QC0() { return {QuatKind::QC0, 0}; }
  static QuatLabel QcD(int m);
  static QuatLabel H(int m);

  std::string str() const;
  auto operator<=>(const QuatLabel&) const = default;
};

using QuatRepElem = LinComb<QuatLabel>;
std::string to_string(const QuatRepElem& x);

// ---- Maps between the three rings -----------------------------------------

CplxRepElem cmap(const RepElem& a);
RepElem rmap(const CplxRepElem& a);
CplxRepElem tmap(const CplxRepElem& a);
CplxRepElem cprime(const QuatRepElem& a);
QuatRepElem qmap(const CplxRepElem& a);
// Inverse of cprime on its image; std::domain_error for classes outside it.
QuatRepElem cprime_preimage(const CplxRepElem& a);

// V = cV_R + V_C + tV'_C + c'V_H for complex classes,
// V = V_R + rV_C + rc'V_H for real ones, V = qcV_R + qV_C + V_H for quaternionic ones.
// real_part holds R/Rt/D labels, quat_part holds H labels, the C0 multiplicities are integers.
struct ThreeParts {
  RepElem real_part;
  Int cplx = 0;
  Int cplx_conj = 0;
  RepElem quat_part;
  bool operator==(const ThreeParts&) const = default;
};

ThreeParts decompose_three(const CplxRepElem& a);
ThreeParts decompose_three(const RepElem& a);
ThreeParts decompose_three(const QuatRepElem& a);
CplxRepElem recompose_complex(const ThreeParts& p);
RepElem recompose_real(const ThreeParts& p);
QuatRepElem recompose_quaternionic(const ThreeParts& p);

// ---- Characters --------------------------------------------------------------

struct Gauss {
  Int re = 0;
  Int im = 0;
  bool operator==(const Gauss&) const = default;
};

// Laurent polynomial in t over Z[i].
class Laurent {
 public:
  Laurent() = default;
  static Laurent constant(Gauss g);
  static Laurent t_sym(int m, Int scale = 1);  // scale * (t^m + t^-m), m >= 1

  Gauss coeff(int e) const;
  const std::map<int, Gauss>& terms() const { return terms_; }
  void add_term(int e, Gauss g);

  Laurent operator+(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent scaled(Gauss g) const;
  bool operator==(const Laurent& o) const = default;
  std::string str() const;

 private:
  std::map<int, Gauss> terms_;
};

// Traces on the cosets (j^a, t), a = 0..3.
struct CharTable {
  std::array<Laurent, 4> coset;
  CharTable operator+(const CharTable& o) const;
  CharTable operator*(const CharTable& o) const;
  bool operator==(const CharTable& o) const = default;
};

CharTable character(const CplxRepElem& a);
CharTable character(const RepElem& a);
// Inverse of character(); std::domain_error if the table is not a virtual character.
CplxRepElem decompose_character(const CharTable& ch);
RepElem decompose_real_character(const CharTable& ch);

}  // namespace kodeg
