#include "kodeg/euler.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kodeg {

namespace {

KOElem B(RealKind k, int idx, int q, Int c = 1) { return KOElem::basis(k, idx, q, c); }
Int sign_of(Int parity_exponent) { return mod_floor(parity_exponent, 2) == 0 ? 1 : -1; }
Int floor_div(Int a, Int b) { return (a - mod_floor(a, b)) / b; }

}  // namespace

// ---- Euler classes ------------------------------------------------------------------

KOElem euler_rtilde(int m) {
  if (m < 0) throw std::domain_error("euler_rtilde requires m >= 0");
  if (m == 0) return KOElem::one();
  const int q = (2 * m) % 8;
  switch (m % 4) {
    case 0:
    case 2: {
      Int c = sign_of(m / 2) * checked_pow2(m % 4 == 0 ? m - 1 : m - 2);
      return B(RealKind::R, 0, q, c) - B(RealKind::Rt, 0, q, c);
    }
    default: return B(RealKind::C0, 0, q, sign_of((m + 1) / 2) * checked_pow2(m - 1));
  }
}

CplxRepElem rtilde_complex_expansion(int m) {
  if (m < 0) throw std::domain_error("negative power");
  CplxRepElem r = cplx_C(0), f = cplx_C(3) - cplx_C(1);
  for (int i = 0; i < m; ++i) r = tensor_complex(r, f);
  return r;
}

KOElem euler_h1() { return B(RealKind::R, 0, 4) - B(RealKind::H, 1, 4); }

Int h1_power_a(int m) { return (checked_pow2(2 * m) + binomial(4 * m, 2 * m)) / 2; }
Int h1_power_b(int m) { return (binomial(4 * m, 2 * m) - checked_pow2(2 * m)) / 2; }

KOElem euler_h1_power(int p) {
  if (p < 0 || p % 2 != 0) throw std::domain_error("closed form is defined for even powers p >= 0");
  const int m = p / 2;
  if (m == 0) return KOElem::one();
  KOElem r = B(RealKind::R, 0, 0, h1_power_a(m)) + B(RealKind::Rt, 0, 0, h1_power_b(m));
  for (int t = 1; t < 2 * m; ++t) {
    Int c = binomial(4 * m, 2 * m - t);
    if (t % 2 == 0) {
      r += B(RealKind::D, t, 0, c);
    } else {
      if (c % 2 != 0) throw std::logic_error("odd binomial in the H-part of e(H1)^" + std::to_string(p));
      r += B(RealKind::H, t, 0, -c / 2);
    }
  }
  r += B(RealKind::D, 2 * m, 0);
  return r;
}

KOElem euler_h1_power_ring(int p) { return ko_pow(euler_h1(), p); }

KOElem euler_h1_power_any(int p) {
  if (p < 0) throw std::domain_error("negative power");
  if (p % 2 == 0) return euler_h1_power(p);
  return ko_mul(euler_h1_power(p - 1), euler_h1());
}

// ---- torus cells ---------------------------------------------------------------------

TorusCell torus_cell_product(const TorusCell& u, const TorusCell& v) {
  return {u.p + v.p + popcount(u.S & v.S), u.S | v.S};
}

std::string to_string(const TorusCell& c) {
  return "e(Rt^" + std::to_string(c.p) + ")b(Rt^" + subset_str(c.S) + ")";
}

CellElem::CellElem(const KOElem& coeff, TorusCell cell) { add(coeff, cell); }

void CellElem::add(const KOElem& coeff, TorusCell cell) {
  if (cell.p < 0) throw std::domain_error("negative Euler power in a torus cell");
  KOElem c = coeff;
  if (cell.p >= 2) {
    int fold = cell.p - cell.p % 2;
    c = ko_mul(c, euler_rtilde(fold / 2));
    cell.p -= fold;
  }
  if (c.is_zero()) return;
  auto it = terms_.find(cell);
  if (it == terms_.end()) {
    terms_.emplace(cell, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

const KOElem* CellElem::coeff(const TorusCell& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? nullptr : &it->second;
}

CellElem& CellElem::operator+=(const CellElem& o) {
  for (const auto& [cell, c] : o.terms_) add(c, cell);
  return *this;
}

CellElem operator*(const CellElem& a, const CellElem& b) {
  CellElem r;
  for (const auto& [ca, xa] : a.terms_)
    for (const auto& [cb, xb] : b.terms_) r.add(ko_mul(xa, xb), torus_cell_product(ca, cb));
  return r;
}

std::string to_string(const CellElem& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [cell, c] : x.terms()) {
    if (!first) os << " + ";
    os << "(" << to_string(c) << ")";
    if (cell.p != 0 || cell.S != 0) os << to_string(cell);
    first = false;
  }
  return os.str();
}

// ---- key relation ----------------------------------------------------------------------

KeyRelationResult keyrelation_check(int sign, std::optional<KOElem> gamma0) {
  if (sign != 1 && sign != -1) throw std::domain_error("sign must be +1 or -1");
  const KOElem g = gamma0 ? *gamma0 : B(RealKind::Rt, 0, 0, -1);
  const TorusCell empty{0, 0}, top{0, 0xf};
  const KOElem rt = B(RealKind::Rt, 0, 0);
  CellElem bundle = sign > 0 ? CellElem(ko_mul(-rt, euler_h1()), empty) + CellElem(g, top)
                             : CellElem(-euler_h1(), empty) + CellElem(-g, top);
  const CellElem e2(KOElem::one(), TorusCell{2, 0});
  CellElem lhs = e2 * (bundle * bundle);
  CellElem rhs = e2 * CellElem(euler_h1_power(2), empty);
  // The simplification used on the right: -[Rt] e(Rt^2) = e(Rt^2).
  const bool absorb = ko_mul(-rt, euler_rtilde(1)) == euler_rtilde(1);
  return {absorb && lhs == rhs, to_string(lhs), to_string(rhs)};
}

bool keyrelation_check() { return keyrelation_check(1).holds && keyrelation_check(-1).holds; }

// ---- divisibility by e(H1)^c -----------------------------------------------------------

int divis_num_coeffs(int c, int d) {
  Int top = floor_div(4 * Int{c} + d + 3, 4);
  return top > 0 ? static_cast<int>(top) : 0;
}

namespace {

void check_divis_domain(int c, int d, int i, const std::vector<Int>* a) {
  if (c < 0 || c % 2 != 0) throw std::domain_error("divis: c must be even and >= 0");
  if (d % 2 != 0) throw std::domain_error("divis: d must be even");
  if (i < 0 || i > 31) throw std::domain_error("divis: i must be in 0..31");
  int n = divis_num_coeffs(c, d);
  if (n == 0) throw std::domain_error("divis: c + d/4 must be positive");
  if (a && static_cast<int>(a->size()) != n)
    throw std::domain_error("divis: expected " + std::to_string(n) + " coefficients a_n, got " +
                            std::to_string(a->size()));
}

Dyadic divis_coefficient(int c, int d, const std::vector<Int>& a) {
  const int r = static_cast<int>(mod_floor(d, 8));
  Dyadic x;
  for (size_t n = 0; n < a.size(); ++n) {
    if (a[n] == 0) continue;
    const int ni = static_cast<int>(n);
    Int s;
    int e;
    if (r == 0 || r == 4) {
      s = c + d / 4 - ni;
      e = c + d / 2 - ni - (r == 0 ? 1 : 2);
    } else {
      s = c - ni + (d + 2) / 4;
      e = c + d / 2 - ni - 1;
    }
    x = x + Dyadic(checked_mul(a[n], sign_of(s)), e);
  }
  return x;
}

bool torsion_free_case(int c, int d, const std::vector<Int>& a) {
  if (mod_floor(d, 8) != 2) return false;
  // a_n = 0 for every n > c + d/4 - 1, i.e. n >= floor(c + d/4).
  Int first = floor_div(4 * Int{c} + d, 4);
  for (size_t n = 0; n < a.size(); ++n)
    if (static_cast<Int>(n) >= first && a[n] != 0) return false;
  return true;
}

KOElem divis_basis_class(int d) {
  const int q = static_cast<int>(mod_floor(d, 8));
  if (q == 0 || q == 4) return B(RealKind::R, 0, q) - B(RealKind::Rt, 0, q);
  return B(RealKind::C0, 0, q);
}

// Solve sum_j x_j cols[j] = target over GF(2); columns and target are label sets.
struct Gf2Result {
  bool solvable = false;
  std::vector<bool> x;
  bool injective = false;
};

Gf2Result solve_gf2(const std::vector<std::set<IrrLabel>>& cols, const std::set<IrrLabel>& target) {
  std::map<IrrLabel, size_t> row;
  for (const auto& c : cols)
    for (const auto& l : c) row.emplace(l, 0);
  for (const auto& l : target) row.emplace(l, 0);
  size_t r = 0;
  for (auto& [l, idx] : row) idx = r++;
  const size_t ncols = cols.size();
  // Augmented matrix, one row per label.
  std::vector<std::vector<bool>> m(r, std::vector<bool>(ncols + 1, false));
  for (size_t j = 0; j < ncols; ++j)
    for (const auto& l : cols[j]) m[row[l]][j] = true;
  for (const auto& l : target) m[row[l]][ncols] = true;
  std::vector<int> pivot_col_row(ncols, -1);
  size_t rank = 0;
  for (size_t j = 0; j < ncols && rank < r; ++j) {
    size_t p = rank;
    while (p < r && !m[p][j]) ++p;
    if (p == r) continue;
    std::swap(m[p], m[rank]);
    for (size_t i = 0; i < r; ++i)
      if (i != rank && m[i][j])
        for (size_t k = j; k <= ncols; ++k) m[i][k] = m[i][k] != m[rank][k];
    pivot_col_row[j] = static_cast<int>(rank);
    ++rank;
  }
  Gf2Result res;
  res.injective = rank == ncols;
  for (size_t i = rank; i < r; ++i)
    if (m[i][ncols]) return res;
  res.solvable = true;
  res.x.assign(ncols, false);
  for (size_t j = 0; j < ncols; ++j)
    if (pivot_col_row[j] >= 0) res.x[j] = m[pivot_col_row[j]][ncols];
  return res;
}

}  // namespace

DivisAlpha divis_alpha(int c, int d, int i, const std::vector<Int>& a) {
  check_divis_domain(c, d, i, &a);
  DivisAlpha out;
  out.degree = static_cast<int>(mod_floor(d, 8));
  out.coefficient = divis_coefficient(c, d, a);
  out.basis_class = divis_basis_class(d);
  out.tag = TorusCell{0, i == 0 ? Mask{0} : ((Mask{1} << (2 * i)) - 1)};
  out.torsion_free_case = torsion_free_case(c, d, a);
  if (out.coefficient.is_integer()) out.value = out.coefficient.to_int() * out.basis_class;
  return out;
}

DivisVerifier::DivisVerifier(int c, int d) : c_(c), d_(d), q_(static_cast<int>(mod_floor(d, 8))) {
  check_divis_domain(c, d, 0, nullptr);
  e_pow_ = euler_h1_power(c);
  const int count = divis_num_coeffs(c, d);
  for (int n = 0; n < count; ++n) {
    const Int p = 4 * Int{c} + d - 4 * Int{n};  // positive and even
    rhs_basis_.push_back(ko_mul(euler_h1_power_any(n), euler_rtilde(static_cast<int>(p / 2))));
  }
  basis_class_ = divis_basis_class(d);
  basis_image_ = ko_mul(basis_class_, e_pow_);
  if (q_ == 2 || q_ == 6) {
    // Any torsion class whose product with e(H1)^c can reach the right-hand side.
    const int top = 3 * c + 2;
    std::vector<KOElem> cands;
    if (q_ == 6) {
      cands.push_back(B(RealKind::R, 0, 6));
      cands.push_back(B(RealKind::Rt, 0, 6));
    }
    for (int m = 1; m <= top; ++m) cands.push_back(B(q_ == 2 ? RealKind::H : RealKind::D, m, q_));
    for (const auto& t : cands) {
      torsion_classes_.push_back(t);
      torsion_images_.push_back(ko_mul(t, e_pow_));
    }
  }
}

KOElem DivisVerifier::rhs(const std::vector<Int>& a) const {
  if (a.size() != rhs_basis_.size()) throw std::domain_error("divis: wrong number of coefficients");
  KOElem r(q_);
  for (size_t n = 0; n < a.size(); ++n) r += a[n] * rhs_basis_[n];
  return r;
}

DivisCheck DivisVerifier::check(int i, const std::vector<Int>& a) const {
  DivisAlpha alpha = divis_alpha(c_, d_, i, a);
  const KOElem R = rhs(a);
  DivisCheck out;
  out.rhs = to_string(R);
  out.integral = alpha.coefficient.is_integer();
  // Free parts over the dyadic rationals: (num B) E == 2^{-exp} R.
  const Dyadic& x = alpha.coefficient;
  const int shift = x.exp() < 0 ? -x.exp() : 0;
  const Int num = shift ? x.num() : (x.is_zero() ? 0 : x.to_int());
  KOElem scaled_lhs = num * basis_image_;
  KOElem scaled_rhs = checked_pow2(shift) * R;
  const bool free_ok = scaled_lhs.free_only() == scaled_rhs.free_only();
  out.lhs = shift ? "2^-" + std::to_string(shift) + " * (" + to_string(scaled_lhs) + ")" : to_string(scaled_lhs);

  bool special_ok = true;
  if (!out.integral) {
    out.solvable = false;
    out.detail = "coefficient " + x.str() + " is not integral; no alpha exists";
  } else {
    const KOElem alpha0 = *alpha.value;
    const KOElem L0 = num * basis_image_;
    std::set<IrrLabel> target;
    for (const auto& l : R.torsion_part()) target.insert(l);
    for (const auto& l : L0.torsion_part())
      if (!target.erase(l)) target.insert(l);
    std::vector<std::set<IrrLabel>> cols;
    for (const auto& img : torsion_images_) cols.push_back(img.torsion_part());
    Gf2Result sol = solve_gf2(cols, target);
    out.solvable = free_ok && sol.solvable;
    if (out.solvable) {
      KOElem full = alpha0;
      for (size_t j = 0; j < sol.x.size(); ++j)
        if (sol.x[j]) full += torsion_classes_[j];
      const KOElem prod = ko_mul(full, e_pow_);
      if (!(prod == R)) {
        out.ok = false;
        out.detail = "constructed alpha = " + to_string(full) + " gives " + to_string(prod);
        return out;
      }
      out.lhs = to_string(prod);
      out.detail = "alpha = " + to_string(full);
    } else {
      out.detail = "torsion part has no solution; hypothesis cannot be met";
    }
    if (alpha.torsion_free_case) {
      const bool even = x.is_zero() || x.exp() >= 1;
      special_ok = out.solvable == even && (!out.solvable || (target.empty() && sol.injective));
    }
  }
  out.ok = free_ok && special_ok;
  if (!free_ok) out.detail = "free parts differ: " + out.lhs + " vs " + to_string(scaled_rhs);
  else if (!special_ok) out.detail += "; torsion-free claim fails";
  return out;
}

DivisCheck divis_verify(int c, int d, int i, const std::vector<Int>& a) { return DivisVerifier(c, d).check(i, a); }

// ---- key equation ----------------------------------------------------------------------

std::map<std::uint64_t, KeyEquationEntry> keyequation_rhs(int l, int k, int y, int A, const ActiveFamily& f) {
  if (l <= 0 || l % 2 != 0) throw std::domain_error("keyequation: l must be even and positive");
  f.validate();
  (void)k;
  std::map<std::uint64_t, KeyEquationEntry> out;
  for (const auto& [S, by_m] : cover_table(f)) {
    KeyEquationEntry e;
    e.S = S;
    e.cell = TorusCell{0, S};
    const int size = popcount(S);
    for (const auto& [m, count] : by_m) {
      KeyTerm t{m, count, y + A - m, l + 4 * m - size};
      if (t.h1_power < 0)
        throw std::domain_error("keyequation: y + A must be at least the cover size " + std::to_string(m));
      e.terms.push_back(t);
    }
    if (size % 2 == 0) {
      KOElem sum(0);
      for (const auto& t : e.terms)
        sum += t.cover_count * ko_mul(euler_h1_power_any(t.h1_power), euler_rtilde(t.rtilde_power / 2));
      e.coefficient = sum;
    }
    out.emplace(S, std::move(e));
  }
  return out;
}

// ---- KO-degree component -------------------------------------------------------------------

KODegreeComponent calc_ko_degree_component(int l, int k, int sizeS, Int N_S) {
  if (l <= 0 || l % 2 != 0) throw std::domain_error("l must be even and positive");
  if (sizeS < 0 || sizeS % 2 != 0) throw std::domain_error("|S| must be even and >= 0");
  KODegreeComponent out;
  const Int d = Int{l} - 4 * Int{k} - sizeS;
  out.degree = static_cast<int>(mod_floor(d, 8));
  const int e = l / 2 - k - sizeS / 2 - 1 - (out.degree == 4 ? 1 : 0);
  out.magnitude = Dyadic(N_S, e);
  out.basis_class = divis_basis_class(static_cast<int>(out.degree));
  out.may_have_torsion = out.degree == 2 || out.degree == 6;
  out.integral = out.magnitude.is_integer();
  if (out.degree == 2 && l >= 4) {
    out.extra_condition_applies = true;
    out.extra_condition_holds = Dyadic(N_S, e - 1).is_integer();
    out.may_have_torsion = false;
  }
  return out;
}

}  // namespace kodeg
