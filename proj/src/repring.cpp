#include "kodeg/repring.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace kodeg {

namespace {

void require_positive(int m, const char* what) {
  if (m < 1) throw std::domain_error(std::string(what) + " index must be >= 1, got " + std::to_string(m));
}

template <class E>
std::string render(const E& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : x) {
    Int mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag;
    os << l.str();
    first = false;
  }
  return os.str();
}

// W(m, s): WD for s = +1, WH for s = -1; W(0, +) = C(0)+C(2), W(0, -) = C(1)+C(3).
CplxRepElem weight(int m, int s) { return s > 0 ? cplx_WD(m) : cplx_WH(m); }

int twist_sign(const CplxLabel& l) { return l.kind == CplxKind::WH ? -1 : 1; }

}  // namespace

// ---- labels -----------------------------------------------------------------

IrrLabel IrrLabel::D(int m) {
  require_positive(m, "D");
  return {RealKind::D, m};
}

IrrLabel IrrLabel::H(int m) {
  require_positive(m, "H");
  return {RealKind::H, m};
}

int IrrLabel::dim() const {
  switch (kind) {
    case RealKind::R:
    case RealKind::Rt: return 1;
    case RealKind::C0:
    case RealKind::D: return 2;
    case RealKind::H: return 4;
  }
  return 0;
}

Field IrrLabel::field() const {
  switch (kind) {
    case RealKind::C0: return Field::Complex;
    case RealKind::H: return Field::Quaternionic;
    default: return Field::Real;
  }
}

std::string IrrLabel::str() const {
  switch (kind) {
    case RealKind::R: return "R";
    case RealKind::Rt: return "Rt";
    case RealKind::C0: return "C0";
    case RealKind::D: return "D" + std::to_string(index);
    case RealKind::H: return "H" + std::to_string(index);
  }
  return "?";
}

CplxLabel CplxLabel::C(int i) { return {CplxKind::C, static_cast<int>(mod_floor(i, 4))}; }

CplxLabel CplxLabel::WD(int m) {
  require_positive(m, "cD");
  return {CplxKind::WD, m};
}

CplxLabel CplxLabel::WH(int m) {
  require_positive(m, "c'H");
  return {CplxKind::WH, m};
}

std::string CplxLabel::str() const {
  switch (kind) {
    case CplxKind::C: return "C(" + std::to_string(index) + ")";
    case CplxKind::WD: return "cD" + std::to_string(index);
    case CplxKind::WH: return "c'H" + std::to_string(index);
  }
  return "?";
}

QuatLabel QuatLabel::QcD(int m) {
  require_positive(m, "qcD");
  return {QuatKind::QcD, m};
}

QuatLabel QuatLabel::H(int m) {
  require_positive(m, "H");
  return {QuatKind::H, m};
}

std::string QuatLabel::str() const {
  switch (kind) {
    case QuatKind::QcR: return "qcR";
    case QuatKind::QcRt: return "qcRt";
    case QuatKind::QcD: return "qcD" + std::to_string(index);
    case QuatKind::QC0: return "qC0'";
    case QuatKind::H: return "H" + std::to_string(index);
  }
  return "?";
}

// ---- real ring ----------------------------------------------------------------

RepElem rep_D(int m) {
  if (m < 0) throw std::domain_error("D index must be >= 0");
  if (m == 0) return RepElem(IrrLabel::R()) + RepElem(IrrLabel::Rt());
  return RepElem(IrrLabel::D(m));
}

RepElem rep_H(int m) {
  if (m < 0) throw std::domain_error("H index must be >= 0");
  if (m == 0) return RepElem(IrrLabel::C0(), 2);
  return RepElem(IrrLabel::H(m));
}

RepElem rep_of(RealKind kind, int index) {
  switch (kind) {
    case RealKind::R: return RepElem(IrrLabel::R());
    case RealKind::Rt: return RepElem(IrrLabel::Rt());
    case RealKind::C0: return RepElem(IrrLabel::C0());
    case RealKind::D: return rep_D(index);
    case RealKind::H: return rep_H(index);
  }
  return {};
}

Int dim(const RepElem& x) {
  Int d = 0;
  for (const auto& [l, c] : x) d = checked_add(d, checked_mul(c, l.dim()));
  return d;
}

RepElem irr_product(const IrrLabel& a, const IrrLabel& b) {
  if (b < a) return irr_product(b, a);
  using K = RealKind;
  if (a.kind == K::R) return RepElem(b);
  if (a.kind == K::Rt) return b.kind == K::Rt ? RepElem(IrrLabel::R()) : RepElem(b);
  const int m = a.index, n = b.index;
  if (a.kind == K::C0) {
    switch (b.kind) {
      case K::C0: return 2 * (RepElem(IrrLabel::R()) + RepElem(IrrLabel::Rt()));
      case K::D: return RepElem(IrrLabel::H(n));
      case K::H: return RepElem(IrrLabel::D(n), 4);
      default: break;
    }
  }
  if (a.kind == K::D && b.kind == K::D) return rep_D(std::abs(n - m)) + rep_D(n + m);
  if (a.kind == K::D && b.kind == K::H) return rep_H(std::abs(n - m)) + rep_H(n + m);
  if (a.kind == K::H && b.kind == K::H) return 4 * (rep_D(std::abs(n - m)) + rep_D(n + m));
  throw std::logic_error("irr_product: unhandled pair " + a.str() + ", " + b.str());
}

RepElem tensor_real(const RepElem& a, const RepElem& b) {
  RepElem out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) out += checked_mul(ca, cb) * irr_product(la, lb);
  return out;
}

std::string to_string(const RepElem& x) { return render(x); }

// ---- complex ring ------------------------------------------------------------

CplxRepElem cplx_C(int i) { return CplxRepElem(CplxLabel::C(i)); }

CplxRepElem cplx_WD(int m) {
  if (m < 0) throw std::domain_error("cD index must be >= 0");
  if (m == 0) return cplx_C(0) + cplx_C(2);
  return CplxRepElem(CplxLabel::WD(m));
}

CplxRepElem cplx_WH(int m) {
  if (m < 0) throw std::domain_error("c'H index must be >= 0");
  if (m == 0) return cplx_C(1) + cplx_C(3);
  return CplxRepElem(CplxLabel::WH(m));
}

Int dim(const CplxRepElem& x) {
  Int d = 0;
  for (const auto& [l, c] : x) d = checked_add(d, checked_mul(c, l.dim()));
  return d;
}

namespace {

CplxRepElem cplx_irr_product(const CplxLabel& a, const CplxLabel& b) {
  if (b < a) return cplx_irr_product(b, a);
  if (a.kind == CplxKind::C && b.kind == CplxKind::C) return cplx_C(a.index + b.index);
  if (a.kind == CplxKind::C) {
    int s = twist_sign(b) * (a.index % 2 == 0 ? 1 : -1);
    return weight(b.index, s);
  }
  const int s = twist_sign(a) * twist_sign(b);
  return weight(std::abs(a.index - b.index), s) + weight(a.index + b.index, s);
}

}  // namespace

CplxRepElem tensor_complex(const CplxRepElem& a, const CplxRepElem& b) {
  CplxRepElem out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) out += checked_mul(ca, cb) * cplx_irr_product(la, lb);
  return out;
}

std::string to_string(const CplxRepElem& x) { return render(x); }
std::string to_string(const QuatRepElem& x) { return render(x); }

// ---- maps ----------------------------------------------------------------------

CplxRepElem cmap(const RepElem& a) {
  CplxRepElem out;
  for (const auto& [l, c] : a) {
    switch (l.kind) {
      case RealKind::R: out.add_term(CplxLabel::C(0), c); break;
      case RealKind::Rt: out.add_term(CplxLabel::C(2), c); break;
      case RealKind::C0:
        out.add_term(CplxLabel::C(1), c);
        out.add_term(CplxLabel::C(3), c);
        break;
      case RealKind::D: out.add_term(CplxLabel::WD(l.index), c); break;
      case RealKind::H: out.add_term(CplxLabel::WH(l.index), checked_mul(2, c)); break;
    }
  }
  return out;
}

RepElem rmap(const CplxRepElem& a) {
  RepElem out;
  for (const auto& [l, c] : a) {
    switch (l.kind) {
      case CplxKind::C:
        if (l.index == 0) out.add_term(IrrLabel::R(), checked_mul(2, c));
        else if (l.index == 2) out.add_term(IrrLabel::Rt(), checked_mul(2, c));
        else out.add_term(IrrLabel::C0(), c);
        break;
      case CplxKind::WD: out.add_term(IrrLabel::D(l.index), checked_mul(2, c)); break;
      case CplxKind::WH: out.add_term(IrrLabel::H(l.index), c); break;
    }
  }
  return out;
}

CplxRepElem tmap(const CplxRepElem& a) {
  CplxRepElem out;
  for (const auto& [l, c] : a) {
    if (l.kind == CplxKind::C) out.add_term(CplxLabel::C(-l.index), c);
    else out.add_term(l, c);
  }
  return out;
}

CplxRepElem cprime(const QuatRepElem& a) {
  CplxRepElem out;
  for (const auto& [l, c] : a) {
    switch (l.kind) {
      case QuatKind::QcR: out.add_term(CplxLabel::C(0), checked_mul(2, c)); break;
      case QuatKind::QcRt: out.add_term(CplxLabel::C(2), checked_mul(2, c)); break;
      case QuatKind::QcD: out.add_term(CplxLabel::WD(l.index), checked_mul(2, c)); break;
      case QuatKind::QC0:
        out.add_term(CplxLabel::C(1), c);
        out.add_term(CplxLabel::C(3), c);
        break;
      case QuatKind::H: out.add_term(CplxLabel::WH(l.index), c); break;
    }
  }
  return out;
}

QuatRepElem qmap(const CplxRepElem& a) {
  QuatRepElem out;
  for (const auto& [l, c] : a) {
    switch (l.kind) {
      case CplxKind::C:
        if (l.index == 0) out.add_term(QuatLabel::QcR(), c);
        else if (l.index == 2) out.add_term(QuatLabel::QcRt(), c);
        else out.add_term(QuatLabel::QC0(), c);
        break;
      case CplxKind::WD: out.add_term(QuatLabel::QcD(l.index), c); break;
      case CplxKind::WH: out.add_term(QuatLabel::H(l.index), checked_mul(2, c)); break;
    }
  }
  return out;
}

QuatRepElem cprime_preimage(const CplxRepElem& a) {
  auto half = [&](const CplxLabel& l, Int c) {
    if (c % 2 != 0)
      throw std::domain_error("not a quaternionic class: odd coefficient on " + l.str() + " in " + to_string(a));
    return c / 2;
  };
  if (a.coeff(CplxLabel::C(1)) != a.coeff(CplxLabel::C(3)))
    throw std::domain_error("not a quaternionic class: C(1) and C(3) multiplicities differ in " + to_string(a));
  QuatRepElem out;
  for (const auto& [l, c] : a) {
    switch (l.kind) {
      case CplxKind::C:
        if (l.index == 0) out.add_term(QuatLabel::QcR(), half(l, c));
        else if (l.index == 2) out.add_term(QuatLabel::QcRt(), half(l, c));
        else if (l.index == 1) out.add_term(QuatLabel::QC0(), c);
        break;
      case CplxKind::WD: out.add_term(QuatLabel::QcD(l.index), half(l, c)); break;
      case CplxKind::WH: out.add_term(QuatLabel::H(l.index), c); break;
    }
  }
  return out;
}

// ---- three-way decomposition --------------------------------------------------

ThreeParts decompose_three(const CplxRepElem& a) {
  ThreeParts p;
  for (const auto& [l, c] : a) {
    switch (l.kind) {
      case CplxKind::C:
        if (l.index == 0) p.real_part.add_term(IrrLabel::R(), c);
        else if (l.index == 2) p.real_part.add_term(IrrLabel::Rt(), c);
        else if (l.index == 1) p.cplx = c;
        else p.cplx_conj = c;
        break;
      case CplxKind::WD: p.real_part.add_term(IrrLabel::D(l.index), c); break;
      case CplxKind::WH: p.quat_part.add_term(IrrLabel::H(l.index), c); break;
    }
  }
  return p;
}

ThreeParts decompose_three(const RepElem& a) {
  ThreeParts p;
  for (const auto& [l, c] : a) {
    switch (l.field()) {
      case Field::Real: p.real_part.add_term(l, c); break;
      case Field::Complex: p.cplx = c; break;
      case Field::Quaternionic: p.quat_part.add_term(l, c); break;
    }
  }
  return p;
}

ThreeParts decompose_three(const QuatRepElem& a) {
  ThreeParts p;
  for (const auto& [l, c] : a) {
    switch (l.kind) {
      case QuatKind::QcR: p.real_part.add_term(IrrLabel::R(), c); break;
      case QuatKind::QcRt: p.real_part.add_term(IrrLabel::Rt(), c); break;
      case QuatKind::QcD: p.real_part.add_term(IrrLabel::D(l.index), c); break;
      case QuatKind::QC0: p.cplx = c; break;
      case QuatKind::H: p.quat_part.add_term(IrrLabel::H(l.index), c); break;
    }
  }
  return p;
}

CplxRepElem recompose_complex(const ThreeParts& p) {
  CplxRepElem out = cmap(p.real_part);
  out.add_term(CplxLabel::C(1), p.cplx);
  out.add_term(CplxLabel::C(3), p.cplx_conj);
  for (const auto& [l, c] : p.quat_part) out.add_term(CplxLabel::WH(l.index), c);
  return out;
}

RepElem recompose_real(const ThreeParts& p) {
  RepElem out = p.real_part + p.quat_part;
  out.add_term(IrrLabel::C0(), checked_add(p.cplx, p.cplx_conj));
  return out;
}

QuatRepElem recompose_quaternionic(const ThreeParts& p) {
  QuatRepElem out;
  for (const auto& [l, c] : p.real_part) {
    if (l.kind == RealKind::R) out.add_term(QuatLabel::QcR(), c);
    else if (l.kind == RealKind::Rt) out.add_term(QuatLabel::QcRt(), c);
    else out.add_term(QuatLabel::QcD(l.index), c);
  }
  out.add_term(QuatLabel::QC0(), checked_add(p.cplx, p.cplx_conj));
  for (const auto& [l, c] : p.quat_part) out.add_term(QuatLabel::H(l.index), c);
  return out;
}

// ---- characters ------------------------------------------------------------------

namespace {

Gauss gadd(Gauss a, Gauss b) { return {checked_add(a.re, b.re), checked_add(a.im, b.im)}; }

Gauss gmul(Gauss a, Gauss b) {
  return {checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im)),
          checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
}

// i^k
Gauss ipow(Int k) {
  switch (mod_floor(k, 4)) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

bool gzero(Gauss g) { return g.re == 0 && g.im == 0; }

}  // namespace

Laurent Laurent::constant(Gauss g) {
  Laurent l;
  l.add_term(0, g);
  return l;
}

Laurent Laurent::t_sym(int m, Int scale) {
  Laurent l;
  l.add_term(m, {scale, 0});
  l.add_term(-m, {scale, 0});
  return l;
}

Gauss Laurent::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Gauss{} : it->second;
}

void Laurent::add_term(int e, Gauss g) {
  if (gzero(g)) return;
  Gauss s = gadd(coeff(e), g);
  if (gzero(s)) terms_.erase(e);
  else terms_[e] = s;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [e, g] : o.terms_) r.add_term(e, g);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, g1] : terms_)
    for (const auto& [e2, g2] : o.terms_) r.add_term(e1 + e2, gmul(g1, g2));
  return r;
}

Laurent Laurent::scaled(Gauss g) const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.add_term(e, gmul(c, g));
  return r;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, g] : terms_) {
    if (!first) os << " + ";
    os << "(" << g.re << (g.im < 0 ? "-" : "+") << (g.im < 0 ? -g.im : g.im) << "i)";
    if (e != 0) os << "t^" << e;
    first = false;
  }
  return os.str();
}

CharTable CharTable::operator+(const CharTable& o) const {
  CharTable r;
  for (int a = 0; a < 4; ++a) r.coset[a] = coset[a] + o.coset[a];
  return r;
}

CharTable CharTable::operator*(const CharTable& o) const {
  CharTable r;
  for (int a = 0; a < 4; ++a) r.coset[a] = coset[a] * o.coset[a];
  return r;
}

CharTable character(const CplxRepElem& x) {
  CharTable ch;
  for (const auto& [l, c] : x) {
    if (l.kind == CplxKind::C) {
      for (int a = 0; a < 4; ++a) ch.coset[a].add_term(0, gmul({c, 0}, ipow(Int{l.index} * a)));
    } else {
      Laurent tau = Laurent::t_sym(l.index, c);
      ch.coset[0] = ch.coset[0] + tau;
      ch.coset[2] = ch.coset[2] + tau.scaled({l.kind == CplxKind::WD ? 1 : -1, 0});
    }
  }
  return ch;
}

CharTable character(const RepElem& x) { return character(cmap(x)); }

CplxRepElem decompose_character(const CharTable& ch) {
  auto fail = [](const std::string& why) { throw std::domain_error("not a virtual character: " + why); };
  CplxRepElem out;
  // Constant terms on the four cosets form the discrete Fourier transform of the C(k) multiplicities.
  for (int k = 0; k < 4; ++k) {
    Gauss s{};
    for (int a = 0; a < 4; ++a) s = gadd(s, gmul(ch.coset[a].coeff(0), ipow(-Int{k} * a)));
    if (s.im != 0 || s.re % 4 != 0) fail("C(" + std::to_string(k) + ") multiplicity not integral");
    out.add_term(CplxLabel::C(k), s.re / 4);
  }
  std::map<int, bool> weights;
  for (int a : {0, 2})
    for (const auto& [e, g] : ch.coset[a].terms())
      if (e > 0) weights[e] = true;
  for (const auto& [e, unused] : weights) {
    Gauss p = ch.coset[0].coeff(e), q = ch.coset[2].coeff(e);
    if (p.im != 0 || q.im != 0) fail("non-real weight coefficient");
    if ((p.re + q.re) % 2 != 0) fail("weight multiplicities not integral");
    out.add_term(CplxLabel::WD(e), (p.re + q.re) / 2);
    out.add_term(CplxLabel::WH(e), (p.re - q.re) / 2);
  }
  // Asymmetric or odd-coset t-dependence shows up as a residual here.
  if (!(character(out) == ch)) fail("residual after decomposition");
  return out;
}

RepElem decompose_real_character(const CharTable& ch) {
  CplxRepElem z = decompose_character(ch);
  // Inverse of c on its image: C(1), C(3) paired into C0, c'H coefficients halved.
  if (z.coeff(CplxLabel::C(1)) != z.coeff(CplxLabel::C(3)))
    throw std::domain_error("character is not real: C(1), C(3) unpaired");
  RepElem out;
  for (const auto& [l, c] : z) {
    switch (l.kind) {
      case CplxKind::C:
        if (l.index == 0) out.add_term(IrrLabel::R(), c);
        else if (l.index == 2) out.add_term(IrrLabel::Rt(), c);
        else if (l.index == 1) out.add_term(IrrLabel::C0(), c);
        break;
      case CplxKind::WD: out.add_term(IrrLabel::D(l.index), c); break;
      case CplxKind::WH:
        if (c % 2 != 0) throw std::domain_error("character is not real: odd c'H" + std::to_string(l.index));
        out.add_term(IrrLabel::H(l.index), c / 2);
        break;
    }
  }
  return out;
}

}  // namespace kodeg
