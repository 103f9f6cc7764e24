#include "kodeg/kograded.hpp"
#include "kodeg/gen.hpp"

#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

namespace kodeg {

namespace {

int normalize_degree(int q) {
  if (q % 2 != 0) throw std::domain_error("odd degree " + std::to_string(q) + " is not supported");
  return static_cast<int>(mod_floor(q, 8));
}

std::string class_name(RealKind kind, int index, int degree) {
  std::string s = "[" + IrrLabel{kind, index}.str() + "]";
  if (degree != 0) s += "_" + std::to_string(degree);
  return s;
}

}  // namespace

bool is_free_class(RealKind kind, int degree) {
  switch (normalize_degree(degree)) {
    case 0:
    case 4: return true;
    default: return kind == RealKind::C0;
  }
}

bool is_torsion_class(RealKind kind, int degree) {
  switch (normalize_degree(degree)) {
    case 2: return kind == RealKind::H;
    case 6: return kind == RealKind::R || kind == RealKind::Rt || kind == RealKind::D;
    default: return false;
  }
}

KOElem::KOElem(int degree) : degree_(normalize_degree(degree)) {}

void KOElem::add_label(const IrrLabel& l, Int c) {
  if (is_free_class(l.kind, degree_)) {
    free_.add_term(l, c);
  } else if (is_torsion_class(l.kind, degree_)) {
    if (c % 2 == 0) return;
    if (!torsion_.erase(l)) torsion_.insert(l);
  } else {
    throw std::domain_error(class_name(l.kind, l.index, degree_) + " is not a class in KO^" +
                            std::to_string(degree_));
  }
}

KOElem KOElem::basis(RealKind kind, int index, int degree, Int coeff) {
  const int q = normalize_degree(degree);
  KOElem out(q);
  const bool indexed = kind == RealKind::D || kind == RealKind::H;
  if (indexed && index < 0) throw std::domain_error("negative index in " + class_name(kind, index, q));
  if (!indexed && index != 0) throw std::domain_error("unexpected index on " + class_name(kind, 0, q));
  if (indexed && index == 0) {
    if (kind == RealKind::D) {
      if (q == 2) throw std::domain_error("[D0]_2 is not a class in KO^2");
      out.add_label(IrrLabel::R(), coeff);
      out.add_label(IrrLabel::Rt(), coeff);
      return out;
    }
    switch (q) {
      case 0: out.add_label(IrrLabel::C0(), checked_mul(2, coeff)); return out;
      case 2: return out;
      case 4: out.add_label(IrrLabel::C0(), coeff); return out;
      default: throw std::domain_error("[H0]_6 is not a class in KO^6");
    }
  }
  out.add_label(IrrLabel{kind, index}, coeff);
  return out;
}

KOElem& KOElem::operator+=(const KOElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  if (degree_ != o.degree_)
    throw std::domain_error("cannot add elements of degrees " + std::to_string(degree_) + " and " +
                            std::to_string(o.degree_));
  free_ += o.free_;
  for (const auto& l : o.torsion_) add_label(l, 1);
  return *this;
}

KOElem& KOElem::operator-=(const KOElem& o) {
  KOElem neg = o;
  neg *= -1;
  return *this += neg;
}

KOElem& KOElem::operator*=(Int s) {
  free_ *= s;
  if (s % 2 == 0) torsion_.clear();
  return *this;
}

bool KOElem::operator==(const KOElem& o) const {
  if (is_zero() && o.is_zero()) return true;
  return degree_ == o.degree_ && free_ == o.free_ && torsion_ == o.torsion_;
}

KOElem KOElem::free_only() const {
  KOElem r(degree_);
  r.free_ = free_;
  return r;
}

std::string to_string(const KOElem& x) {
  if (x.is_zero()) return "0";
  std::map<IrrLabel, Int> all(x.free_part().begin(), x.free_part().end());
  for (const auto& l : x.torsion_part()) all[l] = 1;
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : all) {
    Int mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag;
    os << class_name(l.kind, l.index, x.degree());
    first = false;
  }
  return os.str();
}

// ---- complexification -------------------------------------------------------------

GradedCplx ko_complexify(const KOElem& x) {
  GradedCplx out{x.degree(), {}};
  const int q = x.degree();
  for (const auto& [l, c] : x.free_part()) {
    if (q == 0) {
      out.value += c * cmap(RepElem(l));
    } else if (l.kind == RealKind::C0) {
      // [V]_{2k} -> V + (-1)^k tV
      out.value.add_term(CplxLabel::C(1), c);
      out.value.add_term(CplxLabel::C(3), q == 4 ? c : checked_sub(0, c));
    } else if (l.kind == RealKind::H) {
      out.value.add_term(CplxLabel::WH(l.index), c);
    } else {
      out.value += checked_mul(2, c) * cmap(RepElem(l));
    }
  }
  return out;
}

KOElem ko_from_complex(const CplxRepElem& z, int degree) {
  const int q = normalize_degree(degree);
  if (q != 0 && q != 4) throw std::logic_error("ko_from_complex: degree must be 0 or 4");
  auto fail = [&](const std::string& why) {
    throw InconsistentProduct("inconsistent product: " + why + " in " + to_string(z) + " (degree " +
                              std::to_string(q) + ")");
  };
  if (z.coeff(CplxLabel::C(1)) != z.coeff(CplxLabel::C(3))) fail("C(1) and C(3) multiplicities differ");
  auto half = [&](const CplxLabel& l, Int c) {
    if (c % 2 != 0) fail("odd coefficient on " + l.str());
    return c / 2;
  };
  KOElem out(q);
  for (const auto& [l, c] : z) {
    switch (l.kind) {
      case CplxKind::C: {
        if (l.index == 3) break;
        RealKind k = l.index == 0 ? RealKind::R : l.index == 2 ? RealKind::Rt : RealKind::C0;
        Int v = (k == RealKind::C0 || q == 0) ? c : half(l, c);
        out += KOElem::basis(k, 0, q, v);
        break;
      }
      case CplxKind::WD: out += KOElem::basis(RealKind::D, l.index, q, q == 0 ? c : half(l, c)); break;
      case CplxKind::WH: out += KOElem::basis(RealKind::H, l.index, q, q == 0 ? half(l, c) : c); break;
    }
  }
  return out;
}

KOElem ko_restrict(const CplxRepElem& z, int degree) {
  const int q = normalize_degree(degree);
  if (q != 2 && q != 6) throw std::logic_error("ko_restrict: degree must be 2 or 6");
  ThreeParts p = decompose_three(z);
  KOElem out(q);
  out += KOElem::basis(RealKind::C0, 0, q, checked_sub(p.cplx, p.cplx_conj));
  if (q == 2) {
    for (const auto& [l, c] : p.quat_part) out += KOElem::basis(RealKind::H, l.index, q, c);
  } else {
    for (const auto& [l, c] : p.real_part) out += KOElem::basis(l.kind, l.index, q, c);
  }
  return out;
}

CplxRepElem ko_lift(const KOElem& y) {
  const int q = y.degree();
  if (q != 2 && q != 6) throw std::logic_error("ko_lift: degree must be 2 or 6");
  CplxRepElem w;
  w.add_term(CplxLabel::C(1), y.coeff(IrrLabel::C0()));
  for (const auto& l : y.torsion_part()) {
    if (l.kind == RealKind::H) w.add_term(CplxLabel::WH(l.index), 1);
    else w += cmap(RepElem(l));
  }
  return w;
}

KOElem ko_mul(const KOElem& x, const KOElem& y) {
  const int s = (x.degree() + y.degree()) % 8;
  if (s % 4 == 0) {
    return ko_from_complex(tensor_complex(ko_complexify(x).value, ko_complexify(y).value), s);
  }
  // One factor sits in degree 2 or 6: x r(w) = r(c(x) w) with w a complex lift of that factor.
  const bool x_odd_half = x.degree() == 2 || x.degree() == 6;
  const KOElem& a = x_odd_half ? y : x;
  const KOElem& b = x_odd_half ? x : y;
  return ko_restrict(tensor_complex(ko_complexify(a).value, ko_lift(b)), s);
}

KOElem ko_pow(const KOElem& x, int n) {
  if (n < 0) throw std::domain_error("negative power");
  KOElem r = KOElem::one();
  for (int i = 0; i < n; ++i) r = ko_mul(r, x);
  return r;
}

// ---- table diagnostics --------------------------------------------------------------

namespace {

using Builder = std::function<KOElem(int n, int m)>;

struct TableRow {
  std::string name;
  Builder left, right, value;
  bool uses_n, uses_m;
};

KOElem B(RealKind k, int idx, int q, Int c = 1) { return KOElem::basis(k, idx, q, c); }

std::vector<TableRow> product_table() {
  using K = RealKind;
  auto r = [](K k, int q, Int c = 1) { return [=](int, int) { return B(k, 0, q, c); }; };
  auto zero = [](int q) { return [=](int, int) { return KOElem(q); }; };
  auto dn = [](K k, int q) { return [=](int n, int) { return B(k, n, q); }; };
  auto hm = [](K k, int q) { return [=](int, int m) { return B(k, m, q); }; };
  std::vector<TableRow> t = {
      {"[R] [C0]_2", r(K::R, 0), r(K::C0, 2), r(K::C0, 2), false, false},
      {"[Rt] [C0]_2", r(K::Rt, 0), r(K::C0, 2), r(K::C0, 2, -1), false, false},
      {"[C0] [C0]_2", r(K::C0, 0), r(K::C0, 2), zero(2), false, false},
      {"[D_n] [C0]_2", dn(K::D, 0), r(K::C0, 2), dn(K::H, 2), true, false},
      {"[H_n] [C0]_2", dn(K::H, 0), r(K::C0, 2), zero(2), true, false},
      {"[R] [H_m]_2", r(K::R, 0), hm(K::H, 2), hm(K::H, 2), false, true},
      {"[Rt] [H_m]_2", r(K::Rt, 0), hm(K::H, 2), hm(K::H, 2), false, true},
      {"[C0] [H_m]_2", r(K::C0, 0), hm(K::H, 2), zero(2), false, true},
      {"[D_n] [H_m]_2", dn(K::D, 0), hm(K::H, 2),
       [](int n, int m) { return B(K::H, std::abs(n - m), 2) + B(K::H, n + m, 2); }, true, true},
      {"[C0]_2 [C0]_2", r(K::C0, 2), r(K::C0, 2), [](int, int) { return B(K::Rt, 0, 4) - B(K::R, 0, 4); },
       false, false},
      {"[R]_4 [H_m]_4", r(K::R, 4), hm(K::H, 4), [](int, int m) { return B(K::H, m, 0, 2); }, false, true},
      {"[Rt]_4 [H_m]_4", r(K::Rt, 4), hm(K::H, 4), [](int, int m) { return B(K::H, m, 0, 2); }, false, true},
      {"[H_m]_4 [H_n]_4", hm(K::H, 4), dn(K::H, 4),
       [](int n, int m) { return 4 * (B(K::D, std::abs(n - m), 0) + B(K::D, n + m, 0)); }, true, true},
      {"[R]_4 [R]_4", r(K::R, 4), r(K::R, 4), r(K::R, 0, 4), false, false},
      {"[Rt]_4 [Rt]_4", r(K::Rt, 4), r(K::Rt, 4), r(K::R, 0, 4), false, false},
      {"[R]_4 [Rt]_4", r(K::R, 4), r(K::Rt, 4), r(K::Rt, 0, 4), false, false},
      {"[R]_4 [C0]_2", r(K::R, 4), r(K::C0, 2), r(K::C0, 6, 2), false, false},
      {"[Rt]_4 [C0]_2", r(K::Rt, 4), r(K::C0, 2), r(K::C0, 6, -2), false, false},
      {"[C0]_4 [C0]_2", r(K::C0, 4), r(K::C0, 2), zero(6), false, false},
      {"[D_n]_4 [C0]_2", dn(K::D, 4), r(K::C0, 2), zero(6), true, false},
      {"[H_n]_4 [C0]_2", dn(K::H, 4), r(K::C0, 2), zero(6), true, false},
      {"[R]_4 [C0]_6", r(K::R, 4), r(K::C0, 6), r(K::C0, 2, 2), false, false},
      {"[Rt]_4 [C0]_6", r(K::Rt, 4), r(K::C0, 6), r(K::C0, 2, -2), false, false},
      {"[C0]_4 [C0]_6", r(K::C0, 4), r(K::C0, 6), zero(2), false, false},
      {"[D_n]_4 [C0]_6", dn(K::D, 4), r(K::C0, 6), zero(2), true, false},
      {"[H_n]_4 [C0]_6", dn(K::H, 4), r(K::C0, 6), zero(2), true, false},
  };
  return t;
}

}  // namespace

const std::set<std::string>& documented_discrepancies() {
  static const std::set<std::string> rows = {"[R]_4 [H_m]_4", "[Rt]_4 [H_m]_4", "[H_m]_4 [H_n]_4"};
  return rows;
}

std::set<std::string> TableReport::discrepant_rows() const {
  std::set<std::string> out;
  for (const auto& r : rows)
    if (!r.free_ok) out.insert(r.row);
  return out;
}

std::set<std::string> TableReport::torsion_note_rows() const {
  std::set<std::string> out;
  for (const auto& r : rows)
    if (r.free_ok && !r.exact_ok) out.insert(r.row);
  return out;
}

bool TableReport::matches_documented() const {
  return law_failures.empty() && discrepant_rows() == documented_discrepancies();
}

TableReport ko_verify_tables(int max_index, int random_trials, unsigned long long seed) {
  TableReport rep;
  std::mt19937_64 rng(seed);
  const int degs[4] = {0, 2, 4, 6};
  auto guarded = [&](const std::string& what, const std::function<bool()>& f) {
    ++rep.law_checks;
    try {
      if (!f()) rep.law_failures.push_back(what);
    } catch (const std::exception& e) {
      rep.law_failures.push_back(what + ": " + e.what());
    }
  };
  for (int trial = 0; trial < random_trials; ++trial) {
    int p = degs[trial % 4], q = degs[(trial / 4) % 4], s = degs[(trial / 16) % 4];
    KOElem x = random_ko(rng, p, max_index);
    KOElem y = random_ko(rng, q, max_index);
    KOElem z = random_ko(rng, s, max_index);
    std::string tag = "x=" + to_string(x) + ", y=" + to_string(y) + ", z=" + to_string(z);
    guarded("commutativity " + tag, [&] { return ko_mul(x, y) == ko_mul(y, x); });
    guarded("associativity " + tag, [&] { return ko_mul(ko_mul(x, y), z) == ko_mul(x, ko_mul(y, z)); });
    guarded("complexification " + tag, [&] {
      return ko_complexify(ko_mul(x, y)).value ==
             tensor_complex(ko_complexify(x).value, ko_complexify(y).value);
    });
  }
  for (const auto& row : product_table()) {
    for (int n = 1; n <= (row.uses_n ? max_index : 1); ++n) {
      for (int m = 1; m <= (row.uses_m ? max_index : 1); ++m) {
        KOElem x = row.left(n, m), y = row.right(n, m), v = row.value(n, m);
        TableRowCheck c;
        c.row = row.name;
        c.instance = to_string(x) + " * " + to_string(y);
        c.table_value = to_string(v);
        KOElem prod = ko_mul(x, y);
        c.computed = to_string(prod);
        CplxRepElem ct = ko_complexify(v).value;
        CplxRepElem cp = tensor_complex(ko_complexify(x).value, ko_complexify(y).value);
        c.c_table = to_string(ct);
        c.c_product = to_string(cp);
        c.free_ok = ct == cp && v.degree() == prod.degree();
        c.exact_ok = v == prod;
        rep.rows.push_back(std::move(c));
      }
    }
  }
  return rep;
}

std::string render(const TableReport& r, bool verbose) {
  std::ostringstream os;
  os << "ring laws: " << (r.law_checks - static_cast<int>(r.law_failures.size())) << "/" << r.law_checks
     << " passed\n";
  for (const auto& f : r.law_failures) os << "  FAIL " << f << "\n";
  std::set<std::string> seen;
  for (const auto& row : r.rows) {
    if (row.free_ok && !verbose) continue;
    if (!row.free_ok && !seen.insert(row.row).second && !verbose) continue;
    os << (row.free_ok ? "  ok   " : "  DISCREPANCY ") << row.instance << ": table " << row.table_value
       << ", c(table) = " << row.c_table << ", c(x)c(y) = " << row.c_product << "\n";
  }
  for (const auto& name : r.torsion_note_rows()) {
    for (const auto& row : r.rows)
      if (row.row == name && !row.exact_ok) {
        os << "  torsion note " << row.instance << ": table " << row.table_value << ", product "
           << row.computed << "\n";
        break;
      }
  }
  os << "table rows: " << r.rows.size() << " instances, " << r.discrepant_rows().size()
     << " discrepant rows, " << r.torsion_note_rows().size() << " torsion notes; documented set "
     << (r.matches_documented() ? "matches" : "DOES NOT match") << "\n";
  return os.str();
}

}  // namespace kodeg
