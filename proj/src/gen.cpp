#include "kodeg/gen.hpp"

#include <algorithm>

namespace kodeg {

RepElem random_rep(std::mt19937_64& rng, int max_index, int max_terms, Int max_coeff) {
  std::uniform_int_distribution<int> nterms(1, max_terms), kind(0, 4), idx(1, max_index);
  std::uniform_int_distribution<Int> coeff(-max_coeff, max_coeff);
  RepElem x;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    RealKind k = static_cast<RealKind>(kind(rng));
    int index = (k == RealKind::D || k == RealKind::H) ? idx(rng) : 0;
    x.add_term(IrrLabel{k, index}, coeff(rng));
  }
  return x;
}

CplxRepElem random_cplx(std::mt19937_64& rng, int max_index, int max_terms, Int max_coeff) {
  std::uniform_int_distribution<int> nterms(1, max_terms), kind(0, 2), c4(0, 3), idx(1, max_index);
  std::uniform_int_distribution<Int> coeff(-max_coeff, max_coeff);
  CplxRepElem x;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    switch (kind(rng)) {
      case 0: x.add_term(CplxLabel::C(c4(rng)), coeff(rng)); break;
      case 1: x.add_term(CplxLabel::WD(idx(rng)), coeff(rng)); break;
      default: x.add_term(CplxLabel::WH(idx(rng)), coeff(rng)); break;
    }
  }
  return x;
}

KOElem random_ko(std::mt19937_64& rng, int degree, int max_index) {
  std::uniform_int_distribution<int> nterms(1, 3), coeff(-3, 3), idx(1, max_index), kind(0, 4);
  KOElem x(degree);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    RealKind k = static_cast<RealKind>(kind(rng));
    if (!is_free_class(k, degree) && !is_torsion_class(k, degree)) continue;
    int index = (k == RealKind::D || k == RealKind::H) ? idx(rng) : 0;
    x += KOElem::basis(k, index, degree, coeff(rng));
  }
  return x;
}

ActiveFamily random_family(std::mt19937_64& rng, int max_n, int max_sets) {
  ActiveFamily f;
  f.n = std::uniform_int_distribution<int>(2, max_n)(rng);
  int target = std::uniform_int_distribution<int>(0, max_sets)(rng);
  std::uniform_int_distribution<int> size(2, std::min(4, f.n)), elem(0, f.n - 1);
  for (int tries = 0; static_cast<int>(f.sets.size()) < target && tries < 100; ++tries) {
    int s = size(rng);
    Mask T = 0;
    while (popcount(T) < s) T |= Mask{1} << elem(rng);
    if (std::find(f.sets.begin(), f.sets.end(), T) == f.sets.end()) f.sets.push_back(T);
  }
  return f;
}

}  // namespace kodeg
