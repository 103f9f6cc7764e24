#pragma once

#include <random>

#include "kodeg/kograded.hpp"
#include "kodeg/lattice.hpp"

namespace kodeg {

// Random elements for property checks. Indices of D/H/WD/WH lie in 1..max_index.

RepElem random_rep(std::mt19937_64& rng, int max_index = 4, int max_terms = 3, Int max_coeff = 3);
CplxRepElem random_cplx(std::mt19937_64& rng, int max_index = 4, int max_terms = 3, Int max_coeff = 3);
KOElem random_ko(std::mt19937_64& rng, int degree, int max_index = 4);

// n in [2, max_n], between 0 and max_sets active sets of size 2..4, no duplicates.
ActiveFamily random_family(std::mt19937_64& rng, int max_n = 10, int max_sets = 6);

}  // namespace kodeg
