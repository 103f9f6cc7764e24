#pragma once

#include <string>

#include "kodeg/kograded.hpp"
#include "kodeg/manifold.hpp"

namespace kodeg {

// Evaluates ring expressions such as "3[R] - [H1]_4 + [C0]_2" or "([R]_4 - [H1]_4) * [C0]_2".
// Integers stand for multiples of [R]; products use ko_mul. Throws ParseError.
KOElem eval_ko(const std::string& text);

}  // namespace kodeg
