#pragma once

#include <string>

#include "rees/families.hpp"

namespace rees::io {

// Macaulay2 script: defines the ring and the monomial map, then asserts that
// ker equals <F0>, that the maps compose to zero, and that each image equals
// the next kernel. Deterministic text.
std::string export_cas_script(const euclid::PairData& pd, const families::Resolution& r);

}  // namespace rees::io
