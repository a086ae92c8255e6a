#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rees/module_element.hpp"

namespace rees::poly {

// Canonical text: terms in descending order, joined by +/-, coefficient and
// exponent 1 elided, variables in the order T0 T1 X0 X1 X2 Z. Zero is "0".
std::string to_string(const Monomial& m);
std::string to_string(const Coeff& c);
std::string to_string(const Polynomial& p, const TermOrder& order);

// Labels print after "e"; the default labels are "1".."rank".
std::vector<std::string> default_labels(std::size_t rank);
std::string pair_label(long long n, long long k);  // "{n,k}"

// Coordinates in ascending basis order, e.g. "X0*e1-T0^3*e2-(T0+T1)*e3".
std::string to_string(const ModuleElement& e, const TermOrder& order,
                      const std::vector<std::string>& labels = {});

Polynomial parse_polynomial(std::string_view text);
ModuleElement parse_module_element(std::string_view text, const std::vector<std::string>& labels);

}  // namespace rees::poly
