#include "rees/cas_script.hpp"

#include <sstream>

#include "rees/text.hpp"

namespace rees::io {

namespace {

const char* var_name(poly::Var v) {
  static const char* names[] = {"T0", "T1", "X0", "X1", "X2", "Z"};
  return names[v];
}

// Rows are coordinates, columns are elements.
void write_matrix(std::ostream& os, const std::string& name,
                  const std::vector<poly::ModuleElement>& cols, std::size_t rows,
                  const poly::TermOrder& order) {
  os << name << " = matrix{";
  for (std::size_t i = 0; i < rows; ++i) {
    os << (i ? ",\n    {" : "{");
    for (std::size_t j = 0; j < cols.size(); ++j)
      os << (j ? ", " : "") << poly::to_string(cols[j][i], order);
    os << "}";
  }
  os << "};\n";
}

}  // namespace

std::string export_cas_script(const euclid::PairData& pd, const families::Resolution& r) {
  const auto order = families::base_order(pd);
  const auto d = pd.d(), u = pd.u();
  const std::string images[3] = {
      poly::to_string(poly::mono(std::uint32_t(d), 0, 0, 0, 0)),
      poly::to_string(poly::mono(std::uint32_t(d - u), std::uint32_t(u), 0, 0, 0)),
      poly::to_string(poly::mono(0, std::uint32_t(d), 0, 0, 0))};
  std::ostringstream os;
  os << "-- Rees algebra of (" << images[0] << " : " << images[1] << " : " << images[2] << ")\n";
  os << "R = QQ[";
  bool first = true;
  for (poly::Var v : order.ranking()) {
    if (v == poly::Z) continue;
    os << (first ? "" : ", ") << var_name(v);
    first = false;
  }
  os << ", MonomialOrder => Lex];\n";
  os << "S = QQ[T0, T1];\n";
  os << "phi = map(S, R, {T0, T1, " << images[0] << ", " << images[1] << ", " << images[2]
     << "});\n";
  os << "F0 = ideal(";
  for (std::size_t i = 0; i < r.phi1.size(); ++i)
    os << (i ? ",\n    " : "") << poly::to_string(r.phi1[i], order);
  os << ");\n";
  os << "assert(ker phi == F0);\n";
  os << "assert(numgens F0 == " << r.phi1.size() << ");\n";

  os << "Phi1 = matrix{{";
  for (std::size_t i = 0; i < r.phi1.size(); ++i)
    os << (i ? ", " : "") << poly::to_string(r.phi1[i], order);
  os << "}};\n";
  write_matrix(os, "Phi2", r.phi2, r.phi1.size(), order);
  write_matrix(os, "Phi3", r.phi3, r.phi2.size(), order);
  os << "assert(Phi1 * Phi2 == 0);\n";
  os << "assert(Phi2 * Phi3 == 0);\n";
  os << "assert(image Phi2 == kernel Phi1);\n";
  os << "assert(image Phi3 == kernel Phi2);\n";
  os << "assert(kernel Phi3 == 0);\n";
  return os.str();
}

}  // namespace rees::io
