#include "rees/text.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

namespace rees::poly {

namespace {

constexpr std::array<const char*, kVarCount> kVarNames = {"T0", "T1", "X0", "X1", "X2", "Z"};

// Unsigned term body, e.g. "3*T0^2*X1" or "T0" or "5".
std::string term_body(const Coeff& abs_coeff, const Monomial& m) {
  if (m.is_one()) return to_string(abs_coeff);
  std::string s;
  if (abs_coeff != 1) s = to_string(abs_coeff) + "*";
  return s + to_string(m);
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  bool done() const { return i_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[i_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(i_) + ": " + why +
                                " in \"" + std::string(s_) + "\"");
  }

  std::string digits() {
    const std::size_t start = i_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    if (start == i_) fail("expected digits");
    return std::string(s_.substr(start, i_ - start));
  }

  Monomial factor() {
    std::size_t v = kVarCount;
    for (std::size_t k = 0; k < kVarCount; ++k) {
      const std::string_view name = kVarNames[k];
      if (s_.substr(i_, name.size()) == name) {
        v = k;
        i_ += name.size();
        break;
      }
    }
    if (v == kVarCount) fail("expected variable");
    std::uint32_t e = 1;
    if (accept('^')) e = static_cast<std::uint32_t>(std::stoul(digits()));
    return Monomial::var(static_cast<Var>(v), e);
  }

  // Unsigned term; stops before "*e".
  Term term() {
    Coeff c(1);
    Monomial m;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      if (accept('/')) num += "/" + digits();
      c = Coeff(num);
      c.canonicalize();
      need_factor = false;
      if (!(peek() == '*' && i_ + 1 < s_.size() && s_[i_ + 1] != 'e')) return {c, m};
      expect('*');
      need_factor = true;
    }
    if (need_factor) m *= factor();
    while (peek() == '*' && i_ + 1 < s_.size() && s_[i_ + 1] != 'e') {
      ++i_;
      m *= factor();
    }
    return {c, m};
  }

  Polynomial polynomial() {
    std::vector<Term> terms;
    if (peek() == '0' && (i_ + 1 == s_.size() || s_[i_ + 1] == ')')) {
      ++i_;
      return Polynomial();
    }
    bool first = true;
    while (!done() && peek() != ')') {
      int sign = 1;
      if (accept('-')) sign = -1;
      else if (!accept('+') && !first) fail("expected '+' or '-'");
      Term t = term();
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      first = false;
    }
    if (terms.empty()) fail("empty polynomial");
    return Polynomial::from_terms(std::move(terms));
  }

  std::string label() {
    if (peek() == '{') {
      const std::size_t start = i_;
      while (!done() && peek() != '}') ++i_;
      expect('}');
      return std::string(s_.substr(start, i_ - start));
    }
    return digits();
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t v = 0; v < kVarCount; ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += kVarNames[v];
    if (m[v] != 1) s += "^" + std::to_string(m[v]);
  }
  return s;
}

std::string to_string(const Coeff& c) {
  Coeff x = c;
  x.canonicalize();
  return x.get_str();
}

std::string to_string(const Polynomial& p, const TermOrder& order) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.sorted(order)) {
    const bool neg = t.coeff < 0;
    if (neg) s += "-";
    else if (!first) s += "+";
    s += term_body(neg ? Coeff(-t.coeff) : t.coeff, t.mono);
    first = false;
  }
  return s;
}

std::vector<std::string> default_labels(std::size_t rank) {
  std::vector<std::string> out;
  out.reserve(rank);
  for (std::size_t i = 1; i <= rank; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string pair_label(long long n, long long k) {
  return "{" + std::to_string(n) + "," + std::to_string(k) + "}";
}

std::string to_string(const ModuleElement& e, const TermOrder& order,
                      const std::vector<std::string>& labels_in) {
  const auto labels = labels_in.empty() ? default_labels(e.rank()) : labels_in;
  std::string s;
  bool first = true;
  for (std::size_t i = 0; i < e.rank(); ++i) {
    const Polynomial& p = e[i];
    if (p.is_zero()) continue;
    const std::string basis = "e" + labels.at(i);
    if (p.size() == 1) {
      const Term& t = p.terms().front();
      const bool neg = t.coeff < 0;
      const Coeff a = neg ? Coeff(-t.coeff) : t.coeff;
      if (neg) s += "-";
      else if (!first) s += "+";
      if (t.mono.is_one() && a == 1) s += basis;
      else s += term_body(a, t.mono) + "*" + basis;
    } else {
      if (!first) s += "+";
      s += "(" + to_string(p, order) + ")*" + basis;
    }
    first = false;
  }
  return first ? "0" : s;
}

Polynomial parse_polynomial(std::string_view text) {
  Parser p(text);
  Polynomial out = p.polynomial();
  if (!p.done()) p.fail("trailing input");
  return out;
}

ModuleElement parse_module_element(std::string_view text, const std::vector<std::string>& labels) {
  ModuleElement out(labels.size());
  if (text == "0") return out;
  Parser p(text);
  bool first = true;
  while (!p.done()) {
    int sign = 1;
    if (p.accept('-')) sign = -1;
    else if (!p.accept('+') && !first) p.fail("expected '+' or '-'");
    Polynomial coeff;
    if (p.accept('(')) {
      coeff = p.polynomial();
      p.expect(')');
      p.expect('*');
    } else if (p.peek() == 'e') {
      coeff = Polynomial::constant(1);
    } else {
      const Term t = p.term();
      coeff = Polynomial(t.coeff, t.mono);
      p.expect('*');
    }
    p.expect('e');
    const std::string label = p.label();
    std::size_t idx = labels.size();
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == label) idx = k;
    if (idx == labels.size()) p.fail("unknown basis label e" + label);
    if (sign < 0) coeff = -coeff;
    out.coord(idx) += coeff;
    first = false;
  }
  return out;
}

}  // namespace rees::poly
