#pragma once

#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "starconf/poly.hpp"

namespace starconf {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ParsedTerm {
  mpq_class coeff;
  std::map<int, unsigned> powers;  // variable index -> exponent
  unsigned degree() const;
};

/// Field-independent parse of the text grammar
///   poly   = ["+"|"-"] term (("+"|"-") term)*
///   term   = coeff ["*" factor ("*" factor)*] | factor ("*" factor)*
///   factor = "x" index ["^" exp]
///   coeff  = integer | integer "/" integer
/// Whitespace is ignored. "0" is the zero polynomial.
struct ParsedPoly {
  std::vector<ParsedTerm> terms;
  /// -1 when no variable occurs.
  int max_index() const;
};

ParsedPoly parse_poly_text(std::string_view text);

/// Non-empty, non-comment ('#') lines of a polynomial file, trimmed.
std::vector<std::string> read_poly_lines(std::istream& in);

/// Converts into a homogeneous MultiPoly. `zero_degree` is the declared degree
/// used when the text denotes the zero polynomial.
template <ExactField F>
MultiPoly<F> to_poly(const F& field, const ParsedPoly& parsed, int nvars, int zero_degree = 0) {
  int degree = -1;
  for (const auto& t : parsed.terms) {
    const int td = static_cast<int>(t.degree());
    if (degree < 0) {
      degree = td;
    } else if (td != degree) {
      throw ParseError("polynomial is not homogeneous");
    }
    if (!t.powers.empty() && t.powers.rbegin()->first >= nvars) {
      throw ParseError("variable x" + std::to_string(t.powers.rbegin()->first) + " out of range for " +
                       std::to_string(nvars) + " variables");
    }
  }
  MultiPoly<F> p(field, nvars, degree < 0 ? zero_degree : degree);
  for (const auto& t : parsed.terms) {
    std::vector<unsigned> e(static_cast<std::size_t>(nvars), 0U);
    for (const auto& [idx, pw] : t.powers) e[static_cast<std::size_t>(idx)] = pw;
    p.add_term(Monomial(std::move(e)), field.from_mpq(t.coeff));
  }
  return p;
}

template <ExactField F>
MultiPoly<F> parse_poly(const F& field, std::string_view text, int nvars, int zero_degree = 0) {
  return to_poly(field, parse_poly_text(text), nvars, zero_degree);
}

/// Renders in the same grammar, terms in graded-lex order, e.g. "3*x0^2*x1 - 1/2*x2^3".
template <ExactField F>
std::string format_poly(const MultiPoly<F>& p) {
  if (p.is_zero()) return "0";
  const F& field = p.field();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = field.is_negative(c);
    const std::string coeff = field.to_string(negative ? field.neg(c) : c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.degree() == 0) {
      out += coeff;
    } else if (coeff == "1") {
      out += m.to_string();
    } else {
      out += coeff + '*' + m.to_string();
    }
  }
  return out;
}

}  // namespace starconf
