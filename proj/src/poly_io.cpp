#include "starconf/poly_io.hpp"

#include <cctype>

namespace starconf {

unsigned ParsedTerm::degree() const {
  unsigned d = 0;
  for (const auto& [idx, pw] : powers) d += pw;
  return d;
}

int ParsedPoly::max_index() const {
  int m = -1;
  for (const auto& t : terms) {
    if (!t.powers.empty()) m = std::max(m, t.powers.rbegin()->first);
  }
  return m;
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) {
    for (char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch)) == 0) s_ += ch;
    }
  }

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::string digits() {
    std::string out;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) out += s_[pos_++];
    if (out.empty()) fail("expected digits");
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;
};

void parse_factor(Lexer& lex, ParsedTerm& term) {
  if (!lex.accept('x')) lex.fail("expected variable 'x<index>'");
  const std::string idx = lex.digits();
  if (idx.size() > 6) lex.fail("variable index too large");
  unsigned pw = 1;
  if (lex.accept('^')) {
    const std::string e = lex.digits();
    if (e.size() > 6) lex.fail("exponent too large");
    pw = static_cast<unsigned>(std::stoul(e));
  }
  term.powers[std::stoi(idx)] += pw;
}

ParsedTerm parse_term(Lexer& lex) {
  ParsedTerm term;
  term.coeff = 1;
  if (std::isdigit(static_cast<unsigned char>(lex.peek())) != 0) {
    mpz_class num(lex.digits());
    mpz_class den(1);
    if (lex.accept('/')) {
      den = mpz_class(lex.digits());
      if (den == 0) lex.fail("zero denominator");
    }
    term.coeff = mpq_class(num, den);
    term.coeff.canonicalize();
    if (!lex.accept('*')) return term;
  }
  parse_factor(lex, term);
  while (lex.accept('*')) parse_factor(lex, term);
  return term;
}

}  // namespace

ParsedPoly parse_poly_text(std::string_view text) {
  Lexer lex(text);
  if (lex.done()) throw ParseError("empty polynomial");
  ParsedPoly out;
  bool negative = false;
  if (lex.accept('-')) {
    negative = true;
  } else {
    lex.accept('+');
  }
  while (true) {
    ParsedTerm t = parse_term(lex);
    if (negative) t.coeff = -t.coeff;
    if (sgn(t.coeff) != 0) out.terms.push_back(std::move(t));
    if (lex.done()) break;
    if (lex.accept('+')) {
      negative = false;
    } else if (lex.accept('-')) {
      negative = true;
    } else {
      lex.fail("expected '+' or '-'");
    }
  }
  return out;
}

std::vector<std::string> read_poly_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace starconf
