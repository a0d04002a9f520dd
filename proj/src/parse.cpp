#include "planebranch/parse.hpp"

#include <cctype>

#include "planebranch/errors.hpp"

namespace planebranch {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }
};

long parse_uint(Cursor& c) {
  c.skip();
  if (c.pos >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
    c.fail("expected a number");
  long v = 0;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
    v = v * 10 + (c.s[c.pos] - '0');
    if (v > (1L << 50)) c.fail("number too large");
    ++c.pos;
  }
  return v;
}

Rat parse_rat(Cursor& c) {
  long n = parse_uint(c);
  if (c.eat('/')) {
    long d = parse_uint(c);
    if (d == 0) c.fail("zero denominator");
    return make_rat(Int(n), Int(d));
  }
  return Rat(n);
}

bool is_term_start(char ch) {
  return std::isdigit(static_cast<unsigned char>(ch)) ||
         std::isalpha(static_cast<unsigned char>(ch));
}

// One additive term over the variables x and y: [coeff] [x[^e]] [y[^e]] with
// optional '*' between pieces and letters in any order/repetition.
void parse_poly_term(Cursor& c, const Rat& sign, Poly2& out) {
  Rat coeff(1);
  long i = 0, j = 0;
  bool any = false;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    coeff = parse_rat(c);
    any = true;
    c.eat('*');
  }
  while (true) {
    char ch = c.peek();
    if (ch == 'x' || ch == 'y') {
      ++c.pos;
      long e = c.eat('^') ? parse_uint(c) : 1;
      (ch == 'x' ? i : j) += e;
      any = true;
      c.eat('*');
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)))
      c.fail("unexpected variable (polynomials use x and y)");
    break;
  }
  if (!any) c.fail("expected a term");
  out.set_coeff(i, j, out.coeff(i, j) + sign * coeff);
}

// One additive term in a single parameter letter; the letter is inferred from
// the first use and must stay consistent (`letter` is the in/out slot).
void parse_series_term(Cursor& c, const Rat& sign, char& letter, Series& out) {
  Rat coeff(1);
  long e = 0;
  bool any = false;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    coeff = parse_rat(c);
    any = true;
    c.eat('*');
  }
  while (true) {
    char ch = c.peek();
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      if (ch == 'x' || ch == 'y')
        c.fail("the right-hand side must use the parameter letter, not x/y");
      if (letter == '\0') letter = ch;
      if (ch != letter) c.fail(std::string("mixed parameter letters ('") + letter +
                               "' and '" + ch + "')");
      ++c.pos;
      e += c.eat('^') ? parse_uint(c) : 1;
      any = true;
      c.eat('*');
      continue;
    }
    break;
  }
  if (!any) c.fail("expected a term");
  Rat v = sign * coeff;
  if (!is_zero(v)) out.set_coeff(e, out.coeff(e) + v);
}

Series parse_series_expr(Cursor& c, char& letter) {
  Series s(Series::kExact);
  Rat sign(1);
  if (c.eat('-')) sign = Rat(-1);
  while (true) {
    if (!is_term_start(c.peek())) c.fail("expected a term");
    parse_series_term(c, sign, letter, s);
    if (c.eat('+')) {
      sign = Rat(1);
    } else if (c.eat('-')) {
      sign = Rat(-1);
    } else {
      break;
    }
  }
  return s;
}

// "x=<series>" or "y=<series>".
std::pair<char, Series> parse_assignment(Cursor& c, char& letter) {
  char target = c.peek();
  if (target != 'x' && target != 'y') c.fail("expected an assignment to x or y");
  ++c.pos;
  if (!c.eat('=')) c.fail("expected '='");
  return {target, parse_series_expr(c, letter)};
}

}  // namespace

std::pair<Series, Series> parse_param_pair(const std::string& text) {
  Cursor c{text};
  char letter = '\0';
  auto first = parse_assignment(c, letter);
  if (!c.eat(';')) c.fail("expected ';' between the two assignments");
  auto second = parse_assignment(c, letter);
  if (!c.eof()) c.fail("unexpected trailing input");
  if (first.first == second.first) c.fail("x and y must each be assigned once");
  const Series& sx = first.first == 'x' ? first.second : second.second;
  const Series& sy = first.first == 'y' ? first.second : second.second;
  return {sx, sy};
}

Parametrization parse_parametrization(const std::string& text) {
  auto [sx, sy] = parse_param_pair(text);
  if (sx.term_count() != 1)
    throw MathError("x must be a pure power of the parameter (c*t^p); other "
                    "x-series are not part of this grammar");
  long p = *sx.order();
  if (p < 1) throw MathError("x must vanish at the origin");
  if (!sy.is_exact_zero() && sy.order() && *sy.order() == 0)
    throw MathError("y must vanish at the origin");
  // A nonunit leading coefficient on x is absorbed by the coordinate scale
  // x -> x / c, which changes none of the computed invariants.
  return convert_to_normal(p, sy);
}

Poly2 parse_poly(const std::string& text) {
  Cursor c{text};
  Poly2 p;
  Rat sign(1);
  if (c.eat('-')) sign = Rat(-1);
  while (true) {
    if (!is_term_start(c.peek())) c.fail("expected a term");
    parse_poly_term(c, sign, p);
    if (c.eat('+')) {
      sign = Rat(1);
    } else if (c.eat('-')) {
      sign = Rat(-1);
    } else {
      break;
    }
  }
  if (!c.eof()) c.fail("unexpected trailing input");
  return p;
}

std::vector<long> parse_long_list(const std::string& text) {
  Cursor c{text};
  std::vector<long> out;
  while (!c.eof()) {
    bool neg = c.eat('-');
    long v = parse_uint(c);
    out.push_back(neg ? -v : v);
    c.eat(',');
  }
  if (out.empty()) c.fail("expected at least one integer");
  return out;
}

std::vector<std::pair<long, long>> parse_pair_list(const std::string& text) {
  Cursor c{text};
  std::vector<std::pair<long, long>> out;
  while (!c.eof()) {
    if (!c.eat('(')) c.fail("expected '('");
    long a = parse_uint(c);
    if (!c.eat(',')) c.fail("expected ','");
    long b = parse_uint(c);
    if (!c.eat(')')) c.fail("expected ')'");
    out.emplace_back(a, b);
    c.eat(',');
  }
  if (out.empty()) c.fail("expected at least one pair");
  return out;
}

}  // namespace planebranch
