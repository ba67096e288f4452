#include "invdec/parser.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "invdec/errors.hpp"

namespace invdec {

namespace {

enum class Tok {
  number,
  ident,
  plus,
  minus,
  star,
  slash,
  caret,
  lparen,
  rparen,
  lbracket,
  rbracket,
  comma,
  colon,
  semicolon,
  end
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> toks;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    std::size_t tl = line, tc = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      toks.push_back({Tok::number, text.substr(i, j - i), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isalnum(static_cast<unsigned char>(text[j])))
        ++j;
      toks.push_back({Tok::ident, text.substr(i, j - i), tl, tc});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case '[': kind = Tok::lbracket; break;
      case ']': kind = Tok::rbracket; break;
      case ',': kind = Tok::comma; break;
      case ':': kind = Tok::colon; break;
      case ';': kind = Tok::semicolon; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", tl,
                         tc);
    }
    toks.push_back({kind, std::string(1, c), tl, tc});
    advance(1);
  }
  toks.push_back({Tok::end, "", line, col});
  return toks;
}

class Parser {
public:
  Parser(std::vector<Token> toks, std::size_t arity)
      : toks_(std::move(toks)), arity_(arity) {}

  MultiRationalFunction parse_full_expression() {
    MultiRationalFunction r = expression();
    expect(Tok::end, "end of input");
    return r;
  }

  FieldDescriptor parse_descriptor() {
    expect_keyword("field");
    expect(Tok::colon, "':'");
    const Token& poly_start = peek();
    MultiRationalFunction f = expression();
    UniPoly minpoly = as_monic_integer_poly(f, poly_start);
    expect(Tok::semicolon, "';'");
    expect_keyword("root");
    expect_keyword("in");
    expect(Tok::lbracket, "'['");
    Rational lo = signed_rational();
    expect(Tok::comma, "','");
    const Token& hi_tok = peek();
    Rational hi = signed_rational();
    expect(Tok::rbracket, "']'");
    expect(Tok::end, "end of input");
    if (!(lo < hi))
      throw ParseError("interval endpoints must satisfy lo < hi", hi_tok.line,
                       hi_tok.col);
    return {std::move(minpoly), Interval(lo, hi)};
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind)
      throw ParseError("expected " + what, peek().line, peek().col);
    take();
  }

  void expect_keyword(const std::string& word) {
    if (peek().kind != Tok::ident || peek().text != word)
      throw ParseError("expected '" + word + "'", peek().line, peek().col);
    take();
  }

  MultiRationalFunction expression() {
    MultiRationalFunction r = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      bool add = take().kind == Tok::plus;
      MultiRationalFunction rhs = term();
      r = add ? r + rhs : r - rhs;
    }
    return r;
  }

  MultiRationalFunction term() {
    MultiRationalFunction r = unary();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const Token& op = take();
      MultiRationalFunction rhs = unary();
      if (op.kind == Tok::star) {
        r = r * rhs;
      } else {
        if (rhs.is_zero())
          throw ParseError("division by the zero polynomial", op.line, op.col);
        r = r / rhs;
      }
    }
    return r;
  }

  MultiRationalFunction unary() {
    if (peek().kind == Tok::minus) {
      take();
      return -unary();
    }
    return power();
  }

  MultiRationalFunction power() {
    MultiRationalFunction base = primary();
    if (peek().kind == Tok::caret) {
      take();
      if (peek().kind != Tok::number)
        throw ParseError("exponent must be a non-negative integer literal",
                         peek().line, peek().col);
      const Token& e = take();
      unsigned long n;
      try {
        n = std::stoul(e.text);
      } catch (const std::out_of_range&) {
        throw ParseError("exponent out of range", e.line, e.col);
      }
      MultiRationalFunction acc(arity_, Rational(1));
      MultiRationalFunction sq = base;
      for (; n; n >>= 1) {
        if (n & 1) acc = acc * sq;
        if (n > 1) sq = sq * sq;
      }
      base = acc;
    }
    return base;
  }

  MultiRationalFunction primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        take();
        return MultiRationalFunction(arity_, Rational(t.text));
      }
      case Tok::ident: {
        take();
        return MultiRationalFunction(MultiPoly::variable(arity_, var_index(t)));
      }
      case Tok::lparen: {
        take();
        MultiRationalFunction r = expression();
        expect(Tok::rparen, "')'");
        return r;
      }
      default:
        throw ParseError("expected a number, variable, or '('", t.line, t.col);
    }
  }

  // 0-based variable index for `x` (arity 1 only) or `x1..xm`
  std::size_t var_index(const Token& t) {
    const std::string& s = t.text;
    if (s == "x") {
      if (arity_ == 1) return 0;
      throw ParseError("bare 'x' needs arity 1; use x1..x" +
                           std::to_string(arity_),
                       t.line, t.col);
    }
    if (s.size() > 1 && s[0] == 'x' &&
        std::all_of(s.begin() + 1, s.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      if (s[1] == '0')
        throw ParseError("variable indices start at 1", t.line, t.col);
      unsigned long k;
      try {
        k = std::stoul(s.substr(1));
      } catch (const std::out_of_range&) {
        throw ParseError("variable index out of range", t.line, t.col);
      }
      if (k > arity_)
        throw ParseError("variable " + s + " exceeds arity " +
                             std::to_string(arity_),
                         t.line, t.col);
      return k - 1;
    }
    throw ParseError("unknown identifier '" + s + "'", t.line, t.col);
  }

  Rational signed_rational() {
    bool neg = false;
    if (peek().kind == Tok::minus) {
      take();
      neg = true;
    }
    if (peek().kind != Tok::number)
      throw ParseError("expected a rational literal", peek().line, peek().col);
    const Token& num = take();
    Rational q(num.text);
    if (peek().kind == Tok::slash) {
      take();
      if (peek().kind != Tok::number)
        throw ParseError("expected a denominator", peek().line, peek().col);
      const Token& den = take();
      Rational d(den.text);
      if (sign_of(d) == Sign::zero)
        throw ParseError("zero denominator in literal", den.line, den.col);
      q = q / d;
    }
    return neg ? -q : q;
  }

  UniPoly as_monic_integer_poly(const MultiRationalFunction& f,
                                const Token& where) {
    RationalFunction r = f.to_univariate();
    if (r.den().degree() != 0 || !(r.den() == UniPoly(1)))
      throw ParseError("the field polynomial must have integer coefficients",
                       where.line, where.col);
    const UniPoly& p = r.num();
    if (p.is_zero() || !(p.leading() == Rational(1)))
      throw ParseError("the field polynomial must be monic", where.line,
                       where.col);
    return p;
  }

  std::vector<Token> toks_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiRationalFunction parse_expr(const std::string& text, std::size_t arity) {
  if (arity < 1) throw DomainError("arity must be at least 1");
  return Parser(lex(text), arity).parse_full_expression();
}

FieldDescriptor parse_field_descriptor(const std::string& text) {
  return Parser(lex(text), 1).parse_descriptor();
}

}  // namespace invdec
