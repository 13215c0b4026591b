#include "polyhull/poly_format.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

#include "polyhull/errors.hpp"

namespace polyhull {

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, LParen, RParen, Rel, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
  RawRelation relation = RawRelation::LessEqual;
};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && is_ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (is_digit(c)) {
      std::size_t j = i;
      while (j < line.size() && is_digit(line[j])) ++j;
      if (j < line.size() && line[j] == '/') {
        std::size_t k = j + 1;
        if (k >= line.size() || !is_digit(line[k])) {
          throw SyntaxError("expected digits after '/'", line_no, k + 1);
        }
        while (k < line.size() && is_digit(line[k])) ++k;
        j = k;
      }
      out.push_back({Tok::Number, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    auto two = line.substr(i, 2);
    if (two == "<=" || two == "=<") {
      out.push_back({Tok::Rel, std::string(two), col, RawRelation::LessEqual});
      i += 2;
      continue;
    }
    if (two == ">=" || two == "=>") {
      out.push_back({Tok::Rel, std::string(two), col, RawRelation::GreaterEqual});
      i += 2;
      continue;
    }
    if (two == "==") {
      out.push_back({Tok::Rel, std::string(two), col, RawRelation::Equal});
      i += 2;
      continue;
    }
    switch (c) {
      case '=':
        out.push_back({Tok::Rel, "=", col, RawRelation::Equal});
        break;
      case '<':
      case '>':
        throw StrictInequalityError(line_no, col);
      case '+':
        out.push_back({Tok::Plus, "+", col});
        break;
      case '-':
        out.push_back({Tok::Minus, "-", col});
        break;
      case '*':
        out.push_back({Tok::Star, "*", col});
        break;
      case '(':
        out.push_back({Tok::LParen, "(", col});
        break;
      case ')':
        out.push_back({Tok::RParen, ")", col});
        break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'",
                          line_no, col);
    }
    ++i;
  }
  out.push_back({Tok::End, "", line.size() + 1});
  return out;
}

// coeffs . x + constant
struct Affine {
  std::vector<Rational> coeffs;
  Rational constant;

  bool is_constant() const {
    for (const auto& c : coeffs) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  Affine& operator+=(const Affine& rhs) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += rhs.coeffs[i];
    constant += rhs.constant;
    return *this;
  }

  Affine& scale(const Rational& s) {
    for (auto& c : coeffs) c *= s;
    constant *= s;
    return *this;
  }
};

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, const VarOrder& vars, std::size_t line_no)
      : tokens_(std::move(tokens)), vars_(vars), line_no_(line_no) {}

  RawConstraint constraint() {
    Affine lhs = expr();
    const Token& rel = peek();
    if (rel.kind != Tok::Rel) fail("expected '<=', '=' or '>='", rel);
    ++pos_;
    Affine rhs = expr();
    if (peek().kind == Tok::Rel) fail("chained relations are not supported", peek());
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek());

    // lhs REL rhs  ==>  (lhs - rhs).x REL rhs.c - lhs.c
    Affine diff = lhs;
    diff += Affine(rhs).scale(Rational(-1));
    return RawConstraint{std::move(diff.coeffs), rel.relation, -diff.constant};
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw SyntaxError(message, line_no_, at.column);
  }

  Affine zero() const { return Affine{std::vector<Rational>(vars_.dim()), Rational()}; }

  Affine expr() {
    Affine acc = term();
    for (;;) {
      Tok k = peek().kind;
      if (k != Tok::Plus && k != Tok::Minus) return acc;
      ++pos_;
      Affine next = term();
      if (k == Tok::Minus) next.scale(Rational(-1));
      acc += next;
    }
  }

  // Products must keep the expression linear.
  Affine term() {
    Affine acc = unary();
    while (peek().kind == Tok::Star) {
      const Token& star = peek();
      ++pos_;
      Affine rhs = unary();
      if (acc.is_constant()) {
        acc = std::move(rhs.scale(acc.constant));
      } else if (rhs.is_constant()) {
        acc.scale(rhs.constant);
      } else {
        fail("product of two variable expressions is not linear", star);
      }
    }
    return acc;
  }

  Affine unary() {
    if (peek().kind == Tok::Minus) {
      ++pos_;
      return unary().scale(Rational(-1));
    }
    if (peek().kind == Tok::Plus) {
      ++pos_;
      return unary();
    }
    return primary();
  }

  Affine primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        ++pos_;
        Affine a = zero();
        try {
          a.constant = Rational::parse(t.text);
        } catch (const std::invalid_argument& e) {
          fail(e.what(), t);
        }
        return a;
      }
      case Tok::Ident: {
        ++pos_;
        auto index = vars_.index_of(t.text);
        if (!index) throw UnknownVariable(t.text);
        Affine a = zero();
        a.coeffs[*index] = 1;
        return a;
      }
      case Tok::LParen: {
        ++pos_;
        Affine inner = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'", peek());
        ++pos_;
        return inner;
      }
      case Tok::End:
        fail("unexpected end of line", t);
      default:
        fail("unexpected '" + t.text + "'", t);
    }
  }

  std::vector<Token> tokens_;
  const VarOrder& vars_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

bool is_reserved(const std::string& name) {
  return name == "vars" || name == "true" || name == "false";
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool is_blank(std::string_view line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

VarOrder parse_header(const std::vector<Token>& tokens, std::size_t line_no) {
  if (tokens.front().kind != Tok::Ident || tokens.front().text != "vars") {
    throw SyntaxError("expected 'vars' header", line_no, tokens.front().column);
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; tokens[i].kind != Tok::End; ++i) {
    if (tokens[i].kind != Tok::Ident || is_reserved(tokens[i].text)) {
      throw SyntaxError("expected a variable name", line_no, tokens[i].column);
    }
    names.push_back(tokens[i].text);
  }
  return VarOrder(std::move(names));
}

}  // namespace

Polyhedron parse_poly(std::string_view text) {
  std::optional<VarOrder> vars;
  std::optional<ConstraintSystem> system;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip_comment(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (is_blank(line)) continue;

    std::vector<Token> tokens = tokenize(line, line_no);
    if (!vars) {
      vars = parse_header(tokens, line_no);
      system.emplace(vars->dim());
      continue;
    }
    if (tokens.size() == 2 && tokens[0].kind == Tok::Ident &&
        (tokens[0].text == "false" || tokens[0].text == "true")) {
      if (tokens[0].text == "false") system = ConstraintSystem::empty(vars->dim());
      continue;
    }
    system->add(LineParser(std::move(tokens), *vars, line_no).constraint());
  }
  if (!vars) throw SyntaxError("missing 'vars' header", line_no, 1);
  return Polyhedron(std::move(*vars), std::move(*system));
}

RawConstraint parse_constraint(std::string_view text, const VarOrder& vars) {
  return LineParser(tokenize(strip_comment(text), 1), vars, 1).constraint();
}

std::string format_constraint(const LinearConstraint& c, const VarOrder& vars) {
  Presentation p = present(c);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    const Integer& a = p.coeffs[i];
    if (a == 0) continue;
    Integer magnitude = abs(a);
    if (first) {
      if (a < 0) out << '-';
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    if (magnitude != 1) out << magnitude.get_str() << '*';
    out << vars[i];
    first = false;
  }
  switch (p.relation) {
    case RawRelation::LessEqual:
      out << " <= ";
      break;
    case RawRelation::Equal:
      out << " = ";
      break;
    case RawRelation::GreaterEqual:
      out << " >= ";
      break;
  }
  out << p.rhs.get_str();
  return out.str();
}

std::string format_poly(const Polyhedron& poly) {
  std::ostringstream out;
  out << "vars";
  for (const auto& name : poly.vars().names()) out << ' ' << name;
  out << '\n';
  if (poly.is_empty()) {
    out << "false\n";
    return out.str();
  }
  std::vector<LinearConstraint> rows(poly.system().begin(), poly.system().end());
  sort_canonical(rows);
  for (const auto& c : rows) out << format_constraint(c, poly.vars()) << '\n';
  return out.str();
}

}  // namespace polyhull
