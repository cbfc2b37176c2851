#include "modgen/parse.hpp"

#include <cctype>
#include <sstream>

namespace modgen {

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw parse_error("expected '" + std::string(1, c) + "' at position " +
                        std::to_string(pos) + " in \"" + s + "\"");
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      if (pos == start && std::isdigit(static_cast<unsigned char>(s[pos]))) break;
      ++pos;
    }
    if (pos == start)
      throw parse_error("expected identifier at position " + std::to_string(pos) +
                        " in \"" + s + "\"");
    return s.substr(start, pos - start);
  }
  mpz_class integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start)
      throw parse_error("expected number at position " + std::to_string(pos) +
                        " in \"" + s + "\"");
    return mpz_class(s.substr(start, pos - start));
  }
  unsigned long uint_val() { return integer().get_ui(); }
};

struct PolyParser {
  Lexer& lx;
  const RingPtr& ring;

  Poly expr() {
    Poly acc = lx.accept('-') ? -term() : term();
    for (;;) {
      if (lx.accept('+'))
        acc = acc + term();
      else if (lx.accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  // product of factors; '*' optional
  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (lx.accept('*')) {
        acc = acc * factor();
        continue;
      }
      char c = lx.peek();
      if (c == '(' || c == '_' || std::isalpha(static_cast<unsigned char>(c)) ||
          std::isdigit(static_cast<unsigned char>(c))) {
        acc = acc * factor();
        continue;
      }
      return acc;
    }
  }

  Poly factor() {
    Poly base = atom();
    if (lx.accept('^')) {
      unsigned long n = lx.uint_val();
      base = base.pow(n);
    }
    return base;
  }

  Poly atom() {
    char c = lx.peek();
    if (c == '(') {
      lx.expect('(');
      Poly p = expr();
      lx.expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = lx.integer();
      if (lx.accept('/')) {
        mpz_class den = lx.integer();
        if (den == 0) throw parse_error("zero denominator");
        return Poly::constant(ring, mpq_class(num, den));
      }
      return Poly::constant(ring, mpq_class(num));
    }
    std::string name = lx.ident();
    int idx = ring->var_index(name);
    if (idx < 0) throw parse_error("unknown variable: " + name);
    return Poly::variable(ring, idx);
  }
};

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
  Lexer lx{text};
  PolyParser pp{lx, ring};
  Poly p = pp.expr();
  if (!lx.eof())
    throw parse_error("trailing input at position " + std::to_string(lx.pos) +
                      " in \"" + text + "\"");
  return p;
}

std::vector<Poly> parse_poly_list(const RingPtr& ring, const std::string& text) {
  std::vector<Poly> out;
  int depth = 0;
  std::string cur;
  auto flush = [&] {
    bool blank = true;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.push_back(parse_poly(ring, cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ';' || c == ',') && depth == 0) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

ParsedRing parse_ring(const std::string& text, MonomialOrder order) {
  Lexer lx{text};
  std::string k = lx.ident();
  FieldSpec field;
  if (k == "Q" || k == "QQ") {
    field = FieldSpec::Q();
  } else if (k.size() > 1 && (k[0] == 'F' || k[0] == 'f')) {
    field = FieldSpec::Fp(std::stoul(k.substr(1)));
  } else {
    throw parse_error("unknown field: " + k + " (use Q or F<p>)");
  }
  lx.expect('[');
  std::vector<std::string> vars;
  for (;;) {
    vars.push_back(lx.ident());
    if (!lx.accept(',')) break;
  }
  lx.expect(']');
  RingPtr ring = PolyRing::make(field, vars, order);
  ParsedRing out{ring, {}};
  if (lx.accept('/')) {
    lx.expect('(');
    std::size_t start = lx.pos;
    int depth = 1;
    while (lx.pos < text.size() && depth > 0) {
      if (text[lx.pos] == '(') ++depth;
      if (text[lx.pos] == ')') --depth;
      ++lx.pos;
    }
    if (depth != 0) throw parse_error("unbalanced parentheses in ring quotient");
    std::string inner = text.substr(start, lx.pos - 1 - start);
    out.quotient_gens = parse_poly_list(ring, inner);
  }
  if (!lx.eof()) throw parse_error("trailing input in ring: \"" + text + "\"");
  return out;
}

std::vector<std::vector<Poly>> parse_ideal_list(const RingPtr& ring,
                                                const std::string& text) {
  std::vector<std::vector<Poly>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ';'))
      ++i;
    if (i >= text.size()) break;
    if (text[i] != '(') throw parse_error("expected '(' in prime list");
    std::size_t start = ++i;
    int depth = 1;
    while (i < text.size() && depth > 0) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      ++i;
    }
    if (depth != 0) throw parse_error("unbalanced parentheses in prime list");
    out.push_back(parse_poly_list(ring, text.substr(start, i - 1 - start)));
  }
  return out;
}

ParsedModule parse_module_text(const RingPtr& ring, const std::string& text) {
  Lexer lx{text};
  // optional prefix: module <name> over <ring-text-until-'gens'>
  std::size_t save = lx.pos;
  std::string first;
  try {
    first = lx.ident();
  } catch (const parse_error&) {
    throw parse_error("malformed module text: \"" + text + "\"");
  }
  if (first == "module") {
    lx.ident();  // name, unused
    std::string kw = lx.ident();
    if (kw != "over") throw parse_error("expected 'over' in module text");
    // skip ring description up to the 'gens' keyword
    std::size_t g = text.find("gens", lx.pos);
    if (g == std::string::npos) throw parse_error("expected 'gens' in module text");
    lx.pos = g;
    first = lx.ident();
  } else if (first != "gens") {
    lx.pos = save;
    first = lx.ident();
  }
  if (first != "gens") throw parse_error("expected 'gens' in module text");
  ParsedModule out;
  out.ngens = static_cast<int>(lx.uint_val());
  if (out.ngens < 0) throw parse_error("gens count must be nonnegative");
  std::string kw = lx.ident();
  if (kw != "relations") throw parse_error("expected 'relations' in module text");
  lx.expect('[');
  if (!lx.accept(']')) {
    for (;;) {
      lx.expect('[');
      std::size_t start = lx.pos;
      int depth = 1;
      while (lx.pos < text.size() && depth > 0) {
        if (text[lx.pos] == '[') ++depth;
        if (text[lx.pos] == '(') ++depth;
        if (text[lx.pos] == ')') --depth;
        if (text[lx.pos] == ']') --depth;
        ++lx.pos;
      }
      if (depth != 0) throw parse_error("unbalanced brackets in module text");
      auto entries = parse_poly_list(ring, text.substr(start, lx.pos - 1 - start));
      if (static_cast<int>(entries.size()) != out.ngens)
        throw parse_error("relation column has wrong length");
      out.relations.push_back(entries);
      if (!lx.accept(',')) break;
    }
    lx.expect(']');
  }
  if (!lx.eof()) throw parse_error("trailing input in module text");
  return out;
}

}  // namespace modgen
