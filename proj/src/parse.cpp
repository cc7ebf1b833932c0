#include "cacti/parse.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>

namespace cacti {

ParseError::ParseError(int line, int column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
            ": " + what),
      line(line),
      column(column) {}

namespace {

struct Token {
  enum Kind { ident, number, symbol, end } kind = end;
  std::string text;  // ident/number text, or the single symbol character
  int line = 1;
  int column = 1;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '~';
}

std::vector<Token> lex_line(const std::string& s, int line) {
  static const std::string symbols = "(),*/+-=";
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') break;
    int col = static_cast<int>(i) + 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::number, s.substr(i, j - i), line, col});
      i = j;
    } else if (ident_start(c)) {
      size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Token::ident, s.substr(i, j - i), line, col});
      i = j;
    } else if (symbols.find(c) != std::string::npos) {
      out.push_back({Token::symbol, std::string(1, c), line, col});
      ++i;
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  int end_col = static_cast<int>(s.size()) + 1;
  out.push_back({Token::end, "", line, end_col});
  return out;
}

struct Cursor {
  std::vector<Token> toks;
  size_t pos = 0;

  const Token& peek() const { return toks[pos]; }
  Token take() {
    Token t = toks[pos];
    if (pos + 1 < toks.size()) ++pos;
    return t;
  }
  bool at_end() const { return toks[pos].kind == Token::end; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(peek().line, peek().column, what);
  }
  bool accept_symbol(char c) {
    if (peek().kind == Token::symbol && peek().text[0] == c) {
      take();
      return true;
    }
    return false;
  }
  Token expect_symbol(char c) {
    if (peek().kind != Token::symbol || peek().text[0] != c)
      fail(std::string("expected '") + c + "'");
    return take();
  }
  Token expect_ident(const char* what) {
    if (peek().kind != Token::ident) fail(std::string("expected ") + what);
    return take();
  }
  Token expect_keyword(const std::string& kw) {
    if (peek().kind != Token::ident || peek().text != kw)
      fail("expected '" + kw + "'");
    return take();
  }
  Token expect_number() {
    if (peek().kind != Token::number) fail("expected a number");
    return take();
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }
};

// Order names like path-lex lex as idents separated by '-'.
Token parse_hyphen_name(Cursor& c, const char* what) {
  Token t = c.expect_ident(what);
  while (c.peek().kind == Token::symbol && c.peek().text[0] == '-') {
    c.take();
    t.text += "-" + c.expect_ident(what).text;
  }
  return t;
}

int parse_small_int(Cursor& c, const char* what) {
  bool neg = c.accept_symbol('-');
  Token t = c.expect_number();
  if (t.text.size() > 9) throw ParseError(t.line, t.column, std::string(what) + " out of range");
  int v = std::stoi(t.text);
  return neg ? -v : v;
}

// `p`, `p/q`, or `r mod p`, with an optional leading minus.
Scalar parse_scalar(Cursor& c, const FieldSpec& F) {
  bool neg = c.accept_symbol('-');
  Token t = c.expect_number();
  BigInt num(t.text);
  if (neg) num = -num;
  if (c.accept_symbol('/')) {
    Token d = c.expect_number();
    BigInt den(d.text);
    if (den == 0) throw ParseError(d.line, d.column, "zero denominator");
    return Scalar::of_fraction(num, den, F);
  }
  if (c.peek().kind == Token::ident && c.peek().text == "mod") {
    c.take();
    Token p = c.expect_number();
    if (F.kind != FieldKind::prime_field || p.text != std::to_string(F.characteristic))
      throw ParseError(p.line, p.column,
                       "scalar is given mod " + p.text + " but the run uses " + F.str());
    return Scalar::of_big(num, F);
  }
  return Scalar::of_big(num, F);
}

// --- coalgebra files ---------------------------------------------------------

struct CoalgebraBuilder {
  FieldSpec field;
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::map<std::string, int> index;
  int unit_index = -1;
  std::map<int, Scalar> counit;
  std::map<int, std::vector<CoproductTerm>> coproduct;

  int lookup(const Token& t) const {
    auto it = index.find(t.text);
    if (it == index.end())
      throw ParseError(t.line, t.column, "unknown basis element '" + t.text + "'");
    return it->second;
  }
};

void coalgebra_line(CoalgebraBuilder& b, Cursor& c) {
  Token kw = c.expect_ident("a declaration keyword");
  if (kw.text == "basis") {
    Token name = c.expect_ident("a basis element name");
    if (b.index.count(name.text))
      throw ParseError(name.line, name.column, "duplicate basis element '" + name.text + "'");
    c.expect_keyword("deg");
    int d = parse_small_int(c, "degree");
    c.expect_end();
    b.index[name.text] = static_cast<int>(b.names.size());
    b.names.push_back(name.text);
    b.degrees.push_back(d);
  } else if (kw.text == "unit") {
    Token name = c.expect_ident("a basis element name");
    if (b.unit_index >= 0)
      throw ParseError(name.line, name.column, "the unit is already declared");
    b.unit_index = b.lookup(name);
    c.expect_end();
  } else if (kw.text == "counit") {
    Token name = c.expect_ident("a basis element name");
    int i = b.lookup(name);
    if (b.counit.count(i))
      throw ParseError(name.line, name.column, "duplicate counit value for '" + name.text + "'");
    b.counit.emplace(i, parse_scalar(c, b.field));
    c.expect_end();
  } else if (kw.text == "coproduct") {
    Token name = c.expect_ident("a basis element name");
    int i = b.lookup(name);
    if (b.coproduct.count(i))
      throw ParseError(name.line, name.column,
                       "duplicate coproduct line for '" + name.text + "'");
    c.expect_symbol('=');
    std::vector<CoproductTerm> terms;
    if (c.peek().kind == Token::number && c.peek().text == "0" &&
        c.toks[c.pos + 1].kind == Token::end) {
      c.take();
    } else {
      do {
        Scalar coeff = parse_scalar(c, b.field);
        c.expect_symbol('*');
        int left = b.lookup(c.expect_ident("a basis element name"));
        c.expect_symbol('(');
        c.expect_keyword("x");
        c.expect_symbol(')');
        int right = b.lookup(c.expect_ident("a basis element name"));
        terms.push_back({coeff, left, right});
      } while (c.accept_symbol('+'));
    }
    c.expect_end();
    b.coproduct.emplace(i, std::move(terms));
  } else {
    throw ParseError(kw.line, kw.column, "unknown declaration '" + kw.text + "'");
  }
}

// --- presentation files ------------------------------------------------------

struct TermChild {
  bool leaf = true;
  int value = 0;  // leaf label
  int gen = -1;   // inner generator index
  int l0 = 0, l1 = 0;
  int line = 1, column = 1;
};

int lookup_generator(const std::vector<SymmetricGenerator>& gens, const Token& t) {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == t.text) return static_cast<int>(i);
  throw ParseError(t.line, t.column, "unknown generator '" + t.text + "'");
}

TermChild parse_child(Cursor& c, const std::vector<SymmetricGenerator>& gens) {
  TermChild ch;
  ch.line = c.peek().line;
  ch.column = c.peek().column;
  if (c.peek().kind == Token::number) {
    ch.value = parse_small_int(c, "leaf label");
    return ch;
  }
  Token name = c.expect_ident("a leaf label or generator name");
  ch.leaf = false;
  ch.gen = lookup_generator(gens, name);
  c.expect_symbol('(');
  if (c.peek().kind != Token::number)
    c.fail("relations are quadratic: nesting depth is at most two");
  ch.l0 = parse_small_int(c, "leaf label");
  c.expect_symbol(',');
  if (c.peek().kind != Token::number)
    c.fail("relations are quadratic: nesting depth is at most two");
  ch.l1 = parse_small_int(c, "leaf label");
  c.expect_symbol(')');
  return ch;
}

RelationTerm parse_term(Cursor& c, const std::vector<SymmetricGenerator>& gens,
                        const FieldSpec& F) {
  RelationTerm t;
  if (c.peek().kind == Token::number) {
    t.coeff = parse_scalar(c, F);
    c.expect_symbol('*');
  } else {
    t.coeff = Scalar::one(F);
  }
  Token outer = c.expect_ident("a generator name");
  t.outer = lookup_generator(gens, outer);
  c.expect_symbol('(');
  TermChild a = parse_child(c, gens);
  c.expect_symbol(',');
  TermChild b = parse_child(c, gens);
  c.expect_symbol(')');
  if (a.leaf && b.leaf)
    throw ParseError(outer.line, outer.column,
                     "a quadratic relation term needs a nested generator application");
  if (!a.leaf && !b.leaf)
    throw ParseError(b.line, b.column,
                     "only one nested application is allowed in a quadratic term");
  if (a.leaf) {
    t.inner = b.gen;
    t.slot = 2;
    t.leaves = {a.value, b.l0, b.l1};
  } else {
    t.inner = a.gen;
    t.slot = 1;
    t.leaves = {a.l0, a.l1, b.value};
  }
  std::array<int, 3> sorted = t.leaves;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3})
    throw ParseError(outer.line, outer.column, "leaves must use 1, 2, 3 exactly once");
  return t;
}

SymRelation parse_element(Cursor& c, const std::vector<SymmetricGenerator>& gens,
                          const FieldSpec& F) {
  SymRelation rel;
  bool negate = c.accept_symbol('-');
  for (;;) {
    RelationTerm t = parse_term(c, gens, F);
    if (negate) t.coeff = -t.coeff;
    rel.push_back(std::move(t));
    if (c.accept_symbol('+'))
      negate = false;
    else if (c.accept_symbol('-'))
      negate = true;
    else
      break;
  }
  c.expect_end();
  return rel;
}

}  // namespace

CoalgebraSpec parse_coalgebra(const std::string& text, const FieldSpec& field) {
  CoalgebraBuilder b;
  b.field = field;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    Cursor c{lex_line(line, lineno)};
    if (c.at_end()) continue;
    coalgebra_line(b, c);
  }
  if (b.names.empty()) throw ParseError(std::max(lineno, 1), 1, "no basis elements declared");
  if (b.unit_index < 0) throw ParseError(lineno, 1, "the file declares no unit");
  CoalgebraSpec out;
  out.field = field;
  out.names = std::move(b.names);
  out.degrees = std::move(b.degrees);
  out.unit_index = b.unit_index;
  out.counit.assign(out.names.size(), Scalar::zero(field));
  for (auto& [i, v] : b.counit) out.counit[i] = v;
  out.coproduct.resize(out.names.size());
  for (auto& [i, terms] : b.coproduct) out.coproduct[i] = std::move(terms);
  return out;
}

ParsedPresentation parse_presentation(const std::string& text, const FieldSpec& field) {
  ParsedPresentation out;
  out.sym.field = field;
  std::vector<std::pair<Token, std::string>> counted_tokens;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool explicit_decl = false;
  Token preset_token;
  while (std::getline(in, line)) {
    ++lineno;
    Cursor c{lex_line(line, lineno)};
    if (c.at_end()) continue;
    Token kw = c.expect_ident("a declaration keyword");
    if (kw.text == "preset") {
      Token name = c.expect_ident("a preset name");
      c.expect_end();
      if (!out.preset.empty())
        throw ParseError(name.line, name.column, "duplicate preset declaration");
      const auto& known = operad_preset_names();
      if (std::find(known.begin(), known.end(), name.text) == known.end())
        throw ParseError(name.line, name.column, "unknown preset '" + name.text + "'");
      out.preset = name.text;
      preset_token = kw;
      continue;
    }
    explicit_decl = true;
    if (kw.text == "generator") {
      Token name = c.expect_ident("a generator name");
      for (const auto& g : out.sym.gens)
        if (g.name == name.text)
          throw ParseError(name.line, name.column, "duplicate generator '" + name.text + "'");
      c.expect_keyword("arity");
      Token ar = c.expect_number();
      if (ar.text != "2")
        throw ParseError(ar.line, ar.column, "only binary generators are supported");
      c.expect_keyword("degree");
      int deg = parse_small_int(c, "degree");
      c.expect_keyword("symmetry");
      Token sym = c.expect_ident("none, symmetric, or antisymmetric");
      Symmetry s;
      if (sym.text == "none")
        s = Symmetry::none;
      else if (sym.text == "symmetric")
        s = Symmetry::symmetric;
      else if (sym.text == "antisymmetric")
        s = Symmetry::antisymmetric;
      else
        throw ParseError(sym.line, sym.column,
                         "symmetry must be none, symmetric, or antisymmetric");
      c.expect_end();
      out.sym.gens.push_back({name.text, deg, s});
    } else if (kw.text == "order") {
      Token name = parse_hyphen_name(c, "an order name");
      if (!out.order_name.empty())
        throw ParseError(name.line, name.column, "duplicate order declaration");
      static const std::array<const char*, 5> known = {
          "path-lex", "path-lex-tilde-first", "depth-lex", "depth-lex-flipped",
          "count-first"};
      if (std::find_if(known.begin(), known.end(),
                       [&](const char* k) { return name.text == k; }) == known.end())
        throw ParseError(name.line, name.column, "unknown order '" + name.text + "'");
      out.order_name = name.text;
      while (!c.at_end()) {
        Token g = c.expect_ident("a generator name");
        counted_tokens.emplace_back(g, g.text);
      }
      if (out.order_name != "count-first" && !counted_tokens.empty())
        throw ParseError(counted_tokens[0].first.line, counted_tokens[0].first.column,
                         "counted generators apply to count-first only");
    } else if (kw.text == "relation") {
      out.sym.relations.push_back(parse_element(c, out.sym.gens, field));
    } else {
      throw ParseError(kw.line, kw.column, "unknown declaration '" + kw.text + "'");
    }
  }
  if (!out.preset.empty() && explicit_decl)
    throw ParseError(preset_token.line, preset_token.column,
                     "a preset declaration replaces explicit generators and relations");
  if (out.preset.empty() && out.sym.gens.empty())
    throw ParseError(std::max(lineno, 1), 1, "no generators declared");
  for (const auto& [tok, name] : counted_tokens) {
    bool found = false;
    for (const auto& g : out.sym.gens) found = found || g.name == name;
    if (!found) throw ParseError(tok.line, tok.column, "unknown generator '" + name + "'");
    out.counted.push_back(name);
  }
  return out;
}

OperadPreset resolve_presentation(const ParsedPresentation& p, const FieldSpec& field,
                                  const CoalgebraSpec& coalgebra) {
  if (!p.preset.empty()) return operad_preset(p.preset, field, coalgebra);
  OperadPreset out;
  out.name = "file";
  out.sym = p.sym;
  out.sym.field = field;
  out.order_name = p.order_name.empty() ? "path-lex" : p.order_name;
  ShuffleAlphabet alph = expand_generators(out.sym.gens);
  out.order = order_by_name(out.order_name, alph, p.counted);
  out.pres = expand_presentation(out.sym, out.order);
  return out;
}

GroupSpec parse_group_table(const std::string& text) {
  std::vector<std::vector<int>> table;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    Cursor c{lex_line(line, lineno)};
    if (c.at_end()) continue;
    std::vector<int> row;
    while (!c.at_end()) row.push_back(parse_small_int(c, "table entry"));
    table.push_back(std::move(row));
  }
  if (table.empty()) throw ParseError(std::max(lineno, 1), 1, "empty multiplication table");
  return GroupSpec::finite(table);
}

}  // namespace cacti
