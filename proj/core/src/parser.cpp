#include "flac/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace flac {

namespace {

enum class Tok {
  ident, kw_unit, kw_says, kw_forall, kw_case, kw_of, kw_proj1, kw_proj2,
  kw_inj1, kw_inj2, kw_bind, kw_in, kw_assume, kw_eta, kw_sealed, kw_where,
  kw_top, kw_bot,
  lparen, rparen, lbrack, rbrack, lbrace, rbrace, langle, rangle,
  comma, dot, colon, pipe, plus, star, at, eq, lambda, tylambda, disj,
  arrow, larrow, deleg, end
};

struct Token {
  Tok tok;
  std::string text;
  Span span;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '%'; }
bool ident_cont(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '#';
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok t, std::string s, int l, int c) { out.push_back({t, std::move(s), {l, c}}); };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') { ++line; col = 1; ++i; continue; }
    if (std::isspace(static_cast<unsigned char>(c))) { ++col; ++i; continue; }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    int l = line, co = col;
    auto two = [&](const char* s) {
      return i + 1 < text.size() && text[i] == s[0] && text[i + 1] == s[1];
    };
    if (two("/\\")) { push(Tok::tylambda, "/\\", l, co); i += 2; col += 2; continue; }
    if (two("\\/")) { push(Tok::disj, "\\/", l, co); i += 2; col += 2; continue; }
    if (two("|>")) { push(Tok::deleg, "|>", l, co); i += 2; col += 2; continue; }
    if (two("->")) { push(Tok::arrow, "->", l, co); i += 2; col += 2; continue; }
    if (two("<-")) { push(Tok::larrow, "<-", l, co); i += 2; col += 2; continue; }
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && ident_cont(text[j])) ++j;
      std::string word = text.substr(i, j - i);
      Tok t = Tok::ident;
      if (word == "unit") t = Tok::kw_unit;
      else if (word == "says") t = Tok::kw_says;
      else if (word == "forall") t = Tok::kw_forall;
      else if (word == "case") t = Tok::kw_case;
      else if (word == "of") t = Tok::kw_of;
      else if (word == "proj1") t = Tok::kw_proj1;
      else if (word == "proj2") t = Tok::kw_proj2;
      else if (word == "inj1") t = Tok::kw_inj1;
      else if (word == "inj2") t = Tok::kw_inj2;
      else if (word == "bind") t = Tok::kw_bind;
      else if (word == "in") t = Tok::kw_in;
      else if (word == "assume") t = Tok::kw_assume;
      else if (word == "eta") t = Tok::kw_eta;
      else if (word == "sealed") t = Tok::kw_sealed;
      else if (word == "where") t = Tok::kw_where;
      else if (word == "top") t = Tok::kw_top;
      else if (word == "bot") t = Tok::kw_bot;
      push(t, std::move(word), l, co);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    Tok t;
    switch (c) {
      case '(': t = Tok::lparen; break;
      case ')': t = Tok::rparen; break;
      case '[': t = Tok::lbrack; break;
      case ']': t = Tok::rbrack; break;
      case '{': t = Tok::lbrace; break;
      case '}': t = Tok::rbrace; break;
      case '<': t = Tok::langle; break;
      case '>': t = Tok::rangle; break;
      case ',': t = Tok::comma; break;
      case '.': t = Tok::dot; break;
      case ':': t = Tok::colon; break;
      case '|': t = Tok::pipe; break;
      case '+': t = Tok::plus; break;
      case '*': t = Tok::star; break;
      case '@': t = Tok::at; break;
      case '=': t = Tok::eq; break;
      case '\\': t = Tok::lambda; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", {l, co});
    }
    push(t, std::string(1, c), l, co);
    ++i;
    ++col;
  }
  out.push_back({Tok::end, "", {line, col}});
  return out;
}

// An identifier names a type variable iff its first alphabetic
// character is uppercase.
bool is_tyvar_name(const std::string& s) {
  for (char c : s)
    if (std::isalpha(static_cast<unsigned char>(c)))
      return std::isupper(static_cast<unsigned char>(c));
  return false;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, bool extended) : toks_(std::move(toks)), extended_(extended) {}

  Principal principal() { return p_disj(); }

  Type type() { return type_fun(); }

  Term term() { return term_low(); }

  void expect_end(const char* what) {
    if (peek().tok != Tok::end)
      throw ParseError(std::string("trailing input after ") + what, peek().span);
  }

  Delegation delegation() {
    Principal sup = principal();
    expect(Tok::deleg, "'|>'");
    Principal inf = principal();
    return {sup, inf};
  }

  DelegationContext delegation_context() {
    std::vector<Delegation> items;
    bool bracketed = accept(Tok::lbrack);
    if (bracketed && accept(Tok::rbrack)) return DelegationContext::of({});
    if (peek().tok != Tok::end) {
      items.push_back(delegation());
      while (accept(Tok::comma)) items.push_back(delegation());
    }
    if (bracketed) expect(Tok::rbrack, "']'");
    return DelegationContext::of(std::move(items));
  }

  std::vector<std::pair<std::string, Type>> gamma() {
    std::vector<std::pair<std::string, Type>> out;
    bool bracketed = accept(Tok::lbrack);
    if (bracketed && accept(Tok::rbrack)) return out;
    if (peek().tok != Tok::end) {
      out.push_back(gamma_entry());
      while (accept(Tok::comma)) out.push_back(gamma_entry());
    }
    if (bracketed) expect(Tok::rbrack, "']'");
    return out;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool extended_;

  const Token& peek(int ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok t) {
    if (peek().tok == t) { ++pos_; return true; }
    return false;
  }
  Token expect(Tok t, const char* what) {
    if (peek().tok != t) throw ParseError(std::string("expected ") + what, peek().span);
    return next();
  }
  std::size_t save() const { return pos_; }
  void restore(std::size_t p) { pos_ = p; }

  std::pair<std::string, Type> gamma_entry() {
    Token id = expect(Tok::ident, "variable name");
    expect(Tok::colon, "':'");
    return {id.text, type()};
  }

  // ---- principals ----

  Principal p_disj() {
    Principal acc = p_conj();
    while (accept(Tok::disj)) acc = Principal::disj(acc, p_conj());
    return acc;
  }

  Principal p_conj() {
    Principal acc = p_atom();
    while (accept(Tok::tylambda)) acc = Principal::conj(acc, p_atom());
    return acc;
  }

  Principal p_atom() {
    Principal p = Principal::bot();
    if (accept(Tok::kw_top)) p = Principal::top();
    else if (accept(Tok::kw_bot)) p = Principal::bot();
    else if (peek().tok == Tok::ident) p = Principal::name(next().text);
    else if (accept(Tok::lparen)) {
      p = p_disj();
      expect(Tok::rparen, "')'");
    } else {
      throw ParseError("expected a principal", peek().span);
    }
    for (;;) {
      if (accept(Tok::arrow)) p = p.project(Projection::conf);
      else if (accept(Tok::larrow)) p = p.project(Projection::integ);
      else break;
    }
    return p;
  }

  // ---- types ----

  Type type_fun() {
    if (accept(Tok::kw_forall)) {
      Token v = expect(Tok::ident, "type variable");
      if (!is_tyvar_name(v.text))
        throw ParseError("type variables must start with an uppercase letter", v.span);
      expect(Tok::lbrack, "'['");
      Principal pc = principal();
      expect(Tok::rbrack, "']'");
      expect(Tok::dot, "'.'");
      return Type::forall(v.text, pc, type_fun());
    }
    Type lhs = type_sum();
    if (peek().tok == Tok::lbrack) {
      // only a function arrow if "[pc]" is followed by "->"
      std::size_t mark = save();
      next();
      try {
        Principal pc = principal();
        expect(Tok::rbrack, "']'");
        expect(Tok::arrow, "'->'");
        return Type::fun(lhs, pc, type_fun());
      } catch (const ParseError&) {
        restore(mark);
      }
    }
    return lhs;
  }

  Type type_sum() {
    Type acc = type_atom();
    while (accept(Tok::plus)) acc = Type::sum(acc, type_atom());
    return acc;
  }

  Type type_atom() {
    if (accept(Tok::kw_unit)) return Type::unit();
    if (peek().tok == Tok::kw_forall) return type_fun();
    // principal-led: says / acts-for
    std::size_t mark = save();
    try {
      Principal p = principal();
      if (accept(Tok::kw_says)) return Type::says(p, type_atom());
      if (accept(Tok::deleg)) return Type::acts_for(p, principal());
      throw ParseError("not a says/acts-for type", peek().span);
    } catch (const ParseError&) {
      restore(mark);
    }
    if (accept(Tok::lparen)) {
      Type t = type_fun();
      if (accept(Tok::comma)) {
        Type r = type_fun();
        expect(Tok::rparen, "')'");
        return Type::prod(t, r);
      }
      expect(Tok::rparen, "')'");
      return t;
    }
    Token id = expect(Tok::ident, "a type");
    if (!is_tyvar_name(id.text))
      throw ParseError("type variables must start with an uppercase letter", id.span);
    return Type::tyvar(id.text);
  }

  // ---- terms ----

  Term term_low() {
    Span s = peek().span;
    switch (peek().tok) {
      case Tok::lambda: {
        next();
        Token v = expect(Tok::ident, "variable");
        if (is_tyvar_name(v.text))
          throw ParseError("term variables must start with a lowercase letter", v.span);
        expect(Tok::colon, "':'");
        Type ty = type();
        expect(Tok::lbrack, "'['");
        Principal pc = principal();
        expect(Tok::rbrack, "']'");
        expect(Tok::dot, "'.'");
        return Term::lam(v.text, ty, pc, term_low(), s);
      }
      case Tok::tylambda: {
        next();
        Token v = expect(Tok::ident, "type variable");
        if (!is_tyvar_name(v.text))
          throw ParseError("type variables must start with an uppercase letter", v.span);
        expect(Tok::lbrack, "'['");
        Principal pc = principal();
        expect(Tok::rbrack, "']'");
        expect(Tok::dot, "'.'");
        return Term::tlam(v.text, pc, term_low(), s);
      }
      case Tok::kw_bind: {
        next();
        Token v = expect(Tok::ident, "variable");
        if (is_tyvar_name(v.text))
          throw ParseError("term variables must start with a lowercase letter", v.span);
        expect(Tok::eq, "'='");
        Term e = term_low();
        expect(Tok::kw_in, "'in'");
        return Term::bind(v.text, e, term_low(), s);
      }
      case Tok::kw_assume: {
        next();
        Term e = term_low();
        expect(Tok::kw_in, "'in'");
        return Term::assume(e, term_low(), s);
      }
      case Tok::kw_case: {
        next();
        Term scrut = term_low();
        expect(Tok::kw_of, "'of'");
        Token lv = expect(Tok::ident, "variable");
        expect(Tok::dot, "'.'");
        Term l = term_low();
        expect(Tok::pipe, "'|'");
        Token rv = expect(Tok::ident, "variable");
        expect(Tok::dot, "'.'");
        Term r = term_low();
        return Term::case_of(scrut, lv.text, l, rv.text, r, s);
      }
      default: return term_where();
    }
  }

  Term term_where() {
    Term acc = term_app();
    while (peek().tok == Tok::kw_where) {
      if (!extended_)
        throw ParseError("'where' terms are produced by evaluation, not source syntax",
                         peek().span);
      Span s = next().span;
      acc = Term::where(acc, term_atom(), s);
    }
    return acc;
  }

  Term term_app() {
    Term acc = term_atom();
    for (;;) {
      Span s = peek().span;
      if (peek().tok == Tok::at) {
        next();
        acc = Term::tapp(acc, type_atom(), s);
        continue;
      }
      if (peek().tok == Tok::kw_unit) {
        next();
        acc = Term::tapp(acc, Type::unit(), s);
        continue;
      }
      if (peek().tok == Tok::ident && is_tyvar_name(peek().text)) {
        acc = Term::tapp(acc, Type::tyvar(next().text), s);
        continue;
      }
      if (starts_atom(peek().tok)) {
        acc = Term::app(acc, term_atom(), s);
        continue;
      }
      return acc;
    }
  }

  static bool starts_atom(Tok t) {
    switch (t) {
      case Tok::lparen:
      case Tok::langle:
      case Tok::lbrace:
      case Tok::lbrack:
      case Tok::star:
      case Tok::ident:
      case Tok::kw_proj1:
      case Tok::kw_proj2:
      case Tok::kw_inj1:
      case Tok::kw_inj2:
      case Tok::kw_eta:
      case Tok::kw_sealed: return true;
      default: return false;
    }
  }

  void require_extended(const char* what, Span s) {
    if (!extended_)
      throw ParseError(std::string(what) + " is not source syntax", s);
  }

  Term term_atom() {
    Span s = peek().span;
    switch (peek().tok) {
      case Tok::ident: {
        Token id = next();
        if (is_tyvar_name(id.text))
          throw ParseError("type variable in term position", id.span);
        return Term::var(id.text, s);
      }
      case Tok::lparen: {
        next();
        if (accept(Tok::rparen)) return Term::unit_val(s);
        Term e = term_low();
        if (peek().tok == Tok::pipe) {
          require_extended("a bracket pair", peek().span);
          next();
          Term r = term_low();
          expect(Tok::rparen, "')'");
          return Term::bracket(e, r, s);
        }
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::langle: {
        next();
        std::size_t mark = save();
        try {
          Principal sup = principal();
          expect(Tok::deleg, "'|>'");
          Principal inf = principal();
          expect(Tok::rangle, "'>'");
          return Term::del(sup, inf, s);
        } catch (const ParseError&) {
          restore(mark);
        }
        Term l = term_low();
        expect(Tok::comma, "','");
        Term r = term_low();
        expect(Tok::rangle, "'>'");
        return Term::pair(l, r, s);
      }
      case Tok::lbrace: {
        require_extended("a protection context", s);
        next();
        Principal l = principal();
        expect(Tok::pipe, "'|'");
        Term e = term_low();
        expect(Tok::rbrace, "'}'");
        return Term::prot_ctx(l, e, s);
      }
      case Tok::lbrack: {
        require_extended("a hole", s);
        next();
        expect(Tok::star, "'*'");
        Type t = type();
        expect(Tok::rbrack, "']'");
        return Term::hole(t, s);
      }
      case Tok::star: {
        require_extended("an opaque marker", s);
        next();
        return Term::opaque(s);
      }
      case Tok::kw_proj1:
      case Tok::kw_proj2: {
        int i = next().tok == Tok::kw_proj1 ? 1 : 2;
        return Term::proj(i, term_atom(), s);
      }
      case Tok::kw_inj1:
      case Tok::kw_inj2: {
        int i = next().tok == Tok::kw_inj1 ? 1 : 2;
        expect(Tok::at, "'@'");
        Type t = type_atom();
        if (t.kind() != Type::Kind::sum)
          throw ParseError("injection annotation must be a sum type", s);
        return Term::inj(i, t, term_atom(), s);
      }
      case Tok::kw_eta: {
        next();
        expect(Tok::lbrack, "'['");
        Principal l = principal();
        expect(Tok::rbrack, "']'");
        return Term::unit_m(l, term_atom(), s);
      }
      case Tok::kw_sealed: {
        require_extended("a sealed value", s);
        next();
        expect(Tok::lbrack, "'['");
        Principal l = principal();
        expect(Tok::rbrack, "']'");
        return Term::sealed(l, term_atom(), s);
      }
      default:
        throw ParseError("expected a term", s);
    }
  }
};

Parser make_parser(const std::string& text, bool extended) {
  return Parser(lex(text), extended);
}

}  // namespace

Principal parse_principal(const std::string& text) {
  Parser p = make_parser(text, false);
  Principal r = p.principal();
  p.expect_end("principal");
  return r;
}

Type parse_type(const std::string& text) {
  Parser p = make_parser(text, false);
  Type r = p.type();
  p.expect_end("type");
  return r;
}

Term parse_term(const std::string& text, bool extended) {
  Parser p = make_parser(text, extended);
  Term r = p.term();
  p.expect_end("term");
  return r;
}

Delegation parse_delegation(const std::string& text) {
  Parser p = make_parser(text, false);
  Delegation d = p.delegation();
  p.expect_end("delegation");
  return d;
}

DelegationContext parse_delegation_context(const std::string& text) {
  Parser p = make_parser(text, false);
  DelegationContext ctx = p.delegation_context();
  p.expect_end("delegation context");
  return ctx;
}

std::vector<std::pair<std::string, Type>> parse_gamma(const std::string& text) {
  Parser p = make_parser(text, false);
  auto g = p.gamma();
  p.expect_end("gamma");
  return g;
}

ProgramFile parse_program(const std::string& text, bool extended) {
  ProgramFile out;
  std::istringstream in(text);
  std::string line;
  std::string rest;
  bool in_headers = true;
  int lineno = 0;
  int term_start_line = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (in_headers) {
      std::string trimmed = line;
      std::size_t b = trimmed.find_first_not_of(" \t");
      trimmed = b == std::string::npos ? "" : trimmed.substr(b);
      if (trimmed.empty() || trimmed.rfind("--", 0) == 0) continue;
      auto header = [&](const char* key) -> std::optional<std::string> {
        std::string k = std::string(key) + ":";
        if (trimmed.rfind(k, 0) == 0) return trimmed.substr(k.size());
        return std::nullopt;
      };
      if (auto v = header("context")) { out.context = parse_delegation_context(*v); continue; }
      if (auto v = header("pc")) { out.pc = parse_principal(*v); continue; }
      if (auto v = header("gamma")) { out.gamma = parse_gamma(*v); continue; }
      in_headers = false;
      term_start_line = lineno;
      rest.assign(static_cast<std::size_t>(lineno - 1), '\n');  // keep spans aligned
    }
    rest += line;
    rest += "\n";
  }
  if (rest.find_first_not_of(" \t\n") == std::string::npos)
    throw ParseError("program file has no term", {term_start_line, 1});
  out.term = parse_term(rest, extended);
  return out;
}

ProgramFile parse_program_file(const std::string& path, bool extended) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", {0, 0});
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_program(buf.str(), extended);
}

// ---------------------------------------------------------------------------
// Pretty printing

std::string pretty(const Principal& p) { return p.to_string(); }

namespace {

void print_type(const Type& t, std::ostringstream& out, int min_prec);

void print_type_atom(const Type& t, std::ostringstream& out) {
  switch (t.kind()) {
    case Type::Kind::unit:
    case Type::Kind::tyvar:
    case Type::Kind::prod:
    case Type::Kind::says:
    case Type::Kind::acts_for: print_type(t, out, 2); return;
    default:
      out << "(";
      print_type(t, out, 0);
      out << ")";
      return;
  }
}

void print_type(const Type& t, std::ostringstream& out, int min_prec) {
  switch (t.kind()) {
    case Type::Kind::unit: out << "unit"; return;
    case Type::Kind::tyvar: out << t.var(); return;
    case Type::Kind::prod:
      out << "(";
      print_type(t.left(), out, 0);
      out << ", ";
      print_type(t.right(), out, 0);
      out << ")";
      return;
    case Type::Kind::says:
      out << pretty(t.label()) << " says ";
      print_type_atom(t.left(), out);
      return;
    case Type::Kind::acts_for:
      out << pretty(t.superior()) << " |> " << pretty(t.inferior());
      return;
    case Type::Kind::sum: {
      bool paren = min_prec > 1;
      if (paren) out << "(";
      print_type(t.left(), out, 1);
      out << " + ";
      print_type(t.right(), out, 2);
      if (paren) out << ")";
      return;
    }
    case Type::Kind::fun: {
      bool paren = min_prec > 0;
      if (paren) out << "(";
      print_type(t.left(), out, 2);
      out << " [" << pretty(t.pc()) << "]-> ";
      print_type(t.right(), out, 0);
      if (paren) out << ")";
      return;
    }
    case Type::Kind::forall: {
      bool paren = min_prec > 0;
      if (paren) out << "(";
      out << "forall " << t.var() << " [" << pretty(t.pc()) << "]. ";
      print_type(t.left(), out, 0);
      if (paren) out << ")";
      return;
    }
  }
}

// levels: 0 low (binders), 1 where/app chain, 2 atom
void print_term(const Term& e, std::ostringstream& out, int min_prec) {
  switch (e.kind()) {
    case Term::Kind::var: out << e.var_name(); return;
    case Term::Kind::unit_val: out << "()"; return;
    case Term::Kind::opaque: out << "*"; return;
    case Term::Kind::pair:
      out << "<";
      print_term(e.child(0), out, 0);
      out << ", ";
      print_term(e.child(1), out, 0);
      out << ">";
      return;
    case Term::Kind::del:
      out << "<" << pretty(e.superior()) << " |> " << pretty(e.inferior()) << ">";
      return;
    case Term::Kind::proj:
      out << (e.index() == 1 ? "proj1 " : "proj2 ");
      print_term(e.child(0), out, 2);
      return;
    case Term::Kind::inj:
      out << (e.index() == 1 ? "inj1" : "inj2") << " @ (";
      print_type(e.type_ann(), out, 0);
      out << ") ";
      print_term(e.child(0), out, 2);
      return;
    case Term::Kind::unit_m:
      out << "eta[" << pretty(e.label()) << "] ";
      print_term(e.child(0), out, 2);
      return;
    case Term::Kind::sealed:
      out << "sealed[" << pretty(e.label()) << "] ";
      print_term(e.child(0), out, 2);
      return;
    case Term::Kind::prot_ctx:
      out << "{" << pretty(e.label()) << " | ";
      print_term(e.child(0), out, 0);
      out << "}";
      return;
    case Term::Kind::bracket:
      out << "(";
      print_term(e.child(0), out, 0);
      out << " | ";
      print_term(e.child(1), out, 0);
      out << ")";
      return;
    case Term::Kind::hole:
      out << "[* ";
      print_type(e.type_ann(), out, 0);
      out << "]";
      return;
    case Term::Kind::app: {
      bool paren = min_prec > 1;
      if (paren) out << "(";
      print_term(e.child(0), out, 1);
      out << " ";
      print_term(e.child(1), out, 2);
      if (paren) out << ")";
      return;
    }
    case Term::Kind::tapp: {
      bool paren = min_prec > 1;
      if (paren) out << "(";
      print_term(e.child(0), out, 1);
      const Type& t = e.type_ann();
      if (t.kind() == Type::Kind::tyvar) out << " " << t.var();
      else if (t.kind() == Type::Kind::unit) out << " unit";
      else {
        out << " @ (";
        print_type(t, out, 0);
        out << ")";
      }
      if (paren) out << ")";
      return;
    }
    case Term::Kind::where: {
      bool paren = min_prec > 1;
      if (paren) out << "(";
      print_term(e.child(0), out, 1);
      out << " where ";
      print_term(e.child(1), out, 2);
      if (paren) out << ")";
      return;
    }
    case Term::Kind::lam: {
      bool paren = min_prec > 0;
      if (paren) out << "(";
      out << "\\" << e.var_name() << ": ";
      print_type(e.type_ann(), out, 2);
      out << " [" << pretty(e.label()) << "]. ";
      print_term(e.child(0), out, 0);
      if (paren) out << ")";
      return;
    }
    case Term::Kind::tlam: {
      bool paren = min_prec > 0;
      if (paren) out << "(";
      out << "/\\" << e.var_name() << " [" << pretty(e.label()) << "]. ";
      print_term(e.child(0), out, 0);
      if (paren) out << ")";
      return;
    }
    case Term::Kind::bind: {
      bool paren = min_prec > 0;
      if (paren) out << "(";
      out << "bind " << e.var_name() << " = ";
      print_term(e.child(0), out, 0);
      out << " in ";
      print_term(e.child(1), out, 0);
      if (paren) out << ")";
      return;
    }
    case Term::Kind::assume: {
      bool paren = min_prec > 0;
      if (paren) out << "(";
      out << "assume ";
      print_term(e.child(0), out, 0);
      out << " in ";
      print_term(e.child(1), out, 0);
      if (paren) out << ")";
      return;
    }
    case Term::Kind::case_: {
      bool paren = min_prec > 0;
      if (paren) out << "(";
      out << "case ";
      print_term(e.child(0), out, 0);
      out << " of " << e.case_lvar() << ". ";
      print_term(e.child(1), out, 0);
      out << " | " << e.case_rvar() << ". ";
      print_term(e.child(2), out, 0);
      if (paren) out << ")";
      return;
    }
  }
}

}  // namespace

std::string pretty(const Type& t) {
  std::ostringstream out;
  print_type(t, out, 0);
  return out.str();
}

std::string pretty(const Term& e) {
  std::ostringstream out;
  print_term(e, out, 0);
  return out.str();
}

}  // namespace flac
