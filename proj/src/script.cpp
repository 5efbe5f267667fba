#include "etcs/script.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace etcs {

const char* construct_kind_name(ConstructKind k) {
  switch (k) {
    case ConstructKind::product: return "product";
    case ConstructKind::funcset: return "funcset";
    case ConstructKind::fibre: return "fibre";
    case ConstructKind::classify: return "classify";
    case ConstructKind::choice: return "choice";
    case ConstructKind::quotient: return "quotient";
    case ConstructKind::coproduct: return "coproduct";
    case ConstructKind::indexedprod: return "indexedprod";
    case ConstructKind::integers: return "integers";
    case ConstructKind::recurse: return "recurse";
  }
  return "?";
}

int construct_result_arity(ConstructKind k) {
  switch (k) {
    case ConstructKind::product: return 3;   // obj, pr1, pr2
    case ConstructKind::funcset: return 2;   // obj, ev
    case ConstructKind::fibre: return 2;     // obj, incl
    case ConstructKind::classify: return 1;  // chi
    case ConstructKind::choice: return 1;    // right inverse
    case ConstructKind::quotient: return 2;  // obj, projection
    case ConstructKind::coproduct: return 3; // obj, inl, inr
    case ConstructKind::indexedprod: return 1;
    case ConstructKind::integers: return 2;  // obj, projection
    case ConstructKind::recurse: return 1;   // the element x(n)
  }
  return 0;
}

bool ParseResult::ok() const {
  for (const auto& d : diagnostics)
    if (d.severity == Diagnostic::Severity::error) return false;
  return true;
}

namespace {

enum class Tok {
  kw_set, kw_fn, kw_let, kw_check, kw_assert, kw_all, kw_size,
  kind,       // a construction kind keyword
  ident,      // name, element literal or axiom id
  number,
  lbrace, rbrace, lparen, rparen,
  comma, colon, dot, pipe,
  equals, eqeq, arrow, mapsto,
  end,
  error,
};

struct Token {
  Tok tok;
  std::string text;
  SrcPos pos;
  std::uint64_t number = 0;
  ConstructKind kind = ConstructKind::product;
};

const std::map<std::string, Tok>& keywords() {
  static const std::map<std::string, Tok> kw = {
      {"set", Tok::kw_set},   {"fn", Tok::kw_fn},
      {"let", Tok::kw_let},   {"check", Tok::kw_check},
      {"assert", Tok::kw_assert}, {"all", Tok::kw_all},
      {"size", Tok::kw_size},
  };
  return kw;
}

const std::map<std::string, ConstructKind>& kind_names() {
  static const std::map<std::string, ConstructKind> kinds = {
      {"product", ConstructKind::product},
      {"funcset", ConstructKind::funcset},
      {"fibre", ConstructKind::fibre},
      {"classify", ConstructKind::classify},
      {"choice", ConstructKind::choice},
      {"quotient", ConstructKind::quotient},
      {"coproduct", ConstructKind::coproduct},
      {"indexedprod", ConstructKind::indexedprod},
      {"integers", ConstructKind::integers},
      {"recurse", ConstructKind::recurse},
  };
  return kinds;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space_and_comments();
    SrcPos pos{line_, col_};
    if (at_end()) return {Tok::end, "", pos};
    char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return lex_word(pos);
    if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(pos);
    advance();
    switch (c) {
      case '{': return {Tok::lbrace, "{", pos};
      case '}': return {Tok::rbrace, "}", pos};
      case '(': return {Tok::lparen, "(", pos};
      case ')': return {Tok::rparen, ")", pos};
      case ',': return {Tok::comma, ",", pos};
      case ':': return {Tok::colon, ":", pos};
      case '.': return {Tok::dot, ".", pos};
      case '=':
        if (!at_end() && peek() == '=') {
          advance();
          return {Tok::eqeq, "==", pos};
        }
        return {Tok::equals, "=", pos};
      case '-':
        if (!at_end() && peek() == '>') {
          advance();
          return {Tok::arrow, "->", pos};
        }
        return {Tok::error, "-", pos};
      case '|':
        if (!at_end() && peek() == '-') {
          advance();
          if (!at_end() && peek() == '>') {
            advance();
            return {Tok::mapsto, "|->", pos};
          }
          return {Tok::error, "|-", pos};
        }
        return {Tok::pipe, "|", pos};
      default:
        return {Tok::error, std::string(1, c), pos};
    }
  }

 private:
  bool at_end() const { return idx_ >= src_.size(); }
  char peek() const { return src_[idx_]; }
  void advance() {
    if (src_[idx_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++idx_;
  }

  void skip_space_and_comments() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  Token lex_word(SrcPos pos) {
    std::string word;
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(peek())) ||
            peek() == '_')) {
      word.push_back(peek());
      advance();
    }
    if (auto it = keywords().find(word); it != keywords().end())
      return {it->second, word, pos};
    if (auto it = kind_names().find(word); it != kind_names().end()) {
      Token t{Tok::kind, word, pos};
      t.kind = it->second;
      return t;
    }
    return {Tok::ident, word, pos};
  }

  Token lex_number(SrcPos pos) {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      advance();
    }
    Token t{Tok::number, digits, pos};
    t.number = std::stoull(digits);
    return t;
  }

  std::string_view src_;
  std::size_t idx_ = 0;
  int line_ = 1;
  int col_ = 1;
};

enum class SymKind { set_name, fn_name };

struct ResultShape {
  std::vector<SymKind> kinds;
};

ResultShape result_shape(ConstructKind k) {
  switch (k) {
    case ConstructKind::product:
    case ConstructKind::coproduct:
      return {{SymKind::set_name, SymKind::fn_name, SymKind::fn_name}};
    case ConstructKind::funcset:
    case ConstructKind::fibre:
    case ConstructKind::quotient:
    case ConstructKind::integers:
      return {{SymKind::set_name, SymKind::fn_name}};
    case ConstructKind::classify:
    case ConstructKind::choice:
    case ConstructKind::recurse:
      return {{SymKind::fn_name}};
    case ConstructKind::indexedprod:
      return {{SymKind::set_name}};
  }
  return {};
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { shift(); }

  ParseResult run() {
    ParseResult out;
    while (cur_.tok != Tok::end) {
      std::size_t before = diagnostics_.size();
      parse_statement(out.script);
      if (diagnostics_.size() > before) recover();
    }
    out.diagnostics = std::move(diagnostics_);
    return out;
  }

 private:
  void shift() { cur_ = lexer_.next(); }

  bool accept(Tok t) {
    if (cur_.tok != t) return false;
    shift();
    return true;
  }

  void error(SrcPos pos, std::string msg, std::string hint = "") {
    diagnostics_.push_back({Diagnostic::Severity::error, pos,
                            std::move(msg), std::move(hint)});
  }

  bool expect(Tok t, const std::string& what) {
    if (cur_.tok == t) {
      shift();
      return true;
    }
    error(cur_.pos, "expected " + what + ", found '" +
                        (cur_.tok == Tok::end ? "end of input" : cur_.text) +
                        "'");
    return false;
  }

  // Skips to the start of the next statement after an error.
  void recover() {
    while (cur_.tok != Tok::end) {
      switch (cur_.tok) {
        case Tok::kw_set:
        case Tok::kw_fn:
        case Tok::kw_let:
        case Tok::kw_check:
        case Tok::kw_assert:
          return;
        default:
          shift();
      }
    }
  }

  std::optional<Spelled> expect_name(const std::string& what) {
    if (cur_.tok != Tok::ident) {
      error(cur_.pos, "expected " + what + ", found '" + cur_.text + "'");
      return std::nullopt;
    }
    Spelled s{cur_.text, cur_.pos};
    shift();
    return s;
  }

  // An element literal: an identifier or a numeral, spelled as written.
  std::optional<Spelled> expect_atom() {
    if (cur_.tok == Tok::ident || cur_.tok == Tok::number) {
      Spelled s{cur_.text, cur_.pos};
      shift();
      return s;
    }
    error(cur_.pos, "expected an element literal, found '" + cur_.text + "'");
    return std::nullopt;
  }

  bool declare(const Spelled& name, SymKind kind) {
    if (symbols_.count(name.text)) {
      error(name.pos, "name '" + name.text + "' is already bound",
            "names bind once; pick a fresh name");
      return false;
    }
    symbols_[name.text] = kind;
    return true;
  }

  bool check_bound(const Spelled& name, SymKind kind) {
    auto it = symbols_.find(name.text);
    if (it == symbols_.end()) {
      error(name.pos, "name '" + name.text + "' is not bound");
      return false;
    }
    if (it->second != kind) {
      error(name.pos, std::string("'") + name.text + "' is a " +
                          (it->second == SymKind::set_name ? "set"
                                                           : "function") +
                          ", but a " +
                          (kind == SymKind::set_name ? "set" : "function") +
                          " is required here");
      return false;
    }
    return true;
  }

  void parse_statement(Script& script) {
    SrcPos pos = cur_.pos;
    switch (cur_.tok) {
      case Tok::kw_set:
        if (auto s = parse_set_decl())
          script.statements.push_back({std::move(*s), pos});
        break;
      case Tok::kw_fn:
        if (auto s = parse_fn_decl())
          script.statements.push_back({std::move(*s), pos});
        break;
      case Tok::kw_let:
        if (auto s = parse_let())
          script.statements.push_back({std::move(*s), pos});
        break;
      case Tok::kw_check:
        if (auto s = parse_check())
          script.statements.push_back({std::move(*s), pos});
        break;
      case Tok::kw_assert:
        if (auto s = parse_assert())
          script.statements.push_back({std::move(*s), pos});
        break;
      default:
        error(cur_.pos, "expected a statement (set, fn, let, check or "
                        "assert), found '" +
                            cur_.text + "'");
        shift();
        break;
    }
  }

  std::optional<SetDecl> parse_set_decl() {
    shift();  // set
    auto name = expect_name("a set name");
    if (!name) return std::nullopt;
    if (!expect(Tok::equals, "'='")) return std::nullopt;
    if (!expect(Tok::lbrace, "'{'")) return std::nullopt;
    SetDecl decl{*name, {}};
    if (cur_.tok != Tok::rbrace) {
      do {
        auto atom = expect_atom();
        if (!atom) return std::nullopt;
        decl.atoms.push_back(*atom);
      } while (accept(Tok::comma));
    }
    if (!expect(Tok::rbrace, "'}'")) return std::nullopt;
    std::set<std::string> seen;
    for (const auto& a : decl.atoms)
      if (!seen.insert(a.text).second)
        error(a.pos, "duplicate element '" + a.text + "' in set literal");
    if (!declare(decl.name, SymKind::set_name)) return std::nullopt;
    std::set<std::string>& literal = declared_sets_[decl.name.text];
    for (const auto& a : decl.atoms) literal.insert(a.text);
    return decl;
  }

  std::optional<FnDecl> parse_fn_decl() {
    shift();  // fn
    auto name = expect_name("a function name");
    if (!name) return std::nullopt;
    if (!expect(Tok::colon, "':'")) return std::nullopt;
    auto dom = expect_name("a set name");
    if (!dom) return std::nullopt;
    if (!expect(Tok::arrow, "'->'")) return std::nullopt;
    auto cod = expect_name("a set name");
    if (!cod) return std::nullopt;
    if (!expect(Tok::equals, "'='")) return std::nullopt;
    if (!expect(Tok::lbrace, "'{'")) return std::nullopt;
    FnDecl decl{*name, *dom, *cod, {}};
    if (cur_.tok != Tok::rbrace) {
      do {
        auto from = expect_atom();
        if (!from) return std::nullopt;
        if (!expect(Tok::mapsto, "'|->'")) return std::nullopt;
        auto to = expect_atom();
        if (!to) return std::nullopt;
        decl.mappings.emplace_back(*from, *to);
      } while (accept(Tok::comma));
    }
    if (!expect(Tok::rbrace, "'}'")) return std::nullopt;
    bool bound_ok = check_bound(decl.dom, SymKind::set_name);
    bound_ok &= check_bound(decl.cod, SymKind::set_name);
    if (bound_ok) validate_fn_decl(decl);
    if (!declare(decl.name, SymKind::fn_name)) return std::nullopt;
    return decl;
  }

  // Totality and codomain checks, possible statically only when the sets
  // were declared as literals; constructed sets are validated when the
  // script runs.
  void validate_fn_decl(const FnDecl& decl) {
    auto dom_it = declared_sets_.find(decl.dom.text);
    if (dom_it != declared_sets_.end()) {
      std::set<std::string> mapped;
      for (const auto& [from, to] : decl.mappings) {
        if (!dom_it->second.count(from.text))
          error(from.pos, "element '" + from.text + "' is not in " +
                              decl.dom.text);
        else if (!mapped.insert(from.text).second)
          error(from.pos, "element '" + from.text + "' is mapped twice");
      }
      for (const auto& e : dom_it->second)
        if (!mapped.count(e))
          error(decl.name.pos, "function '" + decl.name.text +
                                   "' is not total: element '" + e +
                                   "' of " + decl.dom.text + " is unmapped");
    }
    auto cod_it = declared_sets_.find(decl.cod.text);
    if (cod_it != declared_sets_.end()) {
      for (const auto& [from, to] : decl.mappings)
        if (!cod_it->second.count(to.text))
          error(to.pos, "value '" + to.text + "' is not in the codomain " +
                            decl.cod.text);
    }
  }

  std::optional<ConstructStmt> parse_let() {
    shift();  // let
    ConstructStmt stmt;
    do {
      auto name = expect_name("a result name");
      if (!name) return std::nullopt;
      stmt.results.push_back(*name);
    } while (accept(Tok::comma));
    if (!expect(Tok::equals, "'='")) return std::nullopt;
    if (cur_.tok != Tok::kind) {
      error(cur_.pos, "expected a construction (product, funcset, fibre, "
                      "classify, choice, quotient, coproduct, indexedprod, "
                      "integers or recurse), found '" +
                          cur_.text + "'");
      return std::nullopt;
    }
    stmt.kind = cur_.kind;
    shift();
    if (!expect(Tok::lparen, "'('")) return std::nullopt;
    if (cur_.tok != Tok::rparen) {
      do {
        auto arg = parse_arg();
        if (!arg) return std::nullopt;
        stmt.args.push_back(std::move(*arg));
      } while (accept(Tok::comma));
    }
    if (!expect(Tok::rparen, "')'")) return std::nullopt;
    if (!validate_construct(stmt)) return std::nullopt;
    return stmt;
  }

  std::optional<Arg> parse_arg() {
    Arg arg;
    arg.pos = cur_.pos;
    if (cur_.tok == Tok::ident) {
      arg.kind = Arg::Kind::name;
      arg.name = {cur_.text, cur_.pos};
      shift();
      return arg;
    }
    if (cur_.tok == Tok::number) {
      arg.kind = Arg::Kind::number;
      arg.number = cur_.number;
      arg.name = {cur_.text, cur_.pos};
      shift();
      return arg;
    }
    if (cur_.tok == Tok::lbrace) {
      shift();
      arg.kind = Arg::Kind::pairs;
      if (cur_.tok != Tok::rbrace) {
        do {
          if (!expect(Tok::lparen, "'('")) return std::nullopt;
          auto a = expect_atom();
          if (!a) return std::nullopt;
          if (!expect(Tok::comma, "','")) return std::nullopt;
          auto b = expect_atom();
          if (!b) return std::nullopt;
          if (!expect(Tok::rparen, "')'")) return std::nullopt;
          arg.pairs.emplace_back(*a, *b);
        } while (accept(Tok::comma));
      }
      if (!expect(Tok::rbrace, "'}'")) return std::nullopt;
      return arg;
    }
    error(cur_.pos, "expected an argument, found '" + cur_.text + "'");
    return std::nullopt;
  }

  bool arg_is(const Arg& arg, Arg::Kind kind, const char* what) {
    if (arg.kind == kind) return true;
    error(arg.pos, std::string("expected ") + what + " here");
    return false;
  }

  bool validate_construct(ConstructStmt& stmt) {
    struct Shape {
      std::vector<const char*> args;  // "set", "fn", "atom", "int", "pairs"
    };
    static const std::map<ConstructKind, Shape> shapes = {
        {ConstructKind::product, {{"set", "set"}}},
        {ConstructKind::funcset, {{"set", "set"}}},
        {ConstructKind::fibre, {{"fn", "atom"}}},
        {ConstructKind::classify, {{"fn"}}},
        {ConstructKind::choice, {{"fn"}}},
        {ConstructKind::quotient, {{"set", "pairs"}}},
        {ConstructKind::coproduct, {{"set", "set"}}},
        {ConstructKind::indexedprod, {{"fn"}}},
        {ConstructKind::integers, {{"int"}}},
        {ConstructKind::recurse, {{"set", "atom", "fn", "int"}}},
    };
    const Shape& shape = shapes.at(stmt.kind);
    std::string kind_name = construct_kind_name(stmt.kind);
    if (stmt.args.size() != shape.args.size()) {
      error(stmt.results.empty() ? cur_.pos : stmt.results[0].pos,
            kind_name + " takes " + std::to_string(shape.args.size()) +
                " argument(s), got " + std::to_string(stmt.args.size()));
      return false;
    }
    bool ok = true;
    for (std::size_t i = 0; i < shape.args.size(); ++i) {
      const std::string what = shape.args[i];
      Arg& arg = stmt.args[i];
      if (what == "set") {
        ok &= arg_is(arg, Arg::Kind::name, "a set name") &&
              check_bound(arg.name, SymKind::set_name);
      } else if (what == "fn") {
        ok &= arg_is(arg, Arg::Kind::name, "a function name") &&
              check_bound(arg.name, SymKind::fn_name);
      } else if (what == "atom") {
        // Either an identifier or a numeral literal works as an element.
        if (arg.kind == Arg::Kind::pairs) {
          error(arg.pos, "expected an element literal here");
          ok = false;
        }
      } else if (what == "int") {
        ok &= arg_is(arg, Arg::Kind::number, "a number");
      } else if (what == "pairs") {
        ok &= arg_is(arg, Arg::Kind::pairs, "a list of pairs {(a, b), ...}");
      }
    }
    if (!ok) return false;
    int arity = construct_result_arity(stmt.kind);
    if (static_cast<int>(stmt.results.size()) > arity) {
      error(stmt.results[arity].pos,
            kind_name + " yields " + std::to_string(arity) +
                " result(s), but " + std::to_string(stmt.results.size()) +
                " names are bound");
      return false;
    }
    ResultShape rs = result_shape(stmt.kind);
    for (std::size_t i = 0; i < stmt.results.size(); ++i)
      if (!declare(stmt.results[i], rs.kinds[i])) return false;
    return true;
  }

  std::optional<CheckStmt> parse_check() {
    shift();  // check
    CheckStmt stmt;
    if (accept(Tok::kw_all)) {
      stmt.all = true;
    } else {
      while (cur_.tok == Tok::ident) {
        const std::string& id = cur_.text;
        bool valid = id.size() >= 2 && id[0] == 'A';
        if (valid) {
          int n = 0;
          for (std::size_t i = 1; i < id.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(id[i]))) {
              valid = false;
              break;
            }
            n = n * 10 + (id[i] - '0');
          }
          valid = valid && n >= 1 && n <= 10;
        }
        if (!valid) {
          error(cur_.pos, "unknown axiom id '" + id + "'",
                "use A1 through A10, or 'all'");
          return std::nullopt;
        }
        stmt.ids.push_back({id, cur_.pos});
        shift();
      }
      if (stmt.ids.empty()) {
        error(cur_.pos, "expected axiom ids or 'all' after 'check'");
        return std::nullopt;
      }
    }
    if (accept(Tok::kw_size)) {
      if (cur_.tok != Tok::number) {
        error(cur_.pos, "expected a number after 'size'");
        return std::nullopt;
      }
      stmt.size = cur_.number;
      shift();
    }
    return stmt;
  }

  std::optional<AssertStmt> parse_assert() {
    shift();  // assert
    AssertStmt stmt;
    if (cur_.tok == Tok::pipe) {
      shift();
      stmt.kind = AssertStmt::Kind::cardinality;
      auto name = expect_name("a set name");
      if (!name) return std::nullopt;
      stmt.set_name = *name;
      if (!expect(Tok::pipe, "'|'")) return std::nullopt;
      if (!expect(Tok::eqeq, "'=='")) return std::nullopt;
      if (cur_.tok != Tok::number) {
        error(cur_.pos, "expected a number");
        return std::nullopt;
      }
      stmt.expected = cur_.number;
      shift();
      if (!check_bound(stmt.set_name, SymKind::set_name)) return std::nullopt;
      return stmt;
    }
    stmt.kind = AssertStmt::Kind::fn_equation;
    auto parse_chain = [&](std::vector<Spelled>& chain) {
      do {
        auto name = expect_name("a function name");
        if (!name) return false;
        chain.push_back(*name);
      } while (accept(Tok::dot));
      return true;
    };
    if (!parse_chain(stmt.lhs)) return std::nullopt;
    if (!expect(Tok::eqeq, "'=='")) return std::nullopt;
    if (!parse_chain(stmt.rhs)) return std::nullopt;
    bool ok = true;
    for (const auto& n : stmt.lhs) ok &= check_bound(n, SymKind::fn_name);
    for (const auto& n : stmt.rhs) ok &= check_bound(n, SymKind::fn_name);
    if (!ok) return std::nullopt;
    return stmt;
  }

  Lexer lexer_;
  Token cur_{Tok::end, "", {}};
  std::vector<Diagnostic> diagnostics_;
  std::map<std::string, SymKind> symbols_;
  std::map<std::string, std::set<std::string>> declared_sets_;
};

}  // namespace

ParseResult parse(std::string_view source) { return Parser(source).run(); }

namespace {

void print_chain(std::ostream& out, const std::vector<Spelled>& chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out << " . ";
    out << chain[i].text;
  }
}

struct StmtPrinter {
  std::ostream& out;

  void operator()(const SetDecl& s) {
    out << "set " << s.name.text << " = {";
    for (std::size_t i = 0; i < s.atoms.size(); ++i) {
      if (i) out << ", ";
      out << s.atoms[i].text;
    }
    out << "}";
  }

  void operator()(const FnDecl& s) {
    out << "fn " << s.name.text << " : " << s.dom.text << " -> "
        << s.cod.text << " = { ";
    for (std::size_t i = 0; i < s.mappings.size(); ++i) {
      if (i) out << ", ";
      out << s.mappings[i].first.text << " |-> " << s.mappings[i].second.text;
    }
    out << (s.mappings.empty() ? "}" : " }");
  }

  void operator()(const ConstructStmt& s) {
    out << "let ";
    for (std::size_t i = 0; i < s.results.size(); ++i) {
      if (i) out << ", ";
      out << s.results[i].text;
    }
    out << " = " << construct_kind_name(s.kind) << "(";
    for (std::size_t i = 0; i < s.args.size(); ++i) {
      if (i) out << ", ";
      const Arg& a = s.args[i];
      switch (a.kind) {
        case Arg::Kind::name:
          out << a.name.text;
          break;
        case Arg::Kind::number:
          out << a.number;
          break;
        case Arg::Kind::pairs: {
          out << "{";
          for (std::size_t k = 0; k < a.pairs.size(); ++k) {
            if (k) out << ", ";
            out << "(" << a.pairs[k].first.text << ", "
                << a.pairs[k].second.text << ")";
          }
          out << "}";
          break;
        }
      }
    }
    out << ")";
  }

  void operator()(const CheckStmt& s) {
    out << "check";
    if (s.all) {
      out << " all";
    } else {
      for (const auto& id : s.ids) out << " " << id.text;
    }
    if (s.size) out << " size " << *s.size;
  }

  void operator()(const AssertStmt& s) {
    out << "assert ";
    if (s.kind == AssertStmt::Kind::cardinality) {
      out << "|" << s.set_name.text << "| == " << s.expected;
    } else {
      print_chain(out, s.lhs);
      out << " == ";
      print_chain(out, s.rhs);
    }
  }
};

}  // namespace

std::string pretty_print(const Script& script) {
  std::ostringstream out;
  for (const auto& stmt : script.statements) {
    std::visit(StmtPrinter{out}, stmt.node);
    out << "\n";
  }
  return out.str();
}

std::string render_diagnostics(const std::vector<Diagnostic>& diagnostics,
                               std::string_view source_name) {
  std::ostringstream out;
  for (const auto& d : diagnostics) {
    out << source_name << ':' << d.pos.line << ':' << d.pos.col << ": "
        << (d.severity == Diagnostic::Severity::error ? "error"
                                                      : "warning")
        << ": " << d.message << "\n";
    if (!d.hint.empty()) out << "  hint: " << d.hint << "\n";
  }
  return out.str();
}

}  // namespace etcs
