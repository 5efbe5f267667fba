#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace etcs {

struct SrcPos {
  int line = 0;
  int col = 0;
};

/// A name or element literal together with where it was written.
struct Spelled {
  std::string text;
  SrcPos pos;
};

/// set X = {a, b}
struct SetDecl {
  Spelled name;
  std::vector<Spelled> atoms;
};

/// fn f : X -> Y = { a |-> 0, b |-> 1 }
struct FnDecl {
  Spelled name;
  Spelled dom;
  Spelled cod;
  std::vector<std::pair<Spelled, Spelled>> mappings;
};

enum class ConstructKind {
  product,
  funcset,
  fibre,
  classify,
  choice,
  quotient,
  coproduct,
  indexedprod,
  integers,
  recurse,
};

const char* construct_kind_name(ConstructKind k);

/// How many values a construction yields, bound positionally by `let`.
int construct_result_arity(ConstructKind k);

struct Arg {
  enum class Kind { name, number, pairs };
  Kind kind = Kind::name;
  Spelled name;               // name or element literal
  std::uint64_t number = 0;   // Kind::number
  SrcPos pos;
  std::vector<std::pair<Spelled, Spelled>> pairs;  // Kind::pairs
};

/// let P, p1, p2 = product(X, Y)
struct ConstructStmt {
  ConstructKind kind;
  std::vector<Spelled> results;
  std::vector<Arg> args;
};

/// check all size 3   |   check A1 A5 size 2
struct CheckStmt {
  bool all = false;
  std::vector<Spelled> ids;
  std::optional<std::uint64_t> size;
};

/// assert g . f == h   |   assert |P| == 4
struct AssertStmt {
  enum class Kind { fn_equation, cardinality };
  Kind kind = Kind::fn_equation;
  std::vector<Spelled> lhs;  // composition chain, outermost first
  std::vector<Spelled> rhs;
  Spelled set_name;
  std::uint64_t expected = 0;
};

struct Stmt {
  std::variant<SetDecl, FnDecl, ConstructStmt, CheckStmt, AssertStmt> node;
  SrcPos pos;
};

struct Script {
  std::vector<Stmt> statements;
};

struct Diagnostic {
  enum class Severity { error, warning };
  Severity severity = Severity::error;
  SrcPos pos;
  std::string message;
  std::string hint;  // optional suggestion, empty when absent
};

struct ParseResult {
  Script script;
  std::vector<Diagnostic> diagnostics;
  bool ok() const;  // no error-severity diagnostics
};

/// Parses a script. Binding rules are enforced here: names bind before
/// use, no rebinding, function declarations must be total over their
/// domain with values inside their codomain (checked statically whenever
/// the sets were declared literally). Every failure carries a source
/// location.
ParseResult parse(std::string_view source);

/// Canonical rendering; parse(pretty_print(s)) reproduces s exactly on
/// well-formed scripts.
std::string pretty_print(const Script& script);

std::string render_diagnostics(const std::vector<Diagnostic>& diagnostics,
                               std::string_view source_name);

}  // namespace etcs
