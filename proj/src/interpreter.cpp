#include "etcs/interpreter.hpp"

#include <map>
#include <sstream>
#include <variant>

#include "etcs/constructions.hpp"
#include "etcs/derived.hpp"
#include "etcs/errors.hpp"

namespace etcs {

bool ExecResult::any_failed() const {
  for (const auto& r : reports)
    if (r.verdict == Verdict::fail) return true;
  return false;
}

bool ExecResult::any_error() const {
  for (const auto& d : diagnostics)
    if (d.severity == Diagnostic::Severity::error) return true;
  return false;
}

int ExecResult::exit_status() const {
  if (any_error()) return 2;
  if (any_failed()) return 1;
  return 0;
}

namespace {

struct Interpreter {
  const ExecConfig& config;
  ExecResult& out;
  std::map<std::string, SetObj> sets;
  std::map<std::string, FnMor> fns;

  void fail(SrcPos pos, std::string message, std::string hint = "") {
    out.diagnostics.push_back({Diagnostic::Severity::error, pos,
                               std::move(message), std::move(hint)});
  }

  const SetObj& set_of(const Spelled& name) { return sets.at(name.text); }
  const FnMor& fn_of(const Spelled& name) { return fns.at(name.text); }

  // Resolves an element literal against a set by display string, so
  // literals can name atoms as well as the rendered elements of
  // constructed sets (e.g. `true` in the classifier).
  std::optional<Value> resolve_element(const SetObj& X,
                                       const Spelled& literal) {
    std::optional<Value> found;
    for (const auto& v : X.elements()) {
      if (v.str() == literal.text) {
        if (found) {
          fail(literal.pos, "element literal '" + literal.text +
                                "' is ambiguous in " + X.str());
          return std::nullopt;
        }
        found = v;
      }
    }
    if (!found)
      fail(literal.pos, "element '" + literal.text + "' is not in " +
                            X.str());
    return found;
  }

  bool run(const Script& script) {
    for (const auto& stmt : script.statements) {
      bool ok = std::visit(
          [&](const auto& node) { return exec(node, stmt.pos); }, stmt.node);
      if (!ok) return false;
    }
    return true;
  }

  bool exec(const SetDecl& decl, SrcPos) {
    std::vector<Value> elems;
    elems.reserve(decl.atoms.size());
    for (const auto& a : decl.atoms) elems.push_back(Value::atom(a.text));
    sets.emplace(decl.name.text, SetObj(std::move(elems)));
    return true;
  }

  bool exec(const FnDecl& decl, SrcPos) {
    const SetObj& dom = set_of(decl.dom);
    const SetObj& cod = set_of(decl.cod);
    std::vector<Value> table(dom.size(), Value::unit());
    std::vector<bool> assigned(dom.size(), false);
    for (const auto& [from, to] : decl.mappings) {
      auto from_v = resolve_element(dom, from);
      if (!from_v) return false;
      auto to_v = resolve_element(cod, to);
      if (!to_v) return false;
      std::size_t idx = *dom.index_of(*from_v);
      if (assigned[idx]) {
        fail(from.pos, "element '" + from.text + "' is mapped twice");
        return false;
      }
      assigned[idx] = true;
      table[idx] = *to_v;
    }
    for (std::size_t i = 0; i < dom.size(); ++i)
      if (!assigned[i]) {
        fail(decl.name.pos, "function '" + decl.name.text +
                                "' is not total: element '" +
                                dom.elements()[i].str() + "' is unmapped");
        return false;
      }
    fns.emplace(decl.name.text, FnMor(dom, cod, std::move(table)));
    return true;
  }

  void bind_results(const ConstructStmt& stmt,
                    std::vector<std::variant<SetObj, FnMor>> results) {
    for (std::size_t i = 0; i < stmt.results.size(); ++i) {
      const std::string& name = stmt.results[i].text;
      if (std::holds_alternative<SetObj>(results[i]))
        sets.emplace(name, std::get<SetObj>(std::move(results[i])));
      else
        fns.emplace(name, std::get<FnMor>(std::move(results[i])));
    }
  }

  bool exec(const ConstructStmt& stmt, SrcPos pos) {
    try {
      switch (stmt.kind) {
        case ConstructKind::product: {
          ProductCone cone =
              product(set_of(stmt.args[0].name), set_of(stmt.args[1].name));
          bind_results(stmt, {cone.obj, cone.pr1, cone.pr2});
          return true;
        }
        case ConstructKind::funcset: {
          FunctionSetObj fs = function_set(set_of(stmt.args[0].name),
                                           set_of(stmt.args[1].name));
          bind_results(stmt, {fs.obj, fs.ev});
          return true;
        }
        case ConstructKind::fibre: {
          const FnMor& f = fn_of(stmt.args[0].name);
          auto point = resolve_element(f.cod(), stmt.args[1].name);
          if (!point) return false;
          InverseImageCone cone = inverse_image(f, element_of(f.cod(), *point));
          bind_results(stmt, {cone.obj, cone.incl});
          return true;
        }
        case ConstructKind::classify: {
          bind_results(stmt, {characteristic(fn_of(stmt.args[0].name))});
          return true;
        }
        case ConstructKind::choice: {
          bind_results(stmt, {right_inverse(fn_of(stmt.args[0].name))});
          return true;
        }
        case ConstructKind::quotient: {
          const SetObj& carrier = set_of(stmt.args[0].name);
          std::vector<std::pair<Value, Value>> pairs;
          for (const auto& [a, b] : stmt.args[1].pairs) {
            auto av = resolve_element(carrier, a);
            if (!av) return false;
            auto bv = resolve_element(carrier, b);
            if (!bv) return false;
            pairs.emplace_back(*av, *bv);
          }
          QuotientResult q =
              quotient(EquivRelation::from_pairs(carrier, pairs));
          bind_results(stmt, {q.obj, q.proj});
          return true;
        }
        case ConstructKind::coproduct: {
          CoproductResult cop = coproduct(set_of(stmt.args[0].name),
                                          set_of(stmt.args[1].name));
          bind_results(stmt, {cop.obj, cop.inl, cop.inr});
          return true;
        }
        case ConstructKind::indexedprod: {
          bind_results(stmt, {indexed_product(fn_of(stmt.args[0].name))});
          return true;
        }
        case ConstructKind::integers: {
          IntegersResult z = build_integers(stmt.args[0].number);
          bind_results(stmt, {z.obj, z.proj});
          return true;
        }
        case ConstructKind::recurse: {
          const SetObj& target = set_of(stmt.args[0].name);
          auto base = resolve_element(target, stmt.args[1].name);
          if (!base) return false;
          const FnMor& step = fn_of(stmt.args[2].name);
          NatSystem sys(config.nat_bound);
          RecFn rec = recurse(sys, element_of(target, *base), step);
          bind_results(stmt, {rec_eval(rec, stmt.args[3].number)});
          return true;
        }
      }
    } catch (const Error& e) {
      fail(pos, e.what());
      return false;
    } catch (const std::invalid_argument& e) {
      fail(pos, e.what());
      return false;
    }
    return false;
  }

  bool exec(const CheckStmt& stmt, SrcPos pos) {
    VerifierConfig cfg = config.verifier;
    if (stmt.size) cfg.size_limit = static_cast<int>(*stmt.size);
    if (stmt.all) {
      auto reports = check_all(cfg);
      out.reports.insert(out.reports.end(), reports.begin(), reports.end());
      return true;
    }
    for (const auto& id : stmt.ids) {
      try {
        out.reports.push_back(check_axiom(id.text, cfg));
      } catch (const BudgetExceeded& e) {
        Report r;
        r.id = id.text;
        r.instance = "aborted";
        r.verdict = Verdict::fail;
        r.witness = {{"budget", e.what()}};
        r.stats.instances = e.count;
        out.reports.push_back(std::move(r));
      } catch (const Error& e) {
        fail(pos, e.what());
        return false;
      }
    }
    return true;
  }

  FnMor eval_chain(const std::vector<Spelled>& chain) {
    FnMor acc = fn_of(chain.back());
    for (std::size_t i = chain.size() - 1; i-- > 0;)
      acc = compose(fn_of(chain[i]), acc);
    return acc;
  }

  bool exec(const AssertStmt& stmt, SrcPos pos) {
    Script one;
    one.statements.push_back({stmt, pos});
    std::string text = pretty_print(one);
    if (!text.empty() && text.back() == '\n') text.pop_back();

    Report report;
    report.id = "assert:" + std::to_string(pos.line);
    report.instance = text;
    report.stats.instances = 1;

    if (stmt.kind == AssertStmt::Kind::cardinality) {
      const SetObj& X = set_of(stmt.set_name);
      if (X.size() == stmt.expected) {
        report.verdict = Verdict::pass;
      } else {
        report.verdict = Verdict::fail;
        report.witness = {{"actual", std::to_string(X.size())},
                          {"expected", std::to_string(stmt.expected)}};
      }
      out.reports.push_back(std::move(report));
      return true;
    }

    try {
      FnMor lhs = eval_chain(stmt.lhs);
      FnMor rhs = eval_chain(stmt.rhs);
      if (fn_equal(lhs, rhs)) {
        report.verdict = Verdict::pass;
      } else {
        report.verdict = Verdict::fail;
        for (const auto& x : elements(lhs.dom())) {
          if (!(evaluate(lhs, x) == evaluate(rhs, x))) {
            report.witness = {
                {"at", element_value(x).str()},
                {"lhs", element_value(evaluate(lhs, x)).str()},
                {"rhs", element_value(evaluate(rhs, x)).str()}};
            break;
          }
        }
      }
      out.reports.push_back(std::move(report));
      return true;
    } catch (const Error& e) {
      fail(pos, e.what());
      return false;
    }
  }
};

}  // namespace

ExecResult execute(const Script& script, const ExecConfig& config) {
  ExecResult result;
  Interpreter interp{config, result};
  interp.run(script);
  return result;
}

}  // namespace etcs
