#include "etcs/constructions.hpp"

#include <stdexcept>

#include "etcs/enumerate.hpp"
#include "etcs/errors.hpp"

namespace etcs {

SetObj terminal() { return terminal_set(); }

bool is_terminal(const SetObj& T) {
  bool by_count = T.size() == 1;
  bool by_probes = true;
  for (std::size_t k = 0; k <= 2 && by_probes; ++k)
    by_probes = all_functions(sized_set(k), T).size() == 1;
  if (by_count != by_probes)
    throw std::logic_error("terminality: cardinality test disagrees with "
                           "probe-family test");
  return by_count;
}

SetObj empty() { return SetObj{}; }

ProductCone product(const SetObj& X, const SetObj& Y) {
  std::vector<Value> pairs;
  std::vector<Value> left, right;
  pairs.reserve(X.size() * Y.size());
  for (const auto& x : X.elements())
    for (const auto& y : Y.elements()) {
      pairs.push_back(Value::pair(x, y));
      left.push_back(x);
      right.push_back(y);
    }
  // x-major enumeration is already ascending under the Pair order.
  SetObj obj(pairs);
  return ProductCone{obj, FnMor(obj, X, std::move(left)),
                     FnMor(obj, Y, std::move(right))};
}

FnMor mediate_product(const ProductCone& cone, const FnMor& f1,
                      const FnMor& f2) {
  if (!(f1.dom() == f2.dom()))
    throw BoundaryMismatch("mediator components have different domains: " +
                           f1.dom().str() + " vs " + f2.dom().str());
  if (!(f1.cod() == cone.pr1.cod()) || !(f2.cod() == cone.pr2.cod()))
    throw BoundaryMismatch(
        "mediator components do not match the cone's projections");
  std::vector<Value> table;
  table.reserve(f1.table().size());
  for (std::size_t i = 0; i < f1.table().size(); ++i) {
    const Value* found = nullptr;
    for (const auto& p : cone.obj.elements()) {
      if (cone.pr1(p) == f1.table()[i] && cone.pr2(p) == f2.table()[i]) {
        if (found)
          throw ShapeMismatch("cone has two mediator values for " +
                              f1.dom().elements()[i].str());
        found = &p;
      }
    }
    if (!found)
      throw ShapeMismatch("cone has no mediator value for " +
                          f1.dom().elements()[i].str());
    table.push_back(*found);
  }
  return FnMor(f1.dom(), cone.obj, std::move(table));
}

FunctionSetObj function_set(const SetObj& X, const SetObj& Y) {
  std::vector<Value> graphs;
  for (const auto& f : all_functions(X, Y)) {
    std::vector<Value::Entry> entries;
    entries.reserve(X.size());
    for (std::size_t i = 0; i < X.size(); ++i)
      entries.emplace_back(X.elements()[i], f.table()[i]);
    graphs.push_back(Value::graph(std::move(entries)));
  }
  SetObj obj(std::move(graphs));
  ProductCone dom = product(obj, X);
  std::vector<Value> ev_table;
  ev_table.reserve(dom.obj.size());
  for (const auto& p : dom.obj.elements()) {
    const Value* v = p.pair_left().graph_find(p.pair_right());
    if (!v) throw std::logic_error("function set: graph misses a key");
    ev_table.push_back(*v);
  }
  return FunctionSetObj{obj, FnMor(dom.obj, Y, std::move(ev_table)), X, Y};
}

namespace {

// Checks q.dom = product(index, X).obj and transposes.
FnMor transpose(const FnMor& q, const FunctionSetObj& fs,
                const SetObj& index) {
  if (!(q.cod() == fs.target))
    throw ShapeMismatch("codomain " + q.cod().str() +
                        " differs from the function set's target");
  if (!(q.dom() == product(index, fs.source).obj))
    throw ShapeMismatch("domain " + q.dom().str() +
                        " is not the canonical product of " + index.str() +
                        " and " + fs.source.str());
  std::vector<Value> table;
  table.reserve(index.size());
  for (const auto& t : index.elements()) {
    std::vector<Value::Entry> entries;
    entries.reserve(fs.source.size());
    for (const auto& x : fs.source.elements())
      entries.emplace_back(x, q(Value::pair(t, x)));
    table.push_back(Value::graph(std::move(entries)));
  }
  return FnMor(index, fs.obj, std::move(table));
}

}  // namespace

FnMor curry(const FnMor& q, const FunctionSetObj& fs) {
  std::vector<Value> lefts;
  for (const auto& p : q.dom().elements()) {
    if (p.kind() != Value::Kind::Pair)
      throw ShapeMismatch("domain element " + p.str() + " is not a pair");
    lefts.push_back(p.pair_left());
  }
  return transpose(q, fs, SetObj(std::move(lefts)));
}

FnMor curry(const FnMor& q, const FunctionSetObj& fs, const SetObj& index) {
  return transpose(q, fs, index);
}

FnMor uncurry(const FnMor& qbar, const FunctionSetObj& fs) {
  if (!(qbar.cod() == fs.obj))
    throw ShapeMismatch("codomain " + qbar.cod().str() +
                        " differs from the function set");
  ProductCone dom = product(qbar.dom(), fs.source);
  std::vector<Value> table;
  table.reserve(dom.obj.size());
  for (const auto& p : dom.obj.elements()) {
    const Value* v = qbar(p.pair_left()).graph_find(p.pair_right());
    if (!v) throw std::logic_error("uncurry: graph misses a key");
    table.push_back(*v);
  }
  return FnMor(dom.obj, fs.target, std::move(table));
}

InverseImageCone inverse_image(const FnMor& f, const FnMor& y) {
  if (!(y.dom() == terminal_set()))
    throw NotAnElement("domain " + y.dom().str() +
                       " is not the canonical terminal set");
  if (!(y.cod() == f.cod()))
    throw NotAnElement(element_value(y).str() + " is not an element of " +
                       f.cod().str());
  const Value& point = element_value(y);
  std::vector<Value> members;
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    if (f.table()[i] == point) members.push_back(f.dom().elements()[i]);
  SetObj obj(std::move(members));
  FnMor incl(obj, f.dom(), obj.elements());
  return InverseImageCone{obj, std::move(incl), f, point};
}

FnMor factor_through(const InverseImageCone& cone, const FnMor& q) {
  if (!(q.cod() == cone.incl.cod()))
    throw BoundaryMismatch("codomain " + q.cod().str() +
                           " differs from the fibre's ambient set " +
                           cone.incl.cod().str());
  for (std::size_t i = 0; i < q.table().size(); ++i) {
    if (!(cone.map(q.table()[i]) == cone.point))
      throw NotInFibre(q.dom().elements()[i].str(), q.table()[i].str());
    if (!cone.obj.contains(q.table()[i]))
      throw NotInFibre(q.dom().elements()[i].str(), q.table()[i].str());
  }
  return FnMor(q.dom(), cone.obj, q.table());
}

ClassifierObj classifier() {
  SetObj two{std::vector<Value>{Value::boolean(false), Value::boolean(true)}};
  FnMor truth(terminal_set(), two, {Value::boolean(true)});
  return ClassifierObj{std::move(two), std::move(truth)};
}

FnMor characteristic(const FnMor& j) {
  for (std::size_t i = 0; i + 1 < j.table().size(); ++i)
    for (std::size_t k = i + 1; k < j.table().size(); ++k)
      if (j.table()[i] == j.table()[k])
        throw NotInjective(j.dom().elements()[i].str(),
                           j.dom().elements()[k].str(), j.table()[i].str());
  SetObj image(j.table());
  ClassifierObj cls = classifier();
  std::vector<Value> table;
  table.reserve(j.cod().size());
  for (const auto& x : j.cod().elements())
    table.push_back(Value::boolean(image.contains(x)));
  return FnMor(j.cod(), cls.two, std::move(table));
}

FnMor right_inverse(const FnMor& s) {
  std::vector<Value> table;
  table.reserve(s.cod().size());
  for (const auto& y : s.cod().elements()) {
    const Value* least = nullptr;
    for (std::size_t i = 0; i < s.table().size(); ++i) {
      if (s.table()[i] == y) {
        least = &s.dom().elements()[i];
        break;  // domain is canonically ordered, first hit is least
      }
    }
    if (!least) throw NotSurjective(y.str());
    table.push_back(*least);
  }
  return FnMor(s.cod(), s.dom(), std::move(table));
}

}  // namespace etcs
