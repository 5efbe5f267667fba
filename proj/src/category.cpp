#include "etcs/category.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "etcs/errors.hpp"

namespace etcs {

SetObj::SetObj(std::vector<Value> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

std::optional<std::size_t> SetObj::index_of(const Value& v) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
  if (it == elems_.end() || !(*it == v)) return std::nullopt;
  return static_cast<std::size_t>(it - elems_.begin());
}

std::string SetObj::str() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& v : elems_) {
    if (!first) out << ", ";
    first = false;
    out << v.str();
  }
  out << '}';
  return out.str();
}

FnMor::FnMor(SetObj dom, SetObj cod, std::vector<Value> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size())
    throw std::invalid_argument("function table arity differs from domain");
  for (const auto& v : table_) {
    if (!cod_.contains(v))
      throw std::invalid_argument("function table value " + v.str() +
                                  " outside codomain " + cod_.str());
  }
}

const Value& FnMor::operator()(const Value& x) const {
  auto idx = dom_.index_of(x);
  if (!idx) throw NotAnElement(x.str() + " is not in " + dom_.str());
  return table_[*idx];
}

std::string FnMor::str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (i) out << ", ";
    out << dom_.elements()[i].str() << " |-> " << table_[i].str();
  }
  out << "] : " << dom_.str() << " -> " << cod_.str();
  return out.str();
}

const SetObj& terminal_set() {
  static const SetObj one{std::vector<Value>{Value::unit()}};
  return one;
}

FnMor compose(const FnMor& g, const FnMor& f) {
  if (!(f.cod() == g.dom()))
    throw CompositionMismatch(f.cod().str(), g.dom().str());
  std::vector<Value> table;
  table.reserve(f.table().size());
  for (const auto& v : f.table()) table.push_back(g(v));
  return FnMor(f.dom(), g.cod(), std::move(table));
}

FnMor identity(const SetObj& X) {
  return FnMor(X, X, X.elements());
}

std::vector<FnMor> elements(const SetObj& X) {
  std::vector<FnMor> out;
  out.reserve(X.size());
  for (const auto& v : X.elements())
    out.push_back(FnMor(terminal_set(), X, {v}));
  return out;
}

FnMor element_of(const SetObj& X, const Value& v) {
  if (!X.contains(v)) throw NotAnElement(v.str() + " is not in " + X.str());
  return FnMor(terminal_set(), X, {v});
}

const Value& element_value(const FnMor& x) {
  if (!(x.dom() == terminal_set()))
    throw NotAnElement("domain " + x.dom().str() +
                       " is not the canonical terminal set");
  return x.table()[0];
}

FnMor evaluate(const FnMor& f, const FnMor& x) {
  if (!(x.dom() == terminal_set()))
    throw NotAnElement("domain " + x.dom().str() +
                       " is not the canonical terminal set");
  return compose(f, x);
}

bool fn_equal(const FnMor& f, const FnMor& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw BoundaryMismatch(f.str() + " vs " + g.str());
  bool by_table = f.table() == g.table();
  bool by_elements = true;
  for (const auto& x : elements(f.dom())) {
    if (!(evaluate(f, x) == evaluate(g, x))) {
      by_elements = false;
      break;
    }
  }
  if (by_table != by_elements)
    throw std::logic_error("extensionality: element-wise test disagrees "
                           "with table identity");
  return by_table;
}

std::optional<FnMor> is_isomorphism(const FnMor& f) {
  if (f.dom().size() != f.cod().size()) return std::nullopt;
  // Injectivity on a table between equinumerous sets implies bijectivity.
  std::vector<Value> inverse_table(f.cod().size(), Value::unit());
  std::vector<bool> hit(f.cod().size(), false);
  for (std::size_t i = 0; i < f.table().size(); ++i) {
    auto j = f.cod().index_of(f.table()[i]);
    if (!j) return std::nullopt;
    if (hit[*j]) return std::nullopt;
    hit[*j] = true;
    inverse_table[*j] = f.dom().elements()[i];
  }
  FnMor inv(f.cod(), f.dom(), std::move(inverse_table));
  if (!(compose(inv, f) == identity(f.dom())) ||
      !(compose(f, inv) == identity(f.cod())))
    throw std::logic_error("inverse construction failed round-trip check");
  return inv;
}

}  // namespace etcs
