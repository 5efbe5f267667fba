#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etcs/value.hpp"

namespace etcs {

/// A finite set: canonically ordered, duplicate-free list of Values.
/// Two sets are equal exactly when their element lists are identical.
class SetObj {
 public:
  SetObj() = default;
  /// Normalizes: sorts under the canonical order and removes duplicates.
  explicit SetObj(std::vector<Value> elems);

  const std::vector<Value>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(const Value& v) const { return index_of(v).has_value(); }
  std::optional<std::size_t> index_of(const Value& v) const;

  friend bool operator==(const SetObj& a, const SetObj& b) {
    return a.elems_ == b.elems_;
  }

  std::string str() const;  // {a, b, c}

 private:
  std::vector<Value> elems_;
};

/// A function between finite sets: explicit domain, codomain, and total
/// mapping table. table()[i] is the image of dom().elements()[i]. The
/// codomain is part of the data; two functions are equal exactly when
/// domain, codomain and table all agree.
class FnMor {
 public:
  /// table must assign one codomain element per domain element, in
  /// domain order; throws std::invalid_argument otherwise.
  FnMor(SetObj dom, SetObj cod, std::vector<Value> table);

  const SetObj& dom() const { return dom_; }
  const SetObj& cod() const { return cod_; }
  const std::vector<Value>& table() const { return table_; }

  /// Table lookup; throws NotAnElement if x is not in the domain.
  const Value& operator()(const Value& x) const;

  friend bool operator==(const FnMor& a, const FnMor& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.table_ == b.table_;
  }

  std::string str() const;  // [a |-> 0, b |-> 1] : {a, b} -> {0, 1}

 private:
  SetObj dom_;
  SetObj cod_;
  std::vector<Value> table_;
};

/// The canonical terminal set {*}.
const SetObj& terminal_set();

/// g . f; requires f.cod = g.dom (throws CompositionMismatch).
FnMor compose(const FnMor& g, const FnMor& f);

/// The identity function on X.
FnMor identity(const SetObj& X);

/// The elements of X, as functions 1 -> X in canonical order.
std::vector<FnMor> elements(const SetObj& X);

/// The element of X with value v, as a function 1 -> X.
/// Throws NotAnElement when v is not in X.
FnMor element_of(const SetObj& X, const Value& v);

/// The value an element function 1 -> X picks out.
/// Throws NotAnElement when x is not a map out of the canonical terminal.
const Value& element_value(const FnMor& x);

/// f(x) as the composite f . x; x must be an element of f's domain.
FnMor evaluate(const FnMor& f, const FnMor& x);

/// Extensional equality of parallel functions. Requires equal boundaries
/// (throws BoundaryMismatch). Decides by the element-wise test and by
/// table identity, and insists the two agree.
bool fn_equal(const FnMor& f, const FnMor& g);

/// The two-sided inverse of f when f is an isomorphism; absent otherwise.
std::optional<FnMor> is_isomorphism(const FnMor& f);

}  // namespace etcs
