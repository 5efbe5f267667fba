#pragma once

#include <cstdint>
#include <memory>
#include <span>

#include "etcs/category.hpp"

namespace etcs {

/// A bounded realization of a natural number system: the element 0 and the
/// successor rule n |-> n + 1, kept intensional rather than tabulated.
/// Axiom-level statements about it are checkable only on evaluated
/// prefixes; reports must say "prefix-verified", never "pass".
class NatSystem {
 public:
  static constexpr std::uint64_t kDefaultBound = 10000;

  explicit NatSystem(std::uint64_t bound = kDefaultBound);

  std::uint64_t bound() const { return bound_; }
  Value zero() const { return Value::nat(0); }
  /// Throws BoundExceeded once the successor would reach the bound.
  Value succ(const Value& n) const;

  /// The finite set {Nat(0), ..., Nat(k-1)}; k may not exceed the bound.
  /// Functions INTO this set are ordinary tables; functions out of the
  /// number system itself exist only as RecFn.
  SetObj prefix_set(std::uint64_t k) const;

 private:
  std::uint64_t bound_;
};

/// The unique sequence x with x(0) = a and x(n+1) = r(x(n)), over a finite
/// target set, evaluated by memoized iteration. Handles are cheap to copy
/// and share one synchronized memo, so concurrent evaluation is safe.
class RecFn {
 public:
  const SetObj& target() const;
  const FnMor& step() const;
  const Value& base() const;

  /// x(n) as a value; extends the memo as needed. Throws BoundExceeded
  /// when n is not below the system bound.
  Value at(std::uint64_t n) const;

  /// Rejects materialization: a function out of the natural numbers has no
  /// finite table. Always throws UnsupportedInfinite.
  FnMor as_table() const;

 private:
  friend RecFn recurse(const NatSystem&, const FnMor&, const FnMor&);
  struct State;
  std::shared_ptr<State> state_;
};

/// The recursion operator: a must be an element 1 -> X and r : X -> X
/// (throws BoundaryMismatch otherwise).
RecFn recurse(const NatSystem& sys, const FnMor& a, const FnMor& r);

/// x(n) as an element 1 -> target. Throws BoundExceeded when n >= bound.
FnMor rec_eval(const RecFn& f, std::uint64_t n);

/// Whether the candidate prefix satisfies the defining equations
/// x(0) = a, x(n+1) = r(x(n)) on its whole length. The empty prefix
/// satisfies them vacuously. Candidate length may not exceed the bound.
bool prefix_unique(const NatSystem& sys, const FnMor& a, const FnMor& r,
                   std::span<const Value> candidate);

/// Equality of two recursion-defined sequences up to (excluding) an index.
/// Only a semi-decision: agreement on a prefix, never on all of N.
bool rec_equal_upto(const RecFn& f, const RecFn& g, std::uint64_t upto);

enum class NatOp { add, mul, pow };

/// Arithmetic on naturals computed by the recursion operator itself:
/// add(m, n) iterates the successor n times from m; mul layers add;
/// pow layers mul. No native +, * or pow is used to produce the result.
/// Inputs and result must stay below the bound (throws BoundExceeded).
std::uint64_t nat_arith(const NatSystem& sys, NatOp op, std::uint64_t m,
                        std::uint64_t n);

}  // namespace etcs
