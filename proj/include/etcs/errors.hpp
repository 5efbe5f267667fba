#pragma once

#include <stdexcept>
#include <string>

namespace etcs {

/// Base class for all kernel errors. Subclasses carry the witness data
/// needed to diagnose the violated precondition.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Composition g . f attempted with f.cod != g.dom.
struct CompositionMismatch : Error {
  std::string inner_cod;  // rendered f.cod
  std::string outer_dom;  // rendered g.dom
  CompositionMismatch(std::string inner, std::string outer)
      : Error("composition mismatch: inner codomain " + inner +
              " differs from outer domain " + outer),
        inner_cod(std::move(inner)),
        outer_dom(std::move(outer)) {}
};

/// Parallel-function operation applied to functions whose boundaries differ.
struct BoundaryMismatch : Error {
  explicit BoundaryMismatch(const std::string& detail)
      : Error("boundary mismatch: " + detail) {}
};

/// An argument expected to be an element (a map out of the terminal set)
/// is not one, or names a value outside the relevant set.
struct NotAnElement : Error {
  explicit NotAnElement(const std::string& detail)
      : Error("not an element: " + detail) {}
};

/// A function's domain does not have the canonical shape an operation
/// requires (e.g. curry on a non-product domain).
struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& detail)
      : Error("shape mismatch: " + detail) {}
};

/// Factoring through an inverse image failed: q(t) lies outside the fibre.
struct NotInFibre : Error {
  std::string witness;  // rendered element t of q's domain
  NotInFibre(std::string t, const std::string& value)
      : Error("not in fibre: q(" + t + ") = " + value +
              " violates the fibre equation"),
        witness(std::move(t)) {}
};

/// Injectivity precondition failed; carries the colliding pair.
struct NotInjective : Error {
  std::string first, second;
  NotInjective(std::string a, std::string a2, const std::string& image)
      : Error("not injective: " + a + " and " + a2 + " both map to " + image),
        first(std::move(a)),
        second(std::move(a2)) {}
};

/// Surjectivity precondition failed; carries an element with empty fibre.
struct NotSurjective : Error {
  std::string witness;
  explicit NotSurjective(std::string y)
      : Error("not surjective: " + y + " has an empty fibre"),
        witness(std::move(y)) {}
};

/// A natural-number computation left the configured bound.
struct BoundExceeded : Error {
  explicit BoundExceeded(const std::string& detail)
      : Error("bound exceeded: " + detail) {}
};

/// A construction would require a function out of the (intensional,
/// unbounded) natural numbers as a finite table.
struct UnsupportedInfinite : Error {
  explicit UnsupportedInfinite(const std::string& detail)
      : Error("unsupported infinite construction: " + detail) {}
};

/// A relation fails one of the equivalence laws; names the law and a witness.
struct NotEquivalence : Error {
  std::string law;      // "reflexive" | "symmetric" | "transitive"
  std::string witness;  // rendered offending tuple
  NotEquivalence(std::string which, std::string w)
      : Error("not an equivalence relation: " + which + " fails at " + w),
        law(std::move(which)),
        witness(std::move(w)) {}
};

/// A verification run would enumerate more instances than the ceiling allows.
struct BudgetExceeded : Error {
  unsigned long long count;
  unsigned long long ceiling;
  BudgetExceeded(unsigned long long n, unsigned long long max)
      : Error("budget exceeded: " + std::to_string(n) +
              " instances surpass ceiling " + std::to_string(max)),
        count(n),
        ceiling(max) {}
};

/// Requested mutation does not apply to the named construction.
struct InapplicableMutation : Error {
  explicit InapplicableMutation(const std::string& detail)
      : Error("inapplicable mutation: " + detail) {}
};

}  // namespace etcs
