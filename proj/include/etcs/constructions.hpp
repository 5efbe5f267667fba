#pragma once

#include <vector>

#include "etcs/category.hpp"

namespace etcs {

/// A product cone: the canonical X x Y of Pair values together with its
/// two projections.
struct ProductCone {
  SetObj obj;
  FnMor pr1;  // obj -> X
  FnMor pr2;  // obj -> Y
};

/// A function set: the set of all Graph values of total functions X -> Y,
/// together with the evaluation map obj x X -> Y. Keeps the source and
/// target around for shape checks in curry/uncurry.
struct FunctionSetObj {
  SetObj obj;
  FnMor ev;  // product(obj, source).obj -> target
  SetObj source;
  SetObj target;
};

/// An inverse image of point under map: the literal subset of the domain
/// mapping to the point, with its inclusion. Captures map and point so the
/// factorization operation can check the fibre equation.
struct InverseImageCone {
  SetObj obj;
  FnMor incl;  // obj -> map.dom, set inclusion
  FnMor map;   // the f whose fibre this is
  Value point;
};

/// The subset classifier: two = {false, true} with the truth element.
struct ClassifierObj {
  SetObj two;
  FnMor truth;  // 1 -> two, picks true
};

/// The canonical terminal set {*}. (Axiom: a terminal set exists.)
SetObj terminal();

/// Decides terminality. Computes |T| = 1 and, independently, uniqueness of
/// functions into T from a probe family of test sets; insists both agree.
bool is_terminal(const SetObj& T);

/// The canonical empty set. (Axiom: a set with no elements exists.)
SetObj empty();

/// The canonical product of X and Y. (Axiom: every pair of sets has one.)
ProductCone product(const SetObj& X, const SetObj& Y);

/// The mediating function (f1, f2) : I -> obj with pr1 . (f1,f2) = f1 and
/// pr2 . (f1,f2) = f2. Works against any cone by per-element search;
/// throws BoundaryMismatch on ill-matched inputs and ShapeMismatch when
/// the cone admits no (or no unique) pointwise mediator.
FnMor mediate_product(const ProductCone& cone, const FnMor& f1,
                      const FnMor& f2);

/// The canonical function set from X to Y. (Axiom: function sets exist.)
FunctionSetObj function_set(const SetObj& X, const SetObj& Y);

/// The transpose qbar : I -> fs.obj of q : I x X -> Y, where the index set
/// I is recovered from q's domain. When fs.source is empty the domain of q
/// is empty and I is taken to be empty; use the explicit overload to keep
/// a nonempty index set.
FnMor curry(const FnMor& q, const FunctionSetObj& fs);

/// The transpose with an explicit index set; q.dom must equal
/// product(index, fs.source).obj (throws ShapeMismatch).
FnMor curry(const FnMor& q, const FunctionSetObj& fs, const SetObj& index);

/// Inverse of curry: turns qbar : I -> fs.obj back into I x X -> Y.
FnMor uncurry(const FnMor& qbar, const FunctionSetObj& fs);

/// The inverse image of y under f, as a literal subset of f's domain with
/// its inclusion. y must be an element of f.cod (throws NotAnElement).
InverseImageCone inverse_image(const FnMor& f, const FnMor& y);

/// The unique qbar with q = incl . qbar. Throws NotInFibre (with the
/// offending element of q's domain) when q leaves the fibre.
FnMor factor_through(const InverseImageCone& cone, const FnMor& q);

/// The canonical subset classifier. (Axiom: a subset classifier exists.)
ClassifierObj classifier();

/// The characteristic function of an injection j: the unique
/// chi : j.cod -> two whose fibre over true is the image of j.
/// Throws NotInjective (with the colliding pair) otherwise.
FnMor characteristic(const FnMor& j);

/// A right inverse of the surjection s, choosing the canonically least
/// preimage in each fibre. Throws NotSurjective (with the uncovered
/// element) otherwise.
FnMor right_inverse(const FnMor& s);

}  // namespace etcs
