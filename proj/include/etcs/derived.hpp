#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "etcs/constructions.hpp"

namespace etcs {

/// A subset of an ambient set, carried as its characteristic function
/// ambient -> two. Two subsets are equal exactly when ambient and chi
/// agree (equivalently, when they have the same members).
struct Subset {
  SetObj ambient;
  FnMor chi;

  /// The member list: the fibre of true under chi.
  SetObj members() const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.ambient == b.ambient && a.chi == b.chi;
  }
};

Subset subset_of(const SetObj& ambient, const SetObj& members);

/// An equivalence relation on a carrier, as a subset of carrier x carrier.
/// Construction validates reflexivity, symmetry and transitivity and
/// throws NotEquivalence (naming the law and a witness) on failure.
class EquivRelation {
 public:
  EquivRelation(SetObj carrier, Subset rel);

  static EquivRelation from_pairs(
      const SetObj& carrier,
      const std::vector<std::pair<Value, Value>>& related);

  const SetObj& carrier() const { return carrier_; }
  const Subset& rel() const { return rel_; }
  bool related(const Value& a, const Value& b) const;

 private:
  SetObj carrier_;
  Subset rel_;
};

/// The subset corresponding to an injection j (same members as j's image).
/// Throws NotInjective otherwise.
Subset subset_from_injection(const FnMor& j);

/// The image of f as a subset of its codomain: the least subset through
/// which f factors.
Subset image(const FnMor& f);

struct QuotientResult {
  SetObj obj;  // the quotient set; elements are class-indicator graphs
  FnMor proj;  // the canonical surjection carrier -> obj
};

/// The quotient of the carrier by an equivalence relation, built by the
/// transpose-then-image construction: each element maps to the graph of
/// its class's indicator function, and the quotient is the set of those
/// graphs. Scales to large carriers because the ambient function set is
/// never materialized.
QuotientResult quotient(const EquivRelation& rel);

/// The same construction routed explicitly through function_set + curry +
/// image. Exponential in the carrier size; used to cross-check quotient()
/// on small instances.
QuotientResult quotient_via_function_set(const EquivRelation& rel);

struct CoproductResult {
  SetObj obj;  // tagged build: TagL/TagR values
  FnMor inl;   // X -> obj
  FnMor inr;   // Y -> obj
  // The axiomatic build: the subset of 2^X x 2^Y of (singleton, empty)
  // and (empty, singleton) pairs, with its injections and the unique
  // isomorphism onto the tagged build. Populated (and the isomorphism
  // verified) when the function sets stay small enough to enumerate.
  bool verified = false;
  SetObj axiomatic_obj;
  std::vector<FnMor> axiomatic_maps;  // {inl_ax, inr_ax, iso: axiomatic -> obj}
};

/// The disjoint union of X and Y. Always returns the tagged build with
/// both injections; additionally constructs the axiomatic build from
/// function sets, products and inverse images and verifies the unique
/// isomorphism between the two, whenever 2^|X| and 2^|Y| stay enumerable.
CoproductResult coproduct(const SetObj& X, const SetObj& Y);

/// The unique h : X + Y -> Z with h . inl = f and h . inr = g.
FnMor copair(const CoproductResult& cop, const FnMor& f, const FnMor& g);

struct IntegersResult {
  SetObj obj;           // classes of {0..bound}^2 under difference equality
  FnMor proj;           // the canonical surjection
  std::uint64_t bound;  // the truncation bound the classes are exact for
};

/// The integers as the quotient of {0..bound}^2 by
/// (m, n) ~ (m', n') iff m + n' = m' + n, truncated at the bound.
IntegersResult build_integers(std::uint64_t bound);

/// The fibres of p, one per element of p.cod (empty fibres included).
std::vector<std::pair<Value, SetObj>> family_from_map(const FnMor& p);

/// The product of the family p : X -> I, built inside the function set:
/// the fibre of the identity-graph element of I^I under the induced map
/// X^I -> I^I. Its elements are the graphs of the sections of p.
SetObj indexed_product(const FnMor& p);

// Independent oracles for the derived constructions. These never touch the
// axiomatic routes above: the quotient oracle is union-find over the
// related pairs, the coproduct oracle tags elements directly, and the
// fibre-product oracle enumerates choice tuples.

std::vector<std::vector<Value>> union_find_partition(
    const SetObj& carrier, const std::vector<std::pair<Value, Value>>& pairs);

SetObj tagged_union_oracle(const SetObj& X, const SetObj& Y);

SetObj fibre_product_oracle(const FnMor& p);

/// The partition of the carrier induced by a quotient map (its fibres,
/// empty ones dropped), normalized for comparison against an oracle.
std::vector<std::vector<Value>> partition_of_quotient(const QuotientResult& q);

}  // namespace etcs
