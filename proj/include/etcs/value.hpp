#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace etcs {

/// An element of the inductive value universe. Every element of every set
/// the kernel can build is a Value:
///
///   Atom   - user-named urelement (script-level element literals)
///   Nat    - member of a bounded copy of the naturals
///   Unit   - the single member of the canonical terminal set
///   Bool   - member of the subset classifier
///   Pair   - member of a cartesian product
///   TagL / TagR - members of a tagged disjoint union
///   Graph  - member of a function set (a total mapping, listed as
///            key/value entries sorted by key with distinct keys)
///
/// Values are immutable and shared; copying is cheap. The constructor
/// order above induces a canonical total order: values of different
/// constructors compare by constructor rank, values of the same
/// constructor compare lexicographically/recursively.
class Value {
 public:
  enum class Kind : std::uint8_t {
    Atom = 0,
    Nat,
    Unit,
    Bool,
    Pair,
    TagL,
    TagR,
    Graph,
  };

  using Entry = std::pair<Value, Value>;

  static Value atom(std::string name);
  static Value nat(std::uint64_t k);
  static Value unit();
  static Value boolean(bool b);
  static Value pair(Value left, Value right);
  static Value tag_left(Value v);
  static Value tag_right(Value v);
  /// Entries must be sorted by key under the canonical order with
  /// pairwise-distinct keys; throws std::invalid_argument otherwise.
  static Value graph(std::vector<Entry> entries);

  Kind kind() const;

  const std::string& atom_name() const;
  std::uint64_t nat_value() const;
  bool bool_value() const;
  const Value& pair_left() const;
  const Value& pair_right() const;
  /// Payload of a TagL or TagR value.
  const Value& tag_payload() const;
  const std::vector<Entry>& graph_entries() const;
  /// Looks a key up in a Graph value; null when absent.
  const Value* graph_find(const Value& key) const;

  /// Canonical rendering: atoms bare, naturals as digits, `*` for Unit,
  /// `true`/`false`, `(l, r)`, `inl(v)`/`inr(v)`, `[k |-> v, ...]`.
  std::string str() const;

  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    return compare(a, b);
  }
  friend bool operator==(const Value& a, const Value& b) {
    return compare(a, b) == std::strong_ordering::equal;
  }

 private:
  struct Node;
  explicit Value(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static std::strong_ordering compare(const Value& a, const Value& b);

  std::shared_ptr<const Node> node_;
};

}  // namespace etcs
