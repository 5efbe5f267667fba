#include "etcs/value.hpp"

#include <sstream>
#include <stdexcept>

namespace etcs {

struct Value::Node {
  Kind kind;
  std::string name;          // Atom
  std::uint64_t nat = 0;     // Nat
  bool flag = false;         // Bool
  std::vector<Value> kids;   // Pair: {l, r}; TagL/TagR: {payload}
  std::vector<Entry> entries;  // Graph
};

Value::Kind Value::kind() const { return node_->kind; }

Value Value::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  return Value(std::move(n));
}

Value Value::nat(std::uint64_t k) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Nat;
  n->nat = k;
  return Value(std::move(n));
}

Value Value::unit() {
  static const Value u = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Unit;
    return Value(std::move(n));
  }();
  return u;
}

Value Value::boolean(bool b) {
  auto mk = [](bool v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bool;
    n->flag = v;
    return Value(std::move(n));
  };
  static const Value t = mk(true);
  static const Value f = mk(false);
  return b ? t : f;
}

Value Value::pair(Value left, Value right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pair;
  n->kids = {std::move(left), std::move(right)};
  return Value(std::move(n));
}

Value Value::tag_left(Value v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::TagL;
  n->kids = {std::move(v)};
  return Value(std::move(n));
}

Value Value::tag_right(Value v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::TagR;
  n->kids = {std::move(v)};
  return Value(std::move(n));
}

Value Value::graph(std::vector<Entry> entries) {
  for (std::size_t i = 1; i < entries.size(); ++i) {
    auto cmp = compare(entries[i - 1].first, entries[i].first);
    if (cmp != std::strong_ordering::less) {
      throw std::invalid_argument(
          "graph entries must be sorted by key with distinct keys");
    }
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Graph;
  n->entries = std::move(entries);
  return Value(std::move(n));
}

const std::string& Value::atom_name() const {
  if (kind() != Kind::Atom) throw std::logic_error("not an Atom value");
  return node_->name;
}

std::uint64_t Value::nat_value() const {
  if (kind() != Kind::Nat) throw std::logic_error("not a Nat value");
  return node_->nat;
}

bool Value::bool_value() const {
  if (kind() != Kind::Bool) throw std::logic_error("not a Bool value");
  return node_->flag;
}

const Value& Value::pair_left() const {
  if (kind() != Kind::Pair) throw std::logic_error("not a Pair value");
  return node_->kids[0];
}

const Value& Value::pair_right() const {
  if (kind() != Kind::Pair) throw std::logic_error("not a Pair value");
  return node_->kids[1];
}

const Value& Value::tag_payload() const {
  if (kind() != Kind::TagL && kind() != Kind::TagR)
    throw std::logic_error("not a tagged value");
  return node_->kids[0];
}

const std::vector<Value::Entry>& Value::graph_entries() const {
  if (kind() != Kind::Graph) throw std::logic_error("not a Graph value");
  return node_->entries;
}

const Value* Value::graph_find(const Value& key) const {
  const auto& es = graph_entries();
  std::size_t lo = 0, hi = es.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    auto cmp = compare(es[mid].first, key);
    if (cmp == std::strong_ordering::equal) return &es[mid].second;
    if (cmp == std::strong_ordering::less)
      lo = mid + 1;
    else
      hi = mid;
  }
  return nullptr;
}

std::strong_ordering Value::compare(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  switch (a.kind()) {
    case Kind::Atom:
      return a.node_->name <=> b.node_->name;
    case Kind::Nat:
      return a.node_->nat <=> b.node_->nat;
    case Kind::Unit:
      return std::strong_ordering::equal;
    case Kind::Bool:
      return a.node_->flag <=> b.node_->flag;
    case Kind::Pair:
    case Kind::TagL:
    case Kind::TagR: {
      const auto& x = a.node_->kids;
      const auto& y = b.node_->kids;
      for (std::size_t i = 0; i < x.size(); ++i) {
        auto cmp = compare(x[i], y[i]);
        if (cmp != std::strong_ordering::equal) return cmp;
      }
      return std::strong_ordering::equal;
    }
    case Kind::Graph: {
      const auto& x = a.node_->entries;
      const auto& y = b.node_->entries;
      std::size_t n = x.size() < y.size() ? x.size() : y.size();
      for (std::size_t i = 0; i < n; ++i) {
        auto ck = compare(x[i].first, y[i].first);
        if (ck != std::strong_ordering::equal) return ck;
        auto cv = compare(x[i].second, y[i].second);
        if (cv != std::strong_ordering::equal) return cv;
      }
      return x.size() <=> y.size();
    }
  }
  return std::strong_ordering::equal;  // unreachable
}

std::string Value::str() const {
  std::ostringstream out;
  switch (kind()) {
    case Kind::Atom:
      out << node_->name;
      break;
    case Kind::Nat:
      out << node_->nat;
      break;
    case Kind::Unit:
      out << '*';
      break;
    case Kind::Bool:
      out << (node_->flag ? "true" : "false");
      break;
    case Kind::Pair:
      out << '(' << node_->kids[0].str() << ", " << node_->kids[1].str()
          << ')';
      break;
    case Kind::TagL:
      out << "inl(" << node_->kids[0].str() << ')';
      break;
    case Kind::TagR:
      out << "inr(" << node_->kids[0].str() << ')';
      break;
    case Kind::Graph: {
      out << '[';
      bool first = true;
      for (const auto& [k, v] : node_->entries) {
        if (!first) out << ", ";
        first = false;
        out << k.str() << " |-> " << v.str();
      }
      out << ']';
      break;
    }
  }
  return out.str();
}

}  // namespace etcs
