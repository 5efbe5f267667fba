#include "etcs/derived.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "etcs/errors.hpp"

namespace etcs {

SetObj Subset::members() const {
  std::vector<Value> out;
  for (std::size_t i = 0; i < ambient.size(); ++i)
    if (chi.table()[i].bool_value()) out.push_back(ambient.elements()[i]);
  return SetObj(std::move(out));
}

Subset subset_of(const SetObj& ambient, const SetObj& members) {
  for (const auto& m : members.elements())
    if (!ambient.contains(m))
      throw NotAnElement(m.str() + " is not in " + ambient.str());
  std::vector<Value> table;
  table.reserve(ambient.size());
  for (const auto& x : ambient.elements())
    table.push_back(Value::boolean(members.contains(x)));
  return Subset{ambient, FnMor(ambient, classifier().two, std::move(table))};
}

EquivRelation::EquivRelation(SetObj carrier, Subset rel)
    : carrier_(std::move(carrier)), rel_(std::move(rel)) {
  if (!(rel_.ambient == product(carrier_, carrier_).obj))
    throw ShapeMismatch("relation is not a subset of the carrier's square");
  for (const auto& x : carrier_.elements())
    if (!related(x, x)) throw NotEquivalence("reflexive", x.str());
  // Neighbor lists keep the law checks near-linear in the relation size.
  std::vector<std::vector<std::size_t>> nbr(carrier_.size());
  const auto& xs = carrier_.elements();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (related(xs[i], xs[j])) {
        if (!related(xs[j], xs[i]))
          throw NotEquivalence(
              "symmetric", "(" + xs[i].str() + ", " + xs[j].str() + ")");
        nbr[i].push_back(j);
      }
  for (std::size_t y = 0; y < xs.size(); ++y)
    for (std::size_t x : nbr[y])
      for (std::size_t z : nbr[y])
        if (!related(xs[x], xs[z]))
          throw NotEquivalence("transitive", "(" + xs[x].str() + ", " +
                                                 xs[y].str() + ", " +
                                                 xs[z].str() + ")");
}

EquivRelation EquivRelation::from_pairs(
    const SetObj& carrier,
    const std::vector<std::pair<Value, Value>>& related) {
  ProductCone square = product(carrier, carrier);
  for (const auto& [a, b] : related) {
    if (!carrier.contains(a))
      throw NotAnElement(a.str() + " is not in " + carrier.str());
    if (!carrier.contains(b))
      throw NotAnElement(b.str() + " is not in " + carrier.str());
  }
  std::vector<Value> members;
  members.reserve(related.size());
  for (const auto& [a, b] : related) members.push_back(Value::pair(a, b));
  return EquivRelation(carrier,
                       subset_of(square.obj, SetObj(std::move(members))));
}

bool EquivRelation::related(const Value& a, const Value& b) const {
  return rel_.chi(Value::pair(a, b)).bool_value();
}

Subset subset_from_injection(const FnMor& j) {
  return Subset{j.cod(), characteristic(j)};
}

Subset image(const FnMor& f) {
  return subset_of(f.cod(), SetObj(f.table()));
}

namespace {

// The graph of x's class indicator: x' |-> (x ~ x'). This is exactly the
// value curry(chi, 2^X)(x) takes, computed without materializing 2^X.
Value class_graph(const EquivRelation& rel, const Value& x) {
  std::vector<Value::Entry> entries;
  entries.reserve(rel.carrier().size());
  for (const auto& y : rel.carrier().elements())
    entries.emplace_back(y, Value::boolean(rel.related(x, y)));
  return Value::graph(std::move(entries));
}

}  // namespace

QuotientResult quotient(const EquivRelation& rel) {
  std::vector<Value> table;
  table.reserve(rel.carrier().size());
  for (const auto& x : rel.carrier().elements())
    table.push_back(class_graph(rel, x));
  SetObj obj(table);
  return QuotientResult{obj, FnMor(rel.carrier(), obj, std::move(table))};
}

QuotientResult quotient_via_function_set(const EquivRelation& rel) {
  FunctionSetObj fs = function_set(rel.carrier(), classifier().two);
  FnMor qbar = curry(rel.rel().chi, fs, rel.carrier());
  SetObj obj = image(qbar).members();
  return QuotientResult{obj, FnMor(rel.carrier(), obj, qbar.table())};
}

namespace {

bool graph_is_empty_indicator(const Value& g) {
  for (const auto& [k, v] : g.graph_entries())
    if (v.bool_value()) return false;
  return true;
}

// Returns the unique key mapped to true, or null if not exactly one.
const Value* graph_singleton_key(const Value& g) {
  const Value* found = nullptr;
  for (const auto& [k, v] : g.graph_entries()) {
    if (v.bool_value()) {
      if (found) return nullptr;
      found = &k;
    }
  }
  return found;
}

Value indicator_graph(const SetObj& ambient, const Value& member) {
  std::vector<Value::Entry> entries;
  entries.reserve(ambient.size());
  for (const auto& x : ambient.elements())
    entries.emplace_back(x, Value::boolean(x == member));
  return Value::graph(std::move(entries));
}

Value empty_indicator_graph(const SetObj& ambient) {
  std::vector<Value::Entry> entries;
  entries.reserve(ambient.size());
  for (const auto& x : ambient.elements())
    entries.emplace_back(x, Value::boolean(false));
  return Value::graph(std::move(entries));
}

constexpr std::size_t kCoproductCrossCheckLimit = 12;

}  // namespace

CoproductResult coproduct(const SetObj& X, const SetObj& Y) {
  std::vector<Value> tagged;
  std::vector<Value> inl_table, inr_table;
  tagged.reserve(X.size() + Y.size());
  for (const auto& x : X.elements()) {
    tagged.push_back(Value::tag_left(x));
    inl_table.push_back(Value::tag_left(x));
  }
  for (const auto& y : Y.elements()) {
    tagged.push_back(Value::tag_right(y));
    inr_table.push_back(Value::tag_right(y));
  }
  SetObj obj(std::move(tagged));
  CoproductResult out{obj, FnMor(X, obj, std::move(inl_table)),
                      FnMor(Y, obj, std::move(inr_table))};

  if (X.size() > kCoproductCrossCheckLimit ||
      Y.size() > kCoproductCrossCheckLimit)
    return out;

  // Axiomatic build: inside 2^X x 2^Y, keep the pairs (singleton, empty)
  // and (empty, singleton).
  FunctionSetObj fx = function_set(X, classifier().two);
  FunctionSetObj fy = function_set(Y, classifier().two);
  ProductCone pc = product(fx.obj, fy.obj);
  std::vector<Value> chi_table;
  chi_table.reserve(pc.obj.size());
  for (const auto& p : pc.obj.elements()) {
    bool left_single = graph_singleton_key(p.pair_left()) != nullptr;
    bool left_empty = graph_is_empty_indicator(p.pair_left());
    bool right_single = graph_singleton_key(p.pair_right()) != nullptr;
    bool right_empty = graph_is_empty_indicator(p.pair_right());
    chi_table.push_back(Value::boolean((left_single && right_empty) ||
                                       (left_empty && right_single)));
  }
  FnMor chi(pc.obj, classifier().two, std::move(chi_table));
  ClassifierObj cls = classifier();
  InverseImageCone cone = inverse_image(chi, cls.truth);

  std::vector<Value> ax_inl, ax_inr;
  for (const auto& x : X.elements())
    ax_inl.push_back(
        Value::pair(indicator_graph(X, x), empty_indicator_graph(Y)));
  for (const auto& y : Y.elements())
    ax_inr.push_back(
        Value::pair(empty_indicator_graph(X), indicator_graph(Y, y)));
  FnMor inl_ax(X, cone.obj, std::move(ax_inl));
  FnMor inr_ax(Y, cone.obj, std::move(ax_inr));

  // The isomorphism is forced by compatibility with the injections.
  std::vector<Value> iso_table;
  iso_table.reserve(cone.obj.size());
  for (const auto& p : cone.obj.elements()) {
    if (const Value* x = graph_singleton_key(p.pair_left()))
      iso_table.push_back(Value::tag_left(*x));
    else if (const Value* y = graph_singleton_key(p.pair_right()))
      iso_table.push_back(Value::tag_right(*y));
    else
      throw std::logic_error("coproduct: fibre element of unexpected shape");
  }
  FnMor iso(cone.obj, obj, std::move(iso_table));
  if (!is_isomorphism(iso))
    throw std::logic_error("coproduct: builds are not isomorphic");
  if (!(compose(iso, inl_ax) == out.inl) ||
      !(compose(iso, inr_ax) == out.inr))
    throw std::logic_error(
        "coproduct: isomorphism does not commute with the injections");
  out.verified = true;
  out.axiomatic_obj = cone.obj;
  out.axiomatic_maps = {std::move(inl_ax), std::move(inr_ax), std::move(iso)};
  return out;
}

FnMor copair(const CoproductResult& cop, const FnMor& f, const FnMor& g) {
  if (!(f.cod() == g.cod()))
    throw BoundaryMismatch("copair legs land in different sets: " +
                           f.cod().str() + " vs " + g.cod().str());
  if (!(f.dom() == cop.inl.dom()) || !(g.dom() == cop.inr.dom()))
    throw BoundaryMismatch("copair legs do not match the injections");
  std::vector<Value> table;
  table.reserve(cop.obj.size());
  for (const auto& t : cop.obj.elements()) {
    if (t.kind() == Value::Kind::TagL)
      table.push_back(f(t.tag_payload()));
    else
      table.push_back(g(t.tag_payload()));
  }
  return FnMor(cop.obj, f.cod(), std::move(table));
}

IntegersResult build_integers(std::uint64_t bound) {
  if (bound < 1) throw std::invalid_argument("integer bound must be >= 1");
  std::vector<Value> nats;
  nats.reserve(bound + 1);
  for (std::uint64_t k = 0; k <= bound; ++k) nats.push_back(Value::nat(k));
  SetObj segment(std::move(nats));
  ProductCone pairs = product(segment, segment);
  ProductCone square = product(pairs.obj, pairs.obj);
  std::vector<Value> chi_table;
  chi_table.reserve(square.obj.size());
  for (const auto& pq : square.obj.elements()) {
    const Value& p = pq.pair_left();
    const Value& q = pq.pair_right();
    std::uint64_t m = p.pair_left().nat_value();
    std::uint64_t n = p.pair_right().nat_value();
    std::uint64_t m2 = q.pair_left().nat_value();
    std::uint64_t n2 = q.pair_right().nat_value();
    chi_table.push_back(Value::boolean(m + n2 == m2 + n));
  }
  Subset rel{square.obj,
             FnMor(square.obj, classifier().two, std::move(chi_table))};
  EquivRelation eq(pairs.obj, std::move(rel));
  QuotientResult q = quotient(eq);
  return IntegersResult{std::move(q.obj), std::move(q.proj), bound};
}

std::vector<std::pair<Value, SetObj>> family_from_map(const FnMor& p) {
  std::vector<std::pair<Value, SetObj>> out;
  out.reserve(p.cod().size());
  for (const auto& i : p.cod().elements()) {
    std::vector<Value> fibre;
    for (std::size_t k = 0; k < p.dom().size(); ++k)
      if (p.table()[k] == i) fibre.push_back(p.dom().elements()[k]);
    out.emplace_back(i, SetObj(std::move(fibre)));
  }
  return out;
}

SetObj indexed_product(const FnMor& p) {
  const SetObj& I = p.cod();
  FunctionSetObj sections = function_set(I, p.dom());  // X^I
  FunctionSetObj endos = function_set(I, I);           // I^I
  std::vector<Value> induced;
  induced.reserve(sections.obj.size());
  for (const auto& g : sections.obj.elements()) {
    std::vector<Value::Entry> entries;
    entries.reserve(I.size());
    for (const auto& [i, x] : g.graph_entries())
      entries.emplace_back(i, p(x));
    induced.push_back(Value::graph(std::move(entries)));
  }
  FnMor p_power(sections.obj, endos.obj, std::move(induced));
  std::vector<Value::Entry> id_entries;
  for (const auto& i : I.elements()) id_entries.emplace_back(i, i);
  FnMor id_element = element_of(endos.obj, Value::graph(std::move(id_entries)));
  return inverse_image(p_power, id_element).obj;
}

std::vector<std::vector<Value>> union_find_partition(
    const SetObj& carrier, const std::vector<std::pair<Value, Value>>& pairs) {
  std::vector<std::size_t> parent(carrier.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto& [a, b] : pairs) {
    auto ia = carrier.index_of(a);
    auto ib = carrier.index_of(b);
    if (!ia || !ib)
      throw NotAnElement("related pair lies outside " + carrier.str());
    std::size_t ra = find(*ia), rb = find(*ib);
    if (ra != rb) parent[rb] = ra;
  }
  std::map<std::size_t, std::vector<Value>> blocks;
  for (std::size_t i = 0; i < carrier.size(); ++i)
    blocks[find(i)].push_back(carrier.elements()[i]);
  std::vector<std::vector<Value>> out;
  out.reserve(blocks.size());
  for (auto& [root, block] : blocks) out.push_back(std::move(block));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return out;
}

SetObj tagged_union_oracle(const SetObj& X, const SetObj& Y) {
  std::vector<Value> out;
  out.reserve(X.size() + Y.size());
  for (const auto& x : X.elements()) out.push_back(Value::tag_left(x));
  for (const auto& y : Y.elements()) out.push_back(Value::tag_right(y));
  return SetObj(std::move(out));
}

SetObj fibre_product_oracle(const FnMor& p) {
  auto family = family_from_map(p);
  std::vector<Value> tuples;
  std::vector<std::size_t> digits(family.size(), 0);
  for (const auto& [i, fibre] : family)
    if (fibre.empty()) return SetObj{};
  for (;;) {
    std::vector<Value::Entry> entries;
    entries.reserve(family.size());
    for (std::size_t k = 0; k < family.size(); ++k)
      entries.emplace_back(family[k].first,
                           family[k].second.elements()[digits[k]]);
    tuples.push_back(Value::graph(std::move(entries)));
    std::size_t k = family.size();
    bool carried = true;
    while (k > 0 && carried) {
      --k;
      carried = ++digits[k] == family[k].second.size();
      if (carried) digits[k] = 0;
    }
    if (carried) break;  // odometer wrapped (also handles an empty family)
  }
  return SetObj(std::move(tuples));
}

std::vector<std::vector<Value>> partition_of_quotient(
    const QuotientResult& q) {
  std::map<std::size_t, std::vector<Value>> blocks;
  for (std::size_t i = 0; i < q.proj.dom().size(); ++i) {
    auto cls = q.obj.index_of(q.proj.table()[i]);
    if (!cls) throw std::logic_error("quotient map leaves the quotient set");
    blocks[*cls].push_back(q.proj.dom().elements()[i]);
  }
  std::vector<std::vector<Value>> out;
  out.reserve(blocks.size());
  for (auto& [cls, block] : blocks) out.push_back(std::move(block));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return out;
}

}  // namespace etcs
