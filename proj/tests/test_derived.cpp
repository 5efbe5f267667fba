#include <doctest.h>

#include <cstdint>
#include <map>
#include <set>

#include "etcs/derived.hpp"
#include "etcs/enumerate.hpp"
#include "etcs/errors.hpp"

using namespace etcs;

namespace {

SetObj mk_set(std::initializer_list<const char*> names) {
  std::vector<Value> vs;
  for (const char* n : names) vs.push_back(Value::atom(n));
  return SetObj(std::move(vs));
}

FnMor mk_fn(const SetObj& dom, const SetObj& cod,
            std::initializer_list<const char*> images) {
  std::vector<Value> table;
  for (const char* n : images) table.push_back(Value::atom(n));
  return FnMor(dom, cod, std::move(table));
}

std::vector<std::pair<Value, Value>> atom_pairs(
    std::initializer_list<std::pair<const char*, const char*>> ps) {
  std::vector<std::pair<Value, Value>> out;
  for (const auto& [a, b] : ps)
    out.emplace_back(Value::atom(a), Value::atom(b));
  return out;
}

}  // namespace

TEST_CASE("subsets from injections") {
  SetObj a = mk_set({"a"});
  SetObj ab = mk_set({"a", "b"});
  Subset s = subset_from_injection(FnMor(a, ab, {Value::atom("a")}));
  CHECK(s.members() == a);
  CHECK(s.chi(Value::atom("b")) == Value::boolean(false));

  // Two injections with the same image give the same subset.
  SetObj uv = mk_set({"u", "v"});
  Subset s1 = subset_from_injection(mk_fn(uv, ab, {"a", "b"}));
  Subset s2 = subset_from_injection(mk_fn(uv, ab, {"b", "a"}));
  CHECK(s1 == s2);

  // The empty injection yields the constant-false subset.
  Subset none = subset_from_injection(FnMor(SetObj{}, ab, {}));
  CHECK(none.members() == SetObj{});

  CHECK_THROWS_AS(subset_from_injection(mk_fn(uv, ab, {"a", "a"})),
                  NotInjective);
}

TEST_CASE("subset/injection round-trip for every injection of size <= 3") {
  auto universe = set_universe(3);
  for (const auto& A : universe)
    for (const auto& X : universe)
      for (const auto& j : all_injections(A, X)) {
        Subset s = subset_from_injection(j);
        ClassifierObj cls = classifier();
        InverseImageCone cone = inverse_image(s.chi, cls.truth);
        CHECK(cone.obj == SetObj(j.table()));  // same image
        CHECK(s.members() == SetObj(j.table()));
      }
}

TEST_CASE("images") {
  SetObj x = mk_set({"1", "2"});
  SetObj y = mk_set({"u", "v"});
  CHECK(image(mk_fn(x, y, {"u", "u"})).members() == mk_set({"u"}));
  CHECK(image(mk_fn(x, y, {"u", "v"})).members() == y);
  CHECK(image(FnMor(SetObj{}, y, {})).members() == SetObj{});
}

TEST_CASE("the image is the least subset through which f factors") {
  for (const auto& X : set_universe(3))
    for (const auto& Y : set_universe(3))
      for (const auto& f : all_functions(X, Y)) {
        SetObj im = image(f).members();
        for (const auto& candidate : all_subsets(Y)) {
          bool factors = true;
          for (const auto& v : f.table())
            if (!candidate.contains(v)) {
              factors = false;
              break;
            }
          // im factors f, and every subset f factors through contains im.
          if (factors)
            for (const auto& m : im.elements())
              CHECK(candidate.contains(m));
        }
        for (const auto& v : f.table()) CHECK(im.contains(v));
      }
}

TEST_CASE("equivalence relations validate their three laws") {
  SetObj x = mk_set({"a", "b", "c"});
  CHECK_THROWS_AS(
      EquivRelation::from_pairs(x, atom_pairs({{"a", "a"}, {"b", "b"}})),
      NotEquivalence);  // c not reflexive
  CHECK_THROWS_AS(
      EquivRelation::from_pairs(
          x, atom_pairs(
                 {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}})),
      NotEquivalence);  // not symmetric
  CHECK_THROWS_AS(
      EquivRelation::from_pairs(x, atom_pairs({{"a", "a"},
                                               {"b", "b"},
                                               {"c", "c"},
                                               {"a", "b"},
                                               {"b", "a"},
                                               {"b", "c"},
                                               {"c", "b"}})),
      NotEquivalence);  // not transitive: a~b, b~c, a!~c
  try {
    EquivRelation::from_pairs(x, atom_pairs({{"a", "a"}}));
  } catch (const NotEquivalence& e) {
    CHECK(e.law == "reflexive");
  }
}

TEST_CASE("quotients: discrete, codiscrete and a pinned partition") {
  SetObj ab = mk_set({"a", "b"});
  QuotientResult discrete = quotient(
      EquivRelation::from_pairs(ab, atom_pairs({{"a", "a"}, {"b", "b"}})));
  CHECK(discrete.obj.size() == 2);
  CHECK(is_isomorphism(discrete.proj).has_value());

  QuotientResult codiscrete = quotient(EquivRelation::from_pairs(
      ab, atom_pairs({{"a", "a"}, {"b", "b"}, {"a", "b"}, {"b", "a"}})));
  CHECK(codiscrete.obj.size() == 1);

  // {1,2},{3} via the union-find oracle.
  SetObj x = mk_set({"1", "2", "3"});
  auto pairs = atom_pairs(
      {{"1", "1"}, {"2", "2"}, {"3", "3"}, {"1", "2"}, {"2", "1"}});
  QuotientResult q = quotient(EquivRelation::from_pairs(x, pairs));
  CHECK(q.obj.size() == 2);
  auto oracle = union_find_partition(x, atom_pairs({{"1", "2"}}));
  CHECK(partition_of_quotient(q) == oracle);
}

TEST_CASE("quotient properties over every partition of carriers <= 4") {
  for (std::size_t n = 0; n <= 4; ++n) {
    SetObj X = sized_set(n);
    for (const auto& partition : all_partitions(X)) {
      std::vector<std::pair<Value, Value>> full, spanning;
      for (const auto& block : partition) {
        for (const auto& a : block)
          for (const auto& b : block) full.emplace_back(a, b);
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
          spanning.emplace_back(block[i], block[i + 1]);
      }
      EquivRelation rel = EquivRelation::from_pairs(X, full);
      QuotientResult q = quotient(rel);

      // The scalable construction matches the explicit function-set route.
      QuotientResult explicit_q = quotient_via_function_set(rel);
      CHECK(q.obj == explicit_q.obj);
      CHECK(q.proj == explicit_q.proj);

      // q is surjective and its kernel is the relation.
      CHECK(image(q.proj).members() == q.obj);
      for (const auto& a : X.elements())
        for (const auto& b : X.elements())
          CHECK((q.proj(a) == q.proj(b)) == rel.related(a, b));

      // Partition agreement with the union-find oracle.
      CHECK(partition_of_quotient(q) == union_find_partition(X, spanning));
    }
  }
}

TEST_CASE("coproduct: tagged build with injections") {
  SetObj a1 = mk_set({"a"});
  CoproductResult cop = coproduct(a1, a1);
  CHECK(cop.obj == SetObj({Value::tag_left(Value::atom("a")),
                           Value::tag_right(Value::atom("a"))}));
  CHECK(cop.obj.size() == 2);
  CHECK(cop.verified);

  // X = {} makes inr an isomorphism onto the union.
  SetObj y = mk_set({"u", "v"});
  CoproductResult from_empty = coproduct(SetObj{}, y);
  CHECK(is_isomorphism(from_empty.inr).has_value());
}

TEST_CASE("|X + Y| = |X| + |Y| over sets of size <= 3") {
  for (const auto& X : set_universe(3))
    for (const auto& Y : set_universe(3)) {
      CoproductResult cop = coproduct(X, Y);
      CHECK(cop.obj.size() == X.size() + Y.size());
      CHECK(cop.obj == tagged_union_oracle(X, Y));
    }
}

TEST_CASE("the axiomatic coproduct is uniquely isomorphic to the tagged "
          "one, for sizes <= 2") {
  auto universe = set_universe(2);
  for (const auto& X : universe)
    for (const auto& Y : universe) {
      CoproductResult cop = coproduct(X, Y);
      REQUIRE(cop.verified);
      const FnMor& inl_ax = cop.axiomatic_maps[0];
      const FnMor& inr_ax = cop.axiomatic_maps[1];
      const FnMor& iso = cop.axiomatic_maps[2];
      CHECK(is_isomorphism(iso).has_value());
      CHECK(compose(iso, inl_ax) == cop.inl);
      CHECK(compose(iso, inr_ax) == cop.inr);
      std::size_t count = 0;
      for (const auto& h : all_functions(cop.axiomatic_obj, cop.obj))
        if (fn_eq_or_false(compose(h, inl_ax), cop.inl) &&
            fn_eq_or_false(compose(h, inr_ax), cop.inr))
          ++count;
      CHECK(count == 1);
    }
}

TEST_CASE("copairing exists uniquely for sizes <= 2") {
  auto universe = set_universe(2);
  for (const auto& X : universe)
    for (const auto& Y : universe) {
      CoproductResult cop = coproduct(X, Y);
      for (const auto& Z : universe)
        for (const auto& f : all_functions(X, Z))
          for (const auto& g : all_functions(Y, Z)) {
            FnMor h = copair(cop, f, g);
            CHECK(compose(h, cop.inl) == f);
            CHECK(compose(h, cop.inr) == g);
            std::size_t count = 0;
            for (const auto& cand : all_functions(cop.obj, Z))
              if (fn_eq_or_false(compose(cand, cop.inl), f) &&
                  fn_eq_or_false(compose(cand, cop.inr), g))
                ++count;
            CHECK(count == 1);
          }
    }
}

TEST_CASE("integers as a truncated quotient of pairs") {
  IntegersResult z3 = build_integers(3);
  CHECK(z3.obj.size() == 7);  // 2 * 3 + 1

  // The pinned identifications need pairs up to 5, so bound 10 hosts them.
  IntegersResult z10 = build_integers(10);
  auto cls = [&](std::uint64_t m, std::uint64_t n) {
    return z10.proj(Value::pair(Value::nat(m), Value::nat(n)));
  };
  CHECK(cls(2, 5) == cls(0, 3));        // 2 + 3 = 5 + 0
  CHECK_FALSE(cls(2, 5) == cls(0, 4));  // 2 + 4 != 5 + 0
  for (std::uint64_t k = 0; k <= 10; ++k) CHECK(cls(k, k) == cls(0, 0));

  auto cls3 = [&](std::uint64_t m, std::uint64_t n) {
    return z3.proj(Value::pair(Value::nat(m), Value::nat(n)));
  };
  CHECK(cls3(2, 3) == cls3(1, 2));
  CHECK_FALSE(cls3(2, 3) == cls3(2, 1));
}

TEST_CASE("integer classes are indexed by differences") {
  for (std::uint64_t bound : {1ull, 3ull, 10ull}) {
    IntegersResult z = build_integers(bound);
    CHECK(z.obj.size() == 2 * bound + 1);
    // (m, n) |-> m - n is constant on classes and injective across them.
    std::map<std::int64_t, Value> class_of_diff;
    for (const auto& p : z.proj.dom().elements()) {
      std::int64_t diff =
          static_cast<std::int64_t>(p.pair_left().nat_value()) -
          static_cast<std::int64_t>(p.pair_right().nat_value());
      Value cls = z.proj(p);
      auto [it, fresh] = class_of_diff.emplace(diff, cls);
      if (!fresh) CHECK(it->second == cls);
    }
    CHECK(class_of_diff.size() == z.obj.size());
    std::set<std::string> rendered;
    for (const auto& [d, cls] : class_of_diff) rendered.insert(cls.str());
    CHECK(rendered.size() == z.obj.size());
  }
}

TEST_CASE("families from maps list every fibre, empty ones included") {
  SetObj x = mk_set({"1", "2", "3"});
  SetObj ij = mk_set({"i", "j"});
  FnMor p = mk_fn(x, ij, {"i", "i", "j"});
  auto family = family_from_map(p);
  REQUIRE(family.size() == 2);
  CHECK(family[0].first == Value::atom("i"));
  CHECK(family[0].second == mk_set({"1", "2"}));
  CHECK(family[1].second == mk_set({"3"}));

  SetObj ijk = mk_set({"i", "j", "k"});
  auto with_hole = family_from_map(mk_fn(x, ijk, {"i", "i", "j"}));
  REQUIRE(with_hole.size() == 3);
  CHECK(with_hole[2].second == SetObj{});

  for (const auto& [i, fibre] : family_from_map(identity(x)))
    CHECK(fibre.size() == 1);
}

TEST_CASE("indexed products multiply fibre sizes") {
  // Fibres of sizes 2 and 3 give a product of size 6.
  SetObj x = mk_set({"1", "2", "3", "4", "5"});
  SetObj ij = mk_set({"i", "j"});
  FnMor p = mk_fn(x, ij, {"i", "i", "j", "j", "j"});
  SetObj prod = indexed_product(p);
  CHECK(prod.size() == 6);
  CHECK(prod == fibre_product_oracle(p));

  // An empty fibre annihilates the product.
  SetObj k = mk_set({"i", "j", "k"});
  CHECK(indexed_product(mk_fn(x, k, {"i", "i", "j", "j", "j"})) == SetObj{});

  // The empty family's product is a one-element set.
  SetObj nothing;
  FnMor to_nothing(nothing, nothing, {});
  CHECK(indexed_product(to_nothing) == SetObj({Value::graph({})}));
}

TEST_CASE("indexed products match the fibre-product oracle exhaustively") {
  for (std::size_t nx = 0; nx <= 4; ++nx)
    for (std::size_t ni = 0; ni <= 3; ++ni) {
      SetObj X = sized_set(nx);
      SetObj I = sized_set(ni);
      for (const auto& p : all_functions(X, I)) {
        SetObj built = indexed_product(p);
        CHECK(built == fibre_product_oracle(p));
        std::uint64_t expected = 1;
        for (const auto& [i, fibre] : family_from_map(p))
          expected *= fibre.size();
        CHECK(built.size() == expected);
      }
    }
}
