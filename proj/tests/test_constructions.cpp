#include <doctest.h>

#include <cstdint>

#include "etcs/constructions.hpp"
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

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("the canonical terminal set") {
  CHECK(terminal() == SetObj({Value::unit()}));
  CHECK(all_functions(mk_set({"a", "b", "c"}), terminal()).size() == 1);
  CHECK(all_functions(SetObj{}, terminal()).size() == 1);
}

TEST_CASE("terminality coincides with having exactly one element") {
  CHECK(is_terminal(terminal()));
  CHECK_FALSE(is_terminal(SetObj{}));
  CHECK_FALSE(is_terminal(mk_set({"a", "b"})));
  CHECK(is_terminal(mk_set({"x"})));
  for (const auto& T : set_universe(3))
    CHECK(is_terminal(T) == (elements(T).size() == 1));
}

TEST_CASE("the empty set") {
  CHECK(empty() == SetObj{});
  CHECK(elements(empty()).empty());
  CHECK(all_functions(empty(), mk_set({"a", "b"})).size() == 1);
}

TEST_CASE("products enumerate pairs with their projections") {
  SetObj a = mk_set({"a"});
  SetObj zo = mk_set({"0", "1"});
  ProductCone cone = product(a, zo);
  CHECK(cone.obj == SetObj({Value::pair(Value::atom("a"), Value::atom("0")),
                            Value::pair(Value::atom("a"), Value::atom("1"))}));
  for (const auto& p : cone.obj.elements()) {
    CHECK(cone.pr1(p) == p.pair_left());
    CHECK(cone.pr2(p) == p.pair_right());
  }
}

TEST_CASE("|X x Y| = |X| * |Y| for all sets of size <= 3") {
  for (const auto& X : set_universe(3))
    for (const auto& Y : set_universe(3))
      CHECK(product(X, Y).obj.size() == X.size() * Y.size());
}

TEST_CASE("product with the terminal set is isomorphic to the set") {
  SetObj x = mk_set({"a", "b"});
  ProductCone cone = product(x, terminal());
  std::vector<Value> table;
  for (const auto& v : x.elements())
    table.push_back(Value::pair(v, Value::unit()));
  FnMor witness(x, cone.obj, std::move(table));
  CHECK(is_isomorphism(witness).has_value());
}

TEST_CASE("product with the empty set is empty") {
  CHECK(product(SetObj{}, mk_set({"a", "b"})).obj == SetObj{});
}

TEST_CASE("mediating into a product") {
  SetObj i = mk_set({"t"});
  SetObj x = mk_set({"a"});
  SetObj y = mk_set({"0", "1"});
  ProductCone cone = product(x, y);
  FnMor f1 = mk_fn(i, x, {"a"});
  FnMor f2 = mk_fn(i, y, {"0"});
  FnMor m = mediate_product(cone, f1, f2);
  CHECK(element_value(evaluate(m, element_of(i, Value::atom("t")))) ==
        Value::pair(Value::atom("a"), Value::atom("0")));
  CHECK(compose(cone.pr1, m) == f1);
  CHECK(compose(cone.pr2, m) == f2);

  // Mediating the projections themselves forces the identity.
  CHECK(mediate_product(cone, cone.pr1, cone.pr2) == identity(cone.obj));

  // Empty index set: the empty mediator.
  FnMor none_x(SetObj{}, x, {});
  FnMor none_y(SetObj{}, y, {});
  CHECK(mediate_product(cone, none_x, none_y).table().empty());
}

TEST_CASE("mediate_product rejects mismatched components") {
  SetObj i = mk_set({"t"});
  SetObj j = mk_set({"s"});
  SetObj x = mk_set({"a"});
  ProductCone cone = product(x, x);
  CHECK_THROWS_AS(
      mediate_product(cone, mk_fn(i, x, {"a"}), mk_fn(j, x, {"a"})),
      BoundaryMismatch);
  SetObj y = mk_set({"0"});
  CHECK_THROWS_AS(
      mediate_product(cone, mk_fn(i, y, {"0"}), mk_fn(i, x, {"a"})),
      BoundaryMismatch);
}

TEST_CASE("the product mediator is unique, by counting") {
  auto universe = set_universe(3);
  for (const auto& X : universe)
    for (const auto& Y : universe) {
      ProductCone cone = product(X, Y);
      for (const auto& I : universe) {
        auto candidates = all_functions(I, cone.obj);
        for (const auto& f1 : all_functions(I, X))
          for (const auto& f2 : all_functions(I, Y)) {
            std::size_t count = 0;
            for (const auto& h : candidates)
              if (compose(cone.pr1, h) == f1 && compose(cone.pr2, h) == f2)
                ++count;
            CHECK(count == 1);
          }
      }
    }
}

TEST_CASE("function sets have |Y|^|X| elements, for sizes <= 4") {
  for (std::size_t nx = 0; nx <= 4; ++nx)
    for (std::size_t ny = 0; ny <= 4; ++ny) {
      // Oracle: brute-force enumeration of all total mappings.
      SetObj X = sized_set(nx), Y = sized_set(ny);
      CHECK(function_set(X, Y).obj.size() == all_functions(X, Y).size());
      CHECK(function_set(X, Y).obj.size() ==
            (nx == 0 ? 1 : (ny == 0 ? 0 : ipow(ny, nx))));
    }
}

TEST_CASE("the evaluation map applies graphs") {
  SetObj x = mk_set({"a", "b"});
  SetObj y = mk_set({"0", "1"});
  FunctionSetObj fs = function_set(x, y);
  CHECK(fs.obj.size() == 4);
  for (const auto& g : fs.obj.elements())
    for (const auto& v : x.elements())
      CHECK(fs.ev(Value::pair(g, v)) == *g.graph_find(v));
}

TEST_CASE("degenerate function sets") {
  CHECK(function_set(SetObj{}, mk_set({"a", "b"})).obj.size() == 1);
  CHECK(function_set(mk_set({"a"}), SetObj{}).obj.size() == 0);
}

TEST_CASE("curry sends maps 1 x X -> Y to elements of the function set") {
  SetObj x = mk_set({"a", "b"});
  SetObj y = mk_set({"0", "1"});
  FunctionSetObj fs = function_set(x, y);
  ProductCone dom = product(terminal(), x);
  std::vector<Value> q_table;
  for (const auto& p : dom.obj.elements())
    q_table.push_back(p.pair_right() == Value::atom("a") ? Value::atom("0")
                                                         : Value::atom("1"));
  FnMor q(dom.obj, y, std::move(q_table));
  FnMor qbar = curry(q, fs);
  CHECK(qbar.dom() == terminal());
  CHECK(element_value(qbar) ==
        Value::graph({{Value::atom("a"), Value::atom("0")},
                      {Value::atom("b"), Value::atom("1")}}));
}

TEST_CASE("curry and uncurry are mutually inverse for sizes <= 2") {
  auto universe = set_universe(2);
  for (const auto& X : universe)
    for (const auto& Y : universe) {
      FunctionSetObj fs = function_set(X, Y);
      for (const auto& I : universe) {
        for (const auto& q : all_functions(product(I, X).obj, Y))
          CHECK(uncurry(curry(q, fs, I), fs) == q);
        for (const auto& qbar : all_functions(I, fs.obj))
          CHECK(curry(uncurry(qbar, fs), fs, I) == qbar);
      }
    }
}

TEST_CASE("currying over an empty source lands on the empty graph") {
  SetObj i = mk_set({"t", "u"});
  FunctionSetObj fs = function_set(SetObj{}, mk_set({"a"}));
  FnMor q(product(i, SetObj{}).obj, mk_set({"a"}), {});
  FnMor qbar = curry(q, fs, i);
  for (const auto& t : i.elements())
    CHECK(qbar(t) == Value::graph({}));
}

TEST_CASE("curry rejects non-product domains") {
  SetObj x = mk_set({"a"});
  FunctionSetObj fs = function_set(x, x);
  FnMor not_shaped = identity(x);
  CHECK_THROWS_AS(curry(not_shaped, fs), ShapeMismatch);
  CHECK_THROWS_AS(uncurry(identity(x), fs), ShapeMismatch);
}

TEST_CASE("inverse images are literal subsets") {
  SetObj x = mk_set({"1", "2", "3"});
  SetObj y = mk_set({"u", "v"});
  FnMor f = mk_fn(x, y, {"u", "u", "v"});
  InverseImageCone cone = inverse_image(f, element_of(y, Value::atom("u")));
  CHECK(cone.obj == mk_set({"1", "2"}));
  CHECK(compose(f, cone.incl) ==
        FnMor(cone.obj, y, {Value::atom("u"), Value::atom("u")}));

  // A point outside the image has an empty fibre.
  SetObj wide = mk_set({"u", "v", "w"});
  FnMor g = mk_fn(x, wide, {"u", "u", "v"});
  CHECK(inverse_image(g, element_of(wide, Value::atom("w"))).obj == SetObj{});

  // Fibres of the identity are singletons.
  for (const auto& e : elements(x))
    CHECK(inverse_image(identity(x), e).obj ==
          SetObj({element_value(e)}));
}

TEST_CASE("inverse_image rejects non-elements of the codomain") {
  SetObj x = mk_set({"1"});
  SetObj y = mk_set({"u"});
  FnMor f = mk_fn(x, y, {"u"});
  CHECK_THROWS_AS(inverse_image(f, element_of(x, Value::atom("1"))),
                  NotAnElement);
}

TEST_CASE("factoring through a fibre") {
  SetObj x = mk_set({"1", "2", "3"});
  SetObj y = mk_set({"u", "v"});
  FnMor f = mk_fn(x, y, {"u", "u", "v"});
  InverseImageCone cone = inverse_image(f, element_of(y, Value::atom("u")));

  SetObj i = mk_set({"t"});
  FnMor q = mk_fn(i, x, {"1"});
  FnMor qbar = factor_through(cone, q);
  CHECK(compose(cone.incl, qbar) == q);

  // Hitting an element outside the fibre reports the witness.
  FnMor bad = mk_fn(i, x, {"3"});
  CHECK_THROWS_AS(factor_through(cone, bad), NotInFibre);
  try {
    factor_through(cone, bad);
  } catch (const NotInFibre& e) {
    CHECK(e.witness == "t");
  }

  FnMor empty_q(SetObj{}, x, {});
  CHECK(factor_through(cone, empty_q).table().empty());
}

TEST_CASE("the canonical classifier") {
  ClassifierObj cls = classifier();
  CHECK(cls.two ==
        SetObj({Value::boolean(false), Value::boolean(true)}));
  CHECK(elements(cls.two).size() == 2);
  CHECK(element_value(cls.truth) == Value::boolean(true));
}

TEST_CASE("characteristic functions classify injections") {
  SetObj a = mk_set({"a"});
  SetObj ab = mk_set({"a", "b"});
  FnMor incl(a, ab, {Value::atom("a")});
  FnMor chi = characteristic(incl);
  CHECK(chi(Value::atom("a")) == Value::boolean(true));
  CHECK(chi(Value::atom("b")) == Value::boolean(false));

  // Bijective injections classify everything as true.
  SetObj uv = mk_set({"u", "v"});
  FnMor bij = mk_fn(uv, ab, {"b", "a"});
  FnMor full = characteristic(bij);
  CHECK(full(Value::atom("a")) == Value::boolean(true));
  CHECK(full(Value::atom("b")) == Value::boolean(true));

  FnMor collapse = mk_fn(uv, ab, {"a", "a"});
  CHECK_THROWS_AS(characteristic(collapse), NotInjective);
  try {
    characteristic(collapse);
  } catch (const NotInjective& e) {
    CHECK(e.first == "u");
    CHECK(e.second == "v");
  }
}

TEST_CASE("the classifying map is unique, by counting") {
  ClassifierObj cls = classifier();
  auto universe = set_universe(3);
  for (const auto& A : universe)
    for (const auto& X : universe)
      for (const auto& j : all_injections(A, X)) {
        FnMor chi = characteristic(j);
        SetObj img(j.table());
        std::size_t count = 0;
        for (const auto& c : all_functions(X, cls.two)) {
          bool matches = true;
          for (std::size_t k = 0; k < X.size() && matches; ++k)
            matches = (c.table()[k] == Value::boolean(true)) ==
                      img.contains(X.elements()[k]);
          if (matches) {
            ++count;
            CHECK(c == chi);
          }
        }
        CHECK(count == 1);
      }
}

TEST_CASE("right inverses pick the least preimage per fibre") {
  SetObj x = mk_set({"1", "2", "3"});
  SetObj y = mk_set({"u", "v"});
  FnMor s = mk_fn(x, y, {"u", "u", "v"});
  FnMor i = right_inverse(s);
  CHECK(i == mk_fn(y, x, {"1", "3"}));
  CHECK(compose(s, i) == identity(y));

  CHECK(right_inverse(identity(x)) == identity(x));

  FnMor not_surj = mk_fn(mk_set({"1", "2"}), y, {"u", "u"});
  CHECK_THROWS_AS(right_inverse(not_surj), NotSurjective);
  try {
    right_inverse(not_surj);
  } catch (const NotSurjective& e) {
    CHECK(e.witness == "v");
  }
}

TEST_CASE("the number of right inverses is the product of fibre sizes") {
  auto universe = set_universe(3);
  for (const auto& X : universe)
    for (const auto& Y : universe)
      for (const auto& s : all_surjections(X, Y)) {
        std::uint64_t expected = 1;
        for (const auto& y : Y.elements()) {
          std::uint64_t fibre = 0;
          for (const auto& v : s.table())
            if (v == y) ++fibre;
          expected *= fibre;
        }
        std::uint64_t count = 0;
        for (const auto& i : all_functions(Y, X))
          if (fn_eq_or_false(compose(s, i), identity(Y))) ++count;
        CHECK(count == expected);
        CHECK(fn_eq_or_false(compose(s, right_inverse(s)), identity(Y)));
      }
}
