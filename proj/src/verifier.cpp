#include "etcs/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "etcs/constructions.hpp"
#include "etcs/derived.hpp"
#include "etcs/enumerate.hpp"
#include "etcs/errors.hpp"
#include "etcs/nno.hpp"

namespace etcs {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::prefix_verified:
      return "prefix-verified";
  }
  return "?";
}

namespace {

using Witness = std::vector<std::pair<std::string, std::string>>;

struct Ctx {
  std::uint64_t ceiling;
  std::uint64_t instances = 0;

  void tick() {
    if (++instances > ceiling) throw BudgetExceeded(instances, ceiling);
  }
};

struct PropertyResult {
  bool ok = true;
  Witness witness;

  static PropertyResult failed(Witness w) { return {false, std::move(w)}; }
};

// Iterates all total tables from a dom_size-element set into a
// cod_size-element set, as index digits, in canonical order.
template <typename F>
void for_each_table(std::size_t dom_size, std::size_t cod_size, F&& fn) {
  if (dom_size == 0) {
    std::vector<std::size_t> none;
    fn(none);
    return;
  }
  if (cod_size == 0) return;
  std::vector<std::size_t> digits(dom_size, 0);
  for (;;) {
    fn(digits);
    std::size_t i = dom_size;
    while (i > 0) {
      --i;
      if (++digits[i] < cod_size) break;
      digits[i] = 0;
      if (i == 0) return;
    }
  }
}

std::string render_table(const SetObj& dom, const SetObj& cod,
                         const std::vector<std::size_t>& digits) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out << ", ";
    out << dom.elements()[i].str() << " |-> "
        << cod.elements()[digits[i]].str();
  }
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------------------
// Reusable universal-property checkers. Each checks both the existence
// clause (by running the construction and its equations) and the
// uniqueness clause (by counting every candidate mediator). They are run
// against the canonical constructions by check_axiom and against corrupted
// ones by mutate_and_check, so failures return witnesses instead of
// throwing.
// ---------------------------------------------------------------------------

PropertyResult product_property(const ProductCone& cone, const SetObj& X,
                                const SetObj& Y,
                                const std::vector<SetObj>& universe,
                                Ctx& ctx) {
  for (const auto& I : universe) {
    auto f1s = all_functions(I, X);
    auto f2s = all_functions(I, Y);
    for (const auto& f1 : f1s) {
      for (const auto& f2 : f2s) {
        ctx.tick();
        auto describe = [&](Witness extra) {
          Witness w{{"I", I.str()}, {"f1", f1.str()}, {"f2", f2.str()}};
          for (auto& kv : extra) w.push_back(std::move(kv));
          return w;
        };
        try {
          FnMor m = mediate_product(cone, f1, f2);
          if (!fn_eq_or_false(compose(cone.pr1, m), f1) ||
              !fn_eq_or_false(compose(cone.pr2, m), f2))
            return PropertyResult::failed(
                describe({{"mediator", m.str()},
                          {"violation", "projection equations"}}));
        } catch (const Error& e) {
          return PropertyResult::failed(describe({{"error", e.what()}}));
        }
        // Count every candidate I -> obj satisfying both equations.
        std::size_t count = 0;
        std::string first, second;
        for_each_table(I.size(), cone.obj.size(),
                       [&](const std::vector<std::size_t>& digits) {
                         for (std::size_t t = 0; t < digits.size(); ++t) {
                           if (!(cone.pr1.table()[digits[t]] ==
                                 f1.table()[t]) ||
                               !(cone.pr2.table()[digits[t]] ==
                                 f2.table()[t]))
                             return;
                         }
                         ++count;
                         if (count == 1)
                           first = render_table(I, cone.obj, digits);
                         else if (count == 2)
                           second = render_table(I, cone.obj, digits);
                       });
        if (count != 1) {
          Witness extra{{"mediator_count", std::to_string(count)}};
          if (count >= 2) {
            extra.push_back({"mediator_a", first});
            extra.push_back({"mediator_b", second});
          }
          return PropertyResult::failed(describe(std::move(extra)));
        }
      }
    }
  }
  return {};
}

PropertyResult curry_property(const FunctionSetObj& fs,
                              const std::vector<SetObj>& universe, Ctx& ctx) {
  // The evaluation map itself.
  for (const auto& p : fs.ev.dom().elements()) {
    ctx.tick();
    const Value* v = p.pair_left().graph_find(p.pair_right());
    if (!v || !(*v == fs.ev(p)))
      return PropertyResult::failed(
          {{"at", p.str()}, {"violation", "evaluation map"}});
  }
  for (const auto& I : universe) {
    ProductCone dom = product(I, fs.source);
    for (const auto& q : all_functions(dom.obj, fs.target)) {
      ctx.tick();
      auto equation_holds = [&](const FnMor& qb) {
        for (const auto& t : I.elements())
          for (const auto& x : fs.source.elements())
            if (!(fs.ev(Value::pair(qb(t), x)) == q(Value::pair(t, x))))
              return false;
        return true;
      };
      Witness base{{"I", I.str()}, {"q", q.str()}};
      try {
        FnMor qbar = curry(q, fs, I);
        if (!equation_holds(qbar)) {
          base.push_back({"transpose", qbar.str()});
          base.push_back({"violation", "transpose equation"});
          return PropertyResult::failed(std::move(base));
        }
        if (!(uncurry(qbar, fs) == q)) {
          base.push_back({"violation", "uncurry round-trip"});
          return PropertyResult::failed(std::move(base));
        }
      } catch (const Error& e) {
        base.push_back({"error", e.what()});
        return PropertyResult::failed(std::move(base));
      }
      std::size_t count = 0;
      for (const auto& qb : all_functions(I, fs.obj)) {
        if (equation_holds(qb)) {
          ++count;
          if (!(curry(uncurry(qb, fs), fs, I) == qb)) {
            base.push_back({"violation", "curry round-trip"});
            return PropertyResult::failed(std::move(base));
          }
        }
      }
      if (count != 1) {
        base.push_back({"transpose_count", std::to_string(count)});
        return PropertyResult::failed(std::move(base));
      }
    }
  }
  return {};
}

PropertyResult fibre_property(const InverseImageCone& cone,
                              const std::vector<SetObj>& universe, Ctx& ctx) {
  for (const auto& a : cone.obj.elements())
    if (!(cone.map(cone.incl(a)) == cone.point))
      return PropertyResult::failed(
          {{"member", a.str()}, {"violation", "fibre equation"}});
  for (const auto& I : universe) {
    for (const auto& q : all_functions(I, cone.incl.cod())) {
      bool in_fibre = true;
      for (const auto& v : q.table())
        if (!(cone.map(v) == cone.point)) {
          in_fibre = false;
          break;
        }
      if (!in_fibre) continue;
      ctx.tick();
      Witness base{{"I", I.str()}, {"q", q.str()}};
      try {
        FnMor qbar = factor_through(cone, q);
        if (!(compose(cone.incl, qbar) == q)) {
          base.push_back({"violation", "factorization equation"});
          return PropertyResult::failed(std::move(base));
        }
      } catch (const Error& e) {
        base.push_back({"error", e.what()});
        return PropertyResult::failed(std::move(base));
      }
      std::size_t count = 0;
      for_each_table(I.size(), cone.obj.size(),
                     [&](const std::vector<std::size_t>& digits) {
                       for (std::size_t t = 0; t < digits.size(); ++t)
                         if (!(cone.incl.table()[digits[t]] ==
                               q.table()[t]))
                           return;
                       ++count;
                     });
      if (count != 1) {
        base.push_back({"factorization_count", std::to_string(count)});
        return PropertyResult::failed(std::move(base));
      }
    }
  }
  return {};
}

// Whether j is an inverse image of truth under c, decided extensionally:
// the fibre of truth under c has the same members as j's image.
bool classifies(const FnMor& c, const Value& truth_value, const FnMor& j) {
  SetObj im(j.table());
  for (std::size_t i = 0; i < c.dom().size(); ++i) {
    bool in_fibre = c.table()[i] == truth_value;
    if (in_fibre != im.contains(c.dom().elements()[i])) return false;
  }
  return true;
}

PropertyResult classify_injection(const FnMor& j, const SetObj& two,
                                  const Value& truth_value,
                                  const std::vector<SetObj>& universe,
                                  Ctx& ctx) {
  ctx.tick();
  Witness base{{"j", j.str()}};
  FnMor chi = characteristic(j);
  if (!classifies(chi, truth_value, j)) {
    base.push_back({"chi", chi.str()});
    base.push_back(
        {"violation", "constructed map does not classify the injection"});
    return PropertyResult::failed(std::move(base));
  }
  // j must be an inverse image of truth under chi: check the
  // factorization clause, with candidate counts.
  for (const auto& I : universe) {
    for (const auto& q : all_functions(I, j.cod())) {
      bool lands_true = true;
      for (const auto& v : q.table())
        if (!(chi(v) == truth_value)) {
          lands_true = false;
          break;
        }
      if (!lands_true) continue;
      std::size_t count = 0;
      for_each_table(I.size(), j.dom().size(),
                     [&](const std::vector<std::size_t>& digits) {
                       for (std::size_t t = 0; t < digits.size(); ++t)
                         if (!(j.table()[digits[t]] == q.table()[t])) return;
                       ++count;
                     });
      if (count != 1) {
        base.push_back({"I", I.str()});
        base.push_back({"q", q.str()});
        base.push_back({"factorization_count", std::to_string(count)});
        return PropertyResult::failed(std::move(base));
      }
    }
  }
  // Uniqueness of the classifying map, by counting all maps into two.
  std::size_t count = 0;
  bool found_matches_chi = false;
  for (const auto& c : all_functions(j.cod(), two)) {
    if (classifies(c, truth_value, j)) {
      ++count;
      if (c == chi) found_matches_chi = true;
    }
  }
  if (count != 1 || !found_matches_chi) {
    base.push_back({"classifier_count", std::to_string(count)});
    return PropertyResult::failed(std::move(base));
  }
  return {};
}

PropertyResult right_inverse_property(const FnMor& s, const FnMor& i,
                                      Ctx& ctx) {
  ctx.tick();
  Witness base{{"s", s.str()}, {"i", i.str()}};
  if (!fn_eq_or_false(compose(s, i), identity(s.cod()))) {
    base.push_back({"violation", "s . i is not the identity"});
    return PropertyResult::failed(std::move(base));
  }
  // Enumerate all right inverses; the count is the product of fibre sizes.
  std::uint64_t expected = 1;
  for (const auto& y : s.cod().elements()) {
    std::uint64_t fibre = 0;
    for (const auto& v : s.table())
      if (v == y) ++fibre;
    expected *= fibre;
  }
  std::uint64_t count = 0;
  for_each_table(s.cod().size(), s.dom().size(),
                 [&](const std::vector<std::size_t>& digits) {
                   for (std::size_t t = 0; t < digits.size(); ++t)
                     if (!(s.table()[digits[t]] == s.cod().elements()[t]))
                       return;
                   ++count;
                 });
  if (count != expected) {
    base.push_back({"right_inverse_count", std::to_string(count)});
    base.push_back({"fibre_size_product", std::to_string(expected)});
    return PropertyResult::failed(std::move(base));
  }
  return {};
}

// ---------------------------------------------------------------------------
// Axiom checkers
// ---------------------------------------------------------------------------

PropertyResult check_a1(int size, Ctx& ctx) {
  auto universe = set_universe(size);
  std::vector<std::vector<std::vector<FnMor>>> fns(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    fns[i].resize(universe.size());
    for (std::size_t j = 0; j < universe.size(); ++j)
      fns[i][j] = all_functions(universe[i], universe[j]);
  }
  for (std::size_t w = 0; w < universe.size(); ++w)
    for (std::size_t x = 0; x < universe.size(); ++x)
      for (std::size_t y = 0; y < universe.size(); ++y)
        for (std::size_t z = 0; z < universe.size(); ++z)
          for (const auto& f : fns[w][x])
            for (const auto& g : fns[x][y])
              for (const auto& h : fns[y][z]) {
                ctx.tick();
                if (!(compose(h, compose(g, f)) ==
                      compose(compose(h, g), f)))
                  return PropertyResult::failed({{"f", f.str()},
                                                 {"g", g.str()},
                                                 {"h", h.str()}});
              }
  for (std::size_t x = 0; x < universe.size(); ++x)
    for (std::size_t y = 0; y < universe.size(); ++y)
      for (const auto& f : fns[x][y]) {
        ctx.tick();
        if (!(compose(f, identity(universe[x])) == f) ||
            !(compose(identity(universe[y]), f) == f))
          return PropertyResult::failed(
              {{"f", f.str()}, {"violation", "identity laws"}});
      }
  return {};
}

PropertyResult check_a2(int size, Ctx& ctx) {
  SetObj T = terminal();
  if (!is_terminal(T))
    return PropertyResult::failed(
        {{"violation", "canonical terminal fails the probe test"}});
  for (const auto& X : set_universe(size)) {
    ctx.tick();
    auto count = all_functions(X, T).size();
    if (count != 1)
      return PropertyResult::failed(
          {{"X", X.str()}, {"maps_into_terminal", std::to_string(count)}});
  }
  return {};
}

PropertyResult check_a3(int size, Ctx& ctx) {
  SetObj none = empty();
  if (!elements(none).empty())
    return PropertyResult::failed(
        {{"violation", "empty set has an element"}});
  for (const auto& Y : set_universe(size)) {
    ctx.tick();
    auto count = all_functions(none, Y).size();
    if (count != 1)
      return PropertyResult::failed(
          {{"Y", Y.str()}, {"maps_out_of_empty", std::to_string(count)}});
  }
  return {};
}

PropertyResult check_a4(int size, Ctx& ctx) {
  auto universe = set_universe(size);
  for (const auto& X : universe)
    for (const auto& Y : universe) {
      auto fs = all_functions(X, Y);
      auto points = elements(X);
      for (const auto& f : fs)
        for (const auto& g : fs) {
          ctx.tick();
          bool pointwise = true;
          const FnMor* at = nullptr;
          for (const auto& x : points)
            if (!(evaluate(f, x) == evaluate(g, x))) {
              pointwise = false;
              at = &x;
              break;
            }
          bool by_table = f.table() == g.table();
          if (pointwise != by_table || fn_equal(f, g) != by_table)
            return PropertyResult::failed(
                {{"f", f.str()},
                 {"g", g.str()},
                 {"at", at ? element_value(*at).str() : "-"}});
        }
    }
  return {};
}

PropertyResult check_a5(int size, Ctx& ctx) {
  auto universe = set_universe(size);
  for (const auto& X : universe)
    for (const auto& Y : universe) {
      ctx.tick();
      ProductCone cone = product(X, Y);
      if (cone.obj.size() != X.size() * Y.size())
        return PropertyResult::failed({{"X", X.str()},
                                       {"Y", Y.str()},
                                       {"violation", "cardinality"}});
      for (const auto& p : cone.obj.elements())
        if (!(cone.pr1(p) == p.pair_left()) ||
            !(cone.pr2(p) == p.pair_right()))
          return PropertyResult::failed(
              {{"at", p.str()}, {"violation", "projections"}});
      PropertyResult r = product_property(cone, X, Y, universe, ctx);
      if (!r.ok) return r;
      // Any relabeled cone is uniquely isomorphic to the canonical one
      // compatibly with the projections (kept to small carriers: the
      // candidate space is |P|^|P|).
      if (X.size() <= 2 && Y.size() <= 2) {
        std::vector<Value> relabeled, b1, b2;
        for (const auto& p : cone.obj.elements()) {
          relabeled.push_back(Value::tag_left(p));
          b1.push_back(cone.pr1(p));
          b2.push_back(cone.pr2(p));
        }
        SetObj obj2(relabeled);
        FnMor q1(obj2, X, std::move(b1)), q2(obj2, Y, std::move(b2));
        std::size_t isos = 0;
        for_each_table(obj2.size(), cone.obj.size(),
                       [&](const std::vector<std::size_t>& digits) {
                         for (std::size_t t = 0; t < digits.size(); ++t) {
                           if (!(cone.pr1.table()[digits[t]] ==
                                 q1.table()[t]) ||
                               !(cone.pr2.table()[digits[t]] ==
                                 q2.table()[t]))
                             return;
                         }
                         ++isos;
                       });
        if (isos != 1)
          return PropertyResult::failed(
              {{"X", X.str()},
               {"Y", Y.str()},
               {"relabeled_mediator_count", std::to_string(isos)}});
      }
    }
  return {};
}

PropertyResult check_a6(int size, Ctx& ctx) {
  auto universe = set_universe(size);
  for (const auto& X : universe)
    for (const auto& Y : universe) {
      ctx.tick();
      FunctionSetObj fs = function_set(X, Y);
      if (fs.obj.size() != count_functions(X, Y))
        return PropertyResult::failed({{"X", X.str()},
                                       {"Y", Y.str()},
                                       {"violation", "cardinality"}});
      PropertyResult r = curry_property(fs, universe, ctx);
      if (!r.ok) return r;
    }
  return {};
}

PropertyResult check_a7(int size, Ctx& ctx) {
  auto universe = set_universe(size);
  for (const auto& X : universe)
    for (const auto& Y : universe)
      for (const auto& f : all_functions(X, Y))
        for (const auto& y : elements(Y)) {
          ctx.tick();
          InverseImageCone cone = inverse_image(f, y);
          // Literal-subset shape: members are exactly the matching inputs.
          std::vector<Value> expect;
          for (std::size_t i = 0; i < X.size(); ++i)
            if (f.table()[i] == element_value(y))
              expect.push_back(X.elements()[i]);
          if (!(cone.obj == SetObj(expect)))
            return PropertyResult::failed({{"f", f.str()},
                                           {"y", element_value(y).str()},
                                           {"violation", "member list"}});
          PropertyResult r = fibre_property(cone, universe, ctx);
          if (!r.ok) return r;
        }
  return {};
}

PropertyResult check_a8(int size, Ctx& ctx) {
  ClassifierObj cls = classifier();
  if (elements(cls.two).size() != 2)
    return PropertyResult::failed(
        {{"violation", "classifier does not have exactly two elements"}});
  auto universe = set_universe(size);
  for (const auto& A : universe)
    for (const auto& X : universe)
      for (const auto& j : all_injections(A, X)) {
        PropertyResult r = classify_injection(
            j, cls.two, element_value(cls.truth), universe, ctx);
        if (!r.ok) return r;
      }
  return {};
}

PropertyResult check_a9(int size, Ctx& ctx) {
  NatSystem sys;
  constexpr std::uint64_t kPrefix = 5;
  for (std::size_t n = 1; n <= static_cast<std::size_t>(size); ++n) {
    SetObj X = sized_set(n);
    for (const auto& a : elements(X))
      for (const auto& r : all_functions(X, X)) {
        ctx.tick();
        RecFn rec = recurse(sys, a, r);
        std::vector<Value> prefix;
        for (std::uint64_t k = 0; k < kPrefix; ++k)
          prefix.push_back(rec.at(k));
        Witness base{{"X", X.str()},
                     {"a", element_value(a).str()},
                     {"r", r.str()}};
        if (!(prefix[0] == element_value(a))) {
          base.push_back({"violation", "base equation"});
          return PropertyResult::failed(std::move(base));
        }
        for (std::uint64_t k = 0; k + 1 < kPrefix; ++k)
          if (!(prefix[k + 1] == r(prefix[k]))) {
            base.push_back({"violation", "step equation"});
            return PropertyResult::failed(std::move(base));
          }
        if (!prefix_unique(sys, a, r, prefix)) {
          base.push_back({"violation", "produced prefix rejected"});
          return PropertyResult::failed(std::move(base));
        }
        // Prefix-level uniqueness: among all length-5 sequences in X,
        // exactly one satisfies the defining equations.
        std::size_t satisfying = 0;
        for_each_table(kPrefix, X.size(),
                       [&](const std::vector<std::size_t>& digits) {
                         std::vector<Value> cand;
                         cand.reserve(kPrefix);
                         for (auto d : digits)
                           cand.push_back(X.elements()[d]);
                         if (prefix_unique(sys, a, r, cand)) ++satisfying;
                       });
        if (satisfying != 1) {
          base.push_back({"satisfying_prefixes", std::to_string(satisfying)});
          return PropertyResult::failed(std::move(base));
        }
      }
  }
  return {};
}

PropertyResult check_a10(int size, Ctx& ctx) {
  auto universe = set_universe(size);
  for (const auto& X : universe)
    for (const auto& Y : universe)
      for (const auto& s : all_surjections(X, Y)) {
        FnMor i = right_inverse(s);
        PropertyResult r = right_inverse_property(s, i, ctx);
        if (!r.ok) return r;
      }
  return {};
}

PropertyResult check_coproduct(int size, Ctx& ctx) {
  auto universe = set_universe(size);
  for (const auto& X : universe)
    for (const auto& Y : universe) {
      ctx.tick();
      CoproductResult cop = coproduct(X, Y);
      Witness base{{"X", X.str()}, {"Y", Y.str()}};
      if (cop.obj.size() != X.size() + Y.size()) {
        base.push_back({"violation", "cardinality"});
        return PropertyResult::failed(std::move(base));
      }
      if (!(cop.obj == tagged_union_oracle(X, Y))) {
        base.push_back({"violation", "tagged oracle"});
        return PropertyResult::failed(std::move(base));
      }
      if (!cop.verified) {
        base.push_back({"violation", "axiomatic build missing"});
        return PropertyResult::failed(std::move(base));
      }
      // Unique isomorphism between the builds, by counting all maps
      // compatible with the injections.
      const FnMor& inl_ax = cop.axiomatic_maps[0];
      const FnMor& inr_ax = cop.axiomatic_maps[1];
      std::size_t compatible = 0;
      for (const auto& h : all_functions(cop.axiomatic_obj, cop.obj)) {
        if (fn_eq_or_false(compose(h, inl_ax), cop.inl) &&
            fn_eq_or_false(compose(h, inr_ax), cop.inr))
          ++compatible;
      }
      if (compatible != 1) {
        base.push_back({"compatible_map_count", std::to_string(compatible)});
        return PropertyResult::failed(std::move(base));
      }
      if (!is_isomorphism(cop.axiomatic_maps[2])) {
        base.push_back({"violation", "builds not isomorphic"});
        return PropertyResult::failed(std::move(base));
      }
      // Copairing: unique h with h . inl = f, h . inr = g.
      for (const auto& Z : universe) {
        for (const auto& f : all_functions(X, Z))
          for (const auto& g : all_functions(Y, Z)) {
            ctx.tick();
            FnMor h = copair(cop, f, g);
            if (!(compose(h, cop.inl) == f) || !(compose(h, cop.inr) == g)) {
              base.push_back({"violation", "copairing equations"});
              return PropertyResult::failed(std::move(base));
            }
            std::size_t count = 0;
            for (const auto& cand : all_functions(cop.obj, Z))
              if (fn_eq_or_false(compose(cand, cop.inl), f) &&
                  fn_eq_or_false(compose(cand, cop.inr), g))
                ++count;
            if (count != 1) {
              base.push_back({"copair_count", std::to_string(count)});
              return PropertyResult::failed(std::move(base));
            }
          }
      }
    }
  return {};
}

PropertyResult check_quotient(int size, Ctx& ctx) {
  for (std::size_t n = 0; n <= static_cast<std::size_t>(size); ++n) {
    SetObj X = sized_set(n);
    for (const auto& partition : all_partitions(X)) {
      ctx.tick();
      // Full relation for the construction, spanning pairs for the oracle.
      std::vector<std::pair<Value, Value>> full, spanning;
      for (const auto& block : partition) {
        for (const auto& a : block)
          for (const auto& b : block) full.emplace_back(a, b);
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
          spanning.emplace_back(block[i], block[i + 1]);
      }
      EquivRelation rel = EquivRelation::from_pairs(X, full);
      QuotientResult q = quotient(rel);
      QuotientResult explicit_q = quotient_via_function_set(rel);
      Witness base{{"X", X.str()},
                   {"blocks", std::to_string(partition.size())}};
      if (!(q.obj == explicit_q.obj) || !(q.proj == explicit_q.proj)) {
        base.push_back({"violation", "explicit function-set route differs"});
        return PropertyResult::failed(std::move(base));
      }
      if (q.obj.size() != partition.size()) {
        base.push_back({"violation", "class count"});
        return PropertyResult::failed(std::move(base));
      }
      if (!(image(q.proj).members() == q.obj)) {
        base.push_back({"violation", "projection not surjective"});
        return PropertyResult::failed(std::move(base));
      }
      for (const auto& x : X.elements())
        for (const auto& y : X.elements())
          if ((q.proj(x) == q.proj(y)) != rel.related(x, y)) {
            base.push_back({"violation", "kernel of projection"});
            base.push_back({"at", "(" + x.str() + ", " + y.str() + ")"});
            return PropertyResult::failed(std::move(base));
          }
      auto oracle = union_find_partition(X, spanning);
      if (partition_of_quotient(q) != oracle) {
        base.push_back({"violation", "union-find oracle partition"});
        return PropertyResult::failed(std::move(base));
      }
    }
  }
  return {};
}

PropertyResult check_indexed_product(int dom_limit, int cod_limit, Ctx& ctx) {
  for (std::size_t nx = 0; nx <= static_cast<std::size_t>(dom_limit); ++nx)
    for (std::size_t ni = 0; ni <= static_cast<std::size_t>(cod_limit);
         ++ni) {
      SetObj X = sized_set(nx);
      SetObj I = sized_set(ni);
      for (const auto& p : all_functions(X, I)) {
        ctx.tick();
        SetObj built = indexed_product(p);
        SetObj oracle = fibre_product_oracle(p);
        Witness base{{"p", p.str()}};
        if (!(built == oracle)) {
          base.push_back({"violation", "fibre-product oracle"});
          return PropertyResult::failed(std::move(base));
        }
        std::uint64_t expected = 1;
        for (const auto& [i, fibre] : family_from_map(p))
          expected *= fibre.size();
        if (built.size() != expected) {
          base.push_back({"violation", "cardinality"});
          base.push_back({"expected", std::to_string(expected)});
          return PropertyResult::failed(std::move(base));
        }
      }
    }
  return {};
}

PropertyResult check_classifier_two(Ctx& ctx) {
  ctx.tick();
  ClassifierObj cls = classifier();
  if (elements(cls.two).size() != 2)
    return PropertyResult::failed(
        {{"element_count", std::to_string(elements(cls.two).size())}});
  if (!(element_value(cls.truth) == Value::boolean(true)))
    return PropertyResult::failed(
        {{"violation", "truth element is not true"}});
  return {};
}

PropertyResult check_terminal_one(int size, Ctx& ctx) {
  for (const auto& T : set_universe(size)) {
    ctx.tick();
    if (is_terminal(T) != (elements(T).size() == 1))
      return PropertyResult::failed({{"T", T.str()}});
  }
  return {};
}

// ---------------------------------------------------------------------------
// Sampled mode: above the exhaustive maximum, with a seed, properties are
// spot-checked on randomly generated instances. Uniqueness clauses are
// probed by perturbing the constructed mediator rather than counted.
// ---------------------------------------------------------------------------

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t below(std::uint64_t n) { return n ? eng() % n : 0; }
};

SetObj random_set(Rng& rng, int max_size, int min_size = 0) {
  return sized_set(min_size + rng.below(max_size - min_size + 1));
}

FnMor random_fn(Rng& rng, const SetObj& X, const SetObj& Y) {
  std::vector<Value> table;
  table.reserve(X.size());
  for (std::size_t i = 0; i < X.size(); ++i)
    table.push_back(Y.elements()[rng.below(Y.size())]);
  return FnMor(X, Y, std::move(table));
}

std::uint64_t per_entry_seed(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (char c : id) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return h;
}

PropertyResult sample_entry(const std::string& id, int size, Rng& rng,
                            int samples, Ctx& ctx) {
  for (int k = 0; k < samples; ++k) {
    ctx.tick();
    if (id == "A1") {
      SetObj W = random_set(rng, size), X = random_set(rng, size, 1),
             Y = random_set(rng, size, 1), Z = random_set(rng, size, 1);
      FnMor f = random_fn(rng, W, X), g = random_fn(rng, X, Y),
            h = random_fn(rng, Y, Z);
      if (!(compose(h, compose(g, f)) == compose(compose(h, g), f)))
        return PropertyResult::failed(
            {{"f", f.str()}, {"g", g.str()}, {"h", h.str()}});
      if (!(compose(f, identity(W)) == f) ||
          !(compose(identity(X), f) == f))
        return PropertyResult::failed(
            {{"f", f.str()}, {"violation", "identity laws"}});
    } else if (id == "A4") {
      SetObj X = random_set(rng, size), Y = random_set(rng, size, 1);
      FnMor f = random_fn(rng, X, Y), g = random_fn(rng, X, Y);
      bool pointwise = true;
      for (const auto& x : elements(X))
        if (!(evaluate(f, x) == evaluate(g, x))) {
          pointwise = false;
          break;
        }
      if (pointwise != fn_equal(f, g))
        return PropertyResult::failed({{"f", f.str()}, {"g", g.str()}});
    } else if (id == "A5") {
      SetObj X = random_set(rng, size), Y = random_set(rng, size),
             I = random_set(rng, size);
      ProductCone cone = product(X, Y);
      if (X.empty() || Y.empty()) continue;
      FnMor f1 = random_fn(rng, I, X), f2 = random_fn(rng, I, Y);
      FnMor m = mediate_product(cone, f1, f2);
      if (!(compose(cone.pr1, m) == f1) || !(compose(cone.pr2, m) == f2))
        return PropertyResult::failed(
            {{"I", I.str()}, {"f1", f1.str()}, {"f2", f2.str()}});
      if (!I.empty() && cone.obj.size() > 1) {
        // A perturbed candidate must violate the equations.
        auto table = m.table();
        std::size_t at = rng.below(table.size());
        auto idx = cone.obj.index_of(table[at]);
        table[at] =
            cone.obj.elements()[(*idx + 1 + rng.below(cone.obj.size() - 1)) %
                                cone.obj.size()];
        FnMor other(I, cone.obj, std::move(table));
        if (compose(cone.pr1, other) == f1 && compose(cone.pr2, other) == f2)
          return PropertyResult::failed(
              {{"I", I.str()},
               {"violation", "perturbed mediator also satisfies"}});
      }
    } else if (id == "A6") {
      int capped = std::min(size, 3);
      SetObj X = random_set(rng, capped), Y = random_set(rng, capped, 1),
             I = random_set(rng, capped);
      FunctionSetObj fs = function_set(X, Y);
      FnMor q = random_fn(rng, product(I, X).obj, Y);
      FnMor qbar = curry(q, fs, I);
      for (const auto& t : I.elements())
        for (const auto& x : X.elements())
          if (!(fs.ev(Value::pair(qbar(t), x)) == q(Value::pair(t, x))))
            return PropertyResult::failed(
                {{"q", q.str()}, {"violation", "transpose equation"}});
      if (!(uncurry(qbar, fs) == q))
        return PropertyResult::failed(
            {{"q", q.str()}, {"violation", "uncurry round-trip"}});
    } else if (id == "A7") {
      SetObj X = random_set(rng, size), Y = random_set(rng, size, 1);
      FnMor f = random_fn(rng, X, Y);
      FnMor y = element_of(Y, Y.elements()[rng.below(Y.size())]);
      InverseImageCone cone = inverse_image(f, y);
      for (const auto& a : cone.obj.elements())
        if (!(f(a) == element_value(y)))
          return PropertyResult::failed(
              {{"f", f.str()}, {"violation", "fibre equation"}});
      if (!cone.obj.empty()) {
        FnMor q = random_fn(rng, random_set(rng, size), cone.obj);
        FnMor into_x = compose(cone.incl, q);
        FnMor qbar = factor_through(cone, into_x);
        if (!(compose(cone.incl, qbar) == into_x))
          return PropertyResult::failed(
              {{"f", f.str()}, {"violation", "factorization"}});
      }
    } else if (id == "A10") {
      SetObj Y = random_set(rng, size, 1);
      SetObj X = sized_set(Y.size() + rng.below(size));
      FnMor s = random_fn(rng, X, Y);
      // Patch into a surjection: send the first |Y| inputs onto Y.
      auto table = s.table();
      for (std::size_t i = 0; i < Y.size(); ++i)
        table[i] = Y.elements()[i];
      FnMor surj(X, Y, std::move(table));
      FnMor i = right_inverse(surj);
      if (!(compose(surj, i) == identity(Y)))
        return PropertyResult::failed(
            {{"s", surj.str()}, {"violation", "s . i != id"}});
    } else {
      throw std::invalid_argument("entry " + id + " has no sampled mode");
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Entry table
// ---------------------------------------------------------------------------

struct Entry {
  int max_exhaustive;
  bool samplable;
  std::function<PropertyResult(int, Ctx&)> run;
};

const std::map<std::string, Entry>& entry_table() {
  static const std::map<std::string, Entry> table = [] {
    std::map<std::string, Entry> t;
    t["A1"] = {3, true, check_a1};
    t["A2"] = {3, false, check_a2};
    t["A3"] = {3, false, check_a3};
    t["A4"] = {3, true, check_a4};
    t["A5"] = {3, true, check_a5};
    t["A6"] = {2, true, check_a6};
    t["A7"] = {3, true, check_a7};
    t["A8"] = {3, false, check_a8};
    t["A9"] = {3, false, check_a9};
    t["A10"] = {3, true, check_a10};
    t["D-coproduct"] = {2, false, check_coproduct};
    t["D-quotient"] = {4, false, check_quotient};
    t["D-indexedprod"] = {3, false, [](int size, Ctx& ctx) {
                            return check_indexed_product(
                                std::min(size + 1, 4), std::min(size, 3),
                                ctx);
                          }};
    t["D-classifier2"] = {3, false,
                          [](int, Ctx& ctx) { return check_classifier_two(ctx); }};
    t["D-terminal1"] = {3, false, check_terminal_one};
    return t;
  }();
  return table;
}

std::string describe_instances(const std::string& id, int effective,
                               bool sampled, const VerifierConfig& cfg) {
  std::ostringstream out;
  if (sampled) {
    out << "sampled=" << cfg.sample_count << " seed=" << *cfg.seed
        << " sizes<=" << cfg.size_limit;
    return out.str();
  }
  if (id == "D-indexedprod") {
    out << "exhaustive |dom|<=" << std::min(effective + 1, 4) << " |cod|<="
        << std::min(effective, 3);
  } else if (id == "D-classifier2") {
    out << "canonical classifier";
  } else if (id == "A9") {
    out << "exhaustive size<=" << effective
        << " prefix-length=5 (bounded model)";
  } else {
    out << "exhaustive size<=" << effective;
  }
  return out.str();
}

}  // namespace

const std::vector<std::string>& verifier_entry_ids() {
  static const std::vector<std::string> ids = {
      "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10",
      "D-coproduct", "D-quotient", "D-indexedprod", "D-classifier2",
      "D-terminal1"};
  return ids;
}

Report check_axiom(const std::string& id, const VerifierConfig& cfg) {
  auto it = entry_table().find(id);
  if (it == entry_table().end())
    throw std::invalid_argument("unknown verification entry: " + id);
  const Entry& entry = it->second;

  Report report;
  report.id = id;
  Ctx ctx{cfg.instance_ceiling};
  auto started = std::chrono::steady_clock::now();

  bool sampled = cfg.seed.has_value() && entry.samplable &&
                 cfg.size_limit > entry.max_exhaustive;
  int effective = std::min(cfg.size_limit, entry.max_exhaustive);
  report.instance = describe_instances(id, effective, sampled, cfg);

  PropertyResult result;
  if (sampled) {
    Rng rng(per_entry_seed(*cfg.seed, id));
    result = sample_entry(id, cfg.size_limit, rng, cfg.sample_count, ctx);
  } else {
    result = entry.run(effective, ctx);
  }

  report.stats.instances = ctx.instances;
  if (cfg.timing) {
    auto elapsed = std::chrono::steady_clock::now() - started;
    report.stats.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
            .count());
  }
  if (!result.ok) {
    report.verdict = Verdict::fail;
    report.witness = std::move(result.witness);
  } else {
    report.verdict = (id == "A9") ? Verdict::prefix_verified : Verdict::pass;
  }
  return report;
}

Report check_axiom(const std::string& id, int size_limit) {
  VerifierConfig cfg;
  cfg.size_limit = size_limit;
  return check_axiom(id, cfg);
}

std::vector<Report> check_all(const VerifierConfig& cfg) {
  std::vector<Report> out;
  out.reserve(verifier_entry_ids().size());
  for (const auto& id : verifier_entry_ids()) {
    try {
      out.push_back(check_axiom(id, cfg));
    } catch (const BudgetExceeded& e) {
      Report r;
      r.id = id;
      r.instance = "aborted";
      r.verdict = Verdict::fail;
      r.witness = {{"budget", e.what()}};
      r.stats.instances = e.count;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<Report> check_all(int size_limit) {
  VerifierConfig cfg;
  cfg.size_limit = size_limit;
  return check_all(cfg);
}

std::vector<Report> mutate_and_check(const std::string& construction_id,
                                     Mutation mutation) {
  Ctx ctx{100'000'000};
  auto universe = set_universe(2);
  auto finish = [&](Report r) {
    r.stats.instances = ctx.instances;
    return r;
  };

  if (construction_id == "product" && mutation == Mutation::swap_projection) {
    SetObj X = sized_set(1), Y = sized_set(2);
    ProductCone cone = product(X, Y);
    ProductCone mutated{cone.obj, cone.pr2, cone.pr1};
    PropertyResult r = product_property(mutated, X, Y, universe, ctx);
    Report report{"A5", "mutated: swap_projection on product({a}, {a, b})",
                  r.ok ? Verdict::pass : Verdict::fail, std::move(r.witness)};
    return {finish(std::move(report))};
  }

  if (construction_id == "inverse_image" &&
      mutation == Mutation::drop_fibre_element) {
    SetObj X = sized_set(3), Y = sized_set(2);
    // f sends a, b to a and c to b; the fibre over a is {a, b}.
    FnMor f(X, Y,
            {Value::atom("a"), Value::atom("a"), Value::atom("b")});
    InverseImageCone cone = inverse_image(f, element_of(Y, Value::atom("a")));
    SetObj dropped(std::vector<Value>{Value::atom("a")});
    InverseImageCone mutated{dropped, FnMor(dropped, X, dropped.elements()),
                             f, Value::atom("a")};
    PropertyResult r = fibre_property(mutated, universe, ctx);
    Report report{"A7",
                  "mutated: drop_fibre_element on inverse_image(f, a)",
                  r.ok ? Verdict::pass : Verdict::fail, std::move(r.witness)};
    return {finish(std::move(report))};
  }

  if (construction_id == "function_set" && mutation == Mutation::break_curry) {
    SetObj X = sized_set(2), Y = sized_set(2);
    FunctionSetObj fs = function_set(X, Y);
    auto table = fs.ev.table();
    // Corrupt the evaluation map at its first point.
    for (const auto& y : Y.elements())
      if (!(y == table[0])) {
        table[0] = y;
        break;
      }
    FunctionSetObj mutated{fs.obj, FnMor(fs.ev.dom(), fs.ev.cod(), table),
                           fs.source, fs.target};
    PropertyResult r = curry_property(mutated, universe, ctx);
    Report report{"A6",
                  "mutated: break_curry on function_set({a, b}, {a, b})",
                  r.ok ? Verdict::pass : Verdict::fail, std::move(r.witness)};
    return {finish(std::move(report))};
  }

  if (construction_id == "classifier" &&
      mutation == Mutation::wrong_truth_element) {
    ClassifierObj cls = classifier();
    Value wrong = Value::boolean(false);
    SetObj A = sized_set(1), X = sized_set(2);
    Report report{"A8", "mutated: wrong_truth_element on classifier()",
                  Verdict::pass};
    for (const auto& j : all_injections(A, X)) {
      PropertyResult r = classify_injection(j, cls.two, wrong, universe, ctx);
      if (!r.ok) {
        report.verdict = Verdict::fail;
        report.witness = std::move(r.witness);
        break;
      }
    }
    return {finish(std::move(report))};
  }

  if (construction_id == "right_inverse" &&
      mutation == Mutation::non_least_choice) {
    SetObj X = sized_set(3), Y = sized_set(2);
    FnMor s(X, Y, {Value::atom("a"), Value::atom("a"), Value::atom("b")});
    // Chooses b over the least preimage a for the fibre of a.
    FnMor chosen(Y, X, {Value::atom("b"), Value::atom("c")});
    PropertyResult axiom = right_inverse_property(s, chosen, ctx);
    Report axiom_report{
        "A10", "mutated: non_least_choice on right_inverse(s)",
        axiom.ok ? Verdict::pass : Verdict::fail, std::move(axiom.witness)};
    // The axiom is existence-only, so it still passes; the canonical
    // least-preimage contract is what notices the mutation.
    FnMor least = right_inverse(s);
    Report contract{"A10:least-choice",
                    "mutated: non_least_choice on right_inverse(s)",
                    Verdict::pass};
    for (std::size_t i = 0; i < least.table().size(); ++i) {
      ctx.tick();
      if (!(chosen.table()[i] == least.table()[i])) {
        contract.verdict = Verdict::fail;
        contract.witness = {
            {"fibre_of", least.dom().elements()[i].str()},
            {"chosen", chosen.table()[i].str()},
            {"least", least.table()[i].str()}};
        break;
      }
    }
    std::vector<Report> out;
    out.push_back(finish(std::move(axiom_report)));
    out.push_back(finish(std::move(contract)));
    return out;
  }

  throw InapplicableMutation("mutation does not apply to construction '" +
                             construction_id + "'");
}

}  // namespace etcs
