#include "etcs/enumerate.hpp"

#include <string>

namespace etcs {

std::vector<FnMor> all_functions(const SetObj& X, const SetObj& Y) {
  std::vector<FnMor> out;
  if (X.empty()) {
    out.push_back(FnMor(X, Y, {}));
    return out;
  }
  if (Y.empty()) return out;
  std::vector<std::size_t> digits(X.size(), 0);
  for (;;) {
    std::vector<Value> table;
    table.reserve(X.size());
    for (auto d : digits) table.push_back(Y.elements()[d]);
    out.push_back(FnMor(X, Y, std::move(table)));
    // Odometer with the last position fastest keeps the output in
    // canonical (table-lexicographic) order.
    std::size_t i = X.size();
    while (i > 0) {
      --i;
      if (++digits[i] < Y.size()) break;
      digits[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::uint64_t count_functions(const SetObj& X, const SetObj& Y) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < X.size(); ++i) n *= Y.size();
  return n;
}

std::vector<SetObj> all_subsets(const SetObj& X) {
  std::vector<SetObj> out;
  const auto& es = X.elements();
  for (std::uint64_t mask = 0; mask < (1ULL << es.size()); ++mask) {
    std::vector<Value> members;
    for (std::size_t i = 0; i < es.size(); ++i)
      if (mask & (1ULL << i)) members.push_back(es[i]);
    out.push_back(SetObj(std::move(members)));
  }
  return out;
}

std::vector<FnMor> all_injections(const SetObj& A, const SetObj& X) {
  std::vector<FnMor> out;
  for (auto& f : all_functions(A, X)) {
    bool injective = true;
    for (std::size_t i = 0; i + 1 < f.table().size() && injective; ++i)
      for (std::size_t j = i + 1; j < f.table().size(); ++j)
        if (f.table()[i] == f.table()[j]) {
          injective = false;
          break;
        }
    if (injective) out.push_back(std::move(f));
  }
  return out;
}

std::vector<FnMor> all_surjections(const SetObj& X, const SetObj& Y) {
  std::vector<FnMor> out;
  for (auto& f : all_functions(X, Y)) {
    bool surjective = true;
    for (const auto& y : Y.elements()) {
      bool hit = false;
      for (const auto& v : f.table())
        if (v == y) {
          hit = true;
          break;
        }
      if (!hit) {
        surjective = false;
        break;
      }
    }
    if (surjective) out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::vector<std::vector<Value>>> all_partitions(const SetObj& X) {
  std::vector<std::vector<std::vector<Value>>> out;
  std::vector<std::vector<Value>> blocks;
  const auto& es = X.elements();
  // Restricted-growth enumeration: element i joins an existing block or
  // opens a new one.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == es.size()) {
      out.push_back(blocks);
      return;
    }
    std::size_t existing = blocks.size();  // deeper calls grow the vector
    for (std::size_t b = 0; b < existing; ++b) {
      blocks[b].push_back(es[i]);
      self(self, i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({es[i]});
    self(self, i + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
  return out;
}

SetObj sized_set(std::size_t k) {
  static const char* pool[] = {"a", "b", "c", "d", "e"};
  std::vector<Value> elems;
  for (std::size_t i = 0; i < k; ++i) {
    if (i < 5)
      elems.push_back(Value::atom(pool[i]));
    else
      elems.push_back(Value::atom("a" + std::to_string(i - 4)));
  }
  return SetObj(std::move(elems));
}

std::vector<SetObj> set_universe(std::size_t limit) {
  std::vector<SetObj> out;
  for (std::size_t k = 0; k <= limit; ++k) out.push_back(sized_set(k));
  return out;
}

bool fn_eq_or_false(const FnMor& f, const FnMor& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) return false;
  return f.table() == g.table();
}

}  // namespace etcs
