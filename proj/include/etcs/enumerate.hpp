#pragma once

#include <cstdint>
#include <vector>

#include "etcs/category.hpp"

namespace etcs {

/// All total functions X -> Y in canonical order (lexicographic in the
/// table, domain elements ascending). Empty when |Y| = 0 < |X|; the single
/// empty function when |X| = 0.
std::vector<FnMor> all_functions(const SetObj& X, const SetObj& Y);

/// Number of total functions X -> Y, i.e. |Y|^|X| (with 0^0 = 1).
std::uint64_t count_functions(const SetObj& X, const SetObj& Y);

/// All subsets of X, as element lists in canonical order.
std::vector<SetObj> all_subsets(const SetObj& X);

/// All injections A -> X (a filter over all_functions).
std::vector<FnMor> all_injections(const SetObj& A, const SetObj& X);

/// All surjections X -> Y (a filter over all_functions).
std::vector<FnMor> all_surjections(const SetObj& X, const SetObj& Y);

/// All partitions of X's elements into nonempty blocks (set partitions).
std::vector<std::vector<std::vector<Value>>> all_partitions(const SetObj& X);

/// The set of the first k atoms of the fixed pool a, b, c, d, e, ...
/// (after "e" the pool continues a1, a2, ...).
SetObj sized_set(std::size_t k);

/// Sets of size 0..limit over the fixed atom pool, ascending.
std::vector<SetObj> set_universe(std::size_t limit);

/// Like fn_equal but never throws: boundary mismatch counts as "not equal".
bool fn_eq_or_false(const FnMor& f, const FnMor& g);

}  // namespace etcs
