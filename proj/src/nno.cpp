#include "etcs/nno.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "etcs/errors.hpp"

namespace etcs {

NatSystem::NatSystem(std::uint64_t bound) : bound_(bound) {
  if (bound_ < 1) throw std::invalid_argument("natural bound must be >= 1");
}

Value NatSystem::succ(const Value& n) const {
  std::uint64_t k = n.nat_value();
  if (k + 1 >= bound_)
    throw BoundExceeded("successor of " + std::to_string(k) +
                        " leaves the bound " + std::to_string(bound_));
  return Value::nat(k + 1);
}

SetObj NatSystem::prefix_set(std::uint64_t k) const {
  if (k > bound_)
    throw BoundExceeded("prefix length " + std::to_string(k) +
                        " exceeds the bound " + std::to_string(bound_));
  std::vector<Value> elems;
  elems.reserve(k);
  for (std::uint64_t i = 0; i < k; ++i) elems.push_back(Value::nat(i));
  return SetObj(std::move(elems));
}

struct RecFn::State {
  SetObj target;
  FnMor step;
  std::uint64_t bound;
  mutable std::mutex mu;
  mutable std::vector<Value> memo;  // memo[k] = x(k)

  State(SetObj t, FnMor r, Value base, std::uint64_t b)
      : target(std::move(t)), step(std::move(r)), bound(b) {
    memo.push_back(std::move(base));
  }
};

const SetObj& RecFn::target() const { return state_->target; }
const FnMor& RecFn::step() const { return state_->step; }
const Value& RecFn::base() const { return state_->memo[0]; }

Value RecFn::at(std::uint64_t n) const {
  if (n >= state_->bound)
    throw BoundExceeded("index " + std::to_string(n) +
                        " is not below the bound " +
                        std::to_string(state_->bound));
  std::lock_guard<std::mutex> lock(state_->mu);
  while (state_->memo.size() <= n)
    state_->memo.push_back(state_->step(state_->memo.back()));
  return state_->memo[n];
}

FnMor RecFn::as_table() const {
  throw UnsupportedInfinite(
      "a recursion-defined sequence is a function out of the natural "
      "numbers and has no finite table");
}

RecFn recurse(const NatSystem& sys, const FnMor& a, const FnMor& r) {
  if (!(r.dom() == r.cod()))
    throw BoundaryMismatch("step function is not an endofunction: " +
                           r.dom().str() + " vs " + r.cod().str());
  if (!(a.cod() == r.dom()))
    throw BoundaryMismatch("base element lands in " + a.cod().str() +
                           ", not in the step's domain " + r.dom().str());
  RecFn f;
  f.state_ = std::make_shared<RecFn::State>(r.dom(), r, element_value(a),
                                            sys.bound());
  return f;
}

FnMor rec_eval(const RecFn& f, std::uint64_t n) {
  return element_of(f.target(), f.at(n));
}

bool prefix_unique(const NatSystem& sys, const FnMor& a, const FnMor& r,
                   std::span<const Value> candidate) {
  if (candidate.size() > sys.bound())
    throw BoundExceeded("candidate prefix longer than the bound");
  if (candidate.empty()) return true;
  if (!(candidate[0] == element_value(a))) return false;
  for (std::size_t i = 0; i + 1 < candidate.size(); ++i)
    if (!(candidate[i + 1] == r(candidate[i]))) return false;
  return true;
}

bool rec_equal_upto(const RecFn& f, const RecFn& g, std::uint64_t upto) {
  if (!(f.target() == g.target())) return false;
  for (std::uint64_t n = 0; n < upto; ++n)
    if (!(f.at(n) == g.at(n))) return false;
  return true;
}

namespace {

// The recursion principle on the intensional naturals: x(0) = base,
// x(k+1) = step(x(k)). This is the only loop arithmetic is built from.
std::uint64_t iterate(const std::function<std::uint64_t(std::uint64_t)>& step,
                      std::uint64_t base, std::uint64_t n) {
  std::uint64_t acc = base;
  for (std::uint64_t k = 0; k < n; ++k) acc = step(acc);
  return acc;
}

}  // namespace

std::uint64_t nat_arith(const NatSystem& sys, NatOp op, std::uint64_t m,
                        std::uint64_t n) {
  if (m >= sys.bound() || n >= sys.bound())
    throw BoundExceeded("arithmetic inputs must be below the bound");
  auto succ = [&](std::uint64_t k) { return sys.succ(Value::nat(k)).nat_value(); };
  auto add = [&](std::uint64_t a, std::uint64_t b) {
    return iterate(succ, a, b);
  };
  switch (op) {
    case NatOp::add:
      return add(m, n);
    case NatOp::mul:
      return iterate([&](std::uint64_t acc) { return add(acc, m); }, 0, n);
    case NatOp::pow:
      return iterate(
          [&](std::uint64_t acc) {
            return iterate([&](std::uint64_t s) { return add(s, acc); }, 0, m);
          },
          1, n);
  }
  throw std::logic_error("unknown arithmetic operation");
}

}  // namespace etcs
