#pragma once

// Value types for axiom code that is written once and evaluated either on
// concrete A-valued tables (AVal) or on symbolic tables (Lin).

#include <optional>

#include "gammalab/abgroup.hpp"
#include "gammalab/linear.hpp"

namespace gammalab {

/// Unreduced element of A; an empty vector is zero.
struct AVal {
  IntVector v;

  AVal() = default;
  explicit AVal(IntVector x) : v(std::move(x)) {}

  AVal& operator+=(const AVal& o) { return combine(o, 1); }
  AVal& operator-=(const AVal& o) { return combine(o, -1); }
  friend AVal operator+(AVal a, const AVal& b) { return a += b; }
  friend AVal operator-(AVal a, const AVal& b) { return a -= b; }
  friend AVal operator-(const AVal& a) { return AVal() - a; }
  friend AVal operator*(long k, AVal a) {
    for (auto& x : a.v) x *= k;
    return a;
  }

 private:
  AVal& combine(const AVal& o, long sign) {
    if (v.size() < o.v.size()) v.resize(o.v.size(), Int(0));
    for (std::size_t i = 0; i < o.v.size(); ++i) v[i] += sign * o.v[i];
    return *this;
  }
};

inline bool is_zero_in(const Group& a, const AVal& x) {
  if (x.v.empty()) return true;
  return a.is_zero(x.v);
}

inline IntVector reduce_in(const Group& a, const AVal& x) {
  if (x.v.empty()) return a.zero();
  return a.reduce(x.v);
}

/// Assigns consecutive unknowns to the entries of a table whose arguments are
/// all nonzero; entries with a zero argument are fixed at 0.
class SymbolicTable {
 public:
  SymbolicTable(std::size_t group_size, std::size_t arity, std::size_t first_unknown)
      : n_(group_size), arity_(arity), first_(first_unknown) {
    std::size_t m = 1;
    for (std::size_t i = 0; i < arity; ++i) m *= (n_ - 1);
    count_ = (n_ == 0) ? 0 : m;
  }

  std::size_t count() const { return count_; }
  std::size_t first() const { return first_; }
  std::size_t end() const { return first_ + count_; }

  /// Unknown index of the entry at args, or none when some argument is 0.
  std::optional<std::size_t> unknown(const std::vector<std::size_t>& args) const {
    std::size_t k = 0;
    for (auto x : args) {
      if (x == 0) return std::nullopt;
      k = k * (n_ - 1) + (x - 1);
    }
    return first_ + k;
  }
  Lin operator()(const std::vector<std::size_t>& args) const {
    auto u = unknown(args);
    return u ? Lin::var(*u) : Lin();
  }
  /// Arguments of the entry with the given unknown index.
  std::vector<std::size_t> args_of(std::size_t unknown_index) const {
    std::vector<std::size_t> args(arity_);
    std::size_t k = unknown_index - first_;
    for (std::size_t i = arity_; i-- > 0;) {
      args[i] = k % (n_ - 1) + 1;
      k /= (n_ - 1);
    }
    return args;
  }

 private:
  std::size_t n_, arity_, first_, count_;
};

}  // namespace gammalab
