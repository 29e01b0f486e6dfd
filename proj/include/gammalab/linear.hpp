#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "gammalab/abgroup.hpp"

namespace gammalab {

/// Integer combination of unknowns x_0, x_1, ... . Axiom checks written over
/// a generic value type produce these when evaluated on symbolic tables.
class Lin {
 public:
  Lin() = default;
  static Lin var(std::size_t i) {
    Lin l;
    l.terms_[i] = 1;
    return l;
  }

  Lin& operator+=(const Lin& o) { return merge(o, 1); }
  Lin& operator-=(const Lin& o) { return merge(o, -1); }
  friend Lin operator+(Lin a, const Lin& b) { return a += b; }
  friend Lin operator-(Lin a, const Lin& b) { return a -= b; }
  friend Lin operator-(const Lin& a) { return Lin() - a; }
  friend Lin operator*(long k, const Lin& a) {
    Lin out;
    if (k != 0)
      for (const auto& [i, c] : a.terms_) out.terms_[i] = k * c;
    return out;
  }
  bool operator==(const Lin& o) const { return terms_ == o.terms_; }
  bool operator<(const Lin& o) const { return terms_ < o.terms_; }

  const std::map<std::size_t, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

 private:
  Lin& merge(const Lin& o, long sign) {
    for (const auto& [i, c] : o.terms_) {
      long& slot = terms_[i];
      slot += sign * c;
      if (slot == 0) terms_.erase(i);
    }
    return *this;
  }

  std::map<std::size_t, long> terms_;
};

/// Homogeneous equations Σ c_k x_k = 0 over an abelian group A.
struct LinearSystem {
  std::size_t unknowns = 0;
  std::vector<Lin> equations;

  /// Drops zero and repeated equations (keeps first occurrences in order).
  void add(const Lin& e);
  IntMatrix matrix() const;

 private:
  std::set<Lin> seen_;
};

/// The solutions x ∈ A^N of M x = 0 for finite A, parametrized through the
/// Smith form of M, so that every solution has one index in [0, size()).
class SolutionSpace {
 public:
  SolutionSpace(const IntMatrix& m, const Group& a);

  const Int& size() const { return size_; }
  std::size_t unknowns() const { return n_; }
  /// Solution with the given index; values are canonical elements of A.
  std::vector<IntVector> at(Int index) const;
  std::vector<IntVector> random(std::mt19937_64& rng) const;

 private:
  std::vector<IntVector> from_digits(const std::vector<Int>& digits) const;

  Group a_;
  std::size_t n_;
  IntMatrix v_;
  std::vector<Int> moduli_;  // invariant factors of A
  std::vector<Int> counts_;  // per (factor, coordinate), factor-major
  std::vector<Int> steps_;
  Int size_;
};

/// |{x ∈ A^N : M x = 0}| for finite A.
Int kernel_size(const IntMatrix& m, const Group& a);
/// |D(A^k)| ⊂ A^N for finite A.
Int image_size(const IntMatrix& d, const Group& a);

/// Every solution of the system over the finite group `fa`, by backtracking
/// over unknowns in index order; an equation is checked as soon as its last
/// unknown is assigned. Work is split over the values of the first unknowns
/// and merged in order. Throws SizeGuard past `limit` solutions.
std::vector<std::vector<std::uint32_t>> search_solutions(const LinearSystem& sys,
                                                         const FiniteGroup& fa,
                                                         std::uint64_t limit);

/// Subgroup of A^N generated by `gens`, by breadth-first closure; throws
/// SizeGuard past `limit` elements.
std::set<std::vector<std::uint32_t>> subgroup_closure(const std::vector<std::vector<std::uint32_t>>& gens,
                                                      std::size_t length, const FiniteGroup& fa,
                                                      std::uint64_t limit);

}  // namespace gammalab
