#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace gammalab {

using Int = mpz_class;
using IntVector = std::vector<Int>;

/// Dense integer matrix, row-major, arbitrary precision.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  IntMatrix transpose() const;
  IntMatrix columns(std::size_t begin, std::size_t end) const;
  bool is_zero() const;

  /// Horizontal concatenation [this | other]; row counts must agree.
  IntMatrix hconcat(const IntMatrix& other) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  IntVector apply(const IntVector& v) const;

  /// Kronecker product a ⊗ b.
  friend IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// U·M·V = S with U, V unimodular and S diagonal, d1 | d2 | ..., all >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  IntMatrix U_inv;
  std::size_t rank = 0;
  Int diag(std::size_t i) const { return S(i, i); }
};

SmithForm smith(const IntMatrix& m);

/// Nonzero invariant factors only (1s included), without transforms.
IntVector smith_diagonal(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Row-echelon basis of the lattice spanned by the rows of m: row i has its
/// leading entry in column pivots[i], pivots strictly increasing, leading
/// entries positive, entries above each leading entry reduced into [0, lead).
struct RowEchelon {
  IntMatrix basis;
  std::vector<std::size_t> pivots;
};
RowEchelon row_echelon(const IntMatrix& m);

/// Columns spanning {x : m·x = 0}, a lattice basis.
IntMatrix kernel_basis(const IntMatrix& m);

/// Some x with m·x = b, if one exists.
std::optional<IntVector> solve(const IntMatrix& m, const IntVector& b);

/// Column solver bound to a fixed matrix; reuses one Smith form.
class LatticeSolver {
 public:
  explicit LatticeSolver(const IntMatrix& m);
  std::optional<IntVector> solve(const IntVector& b) const;
  bool contains(const IntVector& b) const { return solve(b).has_value(); }
  const SmithForm& form() const { return form_; }

 private:
  std::size_t cols_;
  SmithForm form_;
};

/// Floor division and nonnegative remainder.
Int floor_div(const Int& a, const Int& b);
Int mod_nonneg(const Int& a, const Int& b);

}  // namespace gammalab
