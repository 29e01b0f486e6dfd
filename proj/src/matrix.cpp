#include "gammalab/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gammalab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::columns(std::size_t begin, std::size_t end) const {
  IntMatrix m(rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = begin; j < end; ++j) m(i, j - begin) = (*this)(i, j);
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return v == 0; });
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (other.rows_ != rows_) throw std::invalid_argument("hconcat row mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply shape mismatch");
  IntVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] != 0 && (*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix k(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t p = 0; p < b.rows_; ++p)
        for (std::size_t q = 0; q < b.cols_; ++q)
          k(i * b.rows_ + p, j * b.cols_ + q) = a(i, j) * b(p, q);
    }
  return k;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_nonneg(const Int& a, const Int& b) {
  Int r;
  Int absb = abs(b);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), absb.get_mpz_t());
  return r;
}

namespace {

int cmpabs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Working state for the Smith elimination. Row operations are mirrored on U
// (and inversely on U_inv), column operations on V.
class SmithWorker {
 public:
  SmithWorker(const IntMatrix& m, bool track)
      : a_(m), track_(track), rows_(m.rows()), cols_(m.cols()) {
    if (track_) {
      u_ = IntMatrix::identity(rows_);
      uinv_ = IntMatrix::identity(rows_);
      v_ = IntMatrix::identity(cols_);
    }
  }

  void run() {
    const std::size_t n = std::min(rows_, cols_);
    for (std::size_t t = 0; t < n; ++t) {
      if (!move_min_to(t)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < rows_; ++i) {
          if (a_(i, t) == 0) continue;
          Int q;
          mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
          if (q != 0) row_addmul(i, t, -q);
          if (a_(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols_; ++j) {
          if (a_(t, j) == 0) continue;
          Int q;
          mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
          if (q != 0) col_addmul(j, t, -q);
          if (a_(t, j) != 0) clean = false;
        }
        if (!clean) {
          move_min_in_cross(t);
          continue;
        }
        // Pivot must divide the remaining block.
        bool divides = true;
        for (std::size_t i = t + 1; i < rows_ && divides; ++i)
          for (std::size_t j = t + 1; j < cols_; ++j)
            if (a_(i, j) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
              row_addmul(t, i, Int(1));
              divides = false;
              break;
            }
        if (divides) break;
      }
      if (a_(t, t) < 0) row_negate(t);
      ++rank_;
    }
  }

  SmithForm result() && {
    SmithForm f;
    f.S = std::move(a_);
    f.rank = rank_;
    if (track_) {
      f.U = std::move(u_);
      f.U_inv = std::move(uinv_);
      f.V = std::move(v_);
    }
    return f;
  }

 private:
  bool move_min_to(std::size_t t) {
    std::size_t bi = rows_, bj = cols_;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j) {
        if (a_(i, j) == 0) continue;
        if (bi == rows_ || cmpabs(a_(i, j), a_(bi, bj)) < 0) {
          bi = i;
          bj = j;
          if (abs(a_(i, j)) == 1) goto found;
        }
      }
    if (bi == rows_) return false;
  found:
    if (bi != t) row_swap(bi, t);
    if (bj != t) col_swap(bj, t);
    return true;
  }

  void move_min_in_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < rows_; ++i)
      if (a_(i, t) != 0 && cmpabs(a_(i, t), a_(bi, bj)) < 0) {
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < cols_; ++j)
      if (a_(t, j) != 0 && cmpabs(a_(t, j), a_(bi, bj)) < 0) {
        bi = t;
        bj = j;
      }
    if (bi != t) row_swap(bi, t);
    if (bj != t) col_swap(bj, t);
  }

  // row_dst += q * row_src
  void row_addmul(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (a_(src, j) != 0) a_(dst, j) += q * a_(src, j);
    if (track_) {
      for (std::size_t j = 0; j < rows_; ++j)
        if (u_(src, j) != 0) u_(dst, j) += q * u_(src, j);
      // inverse: col_src -= q * col_dst on U_inv
      for (std::size_t i = 0; i < rows_; ++i)
        if (uinv_(i, dst) != 0) uinv_(i, src) -= q * uinv_(i, dst);
    }
  }

  void col_addmul(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < rows_; ++i)
      if (a_(i, src) != 0) a_(i, dst) += q * a_(i, src);
    if (track_)
      for (std::size_t i = 0; i < cols_; ++i)
        if (v_(i, src) != 0) v_(i, dst) += q * v_(i, src);
  }

  void row_swap(std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a_(x, j), a_(y, j));
    if (track_) {
      for (std::size_t j = 0; j < rows_; ++j) std::swap(u_(x, j), u_(y, j));
      for (std::size_t i = 0; i < rows_; ++i) std::swap(uinv_(i, x), uinv_(i, y));
    }
  }

  void col_swap(std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap(a_(i, x), a_(i, y));
    if (track_)
      for (std::size_t i = 0; i < cols_; ++i) std::swap(v_(i, x), v_(i, y));
  }

  void row_negate(std::size_t x) {
    for (std::size_t j = 0; j < cols_; ++j) a_(x, j) = -a_(x, j);
    if (track_) {
      for (std::size_t j = 0; j < rows_; ++j) u_(x, j) = -u_(x, j);
      for (std::size_t i = 0; i < rows_; ++i) uinv_(i, x) = -uinv_(i, x);
    }
  }

  IntMatrix a_, u_, uinv_, v_;
  bool track_;
  std::size_t rows_, cols_;
  std::size_t rank_ = 0;
};

}  // namespace

SmithForm smith(const IntMatrix& m) {
  SmithWorker w(m, true);
  w.run();
  return std::move(w).result();
}

IntVector smith_diagonal(const IntMatrix& m) {
  SmithWorker w(m, false);
  w.run();
  auto f = std::move(w).result();
  IntVector d;
  for (std::size_t i = 0; i < f.rank; ++i) d.push_back(f.S(i, i));
  return d;
}

std::size_t rank(const IntMatrix& m) { return smith_diagonal(m).size(); }

RowEchelon row_echelon(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a(i, c) != 0 && (best == rows || cmpabs(a(i, c), a(best, c)) < 0)) best = i;
      if (best == rows) break;
      if (best != r)
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(best, j), a(r, j));
      bool others = false;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) a(i, j) -= q * a(r, j);
        if (a(i, c) != 0) others = true;
      }
      if (!others) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (std::size_t j = c; j < cols; ++j) a(r, j) = -a(r, j);
    // Reduce entries above the pivot.
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(a(i, c), a(r, c));
      if (q != 0)
        for (std::size_t j = c; j < cols; ++j) a(i, j) -= q * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  RowEchelon e;
  e.basis = IntMatrix(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) e.basis(i, j) = a(i, j);
  e.pivots = std::move(pivots);
  return e;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  // U·M·V = S; columns of V beyond the rank span the kernel.
  auto f = smith(m);
  return f.V.columns(f.rank, m.cols());
}

LatticeSolver::LatticeSolver(const IntMatrix& m) : cols_(m.cols()), form_(smith(m)) {}

std::optional<IntVector> LatticeSolver::solve(const IntVector& b) const {
  const IntVector c = form_.U.apply(b);
  IntVector y(cols_);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < form_.rank) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), form_.S(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), form_.S(i, i).get_mpz_t());
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return form_.V.apply(y);
}

std::optional<IntVector> solve(const IntMatrix& m, const IntVector& b) {
  return LatticeSolver(m).solve(b);
}

}  // namespace gammalab
