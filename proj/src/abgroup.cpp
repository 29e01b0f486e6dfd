#include "gammalab/abgroup.hpp"

#include <sstream>
#include <utility>

#include "gammalab/config.hpp"
#include "gammalab/errors.hpp"

namespace gammalab {

namespace {

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

IntMatrix top_rows(const IntMatrix& m, std::size_t k) {
  IntMatrix t(k, m.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(i, j) = m(i, j);
  return t;
}

}  // namespace

Group::Group(std::size_t generators, IntMatrix relations)
    : gens_(generators), rel_(std::move(relations)) {
  if (rel_.rows() != gens_) {
    if (rel_.cols() == 0 && rel_.rows() == 0)
      rel_ = IntMatrix(gens_, 0);
    else
      throw InputError("relation matrix has " + std::to_string(rel_.rows()) +
                       " rows but the group has " + std::to_string(gens_) + " generators");
  }
  echelon_ = row_echelon(rel_.transpose());
  rel_basis_ = echelon_.basis.transpose();
  if (rel_basis_.rows() != gens_) rel_basis_ = IntMatrix(gens_, 0);

  const SmithForm f = smith(rel_);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < f.rank; ++i) {
    if (f.diag(i) != 1) {
      factors_.push_back(f.diag(i));
      keep.push_back(i);
    }
  }
  free_rank_ = gens_ - f.rank;
  for (std::size_t i = f.rank; i < gens_; ++i) keep.push_back(i);
  to_inv_ = IntMatrix(keep.size(), gens_);
  from_inv_ = IntMatrix(gens_, keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t j = 0; j < gens_; ++j) {
      to_inv_(k, j) = f.U(keep[k], j);
      from_inv_(j, k) = f.U_inv(j, keep[k]);
    }
}

Group Group::cyclic(const Int& n) {
  IntMatrix r(1, 1);
  r(0, 0) = n;
  return Group(1, n == 0 ? IntMatrix(1, 0) : r);
}

Group Group::free(std::size_t rank) { return Group(rank, IntMatrix(rank, 0)); }

Group Group::from_invariants(std::size_t free_rank, const IntVector& factors) {
  const std::size_t g = factors.size() + free_rank;
  IntMatrix r(g, factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) r(i, i) = factors[i];
  return Group(g, r);
}

Int Group::order() const {
  if (free_rank_ > 0) throw InfiniteGroup("group " + describe() + " has free rank " +
                                          std::to_string(free_rank_));
  Int n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

Int Group::exponent() const {
  if (free_rank_ > 0) throw InfiniteGroup("group " + describe() + " is infinite");
  return factors_.empty() ? Int(1) : factors_.back();
}

IntVector Group::reduce(const IntVector& x) const {
  if (x.size() != gens_) throw InputError("element has wrong length");
  IntVector v = x;
  const IntMatrix& b = echelon_.basis;
  for (std::size_t i = 0; i < echelon_.pivots.size(); ++i) {
    const std::size_t p = echelon_.pivots[i];
    if (v[p] == 0) continue;
    Int q = floor_div(v[p], b(i, p));
    if (q == 0) continue;
    for (std::size_t j = p; j < gens_; ++j)
      if (b(i, j) != 0) v[j] -= q * b(i, j);
  }
  return v;
}

bool Group::is_zero(const IntVector& x) const {
  for (const auto& v : reduce(x))
    if (v != 0) return false;
  return true;
}

IntVector Group::add(const IntVector& x, const IntVector& y) const {
  IntVector s(gens_);
  for (std::size_t i = 0; i < gens_; ++i) s[i] = x[i] + y[i];
  return reduce(s);
}

IntVector Group::neg(const IntVector& x) const {
  IntVector s(gens_);
  for (std::size_t i = 0; i < gens_; ++i) s[i] = -x[i];
  return reduce(s);
}

IntVector Group::scale(const Int& k, const IntVector& x) const {
  IntVector s(gens_);
  for (std::size_t i = 0; i < gens_; ++i) s[i] = k * x[i];
  return reduce(s);
}

IntVector Group::basis(std::size_t i) const {
  IntVector e(gens_);
  e[i] = 1;
  return e;
}

IntVector Group::to_invariant(const IntVector& x) const {
  IntVector y = to_inv_.apply(x);
  for (std::size_t i = 0; i < factors_.size(); ++i) y[i] = mod_nonneg(y[i], factors_[i]);
  return y;
}

IntVector Group::from_invariant(const IntVector& y) const { return reduce(from_inv_.apply(y)); }

std::string describe_invariants(std::size_t free_rank, const IntVector& factors) {
  if (free_rank == 0 && factors.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& d : factors) {
    os << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  if (free_rank > 0) {
    os << (first ? "" : " + ") << "Z";
    if (free_rank > 1) os << "^" << free_rank;
  }
  return os.str();
}

std::string Group::describe() const { return describe_invariants(free_rank_, factors_); }

// ---------------------------------------------------------------------------

GroupHom::GroupHom(Group source, Group target, IntMatrix matrix)
    : src_(std::move(source)), dst_(std::move(target)), m_(std::move(matrix)) {
  if (m_.rows() != dst_.generators() || m_.cols() != src_.generators()) {
    if (m_.rows() == 0 && m_.cols() == 0)
      m_ = IntMatrix(dst_.generators(), src_.generators());
    else
      throw InputError("homomorphism matrix is " + std::to_string(m_.rows()) + "x" +
                       std::to_string(m_.cols()) + ", expected " +
                       std::to_string(dst_.generators()) + "x" +
                       std::to_string(src_.generators()));
  }
  const IntMatrix& r = src_.relations();
  for (std::size_t j = 0; j < r.cols(); ++j)
    if (!dst_.is_zero(m_.apply(r.column(j))))
      throw InputError("homomorphism is not well defined on relator " + std::to_string(j));
}

GroupHom GroupHom::identity(const Group& g) {
  return GroupHom(g, g, IntMatrix::identity(g.generators()));
}

GroupHom GroupHom::zero(const Group& source, const Group& target) {
  return GroupHom(source, target, IntMatrix(target.generators(), source.generators()));
}

GroupHom GroupHom::compose_after(const GroupHom& first) const {
  if (first.dst_.generators() != src_.generators())
    throw InputError("composition of incompatible homomorphisms");
  return GroupHom(first.src_, dst_, m_ * first.m_);
}

bool GroupHom::is_zero() const {
  for (std::size_t j = 0; j < m_.cols(); ++j)
    if (!dst_.is_zero(m_.column(j))) return false;
  return true;
}

bool GroupHom::equals(const GroupHom& other) const {
  if (other.m_.rows() != m_.rows() || other.m_.cols() != m_.cols()) return false;
  const IntMatrix d = m_ - other.m_;
  for (std::size_t j = 0; j < d.cols(); ++j)
    if (!dst_.is_zero(d.column(j))) return false;
  return true;
}

bool GroupHom::is_injective() const { return kernel(*this).group.is_trivial(); }
bool GroupHom::is_surjective() const { return cokernel(*this).is_trivial(); }

// ---------------------------------------------------------------------------

Subquotient subquotient(const IntMatrix& s, const IntMatrix& t) {
  // Z^k / {z : s z ∈ span t}, i.e. (span s + span t) / span t.
  const std::size_t k = s.cols();
  IntMatrix neg_t = t;
  for (std::size_t i = 0; i < neg_t.rows(); ++i)
    for (std::size_t j = 0; j < neg_t.cols(); ++j) neg_t(i, j) = -neg_t(i, j);
  const IntMatrix kb = kernel_basis(s.hconcat(neg_t));
  return Subquotient{Group(k, top_rows(kb, k)), s};
}

IntMatrix kernel_lattice(const GroupHom& f) {
  const IntMatrix& t = f.target().relations();
  IntMatrix neg_t = t;
  for (std::size_t i = 0; i < neg_t.rows(); ++i)
    for (std::size_t j = 0; j < neg_t.cols(); ++j) neg_t(i, j) = -neg_t(i, j);
  const IntMatrix kb = kernel_basis(f.matrix().hconcat(neg_t));
  return top_rows(kb, f.source().generators());
}

IntMatrix image_lattice(const GroupHom& f) {
  return f.matrix().hconcat(f.target().relations());
}

Subquotient kernel(const GroupHom& f) {
  return subquotient(kernel_lattice(f), f.source().relations());
}

Subquotient image(const GroupHom& f) {
  return subquotient(f.matrix(), f.target().relations());
}

Group cokernel(const GroupHom& f) {
  return Group(f.target().generators(), f.target().relations().hconcat(f.matrix()));
}

bool lattice_contains(const IntMatrix& b, const IntMatrix& a) {
  if (a.cols() == 0) return true;
  if (a.rows() != b.rows()) throw InputError("lattice comparison in different ambient ranks");
  LatticeSolver solver(b);
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!solver.contains(a.column(j))) return false;
  return true;
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  return lattice_contains(a, b) && lattice_contains(b, a);
}

Subquotient homology_at(const GroupHom& f, const GroupHom& g) {
  return subquotient(kernel_lattice(g), image_lattice(f));
}

bool exact_at(const GroupHom& f, const GroupHom& g) {
  return same_lattice(kernel_lattice(g), image_lattice(f));
}

Group direct_sum(const Group& a, const Group& b) {
  return Group(a.generators() + b.generators(), block_diag(a.relations(), b.relations()));
}

Group direct_sum(const std::vector<Group>& parts) {
  Group acc = Group::trivial();
  for (const auto& p : parts) acc = direct_sum(acc, p);
  return acc;
}

Group tensor(const Group& a, const Group& b) {
  const auto ia = IntMatrix::identity(a.generators());
  const auto ib = IntMatrix::identity(b.generators());
  return Group(a.generators() * b.generators(),
               kron(a.relations(), ib).hconcat(kron(ia, b.relations())));
}

Group power(const Group& a, std::size_t n) {
  return Group(a.generators() * n, kron(IntMatrix::identity(n), a.relations()));
}

// Hom(B, A) and Ext¹(B, A) come from 0 → Z^r → Z^g → B → 0 with R injective:
// applying Hom(-, A) gives A^g → A^r, F ↦ F·R, whose matrix on column-major
// vec(F) is Rᵀ ⊗ I.
namespace {

GroupHom restriction_map(const Group& b, const Group& a) {
  const IntMatrix& r = b.relation_basis();
  const Group src = power(a, b.generators());
  const Group dst = power(a, r.cols());
  return GroupHom(src, dst, kron(r.transpose(), IntMatrix::identity(a.generators())));
}

}  // namespace

HomGroup hom_group(const Group& b, const Group& a) {
  const GroupHom phi = restriction_map(b, a);
  Subquotient k = kernel(phi);
  HomGroup out{k.group, {}};
  const std::size_t an = a.generators();
  for (std::size_t j = 0; j < k.inclusion.cols(); ++j) {
    IntMatrix f(an, b.generators());
    for (std::size_t i = 0; i < b.generators(); ++i)
      for (std::size_t c = 0; c < an; ++c) f(c, i) = k.inclusion(i * an + c, j);
    out.witnesses.emplace_back(b, a, std::move(f));
  }
  return out;
}

Group ext1(const Group& b, const Group& a) { return cokernel(restriction_map(b, a)); }

Group tor1(const Group& b, const Group& c) {
  const IntMatrix& r = b.relation_basis();
  const GroupHom m(power(c, r.cols()), power(c, b.generators()),
                   kron(r, IntMatrix::identity(c.generators())));
  return kernel(m).group;
}

// ---------------------------------------------------------------------------

std::vector<IntVector> elements(const Group& g) {
  if (!g.is_finite()) throw InfiniteGroup("cannot enumerate " + g.describe());
  const Int n = g.order();
  enforce_guard(n.fits_ulong_p() ? n.get_ui() : ~0ULL, 1u << 20, "element enumeration");
  // For a finite group the echelon basis is square upper triangular and the
  // reduced representatives are exactly the boxes 0 <= v[p] < pivot.
  const std::size_t gens = g.generators();
  const IntMatrix& rb = g.relation_basis();
  std::vector<Int> bound(gens);
  for (std::size_t i = 0; i < gens; ++i) bound[i] = rb(i, i);
  std::vector<IntVector> out;
  out.reserve(n.get_ui());
  IntVector cur(gens);
  for (;;) {
    out.push_back(cur);
    std::size_t pos = gens;
    while (pos > 0) {
      --pos;
      cur[pos] += 1;
      if (cur[pos] < bound[pos]) break;
      cur[pos] = 0;
      if (pos == 0) return out;
    }
    if (gens == 0) return out;
  }
}

FiniteGroup::FiniteGroup(Group g) : g_(std::move(g)), n_(0) {
  elems_ = elements(g_);
  n_ = elems_.size();
  for (std::size_t i = 0; i < n_; ++i) index_.emplace(elems_[i], static_cast<std::uint32_t>(i));
  add_.resize(n_ * n_);
  neg_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    neg_[i] = static_cast<std::uint32_t>(index_of(g_.neg(elems_[i])));
    for (std::size_t j = 0; j < n_; ++j)
      add_[i * n_ + j] = static_cast<std::uint32_t>(index_of(g_.add(elems_[i], elems_[j])));
  }
}

std::size_t FiniteGroup::index_of(const IntVector& reduced) const {
  auto it = index_.find(reduced);
  if (it == index_.end()) throw InputError("element is not a canonical representative");
  return it->second;
}

std::uint32_t FiniteGroup::mul(long k, std::uint32_t a) const {
  std::uint32_t base = k < 0 ? neg(a) : a;
  unsigned long m = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  std::uint32_t acc = 0;
  while (m) {
    if (m & 1) acc = add(acc, base);
    base = add(base, base);
    m >>= 1;
  }
  return acc;
}

}  // namespace gammalab
