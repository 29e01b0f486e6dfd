#include "gammalab/polyfunctors.hpp"

#include <algorithm>
#include <cctype>

#include "gammalab/errors.hpp"

namespace gammalab {

std::string functor_name(FunctorId f) {
  switch (f) {
    case FunctorId::Tensor2: return "Tensor2";
    case FunctorId::Lambda2: return "Lambda2";
    case FunctorId::Sym2: return "Sym2";
    case FunctorId::Gamma2: return "Gamma2";
    case FunctorId::Gamma3: return "Gamma3";
  }
  return "?";
}

FunctorId parse_functor(const std::string& name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "tensor2") return FunctorId::Tensor2;
  if (s == "lambda2") return FunctorId::Lambda2;
  if (s == "sym2") return FunctorId::Sym2;
  if (s == "gamma2") return FunctorId::Gamma2;
  if (s == "gamma3") return FunctorId::Gamma3;
  throw InputError("unknown functor '" + name + "'");
}

int functor_degree(FunctorId f) { return f == FunctorId::Gamma3 ? 3 : 2; }

// ---------------------------------------------------------------------------

namespace {

void multisets(std::size_t n, std::size_t d, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == d) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    multisets(n, d, i, cur, out);
    cur.pop_back();
  }
}

Int binom(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Multiplicities of each index in a sorted multiset.
std::vector<std::pair<std::size_t, unsigned>> runs(const std::vector<std::size_t>& m) {
  std::vector<std::pair<std::size_t, unsigned>> r;
  for (std::size_t i : m) {
    if (!r.empty() && r.back().first == i)
      ++r.back().second;
    else
      r.emplace_back(i, 1u);
  }
  return r;
}

IntVector tensor_vec(const IntVector& u, const IntVector& w) {
  const std::size_t n = u.size();
  IntVector out(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    if (u[p] == 0) continue;
    for (std::size_t q = 0; q < n; ++q)
      if (w[q] != 0) out[p * n + q] = u[p] * w[q];
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> strict_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) v.emplace_back(i, j);
  return v;
}

std::size_t strict_index(std::size_t n, std::size_t i, std::size_t j) {
  // position of (i, j), i < j, in lexicographic order
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

IntVector wedge_vec(const IntVector& u, const IntVector& w) {
  const std::size_t n = u.size();
  IntVector out(n * (n - (n ? 1 : 0)) / 2);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) out[strict_index(n, p, q)] = u[p] * w[q] - u[q] * w[p];
  return out;
}

}  // namespace

DividedPowers::DividedPowers(std::size_t n) : n_(n), monomials_(4) {
  for (int d = 1; d <= 3; ++d) {
    std::vector<std::size_t> cur;
    multisets(n, d, 0, cur, monomials_[d]);
  }
}

std::size_t DividedPowers::index(const std::vector<std::size_t>& sorted) const {
  const auto& ms = monomials_[sorted.size()];
  auto it = std::lower_bound(ms.begin(), ms.end(), sorted);
  if (it == ms.end() || *it != sorted) throw InputError("not a sorted monomial");
  return static_cast<std::size_t>(it - ms.begin());
}

IntVector DividedPowers::unit(int d, const std::vector<std::size_t>& sorted) const {
  IntVector v(dim(d));
  v[index(sorted)] = 1;
  return v;
}

IntVector DividedPowers::gamma(int m, const IntVector& v) const {
  // γ_m(Σ v_i e_i) = Σ_{|a| = m} Π v_i^{a_i} γ^{[a]}
  IntVector out(dim(m));
  const auto& ms = monomials_[m];
  for (std::size_t k = 0; k < ms.size(); ++k) {
    Int c = 1;
    for (std::size_t i : ms[k]) {
      c *= v[i];
      if (c == 0) break;
    }
    out[k] = c;
  }
  return out;
}

IntVector DividedPowers::product(int p, const IntVector& a, int q, const IntVector& b) const {
  IntVector out(dim(p + q));
  const auto& ma = monomials_[p];
  const auto& mb = monomials_[q];
  std::vector<std::size_t> merged;
  for (std::size_t s = 0; s < ma.size(); ++s) {
    if (a[s] == 0) continue;
    for (std::size_t t = 0; t < mb.size(); ++t) {
      if (b[t] == 0) continue;
      merged.clear();
      std::merge(ma[s].begin(), ma[s].end(), mb[t].begin(), mb[t].end(),
                 std::back_inserter(merged));
      // γ_i(e)·γ_j(e) = C(i+j, i) γ_{i+j}(e)
      Int c = a[s] * b[t];
      for (const auto& [idx, mult] : runs(merged)) {
        const auto in_a = static_cast<unsigned long>(std::count(ma[s].begin(), ma[s].end(), idx));
        c *= binom(mult, in_a);
      }
      out[index(merged)] += c;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t monomial_count(FunctorId f, std::size_t n) {
  switch (f) {
    case FunctorId::Tensor2: return n * n;
    case FunctorId::Lambda2: return n * (n - (n ? 1 : 0)) / 2;
    case FunctorId::Sym2:
    case FunctorId::Gamma2: return n * (n + 1) / 2;
    case FunctorId::Gamma3: return n * (n + 1) * (n + 2) / 6;
  }
  return 0;
}

std::vector<std::string> monomial_tags(FunctorId f, std::size_t n) {
  auto e = [](std::size_t i) { return "e" + std::to_string(i); };
  std::vector<std::string> tags;
  switch (f) {
    case FunctorId::Tensor2:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) tags.push_back(e(i) + "(x)" + e(j));
      break;
    case FunctorId::Lambda2:
      for (auto [i, j] : strict_pairs(n)) tags.push_back(e(i) + "^" + e(j));
      break;
    case FunctorId::Sym2:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) tags.push_back(e(i) + "." + e(j));
      break;
    case FunctorId::Gamma2:
    case FunctorId::Gamma3: {
      DividedPowers dp(n);
      for (const auto& m : dp.monomials(functor_degree(f))) {
        std::string t;
        for (const auto& [idx, mult] : runs(m)) {
          if (!t.empty()) t += "*";
          t += mult == 1 ? e(idx) : "g" + std::to_string(mult) + "(" + e(idx) + ")";
        }
        tags.push_back(t);
      }
      break;
    }
  }
  return tags;
}

namespace {

IntVector sym_vec(const IntVector& u, const IntVector& w) {
  // Sym² uses the same index layout as degree-2 divided powers.
  const std::size_t n = u.size();
  IntVector out(n * (n + 1) / 2);
  std::size_t k = 0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q, ++k)
      out[k] = (p == q) ? Int(u[p] * w[p]) : Int(u[p] * w[q] + u[q] * w[p]);
  return out;
}

IntVector divided_monomial_image(const DividedPowers& dp, const std::vector<std::size_t>& mono,
                                 const IntMatrix& m) {
  IntVector acc;
  int deg = 0;
  for (const auto& [idx, mult] : runs(mono)) {
    IntVector g = dp.gamma(static_cast<int>(mult), m.column(idx));
    if (deg == 0) {
      acc = std::move(g);
    } else {
      acc = dp.product(deg, acc, static_cast<int>(mult), g);
    }
    deg += static_cast<int>(mult);
  }
  return acc;
}

}  // namespace

IntMatrix functor_matrix(FunctorId f, const IntMatrix& m) {
  const std::size_t n = m.cols(), k = m.rows();
  switch (f) {
    case FunctorId::Tensor2: return kron(m, m);
    case FunctorId::Lambda2: {
      std::vector<IntVector> cols;
      for (auto [i, j] : strict_pairs(n)) cols.push_back(wedge_vec(m.column(i), m.column(j)));
      return IntMatrix::from_columns(monomial_count(f, k), cols);
    }
    case FunctorId::Sym2: {
      std::vector<IntVector> cols;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) cols.push_back(sym_vec(m.column(i), m.column(j)));
      return IntMatrix::from_columns(monomial_count(f, k), cols);
    }
    case FunctorId::Gamma2:
    case FunctorId::Gamma3: {
      const int d = functor_degree(f);
      DividedPowers src(n), dst(k);
      std::vector<IntVector> cols;
      for (const auto& mono : src.monomials(d)) cols.push_back(divided_monomial_image(dst, mono, m));
      return IntMatrix::from_columns(monomial_count(f, k), cols);
    }
  }
  return {};
}

namespace {

IntVector basis_vec(std::size_t n, std::size_t i) {
  IntVector e(n);
  e[i] = 1;
  return e;
}

std::vector<IntVector> relator_monomials(FunctorId f, const Group& b) {
  const std::size_t g = b.generators();
  const IntMatrix& r = b.relations();
  std::vector<IntVector> out;
  DividedPowers dp(g);
  for (std::size_t j = 0; j < r.cols(); ++j) {
    const IntVector rel = r.column(j);
    switch (f) {
      case FunctorId::Tensor2:
        for (std::size_t i = 0; i < g; ++i) {
          out.push_back(tensor_vec(rel, basis_vec(g, i)));
          out.push_back(tensor_vec(basis_vec(g, i), rel));
        }
        break;
      case FunctorId::Lambda2:
        for (std::size_t i = 0; i < g; ++i) out.push_back(wedge_vec(rel, basis_vec(g, i)));
        break;
      case FunctorId::Sym2:
        for (std::size_t i = 0; i < g; ++i) out.push_back(sym_vec(rel, basis_vec(g, i)));
        break;
      case FunctorId::Gamma2:
        out.push_back(dp.gamma(2, rel));
        for (std::size_t i = 0; i < g; ++i) out.push_back(dp.product(1, rel, 1, basis_vec(g, i)));
        break;
      case FunctorId::Gamma3: {
        out.push_back(dp.gamma(3, rel));
        const IntVector g2r = dp.gamma(2, rel);
        for (std::size_t i = 0; i < g; ++i) out.push_back(dp.product(2, g2r, 1, basis_vec(g, i)));
        for (const auto& mono : dp.monomials(2)) out.push_back(dp.product(1, rel, 2, dp.unit(2, mono)));
        break;
      }
    }
  }
  return out;
}

}  // namespace

FunctorValue apply(FunctorId f, const Group& b) {
  const std::size_t dim = monomial_count(f, b.generators());
  return FunctorValue{Group(dim, IntMatrix::from_columns(dim, relator_monomials(f, b))),
                      monomial_tags(f, b.generators())};
}

GroupHom induced_map(FunctorId f, const GroupHom& h) {
  return GroupHom(apply(f, h.source()).group, apply(f, h.target()).group,
                  functor_matrix(f, h.matrix()));
}

IntVector gamma2_of(const Group& b, const IntVector& x) {
  return DividedPowers(b.generators()).gamma(2, x);
}

std::vector<IntVector> universal_gamma2(const Group& b) {
  const Group g2 = apply(FunctorId::Gamma2, b).group;
  DividedPowers dp(b.generators());
  std::vector<IntVector> out;
  for (const auto& x : elements(b)) out.push_back(g2.reduce(dp.gamma(2, x)));
  return out;
}

GroupHom mult_map(const Group& b) {
  const std::size_t g = b.generators();
  DividedPowers dp(g);
  const Group g2 = apply(FunctorId::Gamma2, b).group;
  const Group src = tensor(g2, b);
  std::vector<IntVector> cols;
  for (const auto& mono : dp.monomials(2))
    for (std::size_t k = 0; k < g; ++k)
      cols.push_back(dp.product(2, dp.unit(2, mono), 1, basis_vec(g, k)));
  return GroupHom(src, apply(FunctorId::Gamma3, b).group,
                  IntMatrix::from_columns(dp.dim(3), cols));
}

GroupHom sym2_to_gamma2(const Group& b) {
  const std::size_t g = b.generators();
  DividedPowers dp(g);
  std::vector<IntVector> cols;
  for (const auto& mono : dp.monomials(2))
    cols.push_back(dp.product(1, basis_vec(g, mono[0]), 1, basis_vec(g, mono[1])));
  return GroupHom(apply(FunctorId::Sym2, b).group, apply(FunctorId::Gamma2, b).group,
                  IntMatrix::from_columns(dp.dim(2), cols));
}

namespace {

Group mod_multiple(const Group& b, long k) {
  const std::size_t g = b.generators();
  IntMatrix kI = IntMatrix::identity(g);
  for (std::size_t i = 0; i < g; ++i) kI(i, i) = k;
  return Group(g, b.relations().hconcat(kI));
}

GroupHom diagonal_projection(const Group& b, FunctorId f, long k) {
  const std::size_t g = b.generators();
  DividedPowers dp(g);
  const int d = functor_degree(f);
  IntMatrix m(g, dp.dim(d));
  for (std::size_t c = 0; c < dp.dim(d); ++c) {
    const auto& mono = dp.monomials(d)[c];
    if (mono.front() == mono.back()) m(mono.front(), c) = 1;
  }
  return GroupHom(apply(f, b).group, mod_multiple(b, k), m);
}

}  // namespace

GroupHom gamma2_to_mod2(const Group& b) { return diagonal_projection(b, FunctorId::Gamma2, 2); }
GroupHom gamma3_to_mod3(const Group& b) { return diagonal_projection(b, FunctorId::Gamma3, 3); }

IntMatrix gamma2_to_tensor2_matrix(std::size_t n) {
  DividedPowers dp(n);
  IntMatrix m(n * n, dp.dim(2));
  for (std::size_t c = 0; c < dp.dim(2); ++c) {
    const std::size_t i = dp.monomials(2)[c][0], j = dp.monomials(2)[c][1];
    if (i == j) {
      m(i * n + i, c) = 1;
    } else {
      m(i * n + j, c) = 1;
      m(j * n + i, c) = 1;
    }
  }
  return m;
}

IntMatrix tensor2_to_lambda2_matrix(std::size_t n) {
  IntMatrix m(monomial_count(FunctorId::Lambda2, n), n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j) m(strict_index(n, i, j), i * n + j) = 1;
      if (i > j) m(strict_index(n, j, i), i * n + j) = -1;
    }
  return m;
}

IntMatrix lambda2_section_matrix(std::size_t n) {
  IntMatrix m(n * n, monomial_count(FunctorId::Lambda2, n));
  for (auto [i, j] : strict_pairs(n)) m(i * n + j, strict_index(n, i, j)) = 1;
  return m;
}

IntMatrix tensor2_retraction_matrix(std::size_t n) {
  DividedPowers dp(n);
  IntMatrix m(dp.dim(2), n * n);
  for (std::size_t c = 0; c < dp.dim(2); ++c) {
    const std::size_t i = dp.monomials(2)[c][0], j = dp.monomials(2)[c][1];
    m(c, i * n + j) = 1;  // e_i⊗e_j with i <= j
  }
  return m;
}

GroupHom gamma2_to_tensor2(const Group& b) {
  return GroupHom(apply(FunctorId::Gamma2, b).group, apply(FunctorId::Tensor2, b).group,
                  gamma2_to_tensor2_matrix(b.generators()));
}

GroupHom tensor2_to_lambda2(const Group& b) {
  return GroupHom(apply(FunctorId::Tensor2, b).group, apply(FunctorId::Lambda2, b).group,
                  tensor2_to_lambda2_matrix(b.generators()));
}

// ---------------------------------------------------------------------------

bool SequenceReport::exact() const {
  return std::all_of(nodes.begin(), nodes.end(), [](const ExactnessNode& n) { return n.exact; });
}

ExactnessNode exactness_node(const std::string& where, const GroupHom& f, const GroupHom& g) {
  Group h = homology_at(f, g).group;
  const bool ok = exact_at(f, g);
  return ExactnessNode{where, ok, h};
}

ExactnessNode injectivity_node(const std::string& where, const GroupHom& f) {
  Group k = kernel(f).group;
  return ExactnessNode{where, k.is_trivial(), k};
}

ExactnessNode surjectivity_node(const std::string& where, const GroupHom& f) {
  Group c = cokernel(f);
  return ExactnessNode{where, c.is_trivial(), c};
}

std::vector<SequenceReport> check_sequences(const Group& b) {
  std::vector<SequenceReport> out;
  {
    const GroupHom i = sym2_to_gamma2(b);
    const GroupHom p = gamma2_to_mod2(b);
    SequenceReport r;
    r.name = "0 -> Sym2 B -> Gamma2 B -> B/2B -> 0";
    r.terms = {{"Sym2 B", i.source()}, {"Gamma2 B", i.target()}, {"B/2B", p.target()}};
    r.nodes.push_back(injectivity_node("Sym2 B", i));
    r.nodes.push_back(exactness_node("Gamma2 B", i, p));
    r.nodes.push_back(surjectivity_node("B/2B", p));
    out.push_back(std::move(r));
  }
  {
    const GroupHom m = mult_map(b);
    const GroupHom p = gamma3_to_mod3(b);
    SequenceReport r;
    r.name = "Gamma2 B (x) B -> Gamma3 B -> B/3B -> 0";
    r.terms = {{"Gamma2 B (x) B", m.source()}, {"Gamma3 B", m.target()}, {"B/3B", p.target()}};
    r.nodes.push_back(exactness_node("Gamma3 B", m, p));
    r.nodes.push_back(surjectivity_node("B/3B", p));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gammalab
