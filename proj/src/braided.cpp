#include "gammalab/braided.hpp"

#include <algorithm>
#include <set>

#include "gammalab/config.hpp"
#include "gammalab/errors.hpp"
#include "gammalab/polyfunctors.hpp"
#include "values.hpp"

namespace gammalab {

void AxiomReport::record(const std::string& axiom, std::vector<std::size_t> args, IntVector defect) {
  if (counts[axiom]++ < kKeptPerAxiom) violations.push_back({axiom, std::move(args), std::move(defect)});
}

void AxiomReport::merge(const AxiomReport& other) {
  for (const auto& v : other.violations)
    if (std::count_if(violations.begin(), violations.end(),
                      [&](const Violation& w) { return w.axiom == v.axiom; }) <
        static_cast<long>(kKeptPerAxiom))
      violations.push_back(v);
  for (const auto& [k, n] : other.counts) counts[k] += n;
}

QuadraticMap QuadraticMap::zero(const Group& b, const Group& a) {
  FiniteGroup fb(b);
  return {b, a, std::vector<IntVector>(fb.size(), a.zero())};
}

AbelianCocyclePair AbelianCocyclePair::zero(const Group& b, const Group& a) {
  FiniteGroup fb(b);
  const std::size_t n = fb.size();
  return {b, a, n, std::vector<IntVector>(n * n * n, a.zero()), std::vector<IntVector>(n * n, a.zero())};
}

namespace {

// q(x) = q(-x) and φ(x+y, z) = φ(x,z) + φ(y,z); φ is symmetric by definition,
// so this gives bilinearity in both slots.
template <class V, class Q, class Emit>
void quadratic_equations(const FiniteGroup& fb, const Q& q, Emit&& emit) {
  const std::uint32_t n = static_cast<std::uint32_t>(fb.size());
  for (std::uint32_t x = 0; x < n; ++x) emit("symmetry", {x}, q(x) - q(fb.neg(x)));
  auto phi = [&](std::uint32_t x, std::uint32_t y) -> V { return q(fb.add(x, y)) - q(x) - q(y); };
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z)
        emit("bilinearity", {x, y, z}, phi(fb.add(x, y), z) - phi(x, z) - phi(y, z));
}

template <class V, class H, class Emit>
void pentagon_equations(const FiniteGroup& fb, std::uint32_t x, const H& h, Emit&& emit) {
  const std::uint32_t n = static_cast<std::uint32_t>(fb.size());
  auto add = [&](std::uint32_t a, std::uint32_t b) { return fb.add(a, b); };
  for (std::uint32_t y = 0; y < n; ++y)
    for (std::uint32_t z = 0; z < n; ++z)
      for (std::uint32_t w = 0; w < n; ++w)
        emit("pentagon", {x, y, z, w},
             h(y, z, w) - h(add(x, y), z, w) + h(x, add(y, z), w) - h(x, y, add(z, w)) + h(x, y, z));
}

template <class V, class H, class C, class Emit>
void hexagon_equations(const FiniteGroup& fb, const H& h, const C& c, Emit&& emit) {
  const std::uint32_t n = static_cast<std::uint32_t>(fb.size());
  auto add = [&](std::uint32_t a, std::uint32_t b) { return fb.add(a, b); };
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z) {
        emit("hexagon1", {x, y, z},
             h(y, z, x) + c(x, add(y, z)) + h(x, y, z) - c(x, z) - h(y, x, z) - c(x, y));
        emit("hexagon2", {x, y, z},
             -h(z, x, y) + c(add(x, y), z) - h(x, y, z) - c(x, z) + h(x, z, y) - c(y, z));
      }
}

template <class V, class H, class C, class Emit>
void cocycle_equations(const FiniteGroup& fb, const H& h, const C& c, Emit&& emit) {
  for (std::uint32_t x = 0; x < fb.size(); ++x) pentagon_equations<V>(fb, x, h, emit);
  hexagon_equations<V>(fb, h, c, emit);
}

template <class V, class H, class C>
V yang_baxter(const FiniteGroup& fb, const H& h, const C& c, std::uint32_t x, std::uint32_t y,
              std::uint32_t z) {
  (void)fb;
  const V path1 = c(x, y) + h(y, x, z) + c(x, z) - h(y, z, x) + c(y, z);
  const V path2 = h(x, y, z) + c(y, z) - h(x, z, y) + c(x, z) + h(z, x, y) + c(x, y) - h(z, y, x);
  return path1 - path2;
}

// δb on the associator and the braiding.
template <class V, class Bt>
V delta_h(const FiniteGroup& fb, const Bt& b, std::uint32_t x, std::uint32_t y, std::uint32_t z) {
  return b(y, z) - b(fb.add(x, y), z) + b(x, fb.add(y, z)) - b(x, y);
}
template <class V, class Bt>
V delta_c(const Bt& b, std::uint32_t x, std::uint32_t y) {
  return b(y, x) - b(x, y);
}

void check_tables(const AbelianCocyclePair& p, std::size_t n) {
  if (p.n != n || p.h.size() != n * n * n || p.c.size() != n * n)
    throw InputError("cocycle tables do not match |B| = " + std::to_string(n));
}

void check_table(const QuadraticMap& q, std::size_t n) {
  if (q.q.size() != n) throw InputError("quadratic table does not match |B|");
}

// ---------------------------------------------------------------------------
// Symbolic forms: unknowns are the entries with all arguments nonzero.

struct CocycleUnknowns {
  SymbolicTable h, c;
  explicit CocycleUnknowns(std::size_t n) : h(n, 3, 0), c(n, 2, h.end()) {}
  std::size_t count() const { return c.end(); }
};

LinearSystem cocycle_system(const FiniteGroup& fb, const CocycleUnknowns& u) {
  LinearSystem sys;
  sys.unknowns = u.count();
  auto h = [&](std::size_t x, std::size_t y, std::size_t z) { return u.h({x, y, z}); };
  auto c = [&](std::size_t x, std::size_t y) { return u.c({x, y}); };
  cocycle_equations<Lin>(fb, h, c, [&](const char*, std::vector<std::size_t>, const Lin& e) { sys.add(e); });
  return sys;
}

LinearSystem quadratic_system(const FiniteGroup& fb, const SymbolicTable& t) {
  LinearSystem sys;
  sys.unknowns = t.count();
  auto q = [&](std::size_t x) { return t({x}); };
  quadratic_equations<Lin>(fb, q, [&](const char*, std::vector<std::size_t>, const Lin& e) { sys.add(e); });
  return sys;
}

// Coboundary map on unknowns: column k is δ of the k-th entry of b.
IntMatrix coboundary_matrix(const FiniteGroup& fb, const CocycleUnknowns& u) {
  const std::size_t n = fb.size();
  SymbolicTable bt(n, 2, 0);
  IntMatrix d(u.count(), bt.count());
  auto b = [&](std::size_t x, std::size_t y) { return bt({x, y}); };
  for (std::size_t k = 0; k < u.h.count(); ++k) {
    auto a = u.h.args_of(k);
    const Lin e = delta_h<Lin>(fb, b, static_cast<std::uint32_t>(a[0]), static_cast<std::uint32_t>(a[1]),
                               static_cast<std::uint32_t>(a[2]));
    for (const auto& [i, coeff] : e.terms()) d(k, i) = coeff;
  }
  for (std::size_t k = 0; k < u.c.count(); ++k) {
    auto a = u.c.args_of(u.c.first() + k);
    const Lin e = delta_c<Lin>(b, static_cast<std::uint32_t>(a[0]), static_cast<std::uint32_t>(a[1]));
    for (const auto& [i, coeff] : e.terms()) d(u.c.first() + k, i) = coeff;
  }
  return d;
}

AbelianCocyclePair pair_from_solution(const Group& b, const Group& a, const FiniteGroup& fa,
                                      const CocycleUnknowns& u, const std::vector<std::uint32_t>& s) {
  AbelianCocyclePair p = AbelianCocyclePair::zero(b, a);
  for (std::size_t k = 0; k < u.h.count(); ++k) {
    auto g = u.h.args_of(k);
    p.H(g[0], g[1], g[2]) = fa.element(s[k]);
  }
  for (std::size_t k = 0; k < u.c.count(); ++k) {
    auto g = u.c.args_of(u.c.first() + k);
    p.C(g[0], g[1]) = fa.element(s[u.c.first() + k]);
  }
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------

AxiomReport is_quadratic(const QuadraticMap& q) {
  FiniteGroup fb(q.b);
  check_table(q, fb.size());
  AxiomReport rep;
  if (!q.a.is_zero(q.q[0])) rep.record("normalization", {0}, q.a.reduce(q.q[0]));
  auto val = [&](std::size_t x) { return AVal(q.q[x]); };
  quadratic_equations<AVal>(fb, val, [&](const char* ax, std::vector<std::size_t> args, const AVal& e) {
    if (!is_zero_in(q.a, e)) rep.record(ax, std::move(args), reduce_in(q.a, e));
  });
  return rep;
}

BilinearTable polarization(const QuadraticMap& q) {
  auto rep = is_quadratic(q);
  if (!rep.pass()) throw NotQuadratic("table fails " + rep.violations.front().axiom);
  FiniteGroup fb(q.b);
  const std::size_t n = fb.size();
  BilinearTable t{q.b, q.a, n, std::vector<IntVector>(n * n)};
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      t.t[x * n + y] = reduce_in(q.a, AVal(q.q[fb.add(x, y)]) - AVal(q.q[x]) - AVal(q.q[y]));
  return t;
}

std::vector<QuadraticMap> enumerate_quadratic(const Group& b, const Group& a) {
  if (!b.is_finite() || !a.is_finite()) throw InputError("quadratic enumeration needs finite B and A");
  FiniteGroup fb(b), fa(a);
  SymbolicTable t(fb.size(), 1, 0);
  const auto sols = search_solutions(quadratic_system(fb, t), fa, guard_limit(1u << 20));
  std::vector<QuadraticMap> out;
  out.reserve(sols.size());
  for (const auto& s : sols) {
    QuadraticMap q = QuadraticMap::zero(b, a);
    for (std::size_t x = 1; x < fb.size(); ++x) q.q[x] = fa.element(s[x - 1]);
    out.push_back(std::move(q));
  }
  return out;
}

GroupHom hom_from_quadratic(const QuadraticMap& q) {
  const BilinearTable phi = polarization(q);
  FiniteGroup fb(q.b);
  const std::size_t g = q.b.generators();
  const FunctorValue g2 = apply(FunctorId::Gamma2, q.b);
  DividedPowers dp(g);
  std::vector<std::size_t> e(g);
  for (std::size_t i = 0; i < g; ++i) {
    IntVector v(g, Int(0));
    v[i] = 1;
    e[i] = fb.index_of_any(v);
  }
  IntMatrix m(q.a.generators(), dp.dim(2));
  const auto& monos = dp.monomials(2);
  for (std::size_t k = 0; k < monos.size(); ++k) {
    const std::size_t i = monos[k][0], j = monos[k][1];
    const IntVector& val = (i == j) ? q.q[e[i]] : phi.at(e[i], e[j]);
    for (std::size_t r = 0; r < val.size(); ++r) m(r, k) = val[r];
  }
  GroupHom f(g2.group, q.a, m);
  for (std::size_t x = 0; x < fb.size(); ++x)
    if (f(gamma2_of(q.b, fb.element(x))) != q.a.reduce(q.q[x]))
      throw NotQuadratic("table does not factor through the universal quadratic map");
  return f;
}

QuadraticMap quadratic_from_hom(const Group& b, const GroupHom& f) {
  const Group g2 = apply(FunctorId::Gamma2, b).group;
  if (f.source().generators() != g2.generators() || !f.source().isomorphic(g2))
    throw InputError("homomorphism is not defined on Γ₂B");
  const auto gam = universal_gamma2(b);
  QuadraticMap q{b, f.target(), {}};
  for (const auto& x : gam) q.q.push_back(f(x));
  return q;
}

AxiomReport verify_cocycle(const AbelianCocyclePair& p) {
  FiniteGroup fb(p.b);
  const std::size_t n = fb.size();
  check_tables(p, n);
  AxiomReport rep;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if ((x == 0 || y == 0) && !p.a.is_zero(p.C(x, y))) rep.record("normalization", {x, y}, p.a.reduce(p.C(x, y)));
      for (std::size_t z = 0; z < n; ++z)
        if ((x == 0 || y == 0 || z == 0) && !p.a.is_zero(p.H(x, y, z)))
          rep.record("normalization", {x, y, z}, p.a.reduce(p.H(x, y, z)));
    }
  auto h = [&](std::size_t x, std::size_t y, std::size_t z) { return AVal(p.H(x, y, z)); };
  auto c = [&](std::size_t x, std::size_t y) { return AVal(p.C(x, y)); };
  // Pentagon instances are split by first argument for the worker pool.
  std::vector<AxiomReport> parts(n);
  parallel_for(n, [&](std::size_t x) {
    pentagon_equations<AVal>(fb, static_cast<std::uint32_t>(x), h,
                             [&](const char* ax, std::vector<std::size_t> args, const AVal& e) {
                               if (!is_zero_in(p.a, e)) parts[x].record(ax, std::move(args), reduce_in(p.a, e));
                             });
  });
  for (const auto& part : parts) rep.merge(part);
  hexagon_equations<AVal>(fb, h, c, [&](const char* ax, std::vector<std::size_t> args, const AVal& e) {
    if (!is_zero_in(p.a, e)) rep.record(ax, std::move(args), reduce_in(p.a, e));
  });
  return rep;
}

QuadraticMap tau_of(const AbelianCocyclePair& p) {
  auto rep = verify_cocycle(p);
  if (!rep.pass()) throw InvalidCocycle("pair fails " + rep.violations.front().axiom);
  QuadraticMap q{p.b, p.a, {}};
  for (std::size_t x = 0; x < p.n; ++x) q.q.push_back(p.a.reduce(p.C(x, x)));
  return q;
}

IntVector yb_defect(const AbelianCocyclePair& p, std::size_t x, std::size_t y, std::size_t z) {
  FiniteGroup fb(p.b);
  check_tables(p, fb.size());
  auto h = [&](std::size_t a, std::size_t b, std::size_t c) { return AVal(p.H(a, b, c)); };
  auto c = [&](std::size_t a, std::size_t b) { return AVal(p.C(a, b)); };
  return reduce_in(p.a, yang_baxter<AVal>(fb, h, c, static_cast<std::uint32_t>(x),
                                          static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(z)));
}

AbelianCocyclePair coboundary_action(const AbelianCocyclePair& p, const std::vector<IntVector>& b) {
  FiniteGroup fb(p.b);
  const std::size_t n = fb.size();
  check_tables(p, n);
  if (b.size() != n * n) throw InputError("coboundary table does not match |B|");
  auto bt = [&](std::size_t x, std::size_t y) { return AVal(b[x * n + y]); };
  AbelianCocyclePair out = p;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      out.C(x, y) = reduce_in(p.a, AVal(p.C(x, y)) + delta_c<AVal>(bt, x, y));
      for (std::uint32_t z = 0; z < n; ++z)
        out.H(x, y, z) = reduce_in(p.a, AVal(p.H(x, y, z)) + delta_h<AVal>(fb, bt, x, y, z));
    }
  return out;
}

bool is_strictly_symmetric(const AbelianCocyclePair& p) {
  const QuadraticMap q = tau_of(p);
  for (const auto& v : q.q)
    if (!p.a.is_zero(v)) return false;
  for (std::size_t x = 0; x < p.n; ++x)
    for (std::size_t y = 0; y < p.n; ++y)
      if (!is_zero_in(p.a, AVal(p.C(x, y)) + AVal(p.C(y, x)))) return false;
  return true;
}

// ---------------------------------------------------------------------------

CocycleClassification classify_cocycles(const Group& b, const Group& a) {
  if (!b.is_finite() || !a.is_finite()) throw InputError("classification needs finite B and A");
  FiniteGroup fb(b), fa(a);
  const std::size_t n = fb.size();
  const CocycleUnknowns u(n);
  const LinearSystem sys = cocycle_system(fb, u);
  const IntMatrix d = coboundary_matrix(fb, u);

  CocycleClassification out;
  out.quadratic_maps = 0;
  {
    SymbolicTable t(n, 1, 0);
    out.quadratic_maps = kernel_size(quadratic_system(fb, t).matrix(), a);
  }

  // τ on unknowns: τ(x) = c(x,x).
  LinearSystem tau_rows;
  tau_rows.unknowns = u.count();
  for (std::size_t x = 1; x < n; ++x) tau_rows.equations.push_back(u.c({x, x}));

  double space = 1;
  for (std::size_t k = 0; k < u.count(); ++k) space *= static_cast<double>(fa.size());
  out.exhaustive = space <= static_cast<double>(guard_limit(std::uint64_t(1) << 32));

  if (!out.exhaustive) {
    const IntMatrix m = sys.matrix();
    out.valid_pairs = kernel_size(m, a);
    out.coboundaries = image_size(d, a);
    out.classes = out.valid_pairs / out.coboundaries;
    IntMatrix mt(m.rows() + tau_rows.equations.size(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t k = 0; k < m.cols(); ++k) mt(r, k) = m(r, k);
    const IntMatrix t = tau_rows.matrix();
    for (std::size_t r = 0; r < t.rows(); ++r)
      for (std::size_t k = 0; k < t.cols(); ++k) mt(m.rows() + r, k) = t(r, k);
    const IntMatrix td = t * d;
    const Int e = a.is_trivial() ? Int(1) : a.exponent();
    out.tau_constant_on_classes = true;
    for (std::size_t r = 0; r < td.rows(); ++r)
      for (std::size_t k = 0; k < td.cols(); ++k)
        if (mod_nonneg(td(r, k), e) != 0) out.tau_constant_on_classes = false;
    const Int ker_tau = kernel_size(mt, a);
    out.tau_bijective = out.tau_constant_on_classes && ker_tau == out.coboundaries &&
                        out.valid_pairs / ker_tau == out.quadratic_maps;
    return out;
  }

  const auto sols = search_solutions(sys, fa, guard_limit(1u << 20));
  out.valid_pairs = Int(static_cast<unsigned long>(sols.size()));

  // The coboundary image as the subgroup generated by single-entry tables.
  // The coboundary image as the subgroup generated by single-entry tables.
  std::vector<std::vector<std::uint32_t>> gens;
  for (std::size_t col = 0; col < d.cols(); ++col)
    for (std::uint32_t g = 1; g < fa.size(); ++g) {
      std::vector<std::uint32_t> v(u.count(), 0);
      for (std::size_t r = 0; r < d.rows(); ++r) v[r] = fa.mul(d(r, col).get_si(), g);
      gens.push_back(std::move(v));
    }
  const auto bd = subgroup_closure(gens, u.count(), fa, guard_limit(1u << 20));
  out.coboundaries = Int(static_cast<unsigned long>(bd.size()));

  std::map<std::vector<std::uint32_t>, std::size_t> class_of;  // least member → class slot
  std::vector<std::vector<std::uint32_t>> reps;
  std::vector<std::size_t> sizes;
  std::vector<bool> zero_h;
  std::vector<std::size_t> slot_of(sols.size());
  std::vector<std::vector<std::uint32_t>> canon(sols.size());
  parallel_for(sols.size(), [&](std::size_t i) {
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> w(sols[i].size());
    for (const auto& g : bd) {
      for (std::size_t k = 0; k < w.size(); ++k) w[k] = fa.add(sols[i][k], g[k]);
      if (best.empty() || w < best) best = w;
    }
    canon[i] = std::move(best);
  });
  for (std::size_t i = 0; i < sols.size(); ++i) {
    auto [it, fresh] = class_of.emplace(canon[i], reps.size());
    if (fresh) {
      reps.push_back(canon[i]);
      sizes.push_back(0);
      zero_h.push_back(false);
    }
    slot_of[i] = it->second;
    ++sizes[it->second];
    bool hz = true;
    for (std::size_t k = 0; k < u.h.count() && hz; ++k) hz = sols[i][k] == 0;
    if (hz) zero_h[it->second] = true;
  }
  out.classes = Int(static_cast<unsigned long>(reps.size()));

  auto tau_key = [&](const std::vector<std::uint32_t>& s) {
    std::vector<std::uint32_t> t;
    for (std::size_t x = 1; x < n; ++x) t.push_back(s[*u.c.unknown({x, x})]);
    return t;
  };
  out.tau_constant_on_classes = true;
  for (std::size_t i = 0; i < sols.size(); ++i)
    if (tau_key(sols[i]) != tau_key(reps[slot_of[i]])) out.tau_constant_on_classes = false;

  std::set<std::vector<std::uint32_t>> taus;
  bool all_quadratic = true;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    CocycleClass cl;
    cl.representative = pair_from_solution(b, a, fa, u, reps[k]);
    cl.tau = tau_of(cl.representative);
    cl.size = sizes[k];
    cl.has_zero_associator_member = zero_h[k];
    all_quadratic = all_quadratic && is_quadratic(cl.tau).pass();
    taus.insert(tau_key(reps[k]));
    out.class_list.push_back(std::move(cl));
  }
  std::sort(out.class_list.begin(), out.class_list.end(), [&](const CocycleClass& x, const CocycleClass& y) {
    return x.tau.q < y.tau.q;
  });
  out.tau_bijective = out.tau_constant_on_classes && all_quadratic && taus.size() == reps.size() &&
                      Int(static_cast<unsigned long>(taus.size())) == out.quadratic_maps;
  out.valid.reserve(sols.size());
  for (const auto& s : sols) out.valid.push_back(pair_from_solution(b, a, fa, u, s));
  return out;
}

}  // namespace gammalab
