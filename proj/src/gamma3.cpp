#include "gammalab/gamma3.hpp"

#include <random>

#include "gammalab/config.hpp"
#include "gammalab/derived.hpp"
#include "gammalab/errors.hpp"
#include "cube_equations.hpp"
#include "values.hpp"

namespace gammalab {

using detail::u32;

Gamma3Pair Gamma3Pair::zero(const Group& b, const Group& a) {
  FiniteGroup fb(b);
  const std::size_t n = fb.size();
  Gamma3Pair p;
  p.b = b;
  p.a = a;
  p.n = n;
  p.theta.assign(n * n * n * n, a.zero());
  p.lambda.assign(n * n, a.zero());
  p.ext2.assign(n * n * n, a.zero());
  p.alpha.assign(n * n, a.zero());
  p.beta.assign(n, a.zero());
  return p;
}

SigmaData Gamma3Pair::sigma_member(std::size_t y) const {
  std::vector<IntVector> f(theta.begin() + static_cast<long>(y * n * n * n),
                           theta.begin() + static_cast<long>((y + 1) * n * n * n));
  SigmaData d{symmetric_biextension(b, a, f), {}};
  d.lambda.assign(lambda.begin() + static_cast<long>(y * n), lambda.begin() + static_cast<long>((y + 1) * n));
  return d;
}

std::vector<IntVector*> Gamma3Pair::entries() {
  std::vector<IntVector*> out;
  for (auto* t : {&theta, &lambda, &ext2, &alpha, &beta})
    for (auto& v : *t) out.push_back(&v);
  return out;
}

bool Gamma3Pair::operator==(const Gamma3Pair& o) const {
  return n == o.n && b.isomorphic(o.b) && a.isomorphic(o.a) && theta == o.theta && lambda == o.lambda &&
         ext2 == o.ext2 && alpha == o.alpha && beta == o.beta;
}

bool PairReport::pass() const {
  if (!invariants.pass()) return false;
  for (const auto& d : diagrams)
    if (!d.pass()) return false;
  return true;
}

namespace {

// Table access for the generic equations below.
struct NumericTables {
  const Gamma3Pair& p;
  AVal theta(u32 y, u32 a, u32 b, u32 c) const { return AVal(p.Theta(y, a, b, c)); }
  AVal lam(u32 y, u32 x) const { return AVal(p.Lambda(y, x)); }
  AVal G(u32 x, u32 y, u32 z) const { return AVal(p.G(x, y, z)); }
  AVal al(u32 x, u32 y) const { return AVal(p.Alpha(x, y)); }
  AVal be(u32 x) const { return AVal(p.beta[x]); }
};

struct SymbolicTables {
  SymbolicTable th, la, g, alt, bet;
  explicit SymbolicTables(std::size_t n)
      : th(n, 4, 0), la(n, 2, th.end()), g(n, 3, la.end()), alt(n, 2, g.end()), bet(n, 1, alt.end()) {}
  std::size_t unknowns() const { return bet.end(); }
  Lin theta(u32 y, u32 a, u32 b, u32 c) const { return th({y, a, b, c}); }
  Lin lam(u32 y, u32 x) const { return la({y, x}); }
  Lin G(u32 x, u32 y, u32 z) const { return g({x, y, z}); }
  Lin al(u32 x, u32 y) const { return alt({x, y}); }
  Lin be(u32 x) const { return bet({x}); }
};

template <class V, class T>
V rho(const FiniteGroup& fb, const T& t, u32 x, u32 y, u32 z) {
  return t.G(z, x, y) - t.al(fb.add(x, y), z) + t.al(x, z) + t.al(y, z);
}

template <class V, class T>
V psi(const FiniteGroup& fb, const T& t, const Convention& c, u32 x, u32 y, u32 z) {
  return static_cast<long>(c.psi_sign) * (rho<V>(fb, t, x, y, z) - rho<V>(fb, t, y, z, x));
}

template <class V, class T>
V phi(const FiniteGroup& fb, const T& t, const Convention& c, u32 x, u32 y, u32 z) {
  return -t.G(z, x, y) + psi<V>(fb, t, c, x, y, z) + t.G(x, y, z);
}

template <class V, class T>
V mu(const FiniteGroup& fb, const T& t, const Convention& c, u32 x, u32 y) {
  const u32 my = fb.neg(y);
  return t.theta(x, y, my, y) + t.lam(x, my) - psi<V>(fb, t, c, y, y, x);
}

template <class V, class T>
V gamma(const FiniteGroup& fb, const T& t, const Convention& c, u32 x, u32 y) {
  return static_cast<long>(c.gamma_sign) *
         (-t.G(fb.add(x, y), x, y) + mu<V>(fb, t, c, x, y) + mu<V>(fb, t, c, y, x));
}

// Each generator emits (args, lhs, rhs) for the instances whose first
// argument is x.
template <class V, class T, class Emit>
void compat_instances(const FiniteGroup& fb, const T& t, u32 x, Emit&& emit) {
  const u32 n = static_cast<u32>(fb.size());
  for (u32 y1 = 0; y1 < n; ++y1)
    for (u32 y2 = 0; y2 < n; ++y2) {
      const u32 y12 = fb.add(y1, y2);
      auto gy = [&](u32 w) { return t.G(w, y1, y2); };
      for (u32 x2 = 0; x2 < n; ++x2)
        for (u32 x3 = 0; x3 < n; ++x3)
          emit(std::vector<std::size_t>{x, x2, x3, y1, y2},
               t.theta(y1, x, x2, x3) + t.theta(y2, x, x2, x3) + detail::theta_of<V>(fb, gy, x, x2, x3),
               t.theta(y12, x, x2, x3));
      emit(std::vector<std::size_t>{x, y1, y2},
           t.lam(y1, x) + t.lam(y2, x) + t.G(fb.neg(x), y1, y2) - t.G(x, y1, y2), t.lam(y12, x));
    }
}

template <class V, class T, class Emit>
void phiass_instances(const FiniteGroup& fb, const T& t, const Convention& c, u32 x, Emit&& emit) {
  const u32 n = static_cast<u32>(fb.size());
  for (u32 y = 0; y < n; ++y)
    for (u32 z = 0; z < n; ++z)
      emit(std::vector<std::size_t>{x, y, z}, phi<V>(fb, t, c, x, y, z) + t.al(fb.add(x, y), z) + t.al(x, y),
           t.al(x, fb.add(y, z)) + t.al(y, z));
}

template <class V, class T, class Emit>
void phicom_instances(const FiniteGroup& fb, const T& t, u32 x, Emit&& emit) {
  for (u32 y = 0; y < fb.size(); ++y) emit(std::vector<std::size_t>{x, y}, t.al(x, y), t.al(y, x));
}

template <class V, class T, class Emit>
void alphabeta_instances(const FiniteGroup& fb, const T& t, const Convention& c, u32 x, Emit&& emit) {
  for (u32 y = 0; y < fb.size(); ++y)
    emit(std::vector<std::size_t>{x, y},
         gamma<V>(fb, t, c, x, y) - (t.be(fb.add(x, y)) - t.be(x) - t.be(y)), 3L * t.al(x, y));
}

template <class V, class T, class Emit>
void ext2_instances(const FiniteGroup& fb, const T& t, u32 x, Emit&& emit) {
  const u32 n = static_cast<u32>(fb.size());
  for (u32 y = 0; y < n; ++y)
    for (u32 y2 = 0; y2 < n; ++y2) {
      emit("ext2_symmetry", std::vector<std::size_t>{x, y, y2}, t.G(x, y, y2) - t.G(x, y2, y));
      for (u32 y3 = 0; y3 < n; ++y3)
        emit("ext2_cocycle", std::vector<std::size_t>{x, y, y2, y3},
             t.G(x, y, y2) + t.G(x, fb.add(y, y2), y3) - t.G(x, y2, y3) - t.G(x, y, fb.add(y2, y3)));
    }
}

void check_sizes(const Gamma3Pair& p, std::size_t n) {
  if (p.n != n || p.theta.size() != n * n * n * n || p.lambda.size() != n * n || p.ext2.size() != n * n * n ||
      p.alpha.size() != n * n || p.beta.size() != n)
    throw InputError("gamma3 pair tables do not match |B| = " + std::to_string(n));
}

// Runs a generator over every first argument in parallel, keeping the
// report in argument order.
template <class Gen>
DiagramReport run_diagram(const std::string& id, const Gamma3Pair& p, const Gen& gen) {
  FiniteGroup fb(p.b);
  check_sizes(p, fb.size());
  const std::size_t n = fb.size();
  std::vector<DiagramReport> parts(n);
  parallel_for(n, [&](std::size_t x) {
    gen(fb, static_cast<u32>(x), [&](std::vector<std::size_t> args, const AVal& lhs, const AVal& rhs) {
      if (is_zero_in(p.a, lhs - rhs)) return;
      auto& part = parts[x];
      if (part.violations.size() < DiagramReport::kKept)
        part.violations.push_back({std::move(args), reduce_in(p.a, lhs), reduce_in(p.a, rhs)});
      ++part.failures;
    });
  });
  DiagramReport rep;
  rep.diagram = id;
  for (auto& part : parts) {
    rep.failures += part.failures;
    for (auto& v : part.violations)
      if (rep.violations.size() < DiagramReport::kKept) rep.violations.push_back(std::move(v));
  }
  return rep;
}

bool normalized_entry(std::size_t k, std::size_t n, std::size_t arity) {
  for (std::size_t j = 0; j < arity; ++j, k /= n)
    if (k % n == 0) return false;
  return true;
}

}  // namespace

DiagramReport verify_compat(const Gamma3Pair& p) {
  const NumericTables t{p};
  return run_diagram("compat413", p, [&](const FiniteGroup& fb, u32 x, auto&& emit) {
    compat_instances<AVal>(fb, t, x, emit);
  });
}

IntVector eval_psi(const Gamma3Pair& p, std::size_t x, std::size_t y, std::size_t z, const Convention& c) {
  FiniteGroup fb(p.b);
  check_sizes(p, fb.size());
  return reduce_in(p.a, psi<AVal>(fb, NumericTables{p}, c, static_cast<u32>(x), static_cast<u32>(y),
                                  static_cast<u32>(z)));
}

IntVector eval_phi(const Gamma3Pair& p, std::size_t x, std::size_t y, std::size_t z, const Convention& c) {
  FiniteGroup fb(p.b);
  check_sizes(p, fb.size());
  return reduce_in(p.a, phi<AVal>(fb, NumericTables{p}, c, static_cast<u32>(x), static_cast<u32>(y),
                                  static_cast<u32>(z)));
}

IntVector eval_gamma(const Gamma3Pair& p, std::size_t x, std::size_t y, const Convention& c) {
  FiniteGroup fb(p.b);
  check_sizes(p, fb.size());
  return reduce_in(p.a, gamma<AVal>(fb, NumericTables{p}, c, static_cast<u32>(x), static_cast<u32>(y)));
}

DiagramReport check_phiass(const Gamma3Pair& p, const Convention& c) {
  const NumericTables t{p};
  return run_diagram("phiass", p, [&](const FiniteGroup& fb, u32 x, auto&& emit) {
    phiass_instances<AVal>(fb, t, c, x, emit);
  });
}

DiagramReport check_phicom(const Gamma3Pair& p) {
  const NumericTables t{p};
  return run_diagram("phicom", p, [&](const FiniteGroup& fb, u32 x, auto&& emit) {
    phicom_instances<AVal>(fb, t, x, emit);
  });
}

DiagramReport check_alphabeta(const Gamma3Pair& p, const Convention& c) {
  const NumericTables t{p};
  return run_diagram("alphabeta1", p, [&](const FiniteGroup& fb, u32 x, auto&& emit) {
    alphabeta_instances<AVal>(fb, t, c, x, emit);
  });
}

PairReport verify_pair(const Gamma3Pair& p, const Convention& c) {
  FiniteGroup fb(p.b);
  const std::size_t n = fb.size();
  check_sizes(p, n);
  PairReport out;
  auto& inv = out.invariants;
  auto normalized = [&](const char* table, const std::vector<IntVector>& t, std::size_t arity) {
    for (std::size_t k = 0; k < t.size(); ++k)
      if (!normalized_entry(k, n, arity) && !p.a.is_zero(t[k])) {
        std::vector<std::size_t> args(arity);
        for (std::size_t j = arity, r = k; j-- > 0; r /= n) args[j] = r % n;
        inv.record(std::string("normalization:") + table, std::move(args), p.a.reduce(t[k]));
      }
  };
  normalized("theta", p.theta, 4);
  normalized("lambda", p.lambda, 2);
  normalized("ext2", p.ext2, 3);
  normalized("alpha", p.alpha, 2);
  normalized("beta", p.beta, 1);

  std::vector<AxiomReport> members(n);
  parallel_for(n, [&](std::size_t y) {
    for (const auto& v : verify_sigma(p.sigma_member(y), c.sigma).violations) {
      std::vector<std::size_t> args{y};
      args.insert(args.end(), v.args.begin(), v.args.end());
      members[y].record("sigma_member:" + v.axiom, std::move(args), v.defect);
    }
  });
  for (const auto& m : members) inv.merge(m);

  const NumericTables t{p};
  for (u32 x = 0; x < n; ++x)
    ext2_instances<AVal>(fb, t, x, [&](const char* ax, std::vector<std::size_t> args, const AVal& e) {
      if (!is_zero_in(p.a, e)) inv.record(ax, std::move(args), reduce_in(p.a, e));
    });

  out.diagrams.push_back(verify_compat(p));
  out.diagrams.push_back(check_phiass(p, c));
  out.diagrams.push_back(check_phicom(p));
  out.diagrams.push_back(check_alphabeta(p, c));
  return out;
}

Gamma3Pair gauge(const Gamma3Pair& p, const std::vector<IntVector>& t_e, const std::vector<IntVector>& t_l) {
  FiniteGroup fb(p.b);
  const std::size_t n = fb.size();
  check_sizes(p, n);
  if (t_e.size() != n * n || t_l.size() != n) throw InputError("gauge tables do not match |B|");
  const Group& a = p.a;
  auto te = [&](u32 x, u32 y) { return AVal(t_e[x * n + y]); };
  auto tl = [&](u32 x) { return AVal(t_l[x]); };
  Gamma3Pair q = p;
  for (u32 y = 0; y < n; ++y) {
    auto ty = [&](u32 x) { return te(x, y); };
    for (u32 x1 = 0; x1 < n; ++x1) {
      for (u32 x2 = 0; x2 < n; ++x2)
        for (u32 x3 = 0; x3 < n; ++x3)
          q.Theta(y, x1, x2, x3) =
              reduce_in(a, AVal(p.Theta(y, x1, x2, x3)) + detail::theta_of<AVal>(fb, ty, x1, x2, x3));
      q.Lambda(y, x1) = reduce_in(a, AVal(p.Lambda(y, x1)) + te(fb.neg(x1), y) - te(x1, y));
    }
  }
  for (u32 x = 0; x < n; ++x) {
    for (u32 y = 0; y < n; ++y) {
      for (u32 y2 = 0; y2 < n; ++y2)
        q.G(x, y, y2) = reduce_in(a, AVal(p.G(x, y, y2)) + te(x, fb.add(y, y2)) - te(x, y) - te(x, y2));
      q.Alpha(x, y) =
          reduce_in(a, AVal(p.Alpha(x, y)) + te(x, y) + te(y, x) - (tl(fb.add(x, y)) - tl(x) - tl(y)));
    }
    q.beta[x] = reduce_in(a, AVal(p.beta[x]) + 3L * tl(x) - te(x, x));
  }
  return q;
}

Prop42Result prop42(const Gamma3Pair& p, const std::vector<IntVector>& section, const Convention& c) {
  FiniteGroup fb(p.b);
  const std::size_t n = fb.size();
  check_sizes(p, n);
  if (section.size() != n * n) throw InputError("section table does not match |B|");
  const PairReport rep = verify_pair(p, c);
  if (!rep.invariants.pass()) throw AxiomFailure("pair fails " + rep.invariants.violations.front().axiom);
  for (const auto& d : rep.diagrams)
    if (!d.pass()) throw AxiomFailure("pair fails " + d.diagram);

  const Group& a = p.a;
  auto witness = [](const std::string& what, std::vector<std::size_t> args) {
    std::string s = what + " at (";
    for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + std::to_string(args[i]);
    throw IncompatibleSection(s + ")", std::move(args));
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if ((x == 0 || y == 0) && !a.is_zero(section[x * n + y])) witness("section not normalized", {x, y});

  // Trivialize E by the section; the structures of E must become trivial.
  std::vector<IntVector> neg(n * n);
  for (std::size_t k = 0; k < n * n; ++k) neg[k] = a.neg(section[k]);
  const Gamma3Pair q = gauge(p, neg, std::vector<IntVector>(n, a.zero()));
  for (std::size_t k = 0; k < q.theta.size(); ++k)
    if (!a.is_zero(q.theta[k]))
      witness("first-variable cube not trivialized", {k / (n * n * n), k / (n * n) % n, k / n % n, k % n});
  for (std::size_t k = 0; k < q.lambda.size(); ++k)
    if (!a.is_zero(q.lambda[k])) witness("first-variable symmetry not trivialized", {k / n, k % n});
  for (std::size_t k = 0; k < q.ext2.size(); ++k)
    if (!a.is_zero(q.ext2[k])) witness("second-variable law not trivialized", {k / (n * n), k / n % n, k % n});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!a.is_zero(eval_psi(q, x, y, z, c))) witness("psi not trivialized", {x, y, z});

  Prop42Result out;
  out.extension.resize(n * n);
  for (std::size_t k = 0; k < n * n; ++k) out.extension[k] = a.neg(q.alpha[k]);
  auto l = [&](u32 x, u32 y) { return AVal(out.extension[x * n + y]); };
  out.associative = out.commutative = true;
  for (u32 x = 0; x < n; ++x)
    for (u32 y = 0; y < n; ++y) {
      if (!is_zero_in(a, l(x, y) - l(y, x))) out.commutative = false;
      for (u32 z = 0; z < n; ++z)
        if (!is_zero_in(a, l(y, z) - l(fb.add(x, y), z) + l(x, fb.add(y, z)) - l(x, y))) out.associative = false;
    }
  // β splits 3ℓ; the cube map of the extension turns that into a splitting
  // of the pullback along multiplication by 3.
  out.splitting.resize(n);
  for (u32 x = 0; x < n; ++x) {
    const u32 x2 = fb.add(x, x);
    out.splitting[x] = reduce_in(a, AVal(q.beta[x]) + l(x, x) + l(x2, x));
  }
  auto r = [&](u32 x) { return AVal(out.splitting[x]); };
  out.splitting_verified = true;
  for (u32 x = 0; x < n; ++x)
    for (u32 y = 0; y < n; ++y)
      if (!is_zero_in(a, r(fb.add(x, y)) - r(x) - r(y) - l(fb.mul(3, x), fb.mul(3, y)))) out.splitting_verified = false;
  return out;
}

Gamma3Pair random_pair(const Group& b, const Group& a, std::uint64_t seed) {
  if (!b.is_finite() || !a.is_finite()) throw InputError("random_pair needs finite B and A");
  FiniteGroup fb(b), fa(a);
  const std::size_t n = fb.size();
  std::mt19937_64 rng(seed);
  auto pick = [&] { return fa.element(static_cast<std::size_t>(rng() % fa.size())); };
  std::vector<IntVector> t_e(n * n, a.zero()), t_l(n, a.zero());
  for (std::size_t x = 1; x < n; ++x) {
    for (std::size_t y = 1; y < n; ++y) t_e[x * n + y] = pick();
    t_l[x] = pick();
  }
  Gamma3Pair p = gauge(Gamma3Pair::zero(b, a), t_e, t_l);
  // A homomorphism added to β leaves every diagram unchanged.
  const HomGroup hom = hom_group(b, a);
  std::vector<Int> shift;
  for (std::size_t i = 0; i < hom.witnesses.size(); ++i) shift.emplace_back(static_cast<unsigned long>(rng() % fa.size()));
  for (std::size_t x = 1; x < n; ++x) {
    IntVector acc = a.zero();
    for (std::size_t i = 0; i < hom.witnesses.size(); ++i)
      acc = a.add(acc, a.scale(shift[i], hom.witnesses[i](fb.element(x))));
    p.beta[x] = a.add(p.beta[x], acc);
  }
  return p;
}

Gamma3Count classify_count(const Group& b, const Group& a, const Convention& c) {
  if (!b.is_finite() || !a.is_finite()) throw InputError("classify-count needs finite B and A");
  FiniteGroup fb(b);
  enforce_guard(fb.size(), 4, "|B| for gamma3 classify-count");
  enforce_guard(static_cast<std::uint64_t>(a.order().get_ui()), 9, "|A| for gamma3 classify-count");
  const std::size_t n = fb.size();
  const SymbolicTables t(n);

  LinearSystem sys;
  sys.unknowns = t.unknowns();
  auto add_eq = [&](const char*, std::vector<std::size_t>, const Lin& e) { sys.add(e); };
  auto add_diag = [&](std::vector<std::size_t>, const Lin& lhs, const Lin& rhs) { sys.add(lhs - rhs); };
  for (u32 y = 1; y < n; ++y) {
    auto f = [&](u32 x1, u32 x2, u32 x3) { return t.theta(y, x1, x2, x3); };
    auto lam = [&](u32 x) { return t.lam(y, x); };
    detail::sigma_equations<Lin>(fb, f, lam, c.sigma, add_eq);
  }
  for (u32 x = 0; x < n; ++x) {
    ext2_instances<Lin>(fb, t, x, add_eq);
    compat_instances<Lin>(fb, t, x, add_diag);
    phiass_instances<Lin>(fb, t, c, x, add_diag);
    phicom_instances<Lin>(fb, t, x, add_diag);
    alphabeta_instances<Lin>(fb, t, c, x, add_diag);
  }
  const IntMatrix m = sys.matrix();

  // Gauge columns: t_E(x,y) and t_L(x) for nonzero arguments.
  const SymbolicTable te(n, 2, 0), tl(n, 1, te.end());
  const std::size_t gauge_unknowns = tl.end();
  auto vte = [&](u32 x, u32 y) { return te({x, y}); };
  auto vtl = [&](u32 x) { return tl({x}); };
  std::vector<Lin> shift(t.unknowns());
  for (u32 y = 1; y < n; ++y) {
    auto ty = [&](u32 x) { return vte(x, y); };
    for (u32 x1 = 1; x1 < n; ++x1) {
      for (u32 x2 = 1; x2 < n; ++x2)
        for (u32 x3 = 1; x3 < n; ++x3)
          shift[*t.th.unknown({y, x1, x2, x3})] = detail::theta_of<Lin>(fb, ty, x1, x2, x3);
      shift[*t.la.unknown({y, x1})] = vte(fb.neg(x1), y) - vte(x1, y);
    }
  }
  for (u32 x = 1; x < n; ++x) {
    for (u32 y = 1; y < n; ++y) {
      for (u32 y2 = 1; y2 < n; ++y2)
        shift[*t.g.unknown({x, y, y2})] = vte(x, fb.add(y, y2)) - vte(x, y) - vte(x, y2);
      shift[*t.alt.unknown({x, y})] = vte(x, y) + vte(y, x) - (vtl(fb.add(x, y)) - vtl(x) - vtl(y));
    }
    shift[*t.bet.unknown({x})] = 3L * vtl(x) - vte(x, x);
  }
  IntMatrix d(t.unknowns(), gauge_unknowns);
  for (std::size_t i = 0; i < shift.size(); ++i)
    for (const auto& [k, coeff] : shift[i].terms()) d(i, k) = coeff;

  Gamma3Count out;
  out.solutions = kernel_size(m, a);
  out.gauge_image = image_size(d, a);
  const IntMatrix md = m * d;
  const Int e = a.exponent();
  out.gauge_invariant = true;
  for (std::size_t i = 0; i < md.rows() && out.gauge_invariant; ++i)
    for (std::size_t j = 0; j < md.cols(); ++j)
      if (mod_nonneg(md(i, j), e) != 0) {
        out.gauge_invariant = false;
        break;
      }
  out.classes = out.gauge_invariant ? Int(out.solutions / out.gauge_image) : Int(0);
  out.reference = hyper_ext(FunctorId::Gamma3, b, a, 1).order();
  return out;
}

MutationSummary mutation_sweep(const Gamma3Pair& p, const Convention& c,
                               const std::function<bool(const Gamma3Pair&)>& reference) {
  FiniteGroup fa(p.a);
  Gamma3Pair work = p;
  const std::size_t entries = work.entries().size();
  std::vector<std::uint8_t> accepted(entries * fa.size(), 0), real(entries * fa.size(), 0);
  parallel_for(entries, [&](std::size_t k) {
    Gamma3Pair m = p;
    IntVector* slot = m.entries()[k];
    const IntVector orig = *slot;
    for (std::size_t g = 1; g < fa.size(); ++g) {
      *slot = p.a.add(orig, fa.element(g));
      if (verify_pair(m, c).pass()) {
        accepted[k * fa.size() + g] = 1;
        real[k * fa.size() + g] = reference(m) ? 1 : 0;
      }
    }
  });
  MutationSummary out;
  out.mutants = entries * (fa.size() - 1);
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    if (accepted[i]) {
      ++out.accepted;
      if (!real[i]) ++out.false_accepts;
    }
  }
  out.rejected = out.mutants - out.accepted;
  return out;
}

}  // namespace gammalab
