#include "gammalab/plain_check.hpp"

#include "gammalab/errors.hpp"

namespace gammalab {

namespace {

long cyclic_order(const Group& g) {
  if (!g.is_finite() || g.invariant_factors().size() > 1) throw InputError("plain check needs cyclic groups");
  const long m = g.order().get_si();
  if (m > 64) throw InputError("plain check is limited to order 64");
  return m;
}

// Coordinate of an element of a cyclic group in Z/m.
long coord(const Group& g, const IntVector& v, long m) {
  if (m == 1) return 0;
  const IntVector inv = g.to_invariant(v);
  return inv.empty() ? 0 : inv[0].get_si() % m;
}

}  // namespace

bool plain_pair_valid(const Gamma3Pair& p, const Convention& c) {
  const long n = cyclic_order(p.b), m = cyclic_order(p.a);
  if (static_cast<long>(p.n) != n) return false;
  // Element i of FiniteGroup(B) has some coordinate; translate tables into
  // coordinate order so that x + y is plain modular addition.
  FiniteGroup fb(p.b);
  std::vector<long> idx(n);  // coordinate -> element index
  for (long i = 0; i < n; ++i) idx[coord(p.b, fb.element(i), n)] = i;
  const auto md = [m](long v) { return ((v % m) + m) % m; };
  const auto ad = [n](long x, long y) { return (x + y) % n; };
  const auto ng = [n](long x) { return (n - x) % n; };
  const auto val = [&](const IntVector& v) { return coord(p.a, v, m); };
  const auto th = [&](long y, long a, long b, long d) { return val(p.Theta(idx[y], idx[a], idx[b], idx[d])); };
  const auto la = [&](long y, long x) { return val(p.Lambda(idx[y], idx[x])); };
  const auto G = [&](long x, long y, long z) { return val(p.G(idx[x], idx[y], idx[z])); };
  const auto al = [&](long x, long y) { return val(p.Alpha(idx[x], idx[y])); };
  const auto be = [&](long x) { return val(p.beta[idx[x]]); };

  // Normalization.
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      for (long d = 0; d < n; ++d) {
        for (long y = 0; y < n; ++y)
          if ((y == 0 || a == 0 || b == 0 || d == 0) && th(y, a, b, d)) return false;
        if ((a == 0 || b == 0 || d == 0) && G(a, b, d)) return false;
      }
      if ((a == 0 || b == 0) && (la(a, b) || al(a, b))) return false;
    }
  if (be(0)) return false;

  // Σ-structure of each E_(-,y), with g(x;u,v) = f(u,v;x).
  for (long y = 0; y < n; ++y) {
    const auto f = [&](long a, long b, long d) { return th(y, a, b, d); };
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b)
        for (long d = 0; d < n; ++d) {
          if (md(f(a, b, d) - f(b, a, d)) || md(f(a, b, d) - f(a, d, b))) return false;
          for (long e = 0; e < n; ++e) {
            if (md(f(a, b, e) + f(ad(a, b), d, e) - f(b, d, e) - f(a, ad(b, d), e))) return false;
            // interchange with g(x;u,v) = f(u,v;x)
            if (md(f(a, b, d) + f(a, b, e) + f(d, e, ad(a, b)) - f(d, e, a) - f(d, e, b) - f(a, b, ad(d, e))))
              return false;
          }
          if (c.sigma == SigmaConvention::Theta) {
            const auto l = [&](long x) { return la(y, x); };
            const long second = l(ad(ad(a, b), d)) - l(ad(a, b)) - l(ad(a, d)) - l(ad(b, d)) + l(a) + l(b) + l(d);
            if (md(f(ng(a), ng(b), ng(d)) - f(a, b, d) - second)) return false;
          }
        }
    for (long a = 0; a < n; ++a) {
      if (c.sigma == SigmaConvention::Theta ? md(la(y, a) + la(y, ng(a))) : md(la(y, ng(a)) - la(y, a)))
        return false;
      if (c.sigma == SigmaConvention::Literal)
        for (long b = 0; b < n; ++b)
          if (md(la(y, ad(a, b)) - la(y, a) - la(y, b) + f(a, ng(a), b) + f(b, ng(b), ng(a)))) return false;
    }
  }

  // Second variable: symmetric 2-cocycles.
  for (long x = 0; x < n; ++x)
    for (long u = 0; u < n; ++u)
      for (long v = 0; v < n; ++v) {
        if (md(G(x, u, v) - G(x, v, u))) return false;
        for (long w = 0; w < n; ++w)
          if (md(G(x, u, v) + G(x, ad(u, v), w) - G(x, v, w) - G(x, u, ad(v, w)))) return false;
      }

  // Σ-structures against the second-variable law.
  for (long u = 0; u < n; ++u)
    for (long v = 0; v < n; ++v) {
      for (long a = 0; a < n; ++a) {
        if (md(la(u, a) + la(v, a) + G(ng(a), u, v) - G(a, u, v) - la(ad(u, v), a))) return false;
        for (long b = 0; b < n; ++b)
          for (long d = 0; d < n; ++d) {
            const long sec = G(ad(ad(a, b), d), u, v) - G(ad(a, b), u, v) - G(ad(a, d), u, v) -
                             G(ad(b, d), u, v) + G(a, u, v) + G(b, u, v) + G(d, u, v);
            if (md(th(u, a, b, d) + th(v, a, b, d) + sec - th(ad(u, v), a, b, d))) return false;
          }
      }
    }

  // ψ as a cyclic difference, φ, and the two α diagrams.
  const auto psi = [&](long x, long y, long z) {
    const long r1 = G(z, x, y) - al(ad(x, y), z) + al(x, z) + al(y, z);
    const long r2 = G(x, y, z) - al(ad(y, z), x) + al(y, x) + al(z, x);
    return c.psi_sign * (r1 - r2);
  };
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y) {
      if (md(al(x, y) - al(y, x))) return false;
      for (long z = 0; z < n; ++z) {
        const long ph = G(x, y, z) - G(z, x, y) + psi(x, y, z);
        if (md(ph - (al(y, z) - al(ad(x, y), z) + al(x, ad(y, z)) - al(x, y)))) return false;
      }
    }
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y) {
      const long mxy = th(x, y, ng(y), y) + la(x, ng(y)) - psi(y, y, x);
      const long myx = th(y, x, ng(x), x) + la(y, ng(x)) - psi(x, x, y);
      const long ga = c.gamma_sign * (mxy + myx - G(ad(x, y), x, y));
      if (md(ga - be(ad(x, y)) + be(x) + be(y) - 3 * al(x, y))) return false;
    }
  return true;
}

}  // namespace gammalab
