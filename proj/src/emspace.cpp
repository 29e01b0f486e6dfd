#include "gammalab/emspace.hpp"

#include <map>

#include "gammalab/config.hpp"
#include "gammalab/errors.hpp"

namespace gammalab {

namespace {

GradedPieces pieces_on_line(const Group& b, int n) {
  GradedPieces out{n, {}, Group::trivial()};
  if (n == 0) {
    out.pieces.push_back({0, 0, Group::free(1)});
    out.assembled = Group::free(1);
    return out;
  }
  std::vector<Group> parts;
  for (int q = 1; 2 * q <= n; ++q) {
    const std::size_t p = static_cast<std::size_t>(n - 2 * q);
    Group g = Group::trivial();
    switch (q) {
      case 1: g = l_derived_identity(b, p); break;
      case 2: g = l_derived(FunctorId::Gamma2, b, p); break;
      case 3: g = l_derived(FunctorId::Gamma3, b, p); break;
      default: throw InputError("homology of K(B,2) is only available through degree 7");
    }
    out.pieces.push_back({static_cast<int>(p), q, g});
    parts.push_back(g);
  }
  out.assembled = parts.empty() ? Group::trivial() : direct_sum(parts);
  return out;
}

// ---------------------------------------------------------------------------
// Bar constructions. Letters of the inner bar are the nonzero elements g of B
// standing for u_g = g - 1 in the augmentation ideal of Z[B]; inner words
// [u_1|...|u_k] have degree k. Outer letters are inner words α with suspended
// degree |α| + 1.

using Word = std::vector<std::uint32_t>;
using Outer = std::vector<Word>;
template <class K>
using Combo = std::map<K, long>;

template <class K>
void accumulate(Combo<K>& into, const K& k, long c) {
  if (c == 0) return;
  auto [it, fresh] = into.emplace(k, c);
  if (!fresh && (it->second += c) == 0) into.erase(it);
}

class DoubleBar {
 public:
  explicit DoubleBar(const FiniteGroup& fb) : fb_(fb) {}

  // u_a u_b = u_{a+b} - u_a - u_b, with u_0 = 0.
  Combo<std::uint32_t> letter_product(std::uint32_t a, std::uint32_t b) const {
    Combo<std::uint32_t> out;
    const std::uint32_t s = fb_.add(a, b);
    if (s != 0) accumulate(out, s, 1L);
    accumulate(out, a, -1L);
    accumulate(out, b, -1L);
    return out;
  }

  // d[u_1|...|u_k] = Σ_i (-1)^i [..|u_i u_{i+1}|..].
  Combo<Word> inner_d(const Word& w) const {
    Combo<Word> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const long sign = (i % 2 == 0) ? -1 : 1;
      for (const auto& [letter, c] : letter_product(w[i], w[i + 1])) {
        Word v(w.begin(), w.begin() + static_cast<long>(i));
        v.push_back(letter);
        v.insert(v.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        accumulate(out, v, sign * c);
      }
    }
    return out;
  }

  // Shuffle product; every inner letter has suspended degree 1.
  Combo<Word> shuffle(const Word& a, const Word& b) const {
    Combo<Word> out;
    Word cur;
    cur.reserve(a.size() + b.size());
    shuffle_rec(a, b, 0, 0, 0, cur, out);
    return out;
  }

  // Outer differential: internal part plus shuffle products of neighbours.
  Combo<Outer> outer_d(const Outer& x) const {
    Combo<Outer> out;
    long eps = 0;  // Σ_{j<i} (|α_j| + 1)
    for (std::size_t i = 0; i < x.size(); ++i) {
      const long sign = ((eps + 1) % 2 == 0) ? 1 : -1;
      for (const auto& [w, c] : inner_d(x[i])) {
        Outer y = x;
        y[i] = w;
        accumulate(out, y, sign * c);
      }
      eps += static_cast<long>(x[i].size()) + 1;
      if (i + 1 < x.size()) {
        const long s2 = (eps % 2 == 0) ? 1 : -1;
        for (const auto& [w, c] : shuffle(x[i], x[i + 1])) {
          Outer y(x.begin(), x.begin() + static_cast<long>(i));
          y.push_back(w);
          y.insert(y.end(), x.begin() + static_cast<long>(i) + 2, x.end());
          accumulate(out, y, s2 * c);
        }
      }
    }
    return out;
  }

  // Basis of the outer bar in total degree n.
  std::vector<Outer> basis(int n) const {
    std::vector<Outer> out;
    Outer cur;
    compositions(n, cur, out);
    return out;
  }

 private:
  void shuffle_rec(const Word& a, const Word& b, std::size_t i, std::size_t j, long inversions,
                   Word& cur, Combo<Word>& out) const {
    if (i == a.size() && j == b.size()) {
      accumulate(out, cur, inversions % 2 == 0 ? 1L : -1L);
      return;
    }
    if (i < a.size()) {
      cur.push_back(a[i]);
      shuffle_rec(a, b, i + 1, j, inversions, cur, out);
      cur.pop_back();
    }
    if (j < b.size()) {
      cur.push_back(b[j]);
      shuffle_rec(a, b, i, j + 1, inversions + static_cast<long>(a.size() - i), cur, out);
      cur.pop_back();
    }
  }

  void words(std::size_t len, Word& cur, std::vector<Word>& out) const {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t g = 1; g < fb_.size(); ++g) {
      cur.push_back(g);
      words(len, cur, out);
      cur.pop_back();
    }
  }

  void compositions(int remaining, Outer& cur, std::vector<Outer>& out) const {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = 2; part <= remaining; ++part) {
      std::vector<Word> ws;
      Word w;
      words(static_cast<std::size_t>(part - 1), w, ws);
      for (auto& x : ws) {
        cur.push_back(std::move(x));
        compositions(remaining - part, cur, out);
        cur.pop_back();
      }
    }
  }

  const FiniteGroup& fb_;
};

template <class K>
IntMatrix boundary_matrix(const std::vector<K>& source, const std::vector<K>& target,
                          const std::function<Combo<K>(const K&)>& d) {
  std::map<K, std::size_t> index;
  for (std::size_t i = 0; i < target.size(); ++i) index.emplace(target[i], i);
  IntMatrix m(target.size(), source.size());
  std::vector<Combo<K>> images(source.size());
  parallel_for(source.size(), [&](std::size_t j) { images[j] = d(source[j]); });
  for (std::size_t j = 0; j < source.size(); ++j)
    for (const auto& [k, c] : images[j]) {
      auto it = index.find(k);
      if (it == index.end()) throw Error("boundary leaves the chain basis");
      m(it->second, j) = c;
    }
  return m;
}

std::uint64_t outer_rank(std::uint64_t letters, int n) {
  // Compositions of n into parts >= 2, a part of size k carrying letters^(k-1) words.
  std::vector<std::uint64_t> c(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
  c[0] = 1;
  for (int m = 2; m <= n; ++m) {
    std::uint64_t pw = 1;
    for (int part = 2; part <= m; ++part) {
      pw *= letters;
      c[static_cast<std::size_t>(m)] += pw * c[static_cast<std::size_t>(m - part)];
    }
  }
  return c[static_cast<std::size_t>(std::max(n, 0))];
}

// ---------------------------------------------------------------------------
// Simplicial K(B,2): n-simplices are normalized B-valued 2-cocycles on Δ^n,
// stored by their values on the triangles (0,j,k), 1 <= j < k <= n.

std::size_t pair_index(std::size_t j, std::size_t k) {  // 1 <= j < k
  return (k - 1) * (k - 2) / 2 + (j - 1);
}

class CocycleModel {
 public:
  explicit CocycleModel(const FiniteGroup& fb) : fb_(fb) {}

  // Value on an arbitrary triangle a < b < c from the (0,j,k) coordinates.
  std::uint32_t value(const std::vector<std::uint32_t>& x, std::size_t a, std::size_t b,
                      std::size_t c) const {
    if (a == 0) return x[pair_index(b, c)];
    return fb_.add(fb_.sub(x[pair_index(b, c)], x[pair_index(a, c)]), x[pair_index(a, b)]);
  }

  // Pullback along an order-preserving map f : [m] → [n].
  std::vector<std::uint32_t> pullback(const std::vector<std::uint32_t>& x,
                                      const std::vector<std::size_t>& f) const {
    const std::size_t m = f.size() - 1;
    std::vector<std::uint32_t> y(m < 2 ? 0 : m * (m - 1) / 2, 0);
    for (std::size_t k = 2; k <= m; ++k)
      for (std::size_t j = 1; j < k; ++j) {
        const std::size_t a = f[0], b = f[j], c = f[k];
        y[pair_index(j, k)] = (a == b || b == c) ? 0 : value(x, a, b, c);
      }
    return y;
  }

  static std::vector<std::size_t> coface(std::size_t m, std::size_t i) {  // [m-1] → [m] skipping i
    std::vector<std::size_t> f;
    for (std::size_t v = 0; v <= m; ++v)
      if (v != i) f.push_back(v);
    return f;
  }
  static std::vector<std::size_t> codegeneracy(std::size_t m, std::size_t j) {  // [m+1] → [m]
    std::vector<std::size_t> f;
    for (std::size_t v = 0; v <= m + 1; ++v) f.push_back(v <= j ? v : v - 1);
    return f;
  }

  bool degenerate(const std::vector<std::uint32_t>& x, std::size_t n) const {
    for (std::size_t j = 0; j < n; ++j)
      if (pullback(pullback(x, coface(n, j)), codegeneracy(n - 1, j)) == x) return true;
    return false;
  }

 private:
  const FiniteGroup& fb_;
};

}  // namespace

GradedPieces homology_K2(const Group& b, int n) {
  if (n < 0 || n > 6) throw InputError("homology_K2 covers degrees 0..6");
  return pieces_on_line(b, n);
}

GradedPieces filtration_pieces(const Group& b, int n) {
  if (n < 0 || n > 7) throw InputError("filtration pieces cover degrees 0..7");
  return pieces_on_line(b, n);
}

Group homology_K1_free(const Group& b, int n) {
  if (!b.invariant_factors().empty()) throw NotFree("group has torsion: " + b.describe());
  const std::size_t r = b.free_rank();
  enforce_guard(r, 6, "rank for exterior powers");
  if (n < 0) throw InputError("negative degree");
  enforce_guard(static_cast<std::uint64_t>(n), 6, "exterior degree");
  const std::size_t k = static_cast<std::size_t>(n);
  if (k > r) return Group::trivial();
  std::size_t c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * (r - i) / (i + 1);
  return Group::free(c);
}

ChainOfFree double_bar_complex(const Group& b, int top) {
  if (top < 0) throw InputError("negative degree");
  FiniteGroup fb(b);
  std::uint64_t total = 0;
  for (int n = 0; n <= top; ++n) total += outer_rank(fb.size() - 1, n);
  enforce_guard(total, 50000, "bar construction chain rank");
  DoubleBar bar(fb);
  std::vector<std::vector<Outer>> bases;
  ChainOfFree c;
  for (int n = 0; n <= top; ++n) {
    bases.push_back(bar.basis(n));
    c.ranks.push_back(bases.back().size());
  }
  c.d.resize(static_cast<std::size_t>(top) + 1);
  std::function<Combo<Outer>(const Outer&)> d = [&](const Outer& x) { return bar.outer_d(x); };
  for (int n = 1; n <= top; ++n)
    c.d[static_cast<std::size_t>(n)] =
        boundary_matrix(bases[static_cast<std::size_t>(n)], bases[static_cast<std::size_t>(n) - 1], d);
  return c;
}

Group bar_homology_oracle(const Group& b, int n) {
  if (n < 0) throw InputError("negative degree");
  if (!b.is_finite()) throw InputError("the bar oracle needs a finite group");
  enforce_guard(static_cast<std::uint64_t>(b.order().get_ui()), 3, "bar oracle group order");
  enforce_guard(static_cast<std::uint64_t>(n), 5, "bar oracle degree");
  return double_bar_complex(b, n + 1).homology(static_cast<std::size_t>(n)).group;
}

ChainOfFree simplicial_k2_complex(const Group& b, int top) {
  if (top < 0) throw InputError("negative degree");
  FiniteGroup fb(b);
  const std::size_t t = static_cast<std::size_t>(top);
  double count = 1;
  for (std::size_t i = 0; t >= 2 && i < t * (t - 1) / 2; ++i) count *= static_cast<double>(fb.size());
  enforce_guard(count > 1e12 ? std::uint64_t(1e12) : static_cast<std::uint64_t>(count), 1u << 16,
                "simplices of K(B,2)");
  CocycleModel model(fb);

  // Nondegenerate simplices per level, keyed by their coordinates.
  std::vector<std::map<std::vector<std::uint32_t>, std::size_t>> nd(t + 1);
  for (std::size_t n = 0; n <= t; ++n) {
    const std::size_t len = n < 2 ? 0 : n * (n - 1) / 2;
    std::vector<std::uint32_t> x(len, 0);
    for (;;) {
      if (n == 0 || !model.degenerate(x, n)) nd[n].emplace(x, nd[n].size());
      std::size_t pos = len;
      while (pos > 0) {
        if (++x[pos - 1] < fb.size()) break;
        x[--pos] = 0;
      }
      if (pos == 0) break;
    }
  }
  ChainOfFree c;
  for (std::size_t n = 0; n <= t; ++n) c.ranks.push_back(nd[n].size());
  c.d.resize(t + 1);
  for (std::size_t n = 1; n <= t; ++n) {
    IntMatrix m(c.ranks[n - 1], c.ranks[n]);
    for (const auto& [x, j] : nd[n])
      for (std::size_t i = 0; i <= n; ++i) {
        auto it = nd[n - 1].find(model.pullback(x, CocycleModel::coface(n, i)));
        if (it == nd[n - 1].end()) continue;
        m(it->second, j) += (i % 2 == 0) ? 1 : -1;
      }
    c.d[n] = std::move(m);
  }
  return c;
}

}  // namespace gammalab
