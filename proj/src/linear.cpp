#include "gammalab/linear.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "gammalab/config.hpp"
#include "gammalab/errors.hpp"

namespace gammalab {

void LinearSystem::add(const Lin& e) {
  if (e.is_zero()) return;
  if (seen_.insert(e).second) equations.push_back(e);
}

IntMatrix LinearSystem::matrix() const {
  IntMatrix m(equations.size(), unknowns);
  for (std::size_t r = 0; r < equations.size(); ++r)
    for (const auto& [i, c] : equations[r].terms()) {
      if (i >= unknowns) throw Error("equation refers to an unknown out of range");
      m(r, i) = c;
    }
  return m;
}

// ---------------------------------------------------------------------------

SolutionSpace::SolutionSpace(const IntMatrix& m, const Group& a)
    : a_(a), n_(m.cols()), size_(1) {
  if (!a.is_finite()) throw InputError("solution spaces need a finite coefficient group");
  const SmithForm sf = smith(m);
  v_ = sf.V;
  for (const auto& d : a.invariant_factors()) moduli_.push_back(d);
  for (const auto& mod : moduli_)
    for (std::size_t i = 0; i < n_; ++i) {
      Int s = (i < sf.rank) ? Int(abs(sf.S(i, i))) : Int(0);
      Int g = gcd(s, mod);  // gcd(0, m) = m
      counts_.push_back(g);
      steps_.push_back(mod / g);
      size_ *= g;
    }
}

std::vector<IntVector> SolutionSpace::from_digits(const std::vector<Int>& digits) const {
  std::vector<IntVector> inv(n_, IntVector(moduli_.size()));
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    IntVector y(n_);
    for (std::size_t i = 0; i < n_; ++i) y[i] = steps_[j * n_ + i] * digits[j * n_ + i];
    for (std::size_t r = 0; r < n_; ++r) {
      Int s = 0;
      for (std::size_t i = 0; i < n_; ++i) s += v_(r, i) * y[i];
      inv[r][j] = mod_nonneg(s, moduli_[j]);
    }
  }
  std::vector<IntVector> out;
  out.reserve(n_);
  for (auto& t : inv) out.push_back(a_.reduce(a_.from_invariant(t)));
  return out;
}

std::vector<IntVector> SolutionSpace::at(Int index) const {
  if (index < 0 || index >= size_) throw InputError("solution index out of range");
  std::vector<Int> digits(counts_.size());
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    digits[k] = mod_nonneg(index, counts_[k]);
    index /= counts_[k];
  }
  return from_digits(digits);
}

std::vector<IntVector> SolutionSpace::random(std::mt19937_64& rng) const {
  std::vector<Int> digits(counts_.size());
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (!counts_[k].fits_ulong_p()) throw SizeGuard("coefficient group too large for sampling");
    std::uniform_int_distribution<unsigned long> pick(0, counts_[k].get_ui() - 1);
    digits[k] = Int(pick(rng));
  }
  return from_digits(digits);
}

Int kernel_size(const IntMatrix& m, const Group& a) { return SolutionSpace(m, a).size(); }

Int image_size(const IntMatrix& d, const Group& a) {
  if (!a.is_finite()) throw InputError("image sizes need a finite coefficient group");
  const IntVector diag = smith_diagonal(d);
  Int out = 1;
  for (const auto& mod : a.invariant_factors())
    for (const auto& s : diag)
      if (s != 0) out *= mod / gcd(s, mod);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Constraint {
  std::vector<std::pair<std::size_t, std::size_t>> terms;  // (unknown, coefficient slot)
};

class Searcher {
 public:
  Searcher(const LinearSystem& sys, const FiniteGroup& fa) : fa_(fa), n_(sys.unknowns) {
    firing_.resize(n_);
    std::map<long, std::size_t> slot_of;
    const long e = static_cast<long>(fa.group().is_trivial() ? 1 : fa.group().exponent().get_si());
    for (const auto& eq : sys.equations) {
      Constraint c;
      std::size_t last = 0;
      for (const auto& [i, coeff] : eq.terms()) {
        const long k = ((coeff % e) + e) % e;
        if (k == 0) continue;
        auto [it, fresh] = slot_of.emplace(k, scaled_.size());
        if (fresh) {
          std::vector<std::uint32_t> table(fa.size());
          for (std::uint32_t x = 0; x < fa.size(); ++x) table[x] = fa.mul(k, x);
          scaled_.push_back(std::move(table));
        }
        c.terms.emplace_back(i, it->second);
        last = std::max(last, i);
      }
      if (!c.terms.empty()) firing_[last].push_back(std::move(c));
    }
  }

  std::size_t unknowns() const { return n_; }

  // Extends a partial assignment of x[0..k) to all solutions.
  void run(std::vector<std::uint32_t>& x, std::size_t k, std::vector<std::vector<std::uint32_t>>& out,
           std::uint64_t limit) const {
    if (k == n_) {
      out.push_back(x);
      if (out.size() > limit) throw SizeGuard("too many solutions in table search");
      return;
    }
    for (std::uint32_t v = 0; v < fa_.size(); ++v) {
      x[k] = v;
      if (consistent(x, k)) run(x, k + 1, out, limit);
    }
  }

  bool consistent(const std::vector<std::uint32_t>& x, std::size_t k) const {
    for (const auto& c : firing_[k]) {
      std::uint32_t s = 0;
      for (const auto& [i, slot] : c.terms) s = fa_.add(s, scaled_[slot][x[i]]);
      if (s != 0) return false;
    }
    return true;
  }

 private:
  const FiniteGroup& fa_;
  std::size_t n_;
  std::vector<std::vector<Constraint>> firing_;
  std::vector<std::vector<std::uint32_t>> scaled_;
};

}  // namespace

std::vector<std::vector<std::uint32_t>> search_solutions(const LinearSystem& sys,
                                                         const FiniteGroup& fa,
                                                         std::uint64_t limit) {
  Searcher s(sys, fa);
  const std::size_t n = s.unknowns();
  if (n == 0) return {std::vector<std::uint32_t>{}};
  // Prefixes over the first one or two unknowns give the parallel work items.
  const std::size_t depth = (n >= 2 && fa.size() < 64) ? 2 : 1;
  std::vector<std::vector<std::uint32_t>> prefixes;
  std::vector<std::uint32_t> x(n, 0);
  for (std::uint32_t a = 0; a < fa.size(); ++a) {
    x[0] = a;
    if (!s.consistent(x, 0)) continue;
    if (depth == 1) {
      prefixes.push_back({a});
      continue;
    }
    for (std::uint32_t b = 0; b < fa.size(); ++b) {
      x[1] = b;
      if (s.consistent(x, 1)) prefixes.push_back({a, b});
    }
  }
  std::vector<std::vector<std::vector<std::uint32_t>>> parts(prefixes.size());
  parallel_for(prefixes.size(), [&](std::size_t p) {
    std::vector<std::uint32_t> y(n, 0);
    std::copy(prefixes[p].begin(), prefixes[p].end(), y.begin());
    s.run(y, prefixes[p].size(), parts[p], limit);
  });
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& part : parts) {
    if (out.size() + part.size() > limit) throw SizeGuard("too many solutions in table search");
    for (auto& v : part) out.push_back(std::move(v));
  }
  return out;
}

std::set<std::vector<std::uint32_t>> subgroup_closure(const std::vector<std::vector<std::uint32_t>>& gens,
                                                      std::size_t length, const FiniteGroup& fa,
                                                      std::uint64_t limit) {
  std::set<std::vector<std::uint32_t>> out;
  std::vector<std::vector<std::uint32_t>> frontier{std::vector<std::uint32_t>(length, 0)};
  out.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        std::vector<std::uint32_t> w(length);
        for (std::size_t k = 0; k < length; ++k) w[k] = fa.add(v[k], g[k]);
        if (out.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
    if (out.size() > limit) throw SizeGuard("subgroup closure exceeds the size bound");
  }
  return out;
}

}  // namespace gammalab
