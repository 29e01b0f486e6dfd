#pragma once

// Biextension and Σ equations, generic over the value type (AVal or Lin).

#include <cstdint>

#include "gammalab/abgroup.hpp"
#include "gammalab/torsors.hpp"

namespace gammalab::detail {

using u32 = std::uint32_t;

template <class V, class F, class G, class Emit>
void biextension_equations(const FiniteGroup& fb, const F& f, const G& g, bool weak, Emit&& emit) {
  const u32 n = static_cast<u32>(fb.size());
  auto add = [&](u32 a, u32 b) { return fb.add(a, b); };
  for (u32 x = 0; x < n; ++x)
    for (u32 x2 = 0; x2 < n; ++x2)
      for (u32 y = 0; y < n; ++y) {
        for (u32 w = 0; w < n; ++w) {
          emit("first_associativity", {x, x2, w, y},
               f(x, x2, y) + f(add(x, x2), w, y) - f(x2, w, y) - f(x, add(x2, w), y));
          emit("second_associativity", {x, x2, y, w},
               g(x, x2, y) + g(x, add(x2, y), w) - g(x, y, w) - g(x, x2, add(y, w)));
          emit("interchange", {x, x2, y, w},
               f(x, x2, y) + f(x, x2, w) + g(add(x, x2), y, w) - g(x, y, w) - g(x2, y, w) - f(x, x2, add(y, w)));
        }
        if (!weak) {
          emit("first_commutativity", {x, x2, y}, f(x, x2, y) - f(x2, x, y));
          emit("second_commutativity", {x, x2, y}, g(x, x2, y) - g(x, y, x2));
        }
      }
}

// Second difference Θt(a,b,c) of a function on B.
template <class V, class T>
V theta_of(const FiniteGroup& fb, const T& t, u32 a, u32 b, u32 c) {
  auto add = [&](u32 p, u32 q) { return fb.add(p, q); };
  return t(add(add(a, b), c)) - t(add(a, b)) - t(add(a, c)) - t(add(b, c)) + t(a) + t(b) + t(c);
}

// Cube conditions on f (with g(x;y,y') = f(y,y';x)) and the λ equations.
template <class V, class F, class L, class Emit>
void sigma_equations(const FiniteGroup& fb, const F& f, const L& lam, SigmaConvention conv, Emit&& emit) {
  const u32 n = static_cast<u32>(fb.size());
  auto g = [&](u32 x, u32 y, u32 y2) { return f(y, y2, x); };
  biextension_equations<V>(fb, f, g, false, emit);
  for (u32 x = 0; x < n; ++x)
    for (u32 y = 0; y < n; ++y)
      for (u32 z = 0; z < n; ++z) emit("cube_symmetry", {x, y, z}, f(x, y, z) - f(x, z, y));
  for (u32 x = 0; x < n; ++x) {
    if (conv == SigmaConvention::Theta)
      emit("sigma_parity", {x}, lam(x) + lam(fb.neg(x)));
    else
      emit("sigma_parity", {x}, lam(fb.neg(x)) - lam(x));
  }
  for (u32 x = 0; x < n; ++x)
    for (u32 y = 0; y < n; ++y) {
      if (conv == SigmaConvention::Theta) {
        for (u32 z = 0; z < n; ++z)
          emit("sigma_compatibility", {x, y, z},
               f(fb.neg(x), fb.neg(y), fb.neg(z)) - f(x, y, z) - theta_of<V>(fb, lam, x, y, z));
      } else {
        emit("sigma_compatibility", {x, y},
             lam(fb.add(x, y)) - lam(x) - lam(y) + f(x, fb.neg(x), y) + f(y, fb.neg(y), fb.neg(x)));
      }
    }
}

}  // namespace gammalab::detail
