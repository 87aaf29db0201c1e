#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tanaka/errors.hpp"
#include "tanaka/poly.hpp"

namespace tanaka {

// A polynomial vector field sum_a X^a d/dx_a on an affine chart.
struct PolyVectorField {
  int n_vars = 0;
  std::vector<Polynomial> components;

  static PolyVectorField zero(int n_vars) {
    std::vector<Polynomial> comps;
    for (int i = 0; i < n_vars; ++i) comps.emplace_back(n_vars);
    return {n_vars, std::move(comps)};
  }

  static PolyVectorField coordinate(int n_vars, int index) {
    PolyVectorField f = zero(n_vars);
    f.components[static_cast<std::size_t>(index)] = Polynomial::constant(n_vars, 1);
    return f;
  }

  bool operator==(const PolyVectorField& o) const {
    return n_vars == o.n_vars && components == o.components;
  }
};

inline Vec evaluate_at(const PolyVectorField& f, const Vec& point) {
  Vec v(static_cast<std::size_t>(f.n_vars));
  for (int a = 0; a < f.n_vars; ++a)
    v[static_cast<std::size_t>(a)] = f.components[static_cast<std::size_t>(a)].evaluate(point);
  return v;
}

// X acting on a function as a derivation: X(h) = sum_b X^b d_b h.
inline Polynomial apply_to_function(const PolyVectorField& x, const Polynomial& h) {
  if (h.n_vars() != x.n_vars)
    throw ValidationError("DimensionMismatch", "vector field and function live on different charts");
  Polynomial out(x.n_vars);
  for (int b = 0; b < x.n_vars; ++b)
    out += x.components[static_cast<std::size_t>(b)] * h.derivative(b);
  return out;
}

// [X,Y]^a = sum_b (X^b d_b Y^a - Y^b d_b X^a), exact polynomial arithmetic.
inline PolyVectorField lie_bracket_vf(const PolyVectorField& x, const PolyVectorField& y) {
  if (x.n_vars != y.n_vars)
    throw ValidationError("DimensionMismatch",
                          "vector fields on different charts: " + std::to_string(x.n_vars) +
                              " vs " + std::to_string(y.n_vars) + " variables");
  PolyVectorField out = PolyVectorField::zero(x.n_vars);
  for (int a = 0; a < x.n_vars; ++a) {
    Polynomial comp(x.n_vars);
    for (int b = 0; b < x.n_vars; ++b) {
      comp += x.components[static_cast<std::size_t>(b)] *
              y.components[static_cast<std::size_t>(a)].derivative(b);
      comp -= y.components[static_cast<std::size_t>(b)] *
              x.components[static_cast<std::size_t>(a)].derivative(b);
    }
    out.components[static_cast<std::size_t>(a)] = std::move(comp);
  }
  return out;
}

}  // namespace tanaka
