#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tanaka/distribution.hpp"
#include "tanaka/lie.hpp"
#include "tanaka/pseudo.hpp"

namespace tanaka::fixtures {

// --- graded Lie algebras ------------------------------------------------

// dims {-2:1, -1:2}, [x,y] = z
inline GradedLieAlgebra heisenberg() {
  const GradedVectorSpace sp = GradedVectorSpace::from_map({{-2, 1}, {-1, 2}});
  std::vector<BracketEntry> entries{{{-1, 0}, {-1, 1}, {{{-2, 0}, 1}}}};
  return make_gla(sp, entries, {"z", "x", "y"});
}

inline GradedLieAlgebra abelian(int n) {
  return make_gla(GradedVectorSpace::from_map({{-1, n}}), {});
}

namespace detail {

// gl(dim) acting standardly on an abelian g^{-1} = Q^dim
inline void append_gl_action(std::vector<BracketEntry>& entries, int dim) {
  auto E = [&](int i, int j) { return BasisIndex{0, i * dim + j}; };
  // [E_ij, e_k] = delta_jk e_i
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      entries.push_back({E(i, j), {-1, j}, {{{-1, i}, 1}}});
  // [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l) {
          const int a = i * dim + j, b = k * dim + l;
          if (a >= b) continue;
          std::vector<std::pair<BasisIndex, Rational>> result;
          if (j == k) result.push_back({E(i, l), 1});
          if (l == i) result.push_back({E(k, j), -1});
          if (!result.empty()) entries.push_back({{0, a}, {0, b}, std::move(result)});
        }
}

}  // namespace detail

// abelian Q^2 with g^0 = gl(2)
inline GradedLieAlgebra gl2_symbol() {
  const GradedVectorSpace sp = GradedVectorSpace::from_map({{-1, 2}, {0, 4}});
  std::vector<BracketEntry> entries;
  detail::append_gl_action(entries, 2);
  return make_gla(sp, entries, {"e1", "e2", "E11", "E12", "E21", "E22"});
}

// abelian Q^3 with g^0 = so(3)
inline GradedLieAlgebra so3_symbol() {
  const GradedVectorSpace sp = GradedVectorSpace::from_map({{-1, 3}, {0, 3}});
  std::vector<BracketEntry> entries;
  // [L_a, e_b] = sum_c eps_{abc} e_c
  const int eps[3][3][3] = {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
                            {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                            {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      std::vector<std::pair<BasisIndex, Rational>> result;
      for (int c = 0; c < 3; ++c)
        if (eps[a][b][c] != 0) result.push_back({{-1, c}, eps[a][b][c]});
      if (!result.empty()) entries.push_back({{0, a}, {-1, b}, std::move(result)});
    }
  // [L_a, L_b] = sum_c eps_{abc} L_c
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      std::vector<std::pair<BasisIndex, Rational>> result;
      for (int c = 0; c < 3; ++c)
        if (eps[a][b][c] != 0) result.push_back({{0, c}, eps[a][b][c]});
      entries.push_back({{0, a}, {0, b}, std::move(result)});
    }
  return make_gla(sp, entries, {"e1", "e2", "e3", "L1", "L2", "L3"});
}

// abelian Q^3 with g^0 = co(3) = so(3) + Q·Id
inline GradedLieAlgebra co3_symbol() {
  const GradedVectorSpace sp = GradedVectorSpace::from_map({{-1, 3}, {0, 4}});
  std::vector<BracketEntry> entries;
  const int eps[3][3][3] = {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
                            {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                            {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      std::vector<std::pair<BasisIndex, Rational>> result;
      for (int c = 0; c < 3; ++c)
        if (eps[a][b][c] != 0) result.push_back({{-1, c}, eps[a][b][c]});
      if (!result.empty()) entries.push_back({{0, a}, {-1, b}, std::move(result)});
    }
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      std::vector<std::pair<BasisIndex, Rational>> result;
      for (int c = 0; c < 3; ++c)
        if (eps[a][b][c] != 0) result.push_back({{0, c}, eps[a][b][c]});
      entries.push_back({{0, a}, {0, b}, std::move(result)});
    }
  for (int b = 0; b < 3; ++b) entries.push_back({{0, 3}, {-1, b}, {{{-1, b}, 1}}});
  return make_gla(sp, entries, {"e1", "e2", "e3", "L1", "L2", "L3", "Z"});
}

// Heisenberg with g^0 = gl(2) = csp(2): gl(2) standard on (x,y), z scaled by trace
inline GradedLieAlgebra heisenberg_gl2() {
  const GradedVectorSpace sp = GradedVectorSpace::from_map({{-2, 1}, {-1, 2}, {0, 4}});
  std::vector<BracketEntry> entries{{{-1, 0}, {-1, 1}, {{{-2, 0}, 1}}}};
  detail::append_gl_action(entries, 2);
  entries.push_back({{0, 0}, {-2, 0}, {{{-2, 0}, 1}}});  // [E11, z] = z
  entries.push_back({{0, 3}, {-2, 0}, {{{-2, 0}, 1}}});  // [E22, z] = z
  return make_gla(sp, entries, {"z", "x", "y", "E11", "E12", "E21", "E22"});
}

// --- pseudo-product symbols ----------------------------------------------

// Heisenberg with e = <x>, f = <y>: the symbol of a second-order ODE
inline PseudoProductSymbol ode2_pp() {
  return make_pp_symbol(heisenberg(), Subspace(2, {{Rational(1), Rational(0)}}),
                        Subspace(2, {{Rational(0), Rational(1)}}));
}

// abelian Q^2 split into two coordinate lines
inline PseudoProductSymbol split_abelian_pp() {
  return make_pp_symbol(abelian(2), Subspace(2, {{Rational(1), Rational(0)}}),
                        Subspace(2, {{Rational(0), Rational(1)}}));
}

// --- vector-field models ---------------------------------------------------

// dx, dy + x dz on Q^3 at the origin
inline DistributionModel contact_vf() {
  const int n = 3;
  PolyVectorField f1 = PolyVectorField::coordinate(n, 0);
  PolyVectorField f2 = PolyVectorField::coordinate(n, 1);
  f2.components[2] = Polynomial::variable(n, 0);
  return DistributionModel(n, {f1, f2}, zero_vec(3));
}

inline std::vector<std::string> contact_vf_var_names() { return {"x", "y", "z"}; }

// dx, dy + x dz + 1/2 x^2 dw on Q^4 at the origin
inline DistributionModel engel_vf() {
  const int n = 4;
  PolyVectorField f1 = PolyVectorField::coordinate(n, 0);
  PolyVectorField f2 = PolyVectorField::coordinate(n, 1);
  f2.components[2] = Polynomial::variable(n, 0);
  f2.components[3] = Rational(1, 2) * (Polynomial::variable(n, 0) * Polynomial::variable(n, 0));
  return DistributionModel(n, {f1, f2}, zero_vec(4));
}

inline std::vector<std::string> engel_vf_var_names() { return {"x", "y", "z", "w"}; }

// jet-space double fibration on (z, w, p): E = {dp}, F = {dz + p dw}
struct JetFibration {
  int n_vars = 3;
  std::vector<std::string> var_names{"z", "w", "p"};
  std::vector<PolyVectorField> e_fields;
  std::vector<PolyVectorField> f_fields;
  Vec base_point = zero_vec(3);
};

inline JetFibration jet_fibration() {
  JetFibration fx;
  fx.e_fields.push_back(PolyVectorField::coordinate(3, 2));
  PolyVectorField f = PolyVectorField::coordinate(3, 0);
  f.components[1] = Polynomial::variable(3, 2);
  fx.f_fields.push_back(f);
  return fx;
}

}  // namespace tanaka::fixtures
