#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tanaka/errors.hpp"
#include "tanaka/graded.hpp"
#include "tanaka/matrix.hpp"
#include "tanaka/rational.hpp"

namespace tanaka {

struct BracketEntry {
  BasisIndex left;
  BasisIndex right;
  std::vector<std::pair<BasisIndex, Rational>> result;
};

struct FundamentalReport {
  bool generated_by_minus_one = false;
  bool adjoint_injective_on_g0 = false;
  std::vector<std::string> violations;
  bool is_fundamental() const { return generated_by_minus_one && adjoint_injective_on_g0; }
};

inline std::string default_basis_name(int degree, int offset) {
  return "e[" + std::to_string(degree) + "]_" + std::to_string(offset);
}

// A graded Lie algebra presented by structure constants on an ordered basis.
// The table is stored for flat index pairs a < b and extended by antisymmetry.
// Construction (make_gla) verifies grading compatibility and the Jacobi
// identity on all basis triples, so a constructed value is always genuine.
class GradedLieAlgebra {
 public:
  const GradedVectorSpace& space() const { return space_; }
  int total_dim() const { return space_.total_dim(); }

  const std::string& name(int flat) const { return names_[static_cast<std::size_t>(flat)]; }
  const std::vector<std::string>& names() const { return names_; }

  Vec unit(int flat) const {
    return unit_vec(static_cast<std::size_t>(total_dim()), static_cast<std::size_t>(flat));
  }

  // Bracket of two basis elements, by flat index.
  Vec bracket_basis(int a, int b) const {
    if (a == b) return zero_vec(static_cast<std::size_t>(total_dim()));
    if (a < b) return table_[pair_index(a, b)];
    Vec v = table_[pair_index(b, a)];
    for (auto& x : v) x = -x;
    return v;
  }

  // Bilinear, antisymmetric extension to coordinate vectors.
  Vec bracket(const Vec& u, const Vec& v) const {
    const std::size_t n = static_cast<std::size_t>(total_dim());
    if (u.size() != n || v.size() != n)
      throw std::invalid_argument("bracket: coordinate vectors must span the full space");
    Vec out = zero_vec(n);
    for (std::size_t a = 0; a + 1 < n; ++a) {
      if (u[a] == 0 && v[a] == 0) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        const Rational c = u[a] * v[b] - u[b] * v[a];
        if (c == 0) continue;
        axpy(out, c, table_[pair_index(static_cast<int>(a), static_cast<int>(b))]);
      }
    }
    return out;
  }

  friend GradedLieAlgebra make_gla(const GradedVectorSpace& space,
                                   const std::vector<BracketEntry>& entries,
                                   std::vector<std::string> names);

 private:
  std::size_t pair_index(int a, int b) const {
    // position of (a, b), a < b, in lexicographic pair order
    const std::size_t n = static_cast<std::size_t>(total_dim());
    const std::size_t ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    return ua * n - ua * (ua + 1) / 2 + (ub - ua - 1);
  }

  GradedVectorSpace space_;
  std::vector<Vec> table_;
  std::vector<std::string> names_;
};

inline GradedLieAlgebra make_gla(const GradedVectorSpace& space,
                                 const std::vector<BracketEntry>& entries,
                                 std::vector<std::string> names = {}) {
  GradedLieAlgebra g;
  g.space_ = space;
  const int n = space.total_dim();
  if (names.empty()) {
    for (int d = space.min_degree(); d <= space.max_degree(); ++d)
      for (int o = 0; o < space.dim(d); ++o) names.push_back(default_basis_name(d, o));
  }
  if (static_cast<int>(names.size()) != n)
    throw std::invalid_argument("basis name count does not match total dimension");
  g.names_ = std::move(names);
  const std::size_t npairs =
      n > 1 ? static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 : 0;
  g.table_.assign(npairs, zero_vec(static_cast<std::size_t>(n)));

  for (const auto& e : entries) {
    const int a = space.flat_index(e.left.degree, e.left.offset);
    const int b = space.flat_index(e.right.degree, e.right.offset);
    if (a == b) {
      for (const auto& [idx, c] : e.result)
        if (c != 0)
          throw ValidationError("AntisymmetryViolation",
                                "[x, x] declared nonzero for basis element " + g.name(a));
      continue;
    }
    Vec value = zero_vec(static_cast<std::size_t>(n));
    for (const auto& [idx, c] : e.result)
      value[static_cast<std::size_t>(space.flat_index(idx.degree, idx.offset))] += c;
    const Rational sign = a < b ? 1 : -1;
    const int lo = a < b ? a : b, hi = a < b ? b : a;
    auto& slot = g.table_[g.pair_index(lo, hi)];
    for (int i = 0; i < n; ++i)
      slot[static_cast<std::size_t>(i)] += sign * value[static_cast<std::size_t>(i)];
  }

  // grading: [g^i, g^j] ⊂ g^{i+j}, zero when i+j leaves the window
  for (int a = 0; a < n; ++a) {
    const auto [da, oa] = space.degree_of(a);
    for (int b = a + 1; b < n; ++b) {
      const auto [db, ob] = space.degree_of(b);
      const Vec val = g.bracket_basis(a, b);
      const int target = da + db;
      for (int t = 0; t < n; ++t) {
        if (val[static_cast<std::size_t>(t)] == 0) continue;
        const auto [dt, ot] = space.degree_of(t);
        if (dt != target)
          throw grading_violation(da, db,
                                  "[" + g.name(a) + ", " + g.name(b) + "] has a component on " +
                                      g.name(t) + " (degree " + std::to_string(dt) +
                                      ", expected degree " + std::to_string(target) + ")");
      }
    }
  }

  // Jacobi on all distinct basis triples (repeated entries hold by antisymmetry)
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Vec residual = g.bracket(g.bracket_basis(a, b), g.unit(c));
        const Vec t2 = g.bracket(g.bracket_basis(b, c), g.unit(a));
        const Vec t3 = g.bracket(g.bracket_basis(c, a), g.unit(b));
        for (std::size_t i = 0; i < residual.size(); ++i) residual[i] += t2[i] + t3[i];
        if (!is_zero_vec(residual)) {
          std::string res;
          for (const auto& x : residual) res += (res.empty() ? "" : ",") + to_string(x);
          throw jacobi_violation(g.name(a) + ", " + g.name(b) + ", " + g.name(c), "(" + res + ")");
        }
      }
  return g;
}

// Fundamental = g^- generated by g^{-1} and the adjoint representation
// g^0 -> End(g^-) injective. Requires degrees in [-k, 0].
inline FundamentalReport is_fundamental(const GradedLieAlgebra& g) {
  const auto& sp = g.space();
  if (sp.max_degree() > 0)
    throw ValidationError("DegreeWindowError",
                          "is_fundamental expects degrees in [-k, 0], found max degree " +
                              std::to_string(sp.max_degree()));
  FundamentalReport rep;

  // V_{-1} = g^{-1}; V_{i-1} = [g^{-1}, V_i]; each V_i must span g^i.
  rep.generated_by_minus_one = true;
  std::vector<Vec> current;
  for (int o = 0; o < sp.dim(-1); ++o) current.push_back(g.unit(sp.flat_index(-1, o)));
  for (int i = -2; i >= sp.min_degree(); --i) {
    std::vector<Vec> next;
    for (int o = 0; o < sp.dim(-1); ++o) {
      const Vec u = g.unit(sp.flat_index(-1, o));
      for (const auto& v : current) next.push_back(g.bracket(u, v));
    }
    std::vector<Vec> block;
    for (const auto& w : next) {
      Vec proj(static_cast<std::size_t>(sp.dim(i)));
      for (int o = 0; o < sp.dim(i); ++o)
        proj[static_cast<std::size_t>(o)] = w[static_cast<std::size_t>(sp.flat_index(i, o))];
      block.push_back(std::move(proj));
    }
    const std::size_t got = rank_of_rows(block, static_cast<std::size_t>(sp.dim(i)));
    if (got != static_cast<std::size_t>(sp.dim(i))) {
      rep.generated_by_minus_one = false;
      rep.violations.push_back("iterated brackets of g^-1 span only " + std::to_string(got) +
                               " of " + std::to_string(sp.dim(i)) + " dimensions of g^" +
                               std::to_string(i));
    }
    current = std::move(next);
  }

  const int d0 = sp.max_degree() == 0 ? sp.dim(0) : 0;
  if (d0 == 0) {
    rep.adjoint_injective_on_g0 = true;  // vacuous for g^0 = 0
  } else {
    int minus_dim = 0;
    for (int i = sp.min_degree(); i <= -1; ++i) minus_dim += sp.dim(i);
    Matrix ad(static_cast<std::size_t>(minus_dim) * static_cast<std::size_t>(minus_dim),
              static_cast<std::size_t>(d0));
    for (int o = 0; o < d0; ++o) {
      const Vec w = g.unit(sp.flat_index(0, o));
      std::size_t row = 0;
      for (int i = sp.min_degree(); i <= -1; ++i)
        for (int t = 0; t < sp.dim(i); ++t) {
          const Vec img = g.bracket(w, g.unit(sp.flat_index(i, t)));
          for (int j = sp.min_degree(); j <= -1; ++j)
            for (int s = 0; s < sp.dim(j); ++s) {
              ad(row, static_cast<std::size_t>(o)) =
                  img[static_cast<std::size_t>(sp.flat_index(j, s))];
              ++row;
            }
        }
    }
    const Subspace ker = kernel_basis(ad);
    rep.adjoint_injective_on_g0 = ker.dim() == 0;
    if (ker.dim() != 0) {
      std::string witness;
      for (const auto& c : ker.basis()[0]) witness += (witness.empty() ? "" : ",") + to_string(c);
      rep.violations.push_back("g^0 element (" + witness + ") acts by zero on g^-");
    }
  }
  return rep;
}

}  // namespace tanaka
