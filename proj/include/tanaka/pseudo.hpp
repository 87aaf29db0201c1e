#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tanaka/errors.hpp"
#include "tanaka/lie.hpp"
#include "tanaka/matrix.hpp"
#include "tanaka/prolong.hpp"

namespace tanaka {

// A nilpotent symbol g^- (degrees [-k, -1]) with two marked abelian
// subspaces e, f splitting the degree -1 layer.
class PseudoProductSymbol {
 public:
  PseudoProductSymbol(GradedLieAlgebra minus, Subspace e, Subspace f)
      : minus_(std::move(minus)), e_(std::move(e)), f_(std::move(f)) {}

  const GradedLieAlgebra& minus() const { return minus_; }
  const Subspace& e() const { return e_; }
  const Subspace& f() const { return f_; }

 private:
  GradedLieAlgebra minus_;
  Subspace e_;
  Subspace f_;
};

namespace detail {

// bracket of two degree -1 coordinate vectors, as a full-space vector
inline Vec bracket_minus1(const GradedLieAlgebra& g, const Vec& u, const Vec& v) {
  const auto& sp = g.space();
  Vec fu = zero_vec(static_cast<std::size_t>(g.total_dim())), fv = fu;
  for (int s = 0; s < sp.dim(-1); ++s) {
    fu[static_cast<std::size_t>(sp.flat_index(-1, s))] = u[static_cast<std::size_t>(s)];
    fv[static_cast<std::size_t>(sp.flat_index(-1, s))] = v[static_cast<std::size_t>(s)];
  }
  return g.bracket(fu, fv);
}

}  // namespace detail

// Validates the defining conditions: e ⊕ f = g^{-1} and both subspaces
// abelian. Throws NotDirectSum / NotAbelian with a witness pair.
inline PseudoProductSymbol make_pp_symbol(const GradedLieAlgebra& minus, const Subspace& e,
                                          const Subspace& f) {
  const auto& sp = minus.space();
  if (sp.max_degree() != -1)
    throw ValidationError("DegreeWindowError",
                          "a pseudo-product symbol needs max degree -1, got " +
                              std::to_string(sp.max_degree()));
  const std::size_t d1 = static_cast<std::size_t>(sp.dim(-1));
  if (e.ambient_dim() != d1 || f.ambient_dim() != d1)
    throw ValidationError("NotDirectSum", "e and f must live in the degree -1 layer");
  if (e.dim() == 0 || f.dim() == 0)
    throw ValidationError("NotDirectSum", "e and f must have positive rank");
  std::vector<Vec> stacked = e.basis();
  for (const auto& v : f.basis()) stacked.push_back(v);
  if (e.dim() + f.dim() != d1 || rank_of_rows(stacked, d1) != d1)
    throw ValidationError("NotDirectSum",
                          "e and f do not split g^{-1}: dim e = " + std::to_string(e.dim()) +
                              ", dim f = " + std::to_string(f.dim()) + ", dim g^{-1} = " +
                              std::to_string(d1));
  auto check_abelian = [&](const Subspace& s, const char* which) {
    for (std::size_t a = 0; a < s.dim(); ++a)
      for (std::size_t b = a + 1; b < s.dim(); ++b)
        if (!is_zero_vec(detail::bracket_minus1(minus, s.basis()[a], s.basis()[b])))
          throw ValidationError("NotAbelian", std::string(which) + " is not abelian: witness pair (" +
                                                  which + "[" + std::to_string(a) + "], " + which +
                                                  "[" + std::to_string(b) + "])");
  };
  check_abelian(e, "e");
  check_abelian(f, "f");
  return PseudoProductSymbol(minus, e, f);
}

// Degree-0 endomorphism coordinates: one square block per negative degree,
// blocks in degree order, each row-major.
struct End0Layout {
  std::vector<int> degrees;
  std::vector<int> dims;
  std::vector<std::size_t> offsets;
  std::size_t total = 0;

  static End0Layout of(const GradedVectorSpace& sp) {
    End0Layout lo;
    for (int d = sp.min_degree(); d <= -1; ++d) {
      lo.degrees.push_back(d);
      lo.dims.push_back(sp.dim(d));
      lo.offsets.push_back(lo.total);
      lo.total += static_cast<std::size_t>(sp.dim(d)) * static_cast<std::size_t>(sp.dim(d));
    }
    return lo;
  }

  std::size_t index(int degree, int dst, int src) const {
    for (std::size_t i = 0; i < degrees.size(); ++i)
      if (degrees[i] == degree)
        return offsets[i] + static_cast<std::size_t>(dst) * static_cast<std::size_t>(dims[i]) +
               static_cast<std::size_t>(src);
    throw std::out_of_range("degree outside End0 layout");
  }
};

namespace detail {

// rows demanding h([u,v]) = [h(u),v] + [u,h(v)] on all basis pairs, for
// grading-preserving h given in End0 coordinates
inline Matrix derivation_rows(const GradedLieAlgebra& g, const End0Layout& lo) {
  const auto& sp = g.space();
  std::vector<Vec> rows;
  for (int p = sp.min_degree(); p <= -1; ++p)
    for (int up = 0; up < sp.dim(p); ++up)
      for (int q = p; q <= -1; ++q)
        for (int vq = (q == p ? up + 1 : 0); vq < sp.dim(q); ++vq) {
          const int r = p + q;
          if (r < sp.min_degree()) continue;
          const Vec w = g.bracket(g.unit(sp.flat_index(p, up)), g.unit(sp.flat_index(q, vq)));
          for (int c = 0; c < sp.dim(r); ++c) {
            Vec row = zero_vec(lo.total);
            // h([u,v]) component c: sum_s h[r](c, s) w_s
            for (int s = 0; s < sp.dim(r); ++s) {
              const Rational ws = w[static_cast<std::size_t>(sp.flat_index(r, s))];
              if (ws != 0) row[lo.index(r, c, s)] += ws;
            }
            // -[h(u), v] component c: h(u) = sum_t h[p](t, up) e_t
            for (int t = 0; t < sp.dim(p); ++t) {
              const Vec bt = g.bracket(g.unit(sp.flat_index(p, t)), g.unit(sp.flat_index(q, vq)));
              const Rational coef = bt[static_cast<std::size_t>(sp.flat_index(r, c))];
              if (coef != 0) row[lo.index(p, t, up)] -= coef;
            }
            // -[u, h(v)] component c
            for (int t = 0; t < sp.dim(q); ++t) {
              const Vec bt = g.bracket(g.unit(sp.flat_index(p, up)), g.unit(sp.flat_index(q, t)));
              const Rational coef = bt[static_cast<std::size_t>(sp.flat_index(r, c))];
              if (coef != 0) row[lo.index(q, t, vq)] -= coef;
            }
            rows.push_back(std::move(row));
          }
        }
  return Matrix::from_rows(rows, lo.total);
}

// rows demanding h(S) ⊂ S for the degree -1 block of h
inline void subspace_preservation_rows(const GradedVectorSpace& sp, const End0Layout& lo,
                                       const Subspace& s, std::vector<Vec>& rows) {
  const auto ann = annihilator_rows(s);
  for (const auto& w : s.basis())
    for (const auto& lam : ann) {
      // lam^T h(w) = sum_{c,s'} lam_c h[-1](c, s') w_{s'}
      Vec row = zero_vec(lo.total);
      for (int c = 0; c < sp.dim(-1); ++c) {
        if (lam[static_cast<std::size_t>(c)] == 0) continue;
        for (int s2 = 0; s2 < sp.dim(-1); ++s2)
          if (w[static_cast<std::size_t>(s2)] != 0)
            row[lo.index(-1, c, s2)] += lam[static_cast<std::size_t>(c)] * w[static_cast<std::size_t>(s2)];
      }
      rows.push_back(std::move(row));
    }
}

}  // namespace detail

// All grading-preserving derivations of g^- (no e/f constraint), in End0
// coordinates. This is the largest admissible g^0.
inline Subspace grading_derivations(const GradedLieAlgebra& minus) {
  const End0Layout lo = End0Layout::of(minus.space());
  return kernel_basis(detail::derivation_rows(minus, lo));
}

// g^0 of a pseudo-product symbol: grading-preserving derivations h of g^-
// with h(e) ⊂ e and h(f) ⊂ f, as a subspace of End0 coordinates.
inline Subspace compute_g0_pp(const PseudoProductSymbol& s) {
  const auto& sp = s.minus().space();
  const End0Layout lo = End0Layout::of(sp);
  const Matrix der = detail::derivation_rows(s.minus(), lo);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < der.rows(); ++i) rows.push_back(der.row(i));
  detail::subspace_preservation_rows(sp, lo, s.e(), rows);
  detail::subspace_preservation_rows(sp, lo, s.f(), rows);
  return kernel_basis(Matrix::from_rows(rows, lo.total));
}

// Dimension of the space cut out by gradation- and e/f-preservation alone
// (no derivation identity); reported as a diagnostic.
inline std::size_t g0_dim_without_derivation(const PseudoProductSymbol& s) {
  const auto& sp = s.minus().space();
  const End0Layout lo = End0Layout::of(sp);
  std::vector<Vec> rows;
  detail::subspace_preservation_rows(sp, lo, s.e(), rows);
  detail::subspace_preservation_rows(sp, lo, s.f(), rows);
  if (rows.empty()) return lo.total;
  return kernel_basis(Matrix::from_rows(rows, lo.total)).dim();
}

struct LeviVerdict {
  bool nondegenerate = false;
  std::size_t ch_dim = 0;
  std::optional<Vec> witness;  // a kernel vector in g^{-1} coordinates when degenerate
};

// Cauchy characteristic at symbol level: Ch = { u in g^{-1} : [u, g^{-1}] = 0 },
// the kernel of the Levi map g^{-1} -> Hom(g^{-1}, g^{-2}).
inline Subspace cauchy_characteristic(const GradedLieAlgebra& minus) {
  const auto& sp = minus.space();
  const int d1 = sp.dim(-1);
  const int d2 = sp.dim(-2);
  Matrix M(static_cast<std::size_t>(d1) * static_cast<std::size_t>(d2),
           static_cast<std::size_t>(d1));
  for (int u = 0; u < d1; ++u)
    for (int v = 0; v < d1; ++v) {
      const Vec w = minus.bracket(minus.unit(sp.flat_index(-1, u)), minus.unit(sp.flat_index(-1, v)));
      for (int c = 0; c < d2; ++c)
        M(static_cast<std::size_t>(v) * static_cast<std::size_t>(d2) + static_cast<std::size_t>(c),
          static_cast<std::size_t>(u)) = w[static_cast<std::size_t>(sp.flat_index(-2, c))];
    }
  return kernel_basis(M);
}

inline LeviVerdict levi_nondegenerate(const GradedLieAlgebra& minus) {
  const Subspace ker = cauchy_characteristic(minus);
  LeviVerdict out;
  out.ch_dim = ker.dim();
  out.nondegenerate = ker.dim() == 0;
  if (!out.nondegenerate) out.witness = ker.basis()[0];
  return out;
}

// Ch = (Ch ∩ e) + (Ch ∩ f): a theorem for pseudo-product symbols, checked
// exactly as a subspace identity.
inline bool ch_decomposition_check(const PseudoProductSymbol& s) {
  const Subspace ch = cauchy_characteristic(s.minus());
  const Subspace lhs = subspace_sum(subspace_intersection(ch, s.e()),
                                    subspace_intersection(ch, s.f()));
  return subspace_equal(ch, lhs);
}

// Assembles g^- ⊕ g^0 as a graded Lie algebra, with g^0 = compute_g0_pp(s)
// acting by evaluation. Structure constants of [g^0, g^0] are the commutators
// expressed in the chosen basis of g^0.
inline GradedLieAlgebra assemble_with_g0(const GradedLieAlgebra& minus, const Subspace& g0,
                                         const End0Layout& lo) {
  const auto& sp = minus.space();
  std::map<int, int> dims;
  for (int d = sp.min_degree(); d <= -1; ++d) dims[d] = sp.dim(d);
  dims[0] = static_cast<int>(g0.dim());
  const GradedVectorSpace space = GradedVectorSpace::from_map(dims);

  std::vector<BracketEntry> entries;
  // negative part: copy the structure constants of g^-
  for (int p = sp.min_degree(); p <= -1; ++p)
    for (int up = 0; up < sp.dim(p); ++up)
      for (int q = p; q <= -1; ++q)
        for (int vq = (q == p ? up + 1 : 0); vq < sp.dim(q); ++vq) {
          const Vec w = minus.bracket(minus.unit(sp.flat_index(p, up)), minus.unit(sp.flat_index(q, vq)));
          BracketEntry e{{p, up}, {q, vq}, {}};
          for (int r = sp.min_degree(); r <= -1; ++r)
            for (int c = 0; c < sp.dim(r); ++c) {
              const Rational x = w[static_cast<std::size_t>(sp.flat_index(r, c))];
              if (x != 0) e.result.push_back({{r, c}, x});
            }
          if (!e.result.empty()) entries.push_back(std::move(e));
        }
  // [h, u] = h(u) for h in g^0, u in g^-
  for (std::size_t a = 0; a < g0.dim(); ++a) {
    const Vec& h = g0.basis()[a];
    for (int p = sp.min_degree(); p <= -1; ++p)
      for (int up = 0; up < sp.dim(p); ++up) {
        BracketEntry e{{0, static_cast<int>(a)}, {p, up}, {}};
        for (int c = 0; c < sp.dim(p); ++c) {
          const Rational x = h[lo.index(p, c, up)];
          if (x != 0) e.result.push_back({{p, c}, x});
        }
        if (!e.result.empty()) entries.push_back(std::move(e));
      }
  }
  // [h, h']: commutator of the endomorphisms, expressed in the g^0 basis
  for (std::size_t a = 0; a < g0.dim(); ++a)
    for (std::size_t b = a + 1; b < g0.dim(); ++b) {
      const Vec& h1 = g0.basis()[a];
      const Vec& h2 = g0.basis()[b];
      Vec comm = zero_vec(lo.total);
      for (std::size_t di = 0; di < lo.degrees.size(); ++di) {
        const int d = lo.degrees[di];
        const int nd = lo.dims[di];
        for (int r = 0; r < nd; ++r)
          for (int c = 0; c < nd; ++c) {
            Rational x = 0;
            for (int t = 0; t < nd; ++t)
              x += h1[lo.index(d, r, t)] * h2[lo.index(d, t, c)] -
                   h2[lo.index(d, r, t)] * h1[lo.index(d, t, c)];
            comm[lo.index(d, r, c)] = x;
          }
      }
      const auto coords = solve_coordinates(g0.basis(), comm);
      if (!coords)
        throw ValidationError("NotClosed", "g^0 is not closed under commutator");
      BracketEntry e{{0, static_cast<int>(a)}, {0, static_cast<int>(b)}, {}};
      for (std::size_t t = 0; t < coords->size(); ++t)
        if ((*coords)[t] != 0) e.result.push_back({{0, static_cast<int>(t)}, (*coords)[t]});
      if (!e.result.empty()) entries.push_back(std::move(e));
    }

  std::vector<std::string> names;
  for (int d = sp.min_degree(); d <= -1; ++d)
    for (int o = 0; o < sp.dim(d); ++o) names.push_back(minus.name(sp.flat_index(d, o)));
  for (std::size_t a = 0; a < g0.dim(); ++a) names.push_back("h_" + std::to_string(a));
  return make_gla(space, entries, names);
}

struct PPReport {
  std::size_t g0_dim = 0;
  std::size_t g0_dim_without_derivation = 0;
  FundamentalReport fundamental;
  bool levi_nondegenerate = false;
  std::size_t ch_dim = 0;
  bool ch_decomposition_ok = false;
  ProlongationResult prolongation;
  bool height_finite = false;
  int height = 0;  // valid when finite
};

// Full pseudo-product analysis: g^0, Levi verdict, prolongation, height.
inline PPReport analyze_pp(const PseudoProductSymbol& s, int cap) {
  const End0Layout lo = End0Layout::of(s.minus().space());
  const Subspace g0 = compute_g0_pp(s);
  const GradedLieAlgebra full = assemble_with_g0(s.minus(), g0, lo);
  ProlongationResult pr = universal_prolongation(full, cap);
  PPReport rep{g0.dim(),
               g0_dim_without_derivation(s),
               is_fundamental(full),
               false,
               0,
               ch_decomposition_check(s),
               std::move(pr),
               false,
               0};
  const LeviVerdict levi = levi_nondegenerate(s.minus());
  rep.levi_nondegenerate = levi.nondegenerate;
  rep.ch_dim = levi.ch_dim;
  rep.height_finite = rep.prolongation.status.finite;
  if (rep.height_finite) rep.height = rep.prolongation.status.height;
  return rep;
}

}  // namespace tanaka
