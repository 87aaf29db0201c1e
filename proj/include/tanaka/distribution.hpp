#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tanaka/errors.hpp"
#include "tanaka/lie.hpp"
#include "tanaka/matrix.hpp"
#include "tanaka/pseudo.hpp"
#include "tanaka/vectorfield.hpp"

namespace tanaka {

inline constexpr int kDefaultCap = 10;
inline constexpr int kDefaultSamples = 8;
inline constexpr std::uint64_t kDefaultSeed = 1729;

// Seeded generator of bounded-height rational sample points near a base
// point (offsets num/den with |num| <= 100, 1 <= den <= 100). Exact and
// deterministic for a fixed seed.
class SamplePoints {
 public:
  explicit SamplePoints(std::uint64_t seed) : rng_(seed) {}

  Rational offset() {
    const std::int64_t num = static_cast<std::int64_t>(rng_() % 201) - 100;
    const std::int64_t den = static_cast<std::int64_t>(rng_() % 100) + 1;
    return Rational(num) / den;
  }

  Vec near(const Vec& base) {
    Vec q(base);
    for (auto& c : q) c += offset();
    return q;
  }

 private:
  std::mt19937_64 rng_;
};

// A distribution given by polynomial generator fields and a rational base
// point at which the generators are independent.
class DistributionModel {
 public:
  DistributionModel(int n_vars, std::vector<PolyVectorField> generators, Vec base_point)
      : n_vars_(n_vars), generators_(std::move(generators)), base_point_(std::move(base_point)) {
    if (static_cast<int>(base_point_.size()) != n_vars_)
      throw ValidationError("DimensionMismatch", "base point has wrong dimension");
    for (const auto& g : generators_)
      if (g.n_vars != n_vars_)
        throw ValidationError("DimensionMismatch", "generator field on the wrong chart");
    std::vector<Vec> vals;
    for (const auto& g : generators_) vals.push_back(evaluate_at(g, base_point_));
    if (rank_of_rows(vals, static_cast<std::size_t>(n_vars_)) != generators_.size())
      throw ValidationError("DependentGenerators",
                            "generator fields are linearly dependent at the base point");
  }

  int n_vars() const { return n_vars_; }
  const std::vector<PolyVectorField>& generators() const { return generators_; }
  const Vec& base_point() const { return base_point_; }

 private:
  int n_vars_;
  std::vector<PolyVectorField> generators_;
  Vec base_point_;
};

struct FlagReport {
  std::vector<int> dims;  // ranks of D_{-1} ⊂ D_{-2} ⊂ ... at the base point
  int depth = 0;
  bool bracket_generating = false;
  bool stabilized = false;
};

// Weak derived flag at the base point: ranks of the spans of the iterated
// brackets with the original generators; stops when the rank stabilizes,
// reaches the full tangent space, or max_depth levels have been built.
inline FlagReport weak_derived_flag(const DistributionModel& m, int max_depth) {
  if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
  FlagReport rep;
  std::vector<Vec> values;
  std::vector<PolyVectorField> current = m.generators();
  std::size_t last_rank = 0;
  for (int level = 1; level <= max_depth; ++level) {
    for (const auto& f : current) values.push_back(evaluate_at(f, m.base_point()));
    const std::size_t r = rank_of_rows(values, static_cast<std::size_t>(m.n_vars()));
    if (r == last_rank) {
      rep.stabilized = true;
      break;
    }
    rep.dims.push_back(static_cast<int>(r));
    last_rank = r;
    if (r == static_cast<std::size_t>(m.n_vars())) {
      rep.stabilized = true;
      break;
    }
    if (level < max_depth) {
      std::vector<PolyVectorField> next;
      for (const auto& g : m.generators())
        for (const auto& h : current) next.push_back(lie_bracket_vf(g, h));
      current = std::move(next);
    }
  }
  rep.depth = static_cast<int>(rep.dims.size());
  rep.bracket_generating = !rep.dims.empty() && rep.dims.back() == m.n_vars();
  return rep;
}

struct LeviCauchyReport {
  std::size_t levi_rank = 0;
  std::size_t ch_dim = 0;
  Subspace ch{0, {}};  // in generator coordinates
};

// Levi map χ(u)(v) = [u,v] mod D at the base point; ch_dim = dim Ker χ.
inline LeviCauchyReport levi_and_cauchy(const DistributionModel& m) {
  const std::size_t r = m.generators().size();
  const std::size_t n = static_cast<std::size_t>(m.n_vars());
  std::vector<Vec> gen_vals;
  for (const auto& g : m.generators()) gen_vals.push_back(evaluate_at(g, m.base_point()));
  const Subspace d(n, gen_vals);
  const Subspace comp = complement_basis(d);
  std::vector<Vec> frame = gen_vals;
  for (const auto& v : comp.basis()) frame.push_back(v);

  const std::size_t q = comp.dim();
  std::map<std::pair<std::size_t, std::size_t>, Vec> levi;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      const Vec w = evaluate_at(lie_bracket_vf(m.generators()[a], m.generators()[b]), m.base_point());
      const auto coords = solve_coordinates(frame, w);
      if (!coords) throw std::logic_error("bracket value not in the full frame span");
      Vec quot(coords->begin() + static_cast<std::ptrdiff_t>(r), coords->end());
      levi[{a, b}] = std::move(quot);
    }
  auto levi_at = [&](std::size_t a, std::size_t b) -> Vec {
    if (a == b) return zero_vec(q);
    if (a < b) return levi[{a, b}];
    Vec v = levi[{b, a}];
    for (auto& x : v) x = -x;
    return v;
  };

  Matrix chi(r * q, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      const Vec l = levi_at(a, b);
      for (std::size_t c = 0; c < q; ++c) chi(b * q + c, a) = l[c];
    }
  LeviCauchyReport rep;
  rep.levi_rank = rank_of(chi);
  rep.ch = kernel_basis(chi);
  rep.ch_dim = rep.ch.dim();
  return rep;
}

// Constancy probe: flag ranks and Levi rank at seeded nearby points must
// match those at the base point. A heuristic check, not a proof.
inline bool regularity_probe(const DistributionModel& m, int sample_count,
                             std::uint64_t seed = kDefaultSeed) {
  const FlagReport base_flag = weak_derived_flag(m, m.n_vars() + 1);
  const LeviCauchyReport base_levi = levi_and_cauchy(m);
  SamplePoints sampler(seed);
  for (int i = 0; i < sample_count; ++i) {
    const Vec q = sampler.near(m.base_point());
    try {
      const DistributionModel shifted(m.n_vars(), m.generators(), q);
      if (weak_derived_flag(shifted, m.n_vars() + 1).dims != base_flag.dims) return false;
      if (levi_and_cauchy(shifted).levi_rank != base_levi.levi_rank) return false;
    } catch (const ValidationError&) {
      return false;  // generators degenerate at the sample
    }
  }
  return true;
}

// Adapted frame at the base point: generators first, then new bracket
// directions level by level in generation order.
struct AdaptedFrame {
  std::vector<PolyVectorField> fields;
  std::vector<int> degrees;  // -1, -2, ... per frame element
  std::vector<Vec> values;   // at the base point
  std::vector<int> dims;     // new directions per level
};

namespace detail {

inline AdaptedFrame adapted_frame(const DistributionModel& m) {
  AdaptedFrame fr;
  std::vector<Vec> acc;
  auto try_add = [&](const PolyVectorField& f, int degree) {
    Vec v = evaluate_at(f, m.base_point());
    acc.push_back(v);
    if (rank_of_rows(acc, static_cast<std::size_t>(m.n_vars())) == acc.size()) {
      fr.fields.push_back(f);
      fr.degrees.push_back(degree);
      fr.values.push_back(std::move(v));
      return true;
    }
    acc.pop_back();
    return false;
  };
  for (const auto& g : m.generators()) try_add(g, -1);
  fr.dims.push_back(static_cast<int>(fr.fields.size()));
  std::vector<PolyVectorField> current = m.generators();
  int degree = -1;
  while (static_cast<int>(fr.fields.size()) < m.n_vars()) {
    std::vector<PolyVectorField> next;
    for (const auto& g : m.generators())
      for (const auto& h : current) next.push_back(lie_bracket_vf(g, h));
    --degree;
    int added = 0;
    for (const auto& f : next)
      if (try_add(f, degree)) ++added;
    if (added == 0)
      throw ValidationError("NotBracketGenerating",
                            "the derived flag stabilizes at rank " +
                                std::to_string(fr.fields.size()) + " < " +
                                std::to_string(m.n_vars()));
    fr.dims.push_back(added);
    current = std::move(next);
  }
  return fr;
}

}  // namespace detail

// Symbol algebra of the weak derived flag at the base point: structure
// constants of ⊕ D_i/D_{i+1} obtained by bracketing adapted representative
// fields and projecting along the adapted frame. Verifies the Tanaka
// condition [D_i, D_j] ⊂ D_{i+j} pointwise and reports violations instead
// of resolving them. With samples > 0, first runs regularity_probe.
inline GradedLieAlgebra symbol_at_point(const DistributionModel& m, int samples = 0,
                                        std::uint64_t seed = kDefaultSeed) {
  if (samples > 0 && !regularity_probe(m, samples, seed))
    throw ValidationError("RegularityUnknown",
                          "flag or Levi ranks differ at seeded sample points; the base point "
                          "does not look regular");
  const AdaptedFrame fr = detail::adapted_frame(m);
  const int depth = static_cast<int>(fr.dims.size());

  std::map<int, int> dims;
  for (int l = 0; l < depth; ++l) dims[-(l + 1)] = fr.dims[static_cast<std::size_t>(l)];
  const GradedVectorSpace space = GradedVectorSpace::from_map(dims);

  // frame index -> (degree, offset)
  std::vector<BasisIndex> frame_index;
  {
    std::map<int, int> used;
    for (std::size_t t = 0; t < fr.fields.size(); ++t) {
      const int d = fr.degrees[t];
      frame_index.push_back({d, used[d]});
      ++used[d];
    }
  }

  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < fr.fields.size(); ++a)
    for (std::size_t b = a + 1; b < fr.fields.size(); ++b) {
      const int da = fr.degrees[a], db = fr.degrees[b];
      const Vec w = evaluate_at(lie_bracket_vf(fr.fields[a], fr.fields[b]), m.base_point());
      const auto coords = solve_coordinates(fr.values, w);
      if (!coords) throw std::logic_error("bracket value not in the adapted frame span");
      BracketEntry e{frame_index[a], frame_index[b], {}};
      for (std::size_t t = 0; t < coords->size(); ++t) {
        if ((*coords)[t] == 0) continue;
        const int dt = fr.degrees[t];
        if (dt < da + db)
          throw ValidationError(
              "TanakaFiltrationViolation",
              "[D_" + std::to_string(da) + ", D_" + std::to_string(db) +
                  "] has a component of filtration degree " + std::to_string(dt) +
                  " at the base point (pair " + std::to_string(a) + "," + std::to_string(b) + ")");
        if (dt == da + db) e.result.push_back({frame_index[t], (*coords)[t]});
      }
      if (!e.result.empty()) entries.push_back(std::move(e));
    }

  std::vector<std::string> names;
  for (int d = space.min_degree(); d <= space.max_degree(); ++d)
    for (int o = 0; o < space.dim(d); ++o)
      names.push_back("v[" + std::to_string(d) + "]_" + std::to_string(o));
  return make_gla(space, entries, names);
}

struct FibrationDiagnostics {
  std::size_t rank_e = 0;
  std::size_t rank_f = 0;
  int checked_points = 0;
  int skipped_samples = 0;
  std::string note;
};

// Pseudo-product symbol from a pair of integrable families: verifies
// transversality at the base point, checks integrability of each family
// pointwise at the base point and at seeded nearby sample points, builds
// D = E + F and extracts its symbol with e, f marked inside degree -1.
inline std::pair<PseudoProductSymbol, FibrationDiagnostics> pp_from_fibrations(
    int n_vars, const std::vector<PolyVectorField>& e_gens,
    const std::vector<PolyVectorField>& f_gens, const Vec& base_point, int sample_count,
    std::uint64_t seed = kDefaultSeed) {
  FibrationDiagnostics diag;
  diag.note =
      "integrability verified pointwise at the base point and at seeded bounded-height rational "
      "sample points; this is a finite probe, not an ideal-membership certificate";

  std::vector<Vec> e_vals, f_vals, all_vals;
  for (const auto& g : e_gens) e_vals.push_back(evaluate_at(g, base_point));
  for (const auto& g : f_gens) f_vals.push_back(evaluate_at(g, base_point));
  all_vals = e_vals;
  for (const auto& v : f_vals) all_vals.push_back(v);
  const std::size_t re = rank_of_rows(e_vals, static_cast<std::size_t>(n_vars));
  const std::size_t rf = rank_of_rows(f_vals, static_cast<std::size_t>(n_vars));
  const std::size_t rd = rank_of_rows(all_vals, static_cast<std::size_t>(n_vars));
  diag.rank_e = re;
  diag.rank_f = rf;
  if (rd != re + rf)
    throw ValidationError("NotTransverse", "E and F intersect at the base point: rank E = " +
                                               std::to_string(re) + ", rank F = " +
                                               std::to_string(rf) + ", rank E+F = " +
                                               std::to_string(rd));

  auto point_text = [](const Vec& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p[i]);
    return s + ")";
  };
  auto check_family = [&](const std::vector<PolyVectorField>& gens, const char* label) {
    SamplePoints sampler(seed);
    std::vector<Vec> points{base_point};
    for (int i = 0; i < sample_count; ++i) points.push_back(sampler.near(base_point));
    const std::size_t expected = gens.size();
    for (const auto& q : points) {
      std::vector<Vec> vals;
      for (const auto& g : gens) vals.push_back(evaluate_at(g, q));
      if (rank_of_rows(vals, static_cast<std::size_t>(n_vars)) != expected) {
        if (q == base_point)
          throw ValidationError("DependentGenerators",
                                std::string(label) + " generators dependent at the base point");
        ++diag.skipped_samples;  // degenerate sample, rank test would be vacuous
        continue;
      }
      const Subspace span(static_cast<std::size_t>(n_vars), vals);
      for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
          const Vec w = evaluate_at(lie_bracket_vf(gens[a], gens[b]), q);
          if (!contains(span, w))
            throw ValidationError("IntegrabilityFailed",
                                  std::string(label) + " is not integrable at " + point_text(q) +
                                      ": [" + label + "[" + std::to_string(a) + "], " + label +
                                      "[" + std::to_string(b) + "]] leaves the span");
        }
      ++diag.checked_points;
    }
  };
  check_family(e_gens, "E");
  check_family(f_gens, "F");

  std::vector<PolyVectorField> all = e_gens;
  for (const auto& g : f_gens) all.push_back(g);
  const DistributionModel model(n_vars, all, base_point);
  const GradedLieAlgebra symbol = symbol_at_point(model);

  const std::size_t d1 = static_cast<std::size_t>(symbol.space().dim(-1));
  std::vector<Vec> e_basis, f_basis;
  for (std::size_t i = 0; i < e_gens.size(); ++i) e_basis.push_back(unit_vec(d1, i));
  for (std::size_t i = 0; i < f_gens.size(); ++i) f_basis.push_back(unit_vec(d1, e_gens.size() + i));
  return {make_pp_symbol(symbol, Subspace(d1, e_basis), Subspace(d1, f_basis)), diag};
}

// Tautological model: variables (z_i, w_k, p_{k,i}); generators
// dz_i + sum_k p_{k,i} dw_k (i = 1..m) and dp_{k,i}; base point the origin.
inline DistributionModel gr_tautological_fixture(int m, int c) {
  if (m < 1 || c < 1) throw std::invalid_argument("gr_tautological_fixture needs m, c >= 1");
  const int n = m + c + m * c;
  auto p_index = [&](int k, int i) { return m + c + k * m + i; };  // k < c, i < m
  std::vector<PolyVectorField> gens;
  for (int i = 0; i < m; ++i) {
    PolyVectorField f = PolyVectorField::coordinate(n, i);
    for (int k = 0; k < c; ++k)
      f.components[static_cast<std::size_t>(m + k)] = Polynomial::variable(n, p_index(k, i));
    gens.push_back(std::move(f));
  }
  for (int k = 0; k < c; ++k)
    for (int i = 0; i < m; ++i) gens.push_back(PolyVectorField::coordinate(n, p_index(k, i)));
  return DistributionModel(n, std::move(gens), zero_vec(static_cast<std::size_t>(n)));
}

inline std::vector<std::string> gr_tautological_var_names(int m, int c) {
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) names.push_back("z" + std::to_string(i + 1));
  for (int k = 0; k < c; ++k) names.push_back("w" + std::to_string(k + 1));
  for (int k = 0; k < c; ++k)
    for (int i = 0; i < m; ++i)
      names.push_back("p" + std::to_string(k + 1) + "_" + std::to_string(i + 1));
  return names;
}

}  // namespace tanaka
