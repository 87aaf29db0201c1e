#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tanaka/errors.hpp"
#include "tanaka/lie.hpp"
#include "tanaka/matrix.hpp"

namespace tanaka {

// Coordinate layout of a degree-m layer: block matrices g^j -> v^{j+m} for
// the negative source degrees j, flattened block by block, each block
// row-major (dst index major, src index minor).
struct ShapeLayout {
  struct Block {
    int src_deg;
    int dst_deg;
    int src_dim;
    int dst_dim;
    std::size_t offset;
  };
  std::vector<Block> blocks;  // src_deg ascending
  std::size_t total = 0;

  std::size_t index(std::size_t block, int dst, int src) const {
    const Block& b = blocks[block];
    return b.offset + static_cast<std::size_t>(dst) * static_cast<std::size_t>(b.src_dim) +
           static_cast<std::size_t>(src);
  }

  // block index for a source degree, or npos
  std::size_t block_for_src(int src_deg) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (blocks[i].src_deg == src_deg) return i;
    return static_cast<std::size_t>(-1);
  }
};

struct ProlongationStatus {
  bool finite = false;
  int height = 0;    // meaningful when finite; largest degree with nonzero layer (may be -1)
  int cap = 0;       // the cap in force
  bool g0_is_zero = false;
};

// The base algebra together with the positive layers computed so far.
// A layer element of degree m is a degree-m endomorphism of the truncation
// v^{<m}, determined by its blocks g^j -> v^{j+m}, j < 0; targets of
// degree >= 1 are written in the coordinates of the already-computed layers.
class ProlongedAlgebra {
 public:
  explicit ProlongedAlgebra(GradedLieAlgebra base)
      : base_(std::move(base)), fundamental_(is_fundamental(base_).is_fundamental()) {}

  const GradedLieAlgebra& base() const { return base_; }
  bool base_fundamental() const { return fundamental_; }

  int min_degree() const { return base_.space().min_degree(); }
  int base_max_degree() const { return base_.space().max_degree(); }
  int top_degree() const { return static_cast<int>(layers_.size()); }  // 0 when no layers

  int dim(int degree) const {
    if (degree < min_degree()) return 0;
    if (degree <= base_max_degree()) return base_.space().dim(degree);
    if (degree <= 0) return 0;  // base window ends at -1, no g^0 declared
    if (degree <= static_cast<int>(layers_.size()))
      return static_cast<int>(layers_[static_cast<std::size_t>(degree - 1)].shape.dim());
    return 0;
  }

  int layer_dim(int m) const { return dim(m); }

  const Subspace& layer(int m) const {
    if (m < 1 || m > top_degree()) throw ValidationError("LayerMissing", "layer g^" + std::to_string(m) + " not computed");
    return layers_[static_cast<std::size_t>(m - 1)].shape;
  }

  const ShapeLayout& layer_layout(int m) const {
    if (m < 1 || m > top_degree()) throw ValidationError("LayerMissing", "layer g^" + std::to_string(m) + " not computed");
    return layers_[static_cast<std::size_t>(m - 1)].layout;
  }

  ShapeLayout shape_layout_for_degree(int m) const {
    ShapeLayout lo;
    for (int j = min_degree(); j <= -1; ++j) {
      ShapeLayout::Block b;
      b.src_deg = j;
      b.dst_deg = j + m;
      b.src_dim = dim(j);
      b.dst_dim = dim(j + m);
      b.offset = lo.total;
      lo.total += static_cast<std::size_t>(b.src_dim) * static_cast<std::size_t>(b.dst_dim);
      lo.blocks.push_back(b);
    }
    return lo;
  }

  // Value of the a-th basis element of layer m on the v-th basis vector of g^j.
  const Vec& layer_action(int m, int a, int j, int v) const {
    const Layer& L = layers_[static_cast<std::size_t>(m - 1)];
    return L.action[static_cast<std::size_t>(a)]
                   [static_cast<std::size_t>(j - min_degree())]
                   [static_cast<std::size_t>(v)];
  }

  // [x, v] for homogeneous x of degree dx and v of degree dv < 0, in the
  // coordinates of degree dx+dv. For dx < 0 this is the base bracket, for
  // dx = 0 the adjoint action of g^0, for dx >= 1 evaluation x(v).
  Vec mixed_bracket(int dx, const Vec& x, int dv, const Vec& v) const {
    if (dv >= 0) throw ValidationError("DegreeError", "second bracket argument must have negative degree");
    if (static_cast<int>(x.size()) != dim(dx) || static_cast<int>(v.size()) != dim(dv))
      throw std::invalid_argument("mixed_bracket: coordinate size mismatch");
    const int dout = dx + dv;
    Vec out = zero_vec(static_cast<std::size_t>(dim(dout)));
    if (dim(dout) == 0 || is_zero_vec(x) || is_zero_vec(v)) return out;
    if (dx <= 0) {
      const auto& sp = base_.space();
      Vec fx = zero_vec(static_cast<std::size_t>(base_.total_dim()));
      Vec fv = fx;
      for (int s = 0; s < dim(dx); ++s)
        fx[static_cast<std::size_t>(sp.flat_index(dx, s))] = x[static_cast<std::size_t>(s)];
      for (int s = 0; s < dim(dv); ++s)
        fv[static_cast<std::size_t>(sp.flat_index(dv, s))] = v[static_cast<std::size_t>(s)];
      const Vec br = base_.bracket(fx, fv);
      for (int s = 0; s < dim(dout); ++s)
        out[static_cast<std::size_t>(s)] = br[static_cast<std::size_t>(sp.flat_index(dout, s))];
      return out;
    }
    for (std::size_t a = 0; a < x.size(); ++a) {
      if (x[a] == 0) continue;
      for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t] == 0) continue;
        const Vec& val = layer_action(dx, static_cast<int>(a), dv, static_cast<int>(t));
        for (std::size_t c = 0; c < out.size(); ++c) out[c] += x[a] * v[t] * val[c];
      }
    }
    return out;
  }

  // Extends the algebra by the next layer, given its basis in shape coordinates.
  void append_layer(Subspace shape_basis) {
    const int m = top_degree() + 1;
    Layer L{std::move(shape_basis), shape_layout_for_degree(m), {}};
    if (L.shape.ambient_dim() != L.layout.total)
      throw std::invalid_argument("layer basis does not match the shape layout");
    for (const auto& vec : L.shape.basis()) {
      std::vector<std::vector<Vec>> per_src(static_cast<std::size_t>(-min_degree()));
      for (std::size_t bi = 0; bi < L.layout.blocks.size(); ++bi) {
        const auto& b = L.layout.blocks[bi];
        std::vector<Vec> cols(static_cast<std::size_t>(b.src_dim),
                              zero_vec(static_cast<std::size_t>(b.dst_dim)));
        for (int t = 0; t < b.dst_dim; ++t)
          for (int s = 0; s < b.src_dim; ++s)
            cols[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] =
                vec[L.layout.index(bi, t, s)];
        per_src[static_cast<std::size_t>(b.src_deg - min_degree())] = std::move(cols);
      }
      L.action.push_back(std::move(per_src));
    }
    layers_.push_back(std::move(L));
  }

 private:
  struct Layer {
    Subspace shape{0, {}};
    ShapeLayout layout;
    // action[a][src_deg - min_degree][src_index] = value coordinates in v^{src_deg + m}
    std::vector<std::vector<std::vector<Vec>>> action;
  };

  GradedLieAlgebra base_;
  bool fundamental_;
  std::vector<Layer> layers_;
};

// Next prolongation layer: kernel of A |-> A([u,v]) - [A(u),v] - [u,A(v)]
// over u in g^{-1}, v in g^-, on the space of degree-i shape maps.
// Restricting u to g^{-1} is enough because g^- is generated by g^{-1};
// verify_prolongation_relation re-checks the identity on all pairs.
inline Subspace prolong_step(const ProlongedAlgebra& P, int i) {
  if (!P.base_fundamental())
    throw ValidationError("NotFundamental", "the base algebra is not fundamental");
  if (i < 1 || i != P.top_degree() + 1)
    throw ValidationError("LayerMissing",
                          "prolong_step expects layers 1.." + std::to_string(i - 1) +
                              " computed before degree " + std::to_string(i));
  const ShapeLayout layout = P.shape_layout_for_degree(i);
  const int kmin = P.min_degree();
  const int d1 = P.dim(-1);

  // residual rows: (j, u, v) pairs, u in g^{-1}, v in g^j (u < v when j = -1)
  std::size_t nrows = 0;
  std::vector<std::size_t> row_offset;
  for (int j = kmin; j <= -1; ++j) {
    row_offset.push_back(nrows);
    const std::size_t pairs = j == -1
                                  ? static_cast<std::size_t>(d1) * static_cast<std::size_t>(d1 - 1) / 2
                                  : static_cast<std::size_t>(d1) * static_cast<std::size_t>(P.dim(j));
    nrows += pairs * static_cast<std::size_t>(P.dim(j + i - 1));
  }

  Matrix M(nrows, layout.total);

  // cache: value of each degree-(i-1) basis vector on each negative basis vector
  auto prev_value = [&](int t, int jv, int v) {
    Vec unit = unit_vec(static_cast<std::size_t>(P.dim(i - 1)), static_cast<std::size_t>(t));
    return P.mixed_bracket(i - 1, unit, jv, unit_vec(static_cast<std::size_t>(P.dim(jv)),
                                                     static_cast<std::size_t>(v)));
  };

  for (int j = kmin; j <= -1; ++j) {
    const int dj = P.dim(j);
    const int rdim = P.dim(j + i - 1);
    if (dj == 0 || rdim == 0) continue;
    const std::size_t blk_jm1 = j - 1 >= kmin ? layout.block_for_src(j - 1) : static_cast<std::size_t>(-1);
    const std::size_t blk_m1 = layout.block_for_src(-1);
    const std::size_t blk_j = layout.block_for_src(j);
    std::size_t pair_idx = 0;
    for (int u = 0; u < d1; ++u) {
      const int v_begin = j == -1 ? u + 1 : 0;
      for (int v = v_begin; v < dj; ++v, ++pair_idx) {
        const std::size_t r0 = row_offset[static_cast<std::size_t>(j - kmin)] +
                               pair_idx * static_cast<std::size_t>(rdim);
        // A([u,v]): block (j-1 -> j+i-1)
        if (blk_jm1 != static_cast<std::size_t>(-1)) {
          const Vec w = P.mixed_bracket(-1, unit_vec(static_cast<std::size_t>(d1), static_cast<std::size_t>(u)),
                                        j, unit_vec(static_cast<std::size_t>(dj), static_cast<std::size_t>(v)));
          for (int s = 0; s < P.dim(j - 1); ++s) {
            if (w[static_cast<std::size_t>(s)] == 0) continue;
            for (int c = 0; c < rdim; ++c)
              M(r0 + static_cast<std::size_t>(c), layout.index(blk_jm1, c, s)) +=
                  w[static_cast<std::size_t>(s)];
          }
        }
        // -[A(u), v]: block (-1 -> i-1)
        for (int t = 0; t < P.dim(i - 1); ++t) {
          const Vec val = prev_value(t, j, v);
          for (int c = 0; c < rdim; ++c)
            if (val[static_cast<std::size_t>(c)] != 0)
              M(r0 + static_cast<std::size_t>(c), layout.index(blk_m1, t, u)) -=
                  val[static_cast<std::size_t>(c)];
        }
        // -[u, A(v)] = +[A(v), u]: block (j -> j+i)
        for (int t = 0; t < P.dim(j + i); ++t) {
          const Vec val = P.mixed_bracket(
              j + i, unit_vec(static_cast<std::size_t>(P.dim(j + i)), static_cast<std::size_t>(t)),
              -1, unit_vec(static_cast<std::size_t>(d1), static_cast<std::size_t>(u)));
          for (int c = 0; c < rdim; ++c)
            if (val[static_cast<std::size_t>(c)] != 0)
              M(r0 + static_cast<std::size_t>(c), layout.index(blk_j, t, v)) +=
                  val[static_cast<std::size_t>(c)];
        }
      }
    }
  }
  return kernel_basis(M);
}

struct ProlongationResult {
  ProlongedAlgebra algebra;
  int min_degree = -1;
  std::vector<int> dims_by_degree;  // from min_degree through the reported top
  ProlongationStatus status;
};

// Computes layers degree by degree until one vanishes (Finite) or the cap is
// reached. A Finite verdict is only issued after one extra layer is checked
// to vanish as well.
inline ProlongationResult universal_prolongation(const GradedLieAlgebra& g, int cap) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  if (g.space().max_degree() > 0)
    throw ValidationError("DegreeWindowError", "prolongation input must have degrees in [-k, 0]");
  const FundamentalReport rep = is_fundamental(g);
  if (!rep.is_fundamental()) {
    std::string why;
    for (const auto& s : rep.violations) why += (why.empty() ? "" : "; ") + s;
    if (why.empty()) why = "base algebra fails the fundamental conditions";
    throw ValidationError("NotFundamental", why);
  }

  ProlongedAlgebra P(g);
  int first_zero = -1;
  for (int m = 1; m <= cap; ++m) {
    Subspace layer = prolong_step(P, m);
    const bool zero = layer.dim() == 0;
    P.append_layer(std::move(layer));
    if (zero) {
      first_zero = m;
      break;
    }
  }

  ProlongationResult out{std::move(P), g.space().min_degree(), {}, {}};
  out.status.cap = cap;
  out.status.g0_is_zero = out.algebra.dim(0) == 0;
  if (first_zero >= 0) {
    // termination guard: the following layer must vanish too
    const Subspace guard = prolong_step(out.algebra, first_zero + 1);
    if (guard.dim() != 0)
      throw std::logic_error("termination guard failed: g^" + std::to_string(first_zero) +
                             " = 0 but g^" + std::to_string(first_zero + 1) + " != 0");
    out.algebra.append_layer(guard);
    out.status.finite = true;
    int height = first_zero - 1;
    if (height == 0 && out.algebra.dim(0) == 0) height = -1;
    out.status.height = height;
  } else {
    out.status.finite = false;
  }

  const int top = out.status.finite
                      ? std::max(out.status.height, out.algebra.base_max_degree())
                      : cap;
  for (int d = out.min_degree; d <= top; ++d) out.dims_by_degree.push_back(out.algebra.dim(d));
  return out;
}

// Computes further layers (used to drive the kernel cross-check past the
// height; beyond a zero layer every further layer is zero).
inline void extend_layers(ProlongedAlgebra& P, int upto) {
  for (int m = P.top_degree() + 1; m <= upto; ++m) P.append_layer(prolong_step(P, m));
}

// Re-checks A([u,v]) = [A(u),v] + [u,A(v)] for every computed layer element
// over ALL pairs u, v in g^- (not only u in g^{-1}).
inline bool verify_prolongation_relation(const ProlongedAlgebra& P, std::string* fail = nullptr) {
  const int kmin = P.min_degree();
  for (int m = 1; m <= P.top_degree(); ++m) {
    for (int a = 0; a < P.dim(m); ++a) {
      for (int p = kmin; p <= -1; ++p)
        for (int up = 0; up < P.dim(p); ++up)
          for (int q = p; q <= -1; ++q) {
            for (int vq = (q == p ? up + 1 : 0); vq < P.dim(q); ++vq) {
              const Vec eu = unit_vec(static_cast<std::size_t>(P.dim(p)), static_cast<std::size_t>(up));
              const Vec ev = unit_vec(static_cast<std::size_t>(P.dim(q)), static_cast<std::size_t>(vq));
              // A([u, v])
              const Vec w = P.mixed_bracket(p, eu, q, ev);
              Vec lhs = zero_vec(static_cast<std::size_t>(P.dim(p + q + m)));
              for (int s = 0; s < P.dim(p + q); ++s)
                if (w[static_cast<std::size_t>(s)] != 0)
                  axpy(lhs, w[static_cast<std::size_t>(s)], P.layer_action(m, a, p + q, s));
              // [A(u), v] + [u, A(v)] = [A(u), v] - [A(v), u]
              const Vec Au = P.layer_action(m, a, p, up);
              const Vec Av = P.layer_action(m, a, q, vq);
              Vec rhs = P.mixed_bracket(p + m, Au, q, ev);
              const Vec t2 = P.mixed_bracket(q + m, Av, p, eu);
              for (std::size_t c = 0; c < rhs.size(); ++c) rhs[c] -= t2[c];
              for (std::size_t c = 0; c < lhs.size(); ++c)
                if (lhs[c] != rhs[c]) {
                  if (fail)
                    *fail = "degree " + std::to_string(m) + " element " + std::to_string(a) +
                            " fails on pair (g^" + std::to_string(p) + "[" + std::to_string(up) +
                            "], g^" + std::to_string(q) + "[" + std::to_string(vq) + "])";
                  return false;
                }
            }
          }
    }
  }
  return true;
}

}  // namespace tanaka
