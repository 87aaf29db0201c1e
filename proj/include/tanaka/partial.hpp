#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tanaka/errors.hpp"
#include "tanaka/matrix.hpp"
#include "tanaka/prolong.hpp"

namespace tanaka {

// Coordinates on fh(v^{<n+1}) = gl_{n+1}(v^{<n+1}) + Hom(⊕_{j=0}^{n-1} v^j, v^n):
// one block per (src_deg, dst_deg) component, blocks sorted by (src, dst),
// each block row-major (dst major, src minor).
struct HomLayout {
  struct Block {
    int src_deg;
    int dst_deg;
    int src_dim;
    int dst_dim;
    std::size_t offset;
  };
  std::vector<Block> blocks;
  std::size_t total = 0;

  std::size_t index(std::size_t block, int dst, int src) const {
    const Block& b = blocks[block];
    return b.offset + static_cast<std::size_t>(dst) * static_cast<std::size_t>(b.src_dim) +
           static_cast<std::size_t>(src);
  }

  std::size_t block_at(int src_deg, int dst_deg) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (blocks[i].src_deg == src_deg && blocks[i].dst_deg == dst_deg) return i;
    return static_cast<std::size_t>(-1);
  }
};

// Coordinates on Tor^{n+1}. For n = 0 the blocks run over all pairs of
// negative degrees (p <= q) with target p+q+1; for n >= 1 over the pairs
// (-1, q) with q < 0 (target q+n) and (-1, i) with 0 <= i <= n-1 (target n-1).
struct TorLayout {
  struct Block {
    int u_deg;
    int v_deg;
    int dst_deg;
    bool wedge;  // u_deg == v_deg: unordered pairs u < v
    int u_dim;
    int v_dim;
    int dst_dim;
    std::size_t pair_count;
    std::size_t offset;
  };
  std::vector<Block> blocks;
  std::size_t total = 0;

  static std::size_t pair_index(const Block& b, int u, int v) {
    if (!b.wedge) return static_cast<std::size_t>(u) * static_cast<std::size_t>(b.v_dim) +
                         static_cast<std::size_t>(v);
    // pairs (u, v), u < v, enumerated lexicographically
    std::size_t idx = 0;
    for (int a = 0; a < u; ++a) idx += static_cast<std::size_t>(b.v_dim - a - 1);
    return idx + static_cast<std::size_t>(v - u - 1);
  }

  std::size_t index(std::size_t block, int u, int v, int c) const {
    const Block& b = blocks[block];
    return b.offset + pair_index(b, u, v) * static_cast<std::size_t>(b.dst_dim) +
           static_cast<std::size_t>(c);
  }
};

struct PartialOperator {
  int n = 0;
  Matrix matrix;  // codomain_dim x domain_dim
  HomLayout domain;
  TorLayout codomain;
  std::size_t domain_dim = 0;
  std::size_t codomain_dim = 0;
};

inline HomLayout fh_layout(const ProlongedAlgebra& P, int n) {
  HomLayout lo;
  auto push = [&](int src, int dst) {
    HomLayout::Block b;
    b.src_deg = src;
    b.dst_deg = dst;
    b.src_dim = P.dim(src);
    b.dst_dim = P.dim(dst);
    b.offset = lo.total;
    lo.total += static_cast<std::size_t>(b.src_dim) * static_cast<std::size_t>(b.dst_dim);
    lo.blocks.push_back(b);
  };
  for (int i = P.min_degree(); i <= -1; ++i)
    for (int j = i + n + 1; j <= n; ++j) push(i, j);
  for (int i = 0; i <= n - 1; ++i) push(i, n);
  return lo;
}

inline TorLayout tor_layout(const ProlongedAlgebra& P, int n) {
  TorLayout lo;
  auto push = [&](int udeg, int vdeg, int dst) {
    TorLayout::Block b;
    b.u_deg = udeg;
    b.v_deg = vdeg;
    b.dst_deg = dst;
    b.wedge = udeg == vdeg;
    b.u_dim = P.dim(udeg);
    b.v_dim = P.dim(vdeg);
    b.dst_dim = P.dim(dst);
    b.pair_count = b.wedge ? static_cast<std::size_t>(b.u_dim) *
                                 static_cast<std::size_t>(b.u_dim > 0 ? b.u_dim - 1 : 0) / 2
                           : static_cast<std::size_t>(b.u_dim) * static_cast<std::size_t>(b.v_dim);
    b.offset = lo.total;
    lo.total += b.pair_count * static_cast<std::size_t>(b.dst_dim);
    lo.blocks.push_back(b);
  };
  if (n == 0) {
    for (int p = P.min_degree(); p <= -1; ++p)
      for (int q = p; q <= -1; ++q) push(p, q, p + q + 1);
  } else {
    for (int q = P.min_degree(); q <= -1; ++q) push(-1, q, q + n);
    for (int i = 0; i <= n - 1; ++i) push(-1, i, n - 1);
  }
  return lo;
}

// The exact matrix of ∂^{n+1} : fh(v^{<n+1}) -> Tor^{n+1} on the bases fixed
// by the two layouts. Requires layers through degree n.
inline PartialOperator partial_operator(const ProlongedAlgebra& P, int n) {
  if (n < 0) throw std::invalid_argument("partial_operator: n must be >= 0");
  if (P.top_degree() < n)
    throw ValidationError("LayerMissing", "partial_operator(n=" + std::to_string(n) +
                                              ") needs layers through degree " + std::to_string(n));
  PartialOperator op;
  op.n = n;
  op.domain = fh_layout(P, n);
  op.codomain = tor_layout(P, n);
  op.domain_dim = op.domain.total;
  op.codomain_dim = op.codomain.total;
  Matrix M(op.codomain.total, op.domain.total);

  auto unit_of = [&](int deg, int idx) {
    return unit_vec(static_cast<std::size_t>(P.dim(deg)), static_cast<std::size_t>(idx));
  };

  for (std::size_t bi = 0; bi < op.codomain.blocks.size(); ++bi) {
    const auto& tb = op.codomain.blocks[bi];
    if (tb.pair_count == 0 || tb.dst_dim == 0) continue;
    if (tb.v_deg < 0) {
      // (∂A)(u,v) = A^{n+1}([u,v]) - [A^{n+1}(u), v] - [u, A^{n+1}(v)]
      const int p = tb.u_deg, q = tb.v_deg;
      const std::size_t blk1 =
          p + q >= P.min_degree() ? op.domain.block_at(p + q, p + q + n + 1) : static_cast<std::size_t>(-1);
      const std::size_t blk2 = op.domain.block_at(p, p + n + 1);
      const std::size_t blk3 = op.domain.block_at(q, q + n + 1);
      for (int u = 0; u < tb.u_dim; ++u) {
        for (int v = tb.wedge ? u + 1 : 0; v < tb.v_dim; ++v) {
          // A([u,v]): block (p+q -> p+q+n+1)
          if (blk1 != static_cast<std::size_t>(-1)) {
            const Vec w = P.mixed_bracket(p, unit_of(p, u), q, unit_of(q, v));
            for (int s = 0; s < P.dim(p + q); ++s) {
              if (w[static_cast<std::size_t>(s)] == 0) continue;
              for (int c = 0; c < tb.dst_dim; ++c)
                M(op.codomain.index(bi, u, v, c), op.domain.index(blk1, c, s)) +=
                    w[static_cast<std::size_t>(s)];
            }
          }
          // -[A(u), v]: block (p -> p+n+1)
          for (int t = 0; t < P.dim(p + n + 1); ++t) {
            const Vec val = P.mixed_bracket(p + n + 1, unit_of(p + n + 1, t), q, unit_of(q, v));
            for (int c = 0; c < tb.dst_dim; ++c)
              if (val[static_cast<std::size_t>(c)] != 0)
                M(op.codomain.index(bi, u, v, c), op.domain.index(blk2, t, u)) -=
                    val[static_cast<std::size_t>(c)];
          }
          // -[u, A(v)] = +[A(v), u]: block (q -> q+n+1)
          for (int t = 0; t < P.dim(q + n + 1); ++t) {
            const Vec val = P.mixed_bracket(q + n + 1, unit_of(q + n + 1, t), p, unit_of(p, u));
            for (int c = 0; c < tb.dst_dim; ++c)
              if (val[static_cast<std::size_t>(c)] != 0)
                M(op.codomain.index(bi, u, v, c), op.domain.index(blk3, t, v)) +=
                    val[static_cast<std::size_t>(c)];
          }
        }
      }
    } else {
      // (∂A)(u,v) = -[u, A^{n-i}(v)] = +(A^{n-i}(v))(u) for v in v^i, 0 <= i <= n-1
      const int i = tb.v_deg;
      const std::size_t blk = op.domain.block_at(i, n);
      for (int t = 0; t < P.dim(n); ++t) {
        const Vec on_u = unit_of(n, t);
        for (int u = 0; u < tb.u_dim; ++u) {
          const Vec val = P.mixed_bracket(n, on_u, -1, unit_of(-1, u));
          for (int v = 0; v < tb.v_dim; ++v)
            for (int c = 0; c < tb.dst_dim; ++c)
              if (val[static_cast<std::size_t>(c)] != 0)
                M(op.codomain.index(bi, u, v, c), op.domain.index(blk, t, v)) +=
                    val[static_cast<std::size_t>(c)];
        }
      }
    }
  }
  op.matrix = std::move(M);
  return op;
}

struct KernelCheckDiagnostics {
  std::size_t kernel_dim = 0;
  std::size_t layer_dim = 0;       // dim g^{n+1}
  std::size_t gl_tail_dim = 0;     // dim gl_{n+2}(v^{<n+1})
  bool equal = false;
};

// Lemma-style cross-check: ker ∂^{n+1} must equal g^{n+1} + gl_{n+2}(v^{<n+1})
// as subspaces of fh(v^{<n+1}). Requires layers through degree n+1.
inline bool verify_partial_kernel(const ProlongedAlgebra& P, int n,
                                  KernelCheckDiagnostics* diag = nullptr) {
  if (P.top_degree() < n + 1)
    throw ValidationError("LayerMissing", "verify_partial_kernel(n=" + std::to_string(n) +
                                              ") needs layers through degree " +
                                              std::to_string(n + 1));
  const PartialOperator op = partial_operator(P, n);
  const Subspace ker = kernel_basis(op.matrix);

  std::vector<Vec> expected;
  // g^{n+1}, re-embedded from its shape coordinates into fh coordinates
  const ShapeLayout& lay = P.layer_layout(n + 1);
  for (const auto& vec : P.layer(n + 1).basis()) {
    Vec emb = zero_vec(op.domain.total);
    for (std::size_t bi = 0; bi < lay.blocks.size(); ++bi) {
      const auto& b = lay.blocks[bi];
      const std::size_t fb = op.domain.block_at(b.src_deg, b.dst_deg);
      if (fb == static_cast<std::size_t>(-1)) {
        if (b.src_dim * b.dst_dim != 0)
          throw std::logic_error("layer block missing from fh layout");
        continue;
      }
      for (int t = 0; t < b.dst_dim; ++t)
        for (int s = 0; s < b.src_dim; ++s)
          emb[op.domain.index(fb, t, s)] = vec[lay.index(bi, t, s)];
    }
    expected.push_back(std::move(emb));
  }
  std::size_t gl_tail = 0;
  for (std::size_t bi = 0; bi < op.domain.blocks.size(); ++bi) {
    const auto& b = op.domain.blocks[bi];
    if (b.dst_deg - b.src_deg < n + 2) continue;
    gl_tail += static_cast<std::size_t>(b.src_dim) * static_cast<std::size_t>(b.dst_dim);
    for (int t = 0; t < b.dst_dim; ++t)
      for (int s = 0; s < b.src_dim; ++s) {
        Vec emb = zero_vec(op.domain.total);
        emb[op.domain.index(bi, t, s)] = 1;
        expected.push_back(std::move(emb));
      }
  }

  const std::size_t expected_rank = rank_of_rows(expected, op.domain.total);
  bool equal = ker.dim() == expected_rank;
  if (equal) {
    auto stacked = ker.basis();
    for (const auto& v : expected) stacked.push_back(v);
    equal = rank_of_rows(stacked, op.domain.total) == ker.dim();
  }
  if (diag) {
    diag->kernel_dim = ker.dim();
    diag->layer_dim = P.layer(n + 1).dim();
    diag->gl_tail_dim = gl_tail;
    diag->equal = equal;
  }
  return equal;
}

// W^{n+1}: the deterministic complement of Im(∂^{n+1}) inside Tor^{n+1}.
inline Subspace tor_complement(const ProlongedAlgebra& P, int n) {
  const PartialOperator op = partial_operator(P, n);
  return complement_basis(image_basis(op.matrix));
}

struct PartialRankRow {
  int n = 0;
  std::size_t domain_dim = 0;
  std::size_t rank = 0;
  std::size_t tor_dim = 0;
  std::size_t w_dim = 0;
};

inline PartialRankRow partial_ranks(const ProlongedAlgebra& P, int n) {
  const PartialOperator op = partial_operator(P, n);
  PartialRankRow row;
  row.n = n;
  row.domain_dim = op.domain_dim;
  row.tor_dim = op.codomain_dim;
  row.rank = rank_of(op.matrix);
  row.w_dim = row.tor_dim - row.rank;
  return row;
}

}  // namespace tanaka
