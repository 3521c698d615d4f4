// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "epmd/field.hpp"

namespace epmd {

// One of the n coded blocks (storage nodes).  Blocks carry a two-level
// address: group u in [1, r] and slot v in [1, s] with flat = (u-1)*s + v,
// where r = n - k parities-worth of groups and s = n / r slots per group.
struct BlockId {
    int u = 0;
    int v = 0;
    int flat = 0;  // 1-based, in [1, n]
};

// One of the ell = r^t symbol positions inside a block, addressed by a
// length-t coordinate vector x with entries in [1, r].  The flat index is
// 0-based and big-endian: flat = sum_j (x[j] - 1) * r^(t-1-j).
struct SymbolId {
    std::vector<int> x;
    int flat = 0;  // 0-based, in [0, ell)
};

// 1-based modular fold onto [1, m]: wrap(m, m) == m, wrap(m + 1, m) == 1.
int wrap(int l, int m);

// Full parameter set of one code instance.
//
//   n      total blocks, k data blocks, r = n - k, s = n / r (requires r | n)
//   t      coupling depth, 1 <= t <= s; ell = r^t symbols per block
//   lambda n distinct non-zero field elements, one per block
//   rho    coupling coefficient; 0 means "not chosen yet" (the uncoupled
//          matrix is still well-formed, but repair and MDS sampling need a
//          non-zero value)
struct CodeParams {
    int n = 0;
    int k = 0;
    int r = 0;
    int s = 0;
    int t = 0;
    int ell = 0;
    std::vector<fe> lambda;
    fe rho = 0;
    std::shared_ptr<const Field> field;

    BlockId block(int flat) const;
    BlockId block_uv(int u, int v) const;
    SymbolId symbol(int flat) const;
    SymbolId symbol(const std::vector<int>& coords) const;

    // column of block i (1-based), symbol x (0-based) in an n*ell-wide matrix
    std::size_t col(int block_flat, int sym_flat) const {
        return static_cast<std::size_t>(block_flat - 1) * ell + sym_flat;
    }
};

// Fills the derived fields and validates.  An empty `lambda` selects the
// default assignment g^1, ..., g^n for the field generator g.
CodeParams make_params(int n, int k, int t, std::shared_ptr<const Field> field,
                       std::vector<fe> lambda = {}, fe rho = 0);

// Throws InvalidParams when any constraint fails.  `require_rho` additionally
// demands rho != 0 (needed by repair and by the coupled-matrix consumers).
void validate_params(const CodeParams& p, bool require_rho = false);

std::vector<fe> default_lambdas(const Field& f, int n);

// Returns x with coordinate a = wrap(v, t) moved forward by p in [1, r]:
// x_a -> wrap(x_a + p, r).  p == 0 is the identity.
SymbolId modify_vector(const CodeParams& params, const SymbolId& x, int v, int p);

}  // namespace epmd
