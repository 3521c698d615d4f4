// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "epmd/matrix.hpp"
#include "epmd/params.hpp"

namespace epmd {

// Parity-check matrix of one code instance: r*ell rows by n*ell columns over
// GF(2^w).  A codeword is the concatenation of the n blocks, ell symbols
// each; column (i-1)*ell + x is the coefficient of symbol x of block i.
struct ParityCheckMatrix {
    Matrix mat;
    int n = 0;
    int ell = 0;
};

// Coefficient row of the plain constraint for symbol slot x: every block
// contributes its symbol x with coefficient 1 (sum over all blocks is zero).
// Returns the dense row of length n*ell.
std::vector<fe> type1_row(const CodeParams& params, const SymbolId& x);

// Coefficient row of the coupled constraint (p, x) for p in [1, r-1]:
// block i = (u-1)s + v contributes lambda_i^p at symbol x, plus rho at the
// shifted symbol that moves coordinate wrap(v, t) of x forward by p.
// Returns the dense row of length n*ell.
std::vector<fe> type2_row(const CodeParams& params, int p, const SymbolId& x);

// Assembles the full parity-check matrix: ell plain rows (one per symbol
// slot, in flat order) followed by (r-1)*ell coupled rows ordered by p then
// by slot.  Validates the parameters first.
ParityCheckMatrix build_parity_matrix(const CodeParams& params);

// Direct assembly for the single-coordinate case t == 1 (ell == r), written
// from the closed scalar form rather than the general row builders; used to
// cross-check them.  Throws InvalidParams when t != 1.
ParityCheckMatrix build_parity_matrix_t1(const CodeParams& params);

// Splits the matrix into the uncoupled part (the rho = 0 matrix: ell
// interleaved generalized parity codes) and the coupling part whose only
// non-zeros are the rho entries.  The two parts sum back to the full matrix.
std::pair<ParityCheckMatrix, ParityCheckMatrix> split_matrix(const CodeParams& params);

}  // namespace epmd
