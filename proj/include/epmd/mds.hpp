// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "epmd/construction.hpp"
#include "epmd/rational.hpp"

namespace epmd {

// Outcome of the exhaustive MDS check.
struct MdsReport {
    bool is_mds = false;
    // first erasure pattern (r block indices, 1-based, ascending) whose
    // restriction is singular; empty when the code is MDS
    std::optional<std::vector<int>> failing_subset;
    std::uint64_t subsets_checked = 0;
};

// Columns of the blocks listed in `subset` (1-based, in the given order),
// stacked left to right: r*ell rows by subset.size()*ell columns.
Matrix submatrix(const ParityCheckMatrix& pcm, const std::vector<int>& subset);

// The code can tolerate any r block erasures iff every r-subset restriction
// of the parity-check matrix is invertible.  Checks all C(n, r) subsets in
// lexicographic order and stops at the first failure.
MdsReport verify_mds(const ParityCheckMatrix& pcm);

// Upper bound on the probability that one uniformly random non-zero rho
// yields a non-MDS matrix: C(n, r) * r * ell / (q - 1).
Rational sampling_failure_bound(const CodeParams& params);

// How many times larger q - 1 is than the union-bound weight
// C(n, r) * r * ell.  Values below 10 mean retries are plausible.
double sampling_headroom(const CodeParams& params);

// Draws rho uniformly from the non-zero field elements until verify_mds
// passes.  A non-zero rho already present in `base` is verified first and
// returned unchanged if it passes (this veto does not consume a retry).
// `max_retries` bounds the number of sampled candidates; exceeding it
// throws RetriesExhausted.  Deterministic in `seed`.
CodeParams sample_code(const CodeParams& base, std::uint64_t seed, int max_retries);

std::uint64_t binomial(int n, int k);

}  // namespace epmd
