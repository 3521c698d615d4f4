// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "epmd/construction.hpp"

namespace epmd {

// A (possibly partial) codeword: n blocks of ell symbols each.  An empty
// inner vector marks a missing (erased) block.
struct Codeword {
    std::vector<std::vector<fe>> blocks;

    bool present(int block_flat) const {
        return !blocks[static_cast<std::size_t>(block_flat) - 1].empty();
    }
};

// Set of erased block indices (1-based, at most r of them).
struct ErasurePattern {
    std::vector<int> erased;
};

// Systematic encode: the message fills blocks 1..k verbatim (block-major,
// ell symbols per block) and blocks k+1..n are solved from the parity
// checks.  message.size() must be k*ell.
Codeword encode(const CodeParams& params, const std::vector<fe>& message);

// Restores the erased blocks from the survivors.  Blocks listed in the
// pattern are recomputed even if present; all other blocks must be present.
// With fewer than r erasures the system is overdetermined and the surplus
// constraints are checked: a mismatch throws InconsistentInput.
Codeword decode_erasures(const CodeParams& params, const Codeword& received,
                         const ErasurePattern& pattern);

// The message of a full codeword (blocks 1..k concatenated).
std::vector<fe> message_of(const CodeParams& params, const Codeword& cw);

// Flat n*ell-symbol view of a full codeword.
std::vector<fe> flatten(const CodeParams& params, const Codeword& cw);

// True iff the full codeword satisfies every parity check.
bool in_code(const CodeParams& params, const Codeword& cw);

}  // namespace epmd
