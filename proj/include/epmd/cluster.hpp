// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "epmd/repair.hpp"

namespace epmd {

// One simulated failure-and-repair.
struct ClusterEvent {
    int failed = 0;  // block index, 1-based
    std::size_t downloaded = 0;
    std::size_t stage1 = 0;
    std::size_t stage2 = 0;
    Rational ratio{0, 1};
};

// In-memory cluster: one node per block, plus traffic counters.
struct ClusterState {
    CodeParams params;
    Codeword original;                     // ground truth for final validation
    Codeword current;
    std::vector<std::uint64_t> served;     // symbols uploaded per node
    std::vector<ClusterEvent> events;
};

struct SimSummary {
    int n = 0;
    std::size_t repairs = 0;
    std::uint64_t total_downloaded = 0;
    Rational cutset{0, 1};  // per-repair floor
    bool final_ok = false;  // every block matches the originally encoded data
    std::vector<std::uint64_t> served;
    std::vector<ClusterEvent> events;

    std::string to_text() const;
};

// Encodes a random message (deterministic in `seed`), then fails and
// repairs the listed blocks one at a time, each repair drawing only on the
// other n - 1 nodes.  Repairs are validated against the original encoding.
// Throws ScenarioInfeasible for an out-of-range block index.
SimSummary sim_run(const CodeParams& params, const std::vector<int>& scenario,
                   std::uint64_t seed);

}  // namespace epmd
