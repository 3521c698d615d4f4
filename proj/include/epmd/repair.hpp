// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "epmd/codec.hpp"
#include "epmd/rational.hpp"

namespace epmd {

// One download: symbol `symbol` of block `block`.
struct SymbolRequest {
    BlockId block;
    SymbolId symbol;
};

// Stage-1 downloads from one helper block.
struct HelperRequests {
    BlockId helper;
    std::vector<SymbolId> symbols;
};

// One stage-2 solve step.  The coupled constraint (p, known) ties the
// already-recovered symbol `known` (whose anchor coordinate equals the
// failed block's group) to the still-missing symbol `target`; `fetches`
// are the extra downloads the step needs beyond stage-1 data.
struct RepairStep {
    int p = 0;
    SymbolId known;
    SymbolId target;
    std::vector<SymbolRequest> fetches;
};

// Complete download/solve schedule for rebuilding one block from the other
// n - 1.  Stage 1 reads the anchor-coordinate slice of every helper and
// rebuilds the matching slice of the failed block by plain parity; stage 2
// recovers the remaining symbols through the coupled constraints.
struct RepairPlan {
    BlockId failed;
    int anchor = 0;  // coordinate a = wrap(v, t) of the failed block's slot
    std::vector<HelperRequests> stage1;
    std::vector<RepairStep> stage2;

    std::size_t stage1_count() const;
    std::size_t stage2_count() const;
    std::size_t download_count() const { return stage1_count() + stage2_count(); }
};

// Bandwidth accounting for one executed (or planned) repair.
struct RepairReport {
    std::size_t downloaded = 0;
    std::size_t stage1 = 0;
    std::size_t stage2 = 0;
    Rational cutset{0, 1};
    Rational ratio{0, 1};
    bool bound_ok = false;  // ratio <= 1 + 1/t

    std::string to_text() const;  // key=value lines: downloaded, stage1, ...
};

// Minimum possible repair bandwidth in symbols when contacting d helpers:
// d * ell / (d - k + 1), exact.
Rational cutset_bound(int n, int k, int d, int ell);

// Builds the schedule for rebuilding `failed`.  Requires valid params with
// rho != 0 whenever r > 1.  Throws InvalidBlock for an out-of-range block.
RepairPlan plan_repair(const CodeParams& params, const BlockId& failed);
RepairPlan plan_repair(const CodeParams& params, int failed_flat);

// Runs the plan against the surviving blocks and returns the rebuilt block
// (ell symbols).  Reads only symbols named by the plan; a plan referencing
// the failed block or a missing/malformed survivor throws PlanMismatch.
std::vector<fe> execute_repair(const CodeParams& params, const Codeword& survivors,
                               const RepairPlan& plan);

// Accounting for a plan against the d = n - 1 cut-set bound.
RepairReport repair_report(const CodeParams& params, const RepairPlan& plan);

// Measured bandwidth versus the structural floors any code with these
// parameters must respect.  All three floors are lower bounds on ell (or on
// k) implied by the measured ratio or by the repair-by-transfer property.
struct BoundsReport {
    int n = 0, k = 0, t = 0, ell = 0;
    std::size_t downloaded = 0;
    Rational cutset{0, 1};
    Rational ratio{0, 1};
    bool bound_ok = false;       // ratio <= 1 + 1/t
    double ratio_min_ell = 0;    // (n - k) / ratio: optimal-bandwidth codes need ell >= this
    bool ratio_min_ell_ok = false;
    double transfer_min_ell = 0;  // (n - k)^(k / (n - k)): repair-by-transfer floor
    bool transfer_min_ell_ok = false;
    double linear_k_cap = 0;  // 2 * log2(ell) * (floor(log_{r/(r-1)} ell) + 1); r >= 2 only
    bool linear_k_cap_ok = false;

    std::string to_text() const;
};

BoundsReport bounds_report(int n, int k, int t, const RepairReport& measured);

}  // namespace epmd
