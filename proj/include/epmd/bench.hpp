// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "epmd/repair.hpp"

namespace epmd {

// One bandwidth-equivalence class of failed blocks at one grid point: every
// block in the class downloads the same symbol count when repaired.
struct BenchRow {
    int n = 0, k = 0, t = 0;
    unsigned w = 0;
    int ell = 0;
    int class_blocks = 0;  // how many of the n blocks fall in this class
    int rep_block = 0;     // lowest block index in the class
    std::size_t downloaded = 0, stage1 = 0, stage2 = 0;
    Rational cutset{0, 1};
    Rational ratio{0, 1};
    std::size_t bw_min = 0, bw_max = 0;  // across all n blocks of the point
    double min_ell_from_ratio = 0;
    bool min_ell_from_ratio_ok = false;
    double transfer_min_ell = 0;
    bool transfer_min_ell_ok = false;
    double linear_k_cap = 0;
    bool linear_k_cap_ok = false;
};

struct BenchResult {
    std::vector<BenchRow> rows;
    std::vector<std::string> notes;  // skipped points etc.
};

// The built-in sweep: every valid (n, k, t) with n - k in {2, 3, 4},
// n <= 12 and t in [1, n / (n - k)].
std::vector<std::array<int, 3>> full_grid();

// Parses "full" or "n,k,t;n,k,t;..." into a grid.
std::vector<std::array<int, 3>> parse_grid(const std::string& text);

// For each grid point: instantiate a code, encode a random message, repair
// every block once against the encoded data, and record the measured
// bandwidth per equivalence class (largest first).  Invalid points are
// skipped with a note.  Deterministic in `seed`.
BenchResult run_bench(const std::vector<std::array<int, 3>>& grid, unsigned field_bits,
                      std::uint64_t seed);

extern const char* const kBenchCsvHeader;
void write_csv(std::ostream& out, const BenchResult& result);

}  // namespace epmd
