// SPDX-License-Identifier: Apache-2.0
//
// Acceptance runner: exercises the end-to-end guarantees the library makes
// -- construction layout, instance sampling, repair correctness and exact
// bandwidth, grid-wide bound compliance, full erasure decoding, the transfer
// structure of repair plans, and builder equivalence -- and prints one
// PASS/FAIL line per criterion.  Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "epmd/bench.hpp"
#include "epmd/cluster.hpp"
#include "epmd/codec.hpp"
#include "epmd/mds.hpp"
#include "epmd/repair.hpp"

using namespace epmd;

namespace {

using Result = std::optional<std::string>;  // nullopt: pass; string: failure detail

std::shared_ptr<const Field> gf64k() {
    static auto f = std::make_shared<const Field>(16);
    return f;
}

std::vector<fe> random_message(const CodeParams& p, std::mt19937_64& rng) {
    std::vector<fe> msg(static_cast<std::size_t>(p.k) * p.ell);
    for (fe& v : msg) v = static_cast<fe>(rng() % p.field->order());
    return msg;
}

std::string describe(int n, int k, int t) {
    std::ostringstream os;
    os << "(" << n << "," << k << "," << t << ")";
    return os.str();
}

// ---------------------------------------------------------------- criterion 1

// Expected (6,3,1) layout: '.' zero, '1' one, 'L' lambda_i, 'Q' lambda_i^2,
// 'R' rho, with block i owning columns 3(i-1)..3i-1.
constexpr const char* kGolden[9] = {
    "1..1..1..1..1..1..",
    ".1..1..1..1..1..1.",
    "..1..1..1..1..1..1",
    "LR.LR.L..L..L..L..",
    ".L..L..LR.LR.L..L.",
    "..L..L..L..LR.LR.L",
    "Q.RQ.RQ..Q..Q..Q..",
    ".Q..Q.RQ.RQ..Q..Q.",
    "..Q..Q..Q..Q.RQ.RQ",
};

Result golden_layout() {
    auto field = std::make_shared<const Field>(8);
    const CodeParams p = make_params(6, 3, 1, field, {}, 0x35);
    const ParityCheckMatrix pcm = build_parity_matrix(p);
    if (pcm.mat.rows() != 9 || pcm.mat.cols() != 18) return std::string("wrong dimensions");
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 18; ++j) {
            const fe lam = p.lambda[j / 3];
            fe want = 0;
            switch (kGolden[i][j]) {
                case '1': want = 1; break;
                case 'L': want = lam; break;
                case 'Q': want = field->mul(lam, lam); break;
                case 'R': want = p.rho; break;
                default: break;
            }
            if (pcm.mat.at(i, j) != want) {
                std::ostringstream os;
                os << "cell (" << i << "," << j << "): got " << pcm.mat.at(i, j) << ", want "
                   << want;
                return os.str();
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- criterion 2

Result sampling_reliability() {
    const CodeParams base = make_params(6, 3, 1, gf64k());
    int ok = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        try {
            const CodeParams code = sample_code(base, seed, 5);
            if (code.rho != 0) ++ok;
        } catch (const RetriesExhausted&) {
        }
    }
    if (ok < 999) {
        std::ostringstream os;
        os << "only " << ok << "/1000 seeds produced an MDS instance within 5 draws";
        return os.str();
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- criterion 3

Result repair_correctness() {
    const std::array<std::array<int, 3>, 5> sets{
        {{6, 3, 1}, {9, 6, 2}, {6, 3, 2}, {8, 4, 2}, {6, 4, 3}}};
    std::mt19937_64 rng(2024);
    for (const auto& [n, k, t] : sets) {
        const CodeParams p = sample_code(make_params(n, k, t, gf64k()), 7, 5);
        std::vector<RepairPlan> plans;
        for (int b = 1; b <= n; ++b) plans.push_back(plan_repair(p, b));
        for (int trial = 0; trial < 100; ++trial) {
            const Codeword cw = encode(p, random_message(p, rng));
            for (int b = 1; b <= n; ++b) {
                Codeword survivors = cw;
                survivors.blocks[b - 1].clear();
                const std::vector<fe> rebuilt = execute_repair(p, survivors, plans[b - 1]);
                if (rebuilt != cw.blocks[b - 1]) {
                    std::ostringstream os;
                    os << describe(n, k, t) << " trial " << trial << ": block " << b
                       << " repaired incorrectly";
                    return os.str();
                }
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- criterion 4

Result exact_bandwidth() {
    struct Expect {
        int n, k, t;
        std::size_t worst;
        std::int64_t cutset;
    };
    const Expect cases[] = {{6, 3, 1, 7, 5}, {9, 6, 2, 30, 24}, {6, 3, 2, 15, 15}};
    for (const Expect& e : cases) {
        const CodeParams p = sample_code(make_params(e.n, e.k, e.t, gf64k()), 7, 5);
        std::size_t worst = 0;
        for (int b = 1; b <= e.n; ++b) {
            const RepairReport rep = repair_report(p, plan_repair(p, b));
            worst = std::max(worst, rep.downloaded);
            if (rep.cutset != Rational::of(e.cutset, 1)) {
                std::ostringstream os;
                os << describe(e.n, e.k, e.t) << ": cut-set " << rep.cutset.str() << ", want "
                   << e.cutset;
                return os.str();
            }
            if (!rep.bound_ok) return describe(e.n, e.k, e.t) + ": coupling bound violated";
        }
        if (worst != e.worst) {
            std::ostringstream os;
            os << describe(e.n, e.k, e.t) << ": worst-case download " << worst << ", want "
               << e.worst;
            return os.str();
        }
    }
    // spot-check the per-class split of (9,6,2): slots 1 and 3 pay 30, slot 2
    // meets the cut-set
    const CodeParams p = sample_code(make_params(9, 6, 2, gf64k()), 7, 5);
    for (int b = 1; b <= 9; ++b) {
        const RepairReport rep = repair_report(p, plan_repair(p, b));
        const std::size_t want = p.block(b).v == 2 ? 24 : 30;
        if (rep.downloaded != want) {
            std::ostringstream os;
            os << "(9,6,2) block " << b << ": downloaded " << rep.downloaded << ", want "
               << want;
            return os.str();
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- criterion 5

Result grid_sweep() {
    const auto grid = full_grid();
    const BenchResult result = run_bench(grid, 16, 1);
    if (!result.notes.empty()) return "grid produced skip notes: " + result.notes.front();
    std::set<std::array<int, 3>> seen;
    for (const BenchRow& row : result.rows) {
        seen.insert({row.n, row.k, row.t});
        const Rational upper = Rational::of(row.t + 1, row.t);
        if (row.ratio < Rational::of(1, 1) || row.ratio > upper) {
            std::ostringstream os;
            os << describe(row.n, row.k, row.t) << ": ratio " << row.ratio.str()
               << " outside [1, " << upper.str() << "]";
            return os.str();
        }
        if (row.downloaded != row.stage1 + row.stage2)
            return describe(row.n, row.k, row.t) + ": stage counts do not add up";
        const std::size_t stage1_want =
            static_cast<std::size_t>(row.n - 1) * (row.ell / (row.n - row.k));
        if (row.stage1 != stage1_want)
            return describe(row.n, row.k, row.t) + ": stage-1 volume is not (n-1)*ell/r";
        // the sub-packetization floor implied by the measured blow-up factor
        // binds every code; the other two reference floors in the CSV apply
        // only to bandwidth-optimal codes and may legitimately read false here
        if (!row.min_ell_from_ratio_ok)
            return describe(row.n, row.k, row.t) + ": ell below the blow-up-implied floor";
    }
    if (seen.size() != grid.size()) {
        std::ostringstream os;
        os << "only " << seen.size() << "/" << grid.size() << " grid points produced rows";
        return os.str();
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- criterion 6

Result all_erasure_patterns() {
    std::mt19937_64 rng(99);
    for (const auto& [n, k, t] : {std::array<int, 3>{6, 3, 1}, {8, 4, 1}}) {
        const CodeParams p = sample_code(make_params(n, k, t, gf64k()), 3, 5);
        const Codeword cw = encode(p, random_message(p, rng));
        const int r = p.r;
        std::vector<int> subset(r);
        for (int i = 0; i < r; ++i) subset[i] = i + 1;
        std::uint64_t patterns = 0;
        while (true) {
            Codeword damaged = cw;
            for (int b : subset) damaged.blocks[b - 1].clear();
            const Codeword fixed = decode_erasures(p, damaged, ErasurePattern{subset});
            for (int i = 0; i < n; ++i) {
                if (fixed.blocks[i] != cw.blocks[i]) {
                    std::ostringstream os;
                    os << describe(n, k, t) << ": pattern {";
                    for (std::size_t j = 0; j < subset.size(); ++j)
                        os << (j ? "," : "") << subset[j];
                    os << "} decoded wrongly";
                    return os.str();
                }
            }
            ++patterns;
            int i = r - 1;
            while (i >= 0 && subset[i] == n - (r - 1 - i)) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < r; ++j) subset[j] = subset[j - 1] + 1;
        }
        if (patterns != binomial(n, r)) {
            std::ostringstream os;
            os << describe(n, k, t) << ": enumerated " << patterns << " patterns, want "
               << binomial(n, r);
            return os.str();
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- criterion 7

Result transfer_structure() {
    for (const auto& [n, k, t] :
         {std::array<int, 3>{6, 3, 1}, {9, 6, 2}, {8, 4, 2}, {6, 4, 2}}) {
        const CodeParams p = sample_code(make_params(n, k, t, gf64k()), 5, 5);
        for (int b = 1; b <= n; ++b) {
            const RepairPlan plan = plan_repair(p, b);
            std::set<std::pair<int, int>> seen;
            auto take = [&](const BlockId& blk, const SymbolId& sym) -> Result {
                std::ostringstream os;
                if (blk.flat == b) {
                    os << describe(n, k, t) << " block " << b << ": plan reads the failed block";
                    return os.str();
                }
                if (blk.flat < 1 || blk.flat > n || sym.flat < 0 || sym.flat >= p.ell) {
                    os << describe(n, k, t) << " block " << b << ": request out of range";
                    return os.str();
                }
                if (!seen.emplace(blk.flat, sym.flat).second) {
                    os << describe(n, k, t) << " block " << b << ": symbol requested twice";
                    return os.str();
                }
                return std::nullopt;
            };
            // stage 1 is a pure slice: the same r^(t-1) symbol ids from every
            // other block, no transformation involved
            if (plan.stage1.size() != static_cast<std::size_t>(n - 1))
                return describe(n, k, t) + ": stage 1 must touch all other blocks";
            const std::size_t slice = static_cast<std::size_t>(p.ell / p.r);
            for (const HelperRequests& h : plan.stage1) {
                if (h.symbols.size() != slice)
                    return describe(n, k, t) + ": helper slice has the wrong size";
                for (const SymbolId& sym : h.symbols) {
                    if (sym.x[plan.anchor - 1] != plan.failed.u)
                        return describe(n, k, t) + ": stage-1 symbol outside the anchor slice";
                    if (Result r = take(h.helper, sym)) return r;
                }
            }
            // stage 2 fetches are verbatim copies of the target symbol id
            // from same-group blocks
            for (const RepairStep& st : plan.stage2) {
                for (const SymbolRequest& req : st.fetches) {
                    if (req.symbol.flat != st.target.flat)
                        return describe(n, k, t) + ": fetch is not the target symbol itself";
                    if (req.block.u != plan.failed.u)
                        return describe(n, k, t) + ": fetch leaves the failed block's group";
                    if (Result r = take(req.block, req.symbol)) return r;
                }
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- criterion 8

Result builder_equivalence() {
    std::mt19937_64 rng(17);
    for (int r = 2; r <= 4; ++r) {
        for (int n = 2 * r; n <= 12; n += r) {
            const fe rho = static_cast<fe>(1 + rng() % (gf64k()->order() - 1));
            const CodeParams p = make_params(n, n - r, 1, gf64k(), {}, rho);
            const ParityCheckMatrix general = build_parity_matrix(p);
            const ParityCheckMatrix direct = build_parity_matrix_t1(p);
            if (!(general.mat == direct.mat)) {
                std::ostringstream os;
                os << describe(n, n - r, 1) << ": builders disagree";
                return os.str();
            }
        }
    }
    return std::nullopt;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        double budget_s;
        Result (*fn)();
    };
    const Entry entries[] = {
        {"C1 parity-check layout of (6,3,1) matches the golden grid", 60, golden_layout},
        {"C2 sampling: >=999/1000 seeds give MDS within 5 draws", 10, sampling_reliability},
        {"C3 repair rebuilds every block, 5 codes x 100 messages", 60, repair_correctness},
        {"C4 exact bandwidth: 7/5, 30/24 and 15/15 symbols", 60, exact_bandwidth},
        {"C5 grid sweep: ratio within [1, 1+1/t] at all 34 points", 300, grid_sweep},
        {"C6 every full-radius erasure pattern decodes", 60, all_erasure_patterns},
        {"C7 repair plans are pure symbol transfers", 60, transfer_structure},
        {"C8 general and single-level builders agree at t=1", 60, builder_equivalence},
    };

    int failures = 0;
    for (const Entry& e : entries) {
        const auto start = std::chrono::steady_clock::now();
        Result result;
        try {
            result = e.fn();
        } catch (const std::exception& ex) {
            result = std::string("exception: ") + ex.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!result && secs > e.budget_s) {
            std::ostringstream os;
            os << "took " << secs << "s, budget " << e.budget_s << "s";
            result = os.str();
        }
        std::printf("[%s] %s (%.2fs)\n", result ? "FAIL" : "PASS", e.name, secs);
        if (result) {
            std::printf("       %s\n", result->c_str());
            ++failures;
        }
    }
    std::printf("%d/8 criteria passed\n", 8 - failures);
    return failures;
}
