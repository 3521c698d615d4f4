// SPDX-License-Identifier: Apache-2.0

#include "epmd/bench.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>

namespace epmd {

const char* const kBenchCsvHeader =
    "n,k,t,w,ell,failed_class_blocks,rep_block,downloaded,stage1,stage2,cutset,ratio,"
    "bw_min,bw_max,min_ell_from_ratio,min_ell_from_ratio_ok,transfer_min_ell,"
    "transfer_min_ell_ok,linear_k_cap,linear_k_cap_ok";

std::vector<std::array<int, 3>> full_grid() {
    std::vector<std::array<int, 3>> grid;
    for (int r = 2; r <= 4; ++r) {
        for (int n = 2 * r; n <= 12; n += r) {
            const int s = n / r;
            for (int t = 1; t <= s; ++t) grid.push_back({n, n - r, t});
        }
    }
    return grid;
}

std::vector<std::array<int, 3>> parse_grid(const std::string& text) {
    if (text == "full" || text.empty()) return full_grid();
    std::vector<std::array<int, 3>> grid;
    std::istringstream points(text);
    std::string point;
    while (std::getline(points, point, ';')) {
        if (point.empty()) continue;
        std::array<int, 3> nkt{};
        char c1 = 0, c2 = 0;
        std::istringstream is(point);
        is >> nkt[0] >> c1 >> nkt[1] >> c2 >> nkt[2];
        if (is.fail() || c1 != ',' || c2 != ',' || !(is >> std::ws).eof())
            throw InvalidParams("bench: bad grid point '" + point + "' (want n,k,t)");
        grid.push_back(nkt);
    }
    if (grid.empty()) throw InvalidParams("bench: empty grid");
    return grid;
}

BenchResult run_bench(const std::vector<std::array<int, 3>>& grid, unsigned field_bits,
                      std::uint64_t seed) {
    BenchResult result;
    auto field = std::make_shared<const Field>(field_bits);
    std::mt19937_64 rng(seed);

    for (const auto& [n, k, t] : grid) {
        CodeParams params;
        try {
            params = make_params(n, k, t, field);
        } catch (const InvalidParams& e) {
            std::ostringstream os;
            os << "skip n=" << n << " k=" << k << " t=" << t << ": " << e.what();
            result.notes.push_back(os.str());
            continue;
        }

        // a random non-zero rho leaves the systematic encode solvable with
        // overwhelming probability; retry the rare singular draw
        std::vector<fe> message(static_cast<std::size_t>(params.k) * params.ell);
        for (fe& v : message) v = static_cast<fe>(rng() % field->order());
        Codeword cw;
        bool encoded = false;
        for (int attempt = 0; attempt < 32 && !encoded; ++attempt) {
            params.rho = static_cast<fe>(1 + rng() % (field->order() - 1));
            try {
                cw = encode(params, message);
                encoded = true;
            } catch (const SingularMatrix&) {
            }
        }
        if (!encoded) {
            std::ostringstream os;
            os << "skip n=" << n << " k=" << k << " t=" << t
               << ": no usable rho in 32 draws";
            result.notes.push_back(os.str());
            continue;
        }

        // repair every block once; group blocks by measured bandwidth
        std::map<std::size_t, BenchRow, std::greater<>> classes;
        std::size_t bw_min = 0, bw_max = 0;
        for (int failed = 1; failed <= params.n; ++failed) {
            Codeword survivors = cw;
            survivors.blocks[failed - 1].clear();
            const RepairPlan plan = plan_repair(params, failed);
            const std::vector<fe> rebuilt = execute_repair(params, survivors, plan);
            if (rebuilt != cw.blocks[failed - 1])
                throw Error("bench: repaired block differs from the encoding");
            const RepairReport rep = repair_report(params, plan);

            bw_min = failed == 1 ? rep.downloaded : std::min(bw_min, rep.downloaded);
            bw_max = std::max(bw_max, rep.downloaded);
            auto [it, fresh] = classes.try_emplace(rep.downloaded);
            BenchRow& row = it->second;
            if (fresh) {
                const BoundsReport bounds = bounds_report(n, k, t, rep);
                row.n = n;
                row.k = k;
                row.t = t;
                row.w = field_bits;
                row.ell = params.ell;
                row.rep_block = failed;
                row.downloaded = rep.downloaded;
                row.stage1 = rep.stage1;
                row.stage2 = rep.stage2;
                row.cutset = rep.cutset;
                row.ratio = rep.ratio;
                row.min_ell_from_ratio = bounds.ratio_min_ell;
                row.min_ell_from_ratio_ok = bounds.ratio_min_ell_ok;
                row.transfer_min_ell = bounds.transfer_min_ell;
                row.transfer_min_ell_ok = bounds.transfer_min_ell_ok;
                row.linear_k_cap = bounds.linear_k_cap;
                row.linear_k_cap_ok = bounds.linear_k_cap_ok;
            }
            row.class_blocks += 1;
        }
        for (auto& [bw, row] : classes) {
            row.bw_min = bw_min;
            row.bw_max = bw_max;
            result.rows.push_back(row);
        }
    }
    return result;
}

void write_csv(std::ostream& out, const BenchResult& result) {
    out << kBenchCsvHeader << '\n';
    for (const BenchRow& r : result.rows) {
        out << r.n << ',' << r.k << ',' << r.t << ',' << r.w << ',' << r.ell << ','
            << r.class_blocks << ',' << r.rep_block << ',' << r.downloaded << ',' << r.stage1
            << ',' << r.stage2 << ',' << r.cutset.str() << ',' << r.ratio.decimal() << ','
            << r.bw_min << ',' << r.bw_max << ',' << r.min_ell_from_ratio << ','
            << (r.min_ell_from_ratio_ok ? 1 : 0) << ',' << r.transfer_min_ell << ','
            << (r.transfer_min_ell_ok ? 1 : 0) << ',' << r.linear_k_cap << ','
            << (r.linear_k_cap_ok ? 1 : 0) << '\n';
    }
}

}  // namespace epmd
