// SPDX-License-Identifier: Apache-2.0

#include "epmd/cluster.hpp"

#include <random>
#include <sstream>

namespace epmd {

SimSummary sim_run(const CodeParams& params, const std::vector<int>& scenario,
                   std::uint64_t seed) {
    validate_params(params, /*require_rho=*/params.r > 1);
    for (int b : scenario) {
        if (b < 1 || b > params.n) {
            std::ostringstream os;
            os << "sim: block " << b << " does not exist (n=" << params.n << ")";
            throw ScenarioInfeasible(os.str());
        }
    }

    std::mt19937_64 rng(seed);
    std::vector<fe> message(static_cast<std::size_t>(params.k) * params.ell);
    for (fe& v : message) v = static_cast<fe>(rng() % params.field->order());

    ClusterState state;
    state.params = params;
    state.original = encode(params, message);
    state.current = state.original;
    state.served.assign(params.n, 0);

    for (int failed : scenario) {
        Codeword survivors = state.current;
        survivors.blocks[failed - 1].clear();

        const RepairPlan plan = plan_repair(params, failed);
        const RepairReport rep = repair_report(params, plan);
        const std::vector<fe> rebuilt = execute_repair(params, survivors, plan);
        if (rebuilt != state.original.blocks[failed - 1])
            throw Error("sim: repaired block differs from the original encoding");
        state.current.blocks[failed - 1] = rebuilt;

        for (const HelperRequests& h : plan.stage1)
            state.served[h.helper.flat - 1] += h.symbols.size();
        for (const RepairStep& st : plan.stage2)
            for (const SymbolRequest& req : st.fetches) state.served[req.block.flat - 1] += 1;

        state.events.push_back(
            ClusterEvent{failed, rep.downloaded, rep.stage1, rep.stage2, rep.ratio});
    }

    SimSummary summary;
    summary.n = params.n;
    summary.repairs = state.events.size();
    for (const ClusterEvent& e : state.events) summary.total_downloaded += e.downloaded;
    summary.cutset = cutset_bound(params.n, params.k, params.n - 1, params.ell);
    summary.final_ok = true;
    for (int i = 0; i < params.n; ++i)
        summary.final_ok =
            summary.final_ok && state.current.blocks[i] == state.original.blocks[i];
    summary.served = state.served;
    summary.events = state.events;
    return summary;
}

std::string SimSummary::to_text() const {
    std::ostringstream os;
    for (const ClusterEvent& e : events) {
        os << "repair block=" << e.failed << " downloaded=" << e.downloaded
           << " stage1=" << e.stage1 << " stage2=" << e.stage2 << " ratio=" << e.ratio.decimal()
           << '\n';
    }
    os << "repairs=" << repairs << '\n'
       << "total_downloaded=" << total_downloaded << '\n'
       << "cutset_per_repair=" << cutset.str() << '\n'
       << "final_ok=" << (final_ok ? 1 : 0) << '\n';
    os << "node_served=";
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << served[i];
    os << '\n';
    return os.str();
}

}  // namespace epmd
