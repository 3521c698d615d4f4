// SPDX-License-Identifier: Apache-2.0

#include "epmd/repair.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace epmd {

std::size_t RepairPlan::stage1_count() const {
    std::size_t acc = 0;
    for (const HelperRequests& h : stage1) acc += h.symbols.size();
    return acc;
}

std::size_t RepairPlan::stage2_count() const {
    std::size_t acc = 0;
    for (const RepairStep& st : stage2) acc += st.fetches.size();
    return acc;
}

Rational cutset_bound(int n, int k, int d, int ell) {
    if (d < k || d > n - 1) throw InvalidParams("cutset_bound: d must satisfy k <= d <= n - 1");
    return Rational::of(static_cast<std::int64_t>(d) * ell, d - k + 1);
}

RepairPlan plan_repair(const CodeParams& params, int failed_flat) {
    if (failed_flat < 1 || failed_flat > params.n)
        throw InvalidBlock("plan_repair: failed block out of range");
    return plan_repair(params, params.block(failed_flat));
}

RepairPlan plan_repair(const CodeParams& params, const BlockId& failed) {
    validate_params(params, /*require_rho=*/params.r > 1);
    if (failed.flat < 1 || failed.flat > params.n)
        throw InvalidBlock("plan_repair: failed block out of range");
    const BlockId fb = params.block(failed.flat);
    if ((failed.u != 0 || failed.v != 0) && (failed.u != fb.u || failed.v != fb.v))
        throw InvalidBlock("plan_repair: inconsistent block coordinates");

    RepairPlan plan;
    plan.failed = fb;
    plan.anchor = wrap(fb.v, params.t);
    const int a = plan.anchor;

    // anchor slice: the r^(t-1) symbols whose coordinate a equals the failed
    // block's group index
    std::vector<SymbolId> slice;
    for (int x = 0; x < params.ell; ++x) {
        SymbolId sym = params.symbol(x);
        if (sym.x[a - 1] == fb.u) slice.push_back(std::move(sym));
    }

    for (int i = 1; i <= params.n; ++i) {
        if (i == fb.flat) continue;
        plan.stage1.push_back(HelperRequests{params.block(i), slice});
    }

    for (int p = 1; p <= params.r - 1; ++p) {
        for (const SymbolId& base : slice) {
            RepairStep step;
            step.p = p;
            step.known = base;
            step.target = modify_vector(params, base, fb.v, p);
            for (int v = 1; v <= params.s; ++v) {
                if (v == fb.v || wrap(v, params.t) != a) continue;
                step.fetches.push_back(SymbolRequest{params.block_uv(fb.u, v), step.target});
            }
            plan.stage2.push_back(std::move(step));
        }
    }
    return plan;
}

std::vector<fe> execute_repair(const CodeParams& params, const Codeword& survivors,
                               const RepairPlan& plan) {
    validate_params(params, /*require_rho=*/params.r > 1);
    const Field& f = *params.field;
    if (plan.failed.flat < 1 || plan.failed.flat > params.n)
        throw PlanMismatch("execute_repair: plan names a block outside this code");
    const BlockId fb = params.block(plan.failed.flat);
    const int a = wrap(fb.v, params.t);
    if (plan.anchor != a) throw PlanMismatch("execute_repair: plan anchor does not match params");
    if (survivors.blocks.size() != static_cast<std::size_t>(params.n))
        throw PlanMismatch("execute_repair: survivor set must have n entries");

    auto fetch = [&](const BlockId& b, const SymbolId& sym) -> fe {
        if (b.flat < 1 || b.flat > params.n || b.flat == fb.flat)
            throw PlanMismatch("execute_repair: plan requests an unavailable block");
        const std::vector<fe>& blk = survivors.blocks[b.flat - 1];
        if (blk.size() != static_cast<std::size_t>(params.ell))
            throw PlanMismatch("execute_repair: surviving block missing or malformed");
        if (sym.flat < 0 || sym.flat >= params.ell)
            throw PlanMismatch("execute_repair: plan requests a symbol outside the block");
        return blk[sym.flat];
    };

    // stage 1: download the anchor slice of every helper
    std::vector<std::vector<fe>> got(params.n, std::vector<fe>(params.ell, 0));
    std::vector<std::vector<bool>> have(params.n, std::vector<bool>(params.ell, false));
    for (const HelperRequests& h : plan.stage1) {
        for (const SymbolId& sym : h.symbols) {
            got[h.helper.flat - 1][sym.flat] = fetch(h.helper, sym);
            have[h.helper.flat - 1][sym.flat] = true;
        }
    }

    // rebuild the anchor slice of the failed block: each plain constraint
    // sums one symbol slot over all n blocks to zero
    std::vector<fe> out(params.ell, 0);
    std::vector<bool> done(params.ell, false);
    for (int x = 0; x < params.ell; ++x) {
        const SymbolId sym = params.symbol(x);
        if (sym.x[a - 1] != fb.u) continue;
        fe acc = 0;
        for (int i = 1; i <= params.n; ++i) {
            if (i == fb.flat) continue;
            if (!have[i - 1][x])
                throw PlanMismatch("execute_repair: stage 1 does not cover the anchor slice");
            acc ^= got[i - 1][x];
        }
        out[x] = acc;
        done[x] = true;
    }

    // stage 2: each coupled constraint (p, known) has exactly one term from
    // the failed block -- rho times the target symbol -- and the rest is
    // stage-1 data plus the step's fetches
    const fe rho_inv = params.r > 1 ? f.inv(params.rho) : 1;
    for (const RepairStep& step : plan.stage2) {
        if (step.p < 1 || step.p > params.r - 1)
            throw PlanMismatch("execute_repair: coupling exponent out of range");
        const SymbolId& base = step.known;
        if (static_cast<int>(base.x.size()) != params.t || base.x[a - 1] != fb.u)
            throw PlanMismatch("execute_repair: step base symbol not in the anchor slice");
        const SymbolId target = modify_vector(params, base, fb.v, step.p);
        if (target.flat != step.target.flat)
            throw PlanMismatch("execute_repair: step target does not match its constraint");

        fe acc = 0;
        for (int i = 1; i <= params.n; ++i) {
            const fe lam = f.pow(params.lambda[i - 1], static_cast<std::uint64_t>(step.p));
            fe val;
            if (i == fb.flat) {
                val = out[base.flat];  // rebuilt in stage 1
            } else {
                if (!have[i - 1][base.flat])
                    throw PlanMismatch("execute_repair: stage 1 data missing for a solve step");
                val = got[i - 1][base.flat];
            }
            acc ^= f.mul(lam, val);
        }

        // coupling terms from the failed block's own group, other slots with
        // the same anchor coordinate: exactly the step's fetch list
        std::vector<std::pair<int, int>> needed;
        for (int v = 1; v <= params.s; ++v) {
            if (v == fb.v || wrap(v, params.t) != a) continue;
            needed.emplace_back(params.block_uv(fb.u, v).flat, target.flat);
        }
        std::vector<std::pair<int, int>> given;
        for (const SymbolRequest& req : step.fetches) {
            given.emplace_back(req.block.flat, req.symbol.flat);
            acc ^= f.mul(params.rho, fetch(req.block, req.symbol));
        }
        std::sort(needed.begin(), needed.end());
        std::sort(given.begin(), given.end());
        if (needed != given)
            throw PlanMismatch("execute_repair: step fetches do not match its constraint");

        // coupling terms attached to other coordinates stay inside the
        // anchor slice, so stage-1 data already covers them
        for (int v = 1; v <= params.s; ++v) {
            const int av = wrap(v, params.t);
            if (v == fb.v || av == a) continue;
            const int u = base.x[av - 1];
            const BlockId b = params.block_uv(u, v);
            const SymbolId shifted = modify_vector(params, base, v, step.p);
            if (b.flat == fb.flat || !have[b.flat - 1][shifted.flat])
                throw PlanMismatch("execute_repair: stage 1 data missing for a coupling term");
            acc ^= f.mul(params.rho, got[b.flat - 1][shifted.flat]);
        }

        out[target.flat] = f.mul(rho_inv, acc);
        done[target.flat] = true;
    }

    for (int x = 0; x < params.ell; ++x)
        if (!done[x]) throw PlanMismatch("execute_repair: plan does not cover the full block");
    return out;
}

RepairReport repair_report(const CodeParams& params, const RepairPlan& plan) {
    RepairReport rep;
    rep.stage1 = plan.stage1_count();
    rep.stage2 = plan.stage2_count();
    rep.downloaded = rep.stage1 + rep.stage2;
    rep.cutset = cutset_bound(params.n, params.k, params.n - 1, params.ell);
    rep.ratio = Rational::of(static_cast<std::int64_t>(rep.downloaded) * rep.cutset.den,
                             rep.cutset.num);
    rep.bound_ok = rep.ratio <= Rational::of(params.t + 1, params.t);
    return rep;
}

std::string RepairReport::to_text() const {
    std::ostringstream os;
    os << "downloaded=" << downloaded << '\n'
       << "stage1=" << stage1 << '\n'
       << "stage2=" << stage2 << '\n'
       << "cutset=" << cutset.str() << '\n'
       << "ratio=" << ratio.decimal() << '\n'
       << "bound_ok=" << (bound_ok ? 1 : 0) << '\n';
    return os.str();
}

BoundsReport bounds_report(int n, int k, int t, const RepairReport& measured) {
    if (n < 2 || k < 1 || k >= n || t < 1) throw InvalidParams("bounds_report: bad n, k or t");
    const int r = n - k;
    BoundsReport b;
    b.n = n;
    b.k = k;
    b.t = t;
    b.ell = 1;
    for (int j = 0; j < t; ++j) b.ell *= r;
    b.downloaded = measured.downloaded;
    b.cutset = measured.cutset;
    b.ratio = measured.ratio;
    b.bound_ok = measured.ratio <= Rational::of(t + 1, t);

    // any code repairing one block at this ratio needs ell >= r / ratio
    b.ratio_min_ell = measured.ratio.num == 0
                          ? 0.0
                          : static_cast<double>(r) / measured.ratio.value();
    b.ratio_min_ell_ok = static_cast<double>(b.ell) + 1e-9 >= b.ratio_min_ell;

    // repair-by-transfer (no arithmetic at the helpers) forces
    // ell >= r^(k / r)
    b.transfer_min_ell = std::pow(static_cast<double>(r), static_cast<double>(k) / r);
    b.transfer_min_ell_ok = static_cast<double>(b.ell) + 1e-9 >= b.transfer_min_ell;

    // linear repair schemes cap the data blocks:
    // k <= 2 * log2(ell) * (floor(log_{r/(r-1)} ell) + 1)
    if (r >= 2) {
        const double base = static_cast<double>(r) / (r - 1);
        const double lg = std::floor(std::log(static_cast<double>(b.ell)) / std::log(base) + 1e-9);
        b.linear_k_cap = 2.0 * std::log2(static_cast<double>(b.ell)) * (lg + 1.0);
    } else {
        b.linear_k_cap = std::numeric_limits<double>::infinity();
    }
    b.linear_k_cap_ok = static_cast<double>(k) <= b.linear_k_cap + 1e-9;
    return b;
}

std::string BoundsReport::to_text() const {
    std::ostringstream os;
    os << "n=" << n << '\n'
       << "k=" << k << '\n'
       << "t=" << t << '\n'
       << "ell=" << ell << '\n'
       << "downloaded=" << downloaded << '\n'
       << "cutset=" << cutset.str() << '\n'
       << "ratio=" << ratio.decimal() << '\n'
       << "bound_ok=" << (bound_ok ? 1 : 0) << '\n'
       << "min_ell_from_ratio=" << ratio_min_ell << '\n'
       << "min_ell_from_ratio_ok=" << (ratio_min_ell_ok ? 1 : 0) << '\n'
       << "transfer_min_ell=" << transfer_min_ell << '\n'
       << "transfer_min_ell_ok=" << (transfer_min_ell_ok ? 1 : 0) << '\n'
       << "linear_k_cap=" << linear_k_cap << '\n'
       << "linear_k_cap_ok=" << (linear_k_cap_ok ? 1 : 0) << '\n';
    return os.str();
}

}  // namespace epmd
