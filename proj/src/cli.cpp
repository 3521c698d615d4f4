// SPDX-License-Identifier: Apache-2.0

#include "epmd/cli.hpp"

#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <vector>

#include "epmd/bench.hpp"
#include "epmd/cluster.hpp"
#include "epmd/codeword_io.hpp"
#include "epmd/mds.hpp"
#include "epmd/spec_file.hpp"

namespace epmd::cli {

namespace {

template <typename Fn>
int guard(std::ostream& err, Fn fn) {
    try {
        return fn();
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const VerificationFailed& e) {
        err << "error: " << e.what() << '\n';
        return kVerification;
    } catch (const RetriesExhausted& e) {
        err << "error: " << e.what() << '\n';
        return kVerification;
    } catch (const InconsistentInput& e) {
        err << "error: " << e.what() << '\n';
        return kVerification;
    } catch (const SingularMatrix& e) {
        err << "error: " << e.what() << '\n';
        return kVerification;
    } catch (const Error& e) {
        // InvalidParams, InvalidBlock, PlanMismatch, ScenarioInfeasible, ...
        err << "error: " << e.what() << '\n';
        return kValidation;
    }
}

std::vector<int> parse_block_list(const std::string& text) {
    std::vector<int> blocks;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        std::istringstream one(item);
        int b = 0;
        one >> b;
        if (one.fail() || !(one >> std::ws).eof())
            throw InvalidParams("bad block list entry '" + item + "'");
        blocks.push_back(b);
    }
    if (blocks.empty()) throw InvalidParams("empty block list");
    return blocks;
}

}  // namespace

int run_gen(const GenOpts& opts, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        auto field = std::make_shared<const Field>(opts.field_bits, opts.poly);
        CodeParams base = make_params(opts.n, opts.k, opts.t, field);

        const Rational bound = sampling_failure_bound(base);
        out << "per_draw_failure_bound=" << bound.str() << " (~" << bound.value() << ")\n";
        if (sampling_headroom(base) < 10.0) {
            const std::uint64_t weight =
                binomial(base.n, base.r) * static_cast<std::uint64_t>(base.r) * base.ell;
            err << "warning: q-1 = " << field->order() - 1
                << " barely exceeds the union-bound weight C(n,r)*r*ell = " << weight
                << "; sampling may need retries (consider a wider field)\n";
        }

        const CodeParams sampled = sample_code(base, opts.seed, opts.retries);
        save_spec(opts.out, spec_from_params(sampled, opts.seed));
        out << "rho=" << sampled.rho << '\n';
        out << "subsets_verified=" << binomial(sampled.n, sampled.r) << '\n';
        out << "wrote " << opts.out << '\n';
        return kOk;
    });
}

int run_verify(const VerifyOpts& opts, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        const CodeParams params = params_from_spec(load_spec(opts.spec));
        const MdsReport report = verify_mds(build_parity_matrix(params));
        out << "subsets_checked=" << report.subsets_checked << '\n';
        out << "is_mds=" << (report.is_mds ? 1 : 0) << '\n';
        if (!report.is_mds) {
            out << "failing_subset=";
            const std::vector<int>& sub = *report.failing_subset;
            for (std::size_t i = 0; i < sub.size(); ++i) out << (i ? "," : "") << sub[i];
            out << '\n';
            err << "error: '" << opts.spec << "' does not define an MDS code\n";
            return kVerification;
        }
        return kOk;
    });
}

int run_encode(const EncodeOpts& opts, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        const CodeParams params = load_params(opts.spec, opts.skip_verify);
        const std::vector<fe> message = read_message(opts.input, params);
        const Codeword cw = encode(params, message);
        write_codeword(opts.out + ".epmd", params, cw);
        for (int i = 1; i <= params.n; ++i)
            write_shard(shard_path(opts.out, i), params, cw.blocks[i - 1]);
        out << "wrote " << opts.out << ".epmd and " << params.n << " shards ("
            << params.ell * params.field->symbol_bytes() << " bytes each)\n";
        return kOk;
    });
}

int run_decode(const DecodeOpts& opts, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        const CodeParams params = load_params(opts.spec, opts.skip_verify);
        const std::string out_prefix = opts.out.empty() ? opts.prefix : opts.out;

        Codeword received;
        received.blocks.assign(params.n, {});
        ErasurePattern pattern;
        for (int i = 1; i <= params.n; ++i) {
            const std::string path = shard_path(opts.prefix, i);
            if (file_exists(path))
                received.blocks[i - 1] = read_shard(path, params);
            else
                pattern.erased.push_back(i);
        }
        if (static_cast<int>(pattern.erased.size()) > params.r) {
            std::ostringstream os;
            os << "decode: " << pattern.erased.size() << " shards missing, but only "
               << params.r << " erasures are correctable";
            throw InvalidParams(os.str());
        }

        const Codeword full = decode_erasures(params, received, pattern);
        for (int b : pattern.erased)
            write_shard(shard_path(out_prefix, b), params, full.blocks[b - 1]);
        write_message(out_prefix + ".data", params, message_of(params, full));
        write_codeword(out_prefix + ".epmd", params, full);

        out << "erased=";
        if (pattern.erased.empty()) out << "none";
        for (std::size_t i = 0; i < pattern.erased.size(); ++i)
            out << (i ? "," : "") << pattern.erased[i];
        out << '\n';
        out << "wrote " << out_prefix << ".data (" << params.k * params.ell << " symbols)\n";
        return kOk;
    });
}

int run_repair(const RepairOpts& opts, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        const CodeParams params = load_params(opts.spec, opts.skip_verify);
        const std::vector<int> failed_list = parse_block_list(opts.failed);
        if (!opts.out.empty() && failed_list.size() != 1)
            throw InvalidParams("repair: --out works with a single failed block");

        for (int failed : failed_list) {
            if (failed < 1 || failed > params.n) throw InvalidBlock("repair: no such block");
            Codeword survivors;
            survivors.blocks.assign(params.n, {});
            for (int i = 1; i <= params.n; ++i) {
                if (i == failed) continue;
                survivors.blocks[i - 1] = read_shard(shard_path(opts.prefix, i), params);
            }

            const RepairPlan plan = plan_repair(params, failed);
            const std::vector<fe> rebuilt = execute_repair(params, survivors, plan);
            const RepairReport rep = repair_report(params, plan);

            const std::string dest =
                opts.out.empty() ? shard_path(opts.prefix, failed) : opts.out;
            const bool had_old = file_exists(dest);
            std::vector<fe> old;
            if (had_old) old = read_shard(dest, params);
            write_shard(dest, params, rebuilt);

            out << "block=" << failed << '\n' << rep.to_text();
            if (had_old) out << "matches_previous=" << (old == rebuilt ? 1 : 0) << '\n';
            out << "wrote " << dest << '\n';
        }
        return kOk;
    });
}

int run_bench_cmd(const BenchOpts& opts, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        const BenchResult result = run_bench(parse_grid(opts.grid), opts.field_bits, opts.seed);
        for (const std::string& note : result.notes) err << "note: " << note << '\n';
        if (opts.out.empty()) {
            write_csv(out, result);
        } else {
            std::ofstream file(opts.out, std::ios::binary);
            if (!file) throw IoError("cannot open '" + opts.out + "' for writing");
            write_csv(file, result);
            if (!file.flush()) throw IoError("write to '" + opts.out + "' failed");
            out << "wrote " << opts.out << " (" << result.rows.size() << " rows)\n";
        }
        return kOk;
    });
}

int run_sim(const SimOpts& opts, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        const CodeParams params = load_params(opts.spec, opts.skip_verify);
        std::vector<int> scenario;
        if (opts.failed == "all") {
            for (int i = 1; i <= params.n; ++i) scenario.push_back(i);
        } else {
            scenario = parse_block_list(opts.failed);
        }
        const SimSummary summary = sim_run(params, scenario, opts.seed);
        out << summary.to_text();
        return summary.final_ok ? kOk : kVerification;
    });
}

}  // namespace epmd::cli
