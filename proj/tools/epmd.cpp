// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: generate code instances, encode data into shards,
// decode from surviving shards, rebuild single blocks at measured bandwidth,
// and sweep the parameter grid.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "epmd/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact-repair MDS block codes with minimal repair bandwidth"};
    app.require_subcommand(1);

    epmd::cli::GenOpts gen;
    std::string gen_poly;
    auto* cgen = app.add_subcommand("gen", "sample a code instance and write its spec file");
    cgen->add_option("n", gen.n, "total blocks")->required();
    cgen->add_option("k", gen.k, "data blocks")->required();
    cgen->add_option("t", gen.t, "coupling depth (1 <= t <= n/(n-k))")->required();
    cgen->add_option("--field-bits", gen.field_bits, "field width: 8, 16 or 32")
        ->capture_default_str();
    cgen->add_option("--poly", gen_poly, "reduction polynomial (hex), 0 = default");
    cgen->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
    cgen->add_option("--retries", gen.retries, "max sampled rho candidates")
        ->capture_default_str();
    cgen->add_option("--out", gen.out, "spec file to write")->capture_default_str();

    epmd::cli::VerifyOpts verify;
    auto* cverify = app.add_subcommand("verify", "re-check that a spec file is MDS");
    cverify->add_option("--spec", verify.spec, "spec file")->required();

    epmd::cli::EncodeOpts encode;
    auto* cencode = app.add_subcommand("encode", "encode a message file into n shards");
    cencode->add_option("--spec", encode.spec, "spec file")->required();
    cencode->add_option("input", encode.input, "message file (k*ell symbols)")->required();
    cencode->add_option("--out", encode.out, "output prefix")->required();
    cencode->add_flag("--skip-verify", encode.skip_verify, "skip the MDS re-check on load");

    epmd::cli::DecodeOpts decode;
    auto* cdecode = app.add_subcommand("decode", "recover message and shards from survivors");
    cdecode->add_option("--spec", decode.spec, "spec file")->required();
    cdecode->add_option("prefix", decode.prefix, "shard prefix (reads <prefix>.b<i>)")
        ->required();
    cdecode->add_option("--out", decode.out, "output prefix (default: shard prefix)");
    cdecode->add_flag("--skip-verify", decode.skip_verify, "skip the MDS re-check on load");

    epmd::cli::RepairOpts repair;
    auto* crepair = app.add_subcommand("repair", "rebuild failed blocks one at a time");
    crepair->add_option("--spec", repair.spec, "spec file")->required();
    crepair->add_option("prefix", repair.prefix, "shard prefix")->required();
    crepair->add_option("--failed", repair.failed, "blocks to rebuild, e.g. 3 or 3,5")
        ->required();
    crepair->add_option("--out", repair.out, "shard path (single block only)");
    crepair->add_flag("--skip-verify", repair.skip_verify, "skip the MDS re-check on load");

    epmd::cli::BenchOpts bench;
    auto* cbench = app.add_subcommand("bench", "measure repair bandwidth over a grid");
    cbench->add_option("--grid", bench.grid, "'full' or 'n,k,t;n,k,t;...'")
        ->capture_default_str();
    cbench->add_option("--field-bits", bench.field_bits, "field width")->capture_default_str();
    cbench->add_option("--seed", bench.seed, "RNG seed")->capture_default_str();
    cbench->add_option("--out", bench.out, "CSV path (default: stdout)");

    epmd::cli::SimOpts sim;
    auto* csim = app.add_subcommand("sim", "simulate fail/repair rounds on one cluster");
    csim->add_option("--spec", sim.spec, "spec file")->required();
    csim->add_option("--failed", sim.failed, "'all' or block list")->capture_default_str();
    csim->add_option("--seed", sim.seed, "RNG seed for the encoded message")
        ->capture_default_str();
    csim->add_flag("--skip-verify", sim.skip_verify, "skip the MDS re-check on load");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // CLI11 uses 0 for --help; map real parse errors to the validation code
        return code == 0 ? 0 : epmd::cli::kValidation;
    }

    if (cgen->parsed()) {
        if (!gen_poly.empty()) {
            try {
                gen.poly = std::stoull(gen_poly, nullptr, 16);
            } catch (const std::exception&) {
                std::cerr << "error: bad polynomial '" << gen_poly << "'\n";
                return epmd::cli::kValidation;
            }
        }
        return epmd::cli::run_gen(gen, std::cout, std::cerr);
    }
    if (cverify->parsed()) return epmd::cli::run_verify(verify, std::cout, std::cerr);
    if (cencode->parsed()) return epmd::cli::run_encode(encode, std::cout, std::cerr);
    if (cdecode->parsed()) return epmd::cli::run_decode(decode, std::cout, std::cerr);
    if (crepair->parsed()) return epmd::cli::run_repair(repair, std::cout, std::cerr);
    if (cbench->parsed()) return epmd::cli::run_bench_cmd(bench, std::cout, std::cerr);
    if (csim->parsed()) return epmd::cli::run_sim(sim, std::cout, std::cerr);
    return epmd::cli::kValidation;
}
