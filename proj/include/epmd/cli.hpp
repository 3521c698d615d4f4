// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace epmd::cli {

// process exit codes
inline constexpr int kOk = 0;
inline constexpr int kValidation = 2;    // bad parameters, arguments or inputs
inline constexpr int kVerification = 3;  // MDS/consistency verification failed
inline constexpr int kIo = 4;            // missing or malformed files

struct GenOpts {
    int n = 0, k = 0, t = 0;
    unsigned field_bits = 16;
    std::uint64_t poly = 0;  // 0: the width's default
    std::uint64_t seed = 0;
    int retries = 8;
    std::string out = "codespec.json";
};
int run_gen(const GenOpts& opts, std::ostream& out, std::ostream& err);

struct VerifyOpts {
    std::string spec;
};
int run_verify(const VerifyOpts& opts, std::ostream& out, std::ostream& err);

struct EncodeOpts {
    std::string spec;
    std::string input;  // raw message bytes, k*ell*(w/8) of them
    std::string out;    // prefix: writes <out>.epmd and <out>.b1 ... .b<n>
    bool skip_verify = false;
};
int run_encode(const EncodeOpts& opts, std::ostream& out, std::ostream& err);

struct DecodeOpts {
    std::string spec;
    std::string prefix;     // reads the shards <prefix>.b<i> that exist
    std::string out;        // defaults to `prefix`
    bool skip_verify = false;
};
int run_decode(const DecodeOpts& opts, std::ostream& out, std::ostream& err);

struct RepairOpts {
    std::string spec;
    std::string prefix;
    std::string failed;  // comma-separated block list, repaired in order
    std::string out;     // single-block repairs only: where to put the shard
    bool skip_verify = false;
};
int run_repair(const RepairOpts& opts, std::ostream& out, std::ostream& err);

struct BenchOpts {
    std::string grid = "full";
    unsigned field_bits = 16;
    std::uint64_t seed = 0;
    std::string out;  // CSV path; empty: stdout
};
int run_bench_cmd(const BenchOpts& opts, std::ostream& out, std::ostream& err);

struct SimOpts {
    std::string spec;
    std::string failed = "all";  // "all" or comma-separated blocks
    std::uint64_t seed = 0;
    bool skip_verify = false;
};
int run_sim(const SimOpts& opts, std::ostream& out, std::ostream& err);

}  // namespace epmd::cli
