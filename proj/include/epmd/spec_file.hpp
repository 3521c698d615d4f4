// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "epmd/params.hpp"

namespace epmd {

// On-disk description of one code instance (JSON).  `poly` is the full
// reduction polynomial in lowercase hex without a 0x prefix; `lambda` and
// `rho` are decimal field-element values; `seed` records the RNG seed the
// instance was sampled with.
struct CodeSpecFile {
    int version = 1;
    int n = 0;
    int k = 0;
    int t = 0;
    unsigned field_bits = 0;
    std::uint64_t poly = 0;
    std::vector<fe> lambda;
    fe rho = 0;
    std::uint64_t seed = 0;
};

CodeSpecFile spec_from_params(const CodeParams& params, std::uint64_t seed);

// Validates and instantiates (rho must be non-zero: a spec file names a
// finished, repairable instance).
CodeParams params_from_spec(const CodeSpecFile& spec);

// Serialization round-trips byte-identically: keys are emitted in sorted
// order with two-space indentation.
std::string to_json(const CodeSpecFile& spec);
CodeSpecFile spec_from_json(const std::string& text);  // IoError on malformed JSON

void save_spec(const std::string& path, const CodeSpecFile& spec);
CodeSpecFile load_spec(const std::string& path);

// Convenience: load, validate, and (unless skip_verify) re-check the MDS
// property, throwing VerificationFailed if it no longer holds.
CodeParams load_params(const std::string& path, bool skip_verify);

}  // namespace epmd
