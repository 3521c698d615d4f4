// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "epmd/codec.hpp"

namespace epmd {

// Codeword container: 4-byte magic "EPMD", one version byte (1), then n,
// ell and the field width w as little-endian uint32, then the n*ell symbols
// block-major, each little-endian in w/8 bytes.
extern const char kCodewordMagic[4];
constexpr unsigned char kCodewordVersion = 1;

void write_codeword(const std::string& path, const CodeParams& params, const Codeword& cw);
Codeword read_codeword(const std::string& path, const CodeParams& params);

// One block's shard file: the raw ell symbols, little-endian, no header.
void write_shard(const std::string& path, const CodeParams& params, const std::vector<fe>& block);
std::vector<fe> read_shard(const std::string& path, const CodeParams& params);

// Raw message bytes <-> k*ell symbols.
std::vector<fe> read_message(const std::string& path, const CodeParams& params);
void write_message(const std::string& path, const CodeParams& params,
                   const std::vector<fe>& message);

bool file_exists(const std::string& path);

// "<prefix>.b<i>" -- where block i's shard lives
std::string shard_path(const std::string& prefix, int block_flat);

}  // namespace epmd
