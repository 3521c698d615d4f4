// SPDX-License-Identifier: Apache-2.0

#include "epmd/codeword_io.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace epmd {

const char kCodewordMagic[4] = {'E', 'P', 'M', 'D'};

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& in) {
    unsigned char b[4] = {0, 0, 0, 0};
    in.read(reinterpret_cast<char*>(b), 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

std::vector<unsigned char> read_all(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    return bytes;
}

std::vector<fe> symbols_of(const Field& f, const std::vector<unsigned char>& bytes,
                           std::size_t count, const std::string& path) {
    if (bytes.size() != count * f.symbol_bytes()) {
        std::ostringstream os;
        os << "'" << path << "': expected " << count * f.symbol_bytes() << " bytes, found "
           << bytes.size();
        throw IoError(os.str());
    }
    std::vector<fe> symbols(count);
    for (std::size_t i = 0; i < count; ++i)
        symbols[i] = f.read_symbol(bytes.data() + i * f.symbol_bytes());
    return symbols;
}

void write_symbols(std::ostream& out, const Field& f, const std::vector<fe>& symbols) {
    unsigned char buf[4];
    for (fe v : symbols) {
        f.write_symbol(v, buf);
        out.write(reinterpret_cast<const char*>(buf), f.symbol_bytes());
    }
}

}  // namespace

bool file_exists(const std::string& path) { return std::filesystem::exists(path); }

std::string shard_path(const std::string& prefix, int block_flat) {
    return prefix + ".b" + std::to_string(block_flat);
}

void write_codeword(const std::string& path, const CodeParams& params, const Codeword& cw) {
    const std::vector<fe> flat = flatten(params, cw);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(kCodewordMagic, 4);
    out.put(static_cast<char>(kCodewordVersion));
    put_u32(out, static_cast<std::uint32_t>(params.n));
    put_u32(out, static_cast<std::uint32_t>(params.ell));
    put_u32(out, params.field->w());
    write_symbols(out, *params.field, flat);
    if (!out.flush()) throw IoError("write to '" + path + "' failed");
}

Codeword read_codeword(const std::string& path, const CodeParams& params) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    char magic[4] = {0, 0, 0, 0};
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kCodewordMagic, 4) != 0)
        throw IoError("'" + path + "' is not a codeword container");
    const int version = in.get();
    if (version != kCodewordVersion)
        throw IoError("'" + path + "': unsupported container version");
    const std::uint32_t n = get_u32(in);
    const std::uint32_t ell = get_u32(in);
    const std::uint32_t w = get_u32(in);
    if (!in) throw IoError("'" + path + "': truncated header");
    if (n != static_cast<std::uint32_t>(params.n) ||
        ell != static_cast<std::uint32_t>(params.ell) || w != params.field->w()) {
        std::ostringstream os;
        os << "'" << path << "': container is n=" << n << " ell=" << ell << " w=" << w
           << " but the spec needs n=" << params.n << " ell=" << params.ell
           << " w=" << params.field->w();
        throw IoError(os.str());
    }
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    const std::vector<fe> flat =
        symbols_of(*params.field, bytes,
                   static_cast<std::size_t>(params.n) * params.ell, path);
    Codeword cw;
    cw.blocks.assign(params.n, {});
    for (int i = 0; i < params.n; ++i)
        cw.blocks[i].assign(flat.begin() + static_cast<std::ptrdiff_t>(i) * params.ell,
                            flat.begin() + static_cast<std::ptrdiff_t>(i + 1) * params.ell);
    return cw;
}

void write_shard(const std::string& path, const CodeParams& params, const std::vector<fe>& block) {
    if (block.size() != static_cast<std::size_t>(params.ell))
        throw InvalidParams("shard: block must hold ell symbols");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_symbols(out, *params.field, block);
    if (!out.flush()) throw IoError("write to '" + path + "' failed");
}

std::vector<fe> read_shard(const std::string& path, const CodeParams& params) {
    return symbols_of(*params.field, read_all(path), static_cast<std::size_t>(params.ell), path);
}

std::vector<fe> read_message(const std::string& path, const CodeParams& params) {
    return symbols_of(*params.field, read_all(path),
                      static_cast<std::size_t>(params.k) * params.ell, path);
}

void write_message(const std::string& path, const CodeParams& params,
                   const std::vector<fe>& message) {
    if (message.size() != static_cast<std::size_t>(params.k) * params.ell)
        throw InvalidParams("message must hold k*ell symbols");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_symbols(out, *params.field, message);
    if (!out.flush()) throw IoError("write to '" + path + "' failed");
}

}  // namespace epmd
