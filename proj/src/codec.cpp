// SPDX-License-Identifier: Apache-2.0

#include "epmd/codec.hpp"

#include <algorithm>
#include <sstream>

#include "epmd/mds.hpp"

namespace epmd {

namespace {

// right-hand side for the erased-column system: sum of the present blocks'
// contributions, one column vector of length r*ell
Matrix survivor_rhs(const CodeParams& params, const ParityCheckMatrix& pcm, const Codeword& cw,
                    const std::vector<bool>& erased) {
    const Field& f = *params.field;
    Matrix rhs(f, pcm.mat.rows(), 1);
    for (int i = 1; i <= params.n; ++i) {
        if (erased[i - 1]) continue;
        const std::vector<fe>& blk = cw.blocks[i - 1];
        for (std::size_t rr = 0; rr < pcm.mat.rows(); ++rr) {
            fe acc = rhs.at(rr, 0);
            const fe* row = pcm.mat.row(rr);
            for (int x = 0; x < params.ell; ++x) {
                const fe coeff = row[params.col(i, x)];
                if (coeff != 0) acc ^= f.mul(coeff, blk[x]);
            }
            rhs.at(rr, 0) = acc;
        }
    }
    return rhs;
}

}  // namespace

Codeword encode(const CodeParams& params, const std::vector<fe>& message) {
    validate_params(params);
    if (message.size() != static_cast<std::size_t>(params.k) * params.ell)
        throw InvalidParams("encode: message must hold k*ell symbols");
    for (fe v : message)
        if (static_cast<std::uint64_t>(v) >= params.field->order())
            throw InvalidParams("encode: message symbol outside the field");

    Codeword cw;
    cw.blocks.assign(params.n, {});
    for (int i = 0; i < params.k; ++i)
        cw.blocks[i].assign(message.begin() + static_cast<std::ptrdiff_t>(i) * params.ell,
                            message.begin() + static_cast<std::ptrdiff_t>(i + 1) * params.ell);

    const ParityCheckMatrix pcm = build_parity_matrix(params);
    std::vector<int> parity_blocks(params.r);
    for (int j = 0; j < params.r; ++j) parity_blocks[j] = params.k + 1 + j;
    std::vector<bool> erased(params.n, false);
    for (int b : parity_blocks) erased[b - 1] = true;

    const Matrix a = submatrix(pcm, parity_blocks);
    const Matrix rhs = survivor_rhs(params, pcm, cw, erased);
    const Matrix x = mat_solve(a, rhs);  // SingularMatrix only if params are not MDS

    for (int j = 0; j < params.r; ++j) {
        std::vector<fe>& blk = cw.blocks[parity_blocks[j] - 1];
        blk.resize(params.ell);
        for (int sy = 0; sy < params.ell; ++sy)
            blk[sy] = x.at(static_cast<std::size_t>(j) * params.ell + sy, 0);
    }
    return cw;
}

Codeword decode_erasures(const CodeParams& params, const Codeword& received,
                         const ErasurePattern& pattern) {
    validate_params(params);
    if (received.blocks.size() != static_cast<std::size_t>(params.n))
        throw InvalidParams("decode: codeword must have n blocks");
    if (pattern.erased.empty()) return received;

    std::vector<int> erased_list = pattern.erased;
    std::sort(erased_list.begin(), erased_list.end());
    if (std::adjacent_find(erased_list.begin(), erased_list.end()) != erased_list.end())
        throw InvalidParams("decode: repeated block in erasure pattern");
    if (erased_list.front() < 1 || erased_list.back() > params.n)
        throw InvalidParams("decode: erased block index out of range");
    if (static_cast<int>(erased_list.size()) > params.r) {
        std::ostringstream os;
        os << "decode: " << erased_list.size() << " erasures exceed the correction radius "
           << params.r;
        throw InvalidParams(os.str());
    }

    std::vector<bool> erased(params.n, false);
    for (int b : erased_list) erased[b - 1] = true;
    for (int i = 1; i <= params.n; ++i) {
        if (erased[i - 1]) continue;
        if (!received.present(i) ||
            received.blocks[i - 1].size() != static_cast<std::size_t>(params.ell))
            throw InvalidParams("decode: surviving block missing or malformed");
    }

    const ParityCheckMatrix pcm = build_parity_matrix(params);
    const Matrix a = submatrix(pcm, erased_list);
    const Matrix rhs = survivor_rhs(params, pcm, received, erased);

    Matrix x(*params.field, a.cols(), 1);
    if (static_cast<int>(erased_list.size()) == params.r) {
        x = mat_solve(a, rhs);
    } else {
        LeastSolve ls = mat_solve_rect(a, rhs);
        if (!ls.consistent)
            throw InconsistentInput("decode: surviving blocks violate the parity checks");
        x = std::move(ls.x);
    }

    Codeword out = received;
    for (std::size_t j = 0; j < erased_list.size(); ++j) {
        std::vector<fe>& blk = out.blocks[erased_list[j] - 1];
        blk.assign(params.ell, 0);
        for (int sy = 0; sy < params.ell; ++sy)
            blk[sy] = x.at(j * params.ell + sy, 0);
    }
    return out;
}

std::vector<fe> message_of(const CodeParams& params, const Codeword& cw) {
    std::vector<fe> msg;
    msg.reserve(static_cast<std::size_t>(params.k) * params.ell);
    for (int i = 1; i <= params.k; ++i) {
        if (!cw.present(i) || cw.blocks[i - 1].size() != static_cast<std::size_t>(params.ell))
            throw InvalidParams("message_of: data block missing");
        msg.insert(msg.end(), cw.blocks[i - 1].begin(), cw.blocks[i - 1].end());
    }
    return msg;
}

std::vector<fe> flatten(const CodeParams& params, const Codeword& cw) {
    std::vector<fe> flat;
    flat.reserve(static_cast<std::size_t>(params.n) * params.ell);
    for (int i = 1; i <= params.n; ++i) {
        if (!cw.present(i) || cw.blocks[i - 1].size() != static_cast<std::size_t>(params.ell))
            throw InvalidParams("flatten: block missing");
        flat.insert(flat.end(), cw.blocks[i - 1].begin(), cw.blocks[i - 1].end());
    }
    return flat;
}

bool in_code(const CodeParams& params, const Codeword& cw) {
    const ParityCheckMatrix pcm = build_parity_matrix(params);
    const std::vector<fe> flat = flatten(params, cw);
    const Field& f = *params.field;
    for (std::size_t rr = 0; rr < pcm.mat.rows(); ++rr) {
        fe acc = 0;
        const fe* row = pcm.mat.row(rr);
        for (std::size_t c = 0; c < flat.size(); ++c)
            if (row[c] != 0 && flat[c] != 0) acc ^= f.mul(row[c], flat[c]);
        if (acc != 0) return false;
    }
    return true;
}

}  // namespace epmd
