// SPDX-License-Identifier: Apache-2.0

#include "epmd/construction.hpp"

namespace epmd {

std::vector<fe> type1_row(const CodeParams& params, const SymbolId& x) {
    std::vector<fe> row(static_cast<std::size_t>(params.n) * params.ell, 0);
    for (int i = 1; i <= params.n; ++i) row[params.col(i, x.flat)] = 1;
    return row;
}

std::vector<fe> type2_row(const CodeParams& params, int p, const SymbolId& x) {
    const Field& f = *params.field;
    std::vector<fe> row(static_cast<std::size_t>(params.n) * params.ell, 0);
    for (int i = 1; i <= params.n; ++i) {
        const BlockId b = params.block(i);
        row[params.col(i, x.flat)] ^= f.pow(params.lambda[i - 1], static_cast<std::uint64_t>(p));
        // the coupling term attaches only to blocks whose group index matches
        // the symbol coordinate their slot points at: x[wrap(v, t)] == u
        const int a = wrap(b.v, params.t);
        if (x.x[a - 1] == b.u) {
            const SymbolId shifted = modify_vector(params, x, b.v, p);
            row[params.col(i, shifted.flat)] ^= params.rho;
        }
    }
    return row;
}

ParityCheckMatrix build_parity_matrix(const CodeParams& params) {
    validate_params(params);
    const Field& f = *params.field;
    Matrix m(f, static_cast<std::size_t>(params.r) * params.ell,
             static_cast<std::size_t>(params.n) * params.ell);
    std::size_t rr = 0;
    for (int x = 0; x < params.ell; ++x, ++rr) {
        const std::vector<fe> row = type1_row(params, params.symbol(x));
        for (std::size_t c = 0; c < row.size(); ++c) m.at(rr, c) = row[c];
    }
    for (int p = 1; p <= params.r - 1; ++p) {
        for (int x = 0; x < params.ell; ++x, ++rr) {
            const std::vector<fe> row = type2_row(params, p, params.symbol(x));
            for (std::size_t c = 0; c < row.size(); ++c) m.at(rr, c) = row[c];
        }
    }
    return ParityCheckMatrix{std::move(m), params.n, params.ell};
}

ParityCheckMatrix build_parity_matrix_t1(const CodeParams& params) {
    validate_params(params);
    if (params.t != 1) throw InvalidParams("t1 builder requires t == 1");
    const Field& f = *params.field;
    const int r = params.r;
    const int n = params.n;
    // ell == r; symbol x in [1, r] has flat index x - 1
    Matrix m(f, static_cast<std::size_t>(r) * r, static_cast<std::size_t>(n) * r);
    for (int x = 1; x <= r; ++x) {
        for (int i = 1; i <= n; ++i) m.at(x - 1, params.col(i, x - 1)) = 1;
    }
    for (int p = 1; p <= r - 1; ++p) {
        for (int x = 1; x <= r; ++x) {
            const std::size_t rr = static_cast<std::size_t>(p) * r + (x - 1);
            for (int i = 1; i <= n; ++i) {
                const fe lam = f.pow(params.lambda[i - 1], static_cast<std::uint64_t>(p));
                m.at(rr, params.col(i, x - 1)) ^= lam;
                // only the blocks of group u == x carry the coupling term,
                // at symbol x shifted forward by p within [1, r]
                const int u = (i - 1) / params.s + 1;
                if (u == x) m.at(rr, params.col(i, wrap(x + p, r) - 1)) ^= params.rho;
            }
        }
    }
    return ParityCheckMatrix{std::move(m), n, r};
}

std::pair<ParityCheckMatrix, ParityCheckMatrix> split_matrix(const CodeParams& params) {
    validate_params(params);
    ParityCheckMatrix full = build_parity_matrix(params);
    CodeParams plain = params;
    plain.rho = 0;
    ParityCheckMatrix uncoupled = build_parity_matrix(plain);
    ParityCheckMatrix coupling{mat_add(full.mat, uncoupled.mat), params.n, params.ell};
    return {std::move(uncoupled), std::move(coupling)};
}

}  // namespace epmd
