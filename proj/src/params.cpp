// SPDX-License-Identifier: Apache-2.0

#include "epmd/params.hpp"

#include <algorithm>
#include <sstream>

namespace epmd {

int wrap(int l, int m) {
    int v = l % m;
    return v == 0 ? m : (v < 0 ? v + m : v);
}

BlockId CodeParams::block(int flat) const {
    if (flat < 1 || flat > n) throw InvalidParams("block index out of range");
    return BlockId{(flat - 1) / s + 1, (flat - 1) % s + 1, flat};
}

BlockId CodeParams::block_uv(int u, int v) const {
    if (u < 1 || u > r || v < 1 || v > s) throw InvalidParams("block coordinates out of range");
    return BlockId{u, v, (u - 1) * s + v};
}

SymbolId CodeParams::symbol(int flat) const {
    if (flat < 0 || flat >= ell) throw InvalidParams("symbol index out of range");
    SymbolId sym;
    sym.flat = flat;
    sym.x.assign(t, 1);
    int rem = flat;
    for (int j = t - 1; j >= 0; --j) {
        sym.x[j] = rem % r + 1;
        rem /= r;
    }
    return sym;
}

SymbolId CodeParams::symbol(const std::vector<int>& coords) const {
    if (static_cast<int>(coords.size()) != t) throw InvalidParams("symbol vector length != t");
    SymbolId sym;
    sym.x = coords;
    int flat = 0;
    for (int j = 0; j < t; ++j) {
        if (coords[j] < 1 || coords[j] > r) throw InvalidParams("symbol coordinate out of range");
        flat = flat * r + (coords[j] - 1);
    }
    sym.flat = flat;
    return sym;
}

std::vector<fe> default_lambdas(const Field& f, int n) {
    std::vector<fe> lambda(n);
    fe v = 1;
    for (int i = 0; i < n; ++i) {
        v = f.mul(v, f.generator());
        lambda[i] = v;
    }
    return lambda;
}

CodeParams make_params(int n, int k, int t, std::shared_ptr<const Field> field,
                       std::vector<fe> lambda, fe rho) {
    CodeParams p;
    p.n = n;
    p.k = k;
    p.r = n - k;
    if (p.r >= 1 && n % p.r == 0) p.s = n / p.r;
    p.t = t;
    if (p.r >= 1 && t >= 1) {
        std::int64_t ell = 1;
        for (int j = 0; j < t && ell <= (1 << 20); ++j) ell *= p.r;
        p.ell = static_cast<int>(ell);
    }
    p.field = std::move(field);
    if (lambda.empty() && p.field && n >= 1 && static_cast<std::uint64_t>(n) < p.field->order())
        lambda = default_lambdas(*p.field, n);
    p.lambda = std::move(lambda);
    p.rho = rho;
    validate_params(p);
    return p;
}

void validate_params(const CodeParams& p, bool require_rho) {
    auto fail = [](const std::string& msg) { throw InvalidParams("params: " + msg); };
    if (!p.field) fail("missing field");
    if (p.n < 2) fail("n must be at least 2");
    if (p.k < 1 || p.k >= p.n) fail("k must satisfy 1 <= k < n");
    if (p.r != p.n - p.k) fail("r must equal n - k");
    if (p.n % p.r != 0) {
        std::ostringstream os;
        os << "n - k = " << p.r << " must divide n = " << p.n;
        fail(os.str());
    }
    if (p.s != p.n / p.r) fail("s must equal n / r");
    if (p.t < 1 || p.t > p.s) fail("t must satisfy 1 <= t <= s");
    std::int64_t ell = 1;
    for (int j = 0; j < p.t; ++j) {
        ell *= p.r;
        if (ell > (1 << 20)) fail("ell = r^t too large");
    }
    if (p.ell != ell) fail("ell must equal r^t");
    if (p.field->order() < static_cast<std::uint64_t>(p.n) + 1)
        fail("field too small: need q >= n + 1");
    if (static_cast<int>(p.lambda.size()) != p.n) fail("lambda must have n entries");
    for (fe l : p.lambda) {
        if (l == 0) fail("lambda entries must be non-zero");
        if (static_cast<std::uint64_t>(l) >= p.field->order())
            fail("lambda entry outside the field");
    }
    std::vector<fe> sorted = p.lambda;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail("lambda entries must be pairwise distinct");
    if (static_cast<std::uint64_t>(p.rho) >= p.field->order()) fail("rho outside the field");
    if (require_rho && p.rho == 0) fail("rho must be non-zero");
}

SymbolId modify_vector(const CodeParams& params, const SymbolId& x, int v, int p) {
    const int a = wrap(v, params.t);
    SymbolId out = x;
    out.x[a - 1] = wrap(out.x[a - 1] + p, params.r);
    return params.symbol(out.x);
}

}  // namespace epmd
