// SPDX-License-Identifier: Apache-2.0

#include "epmd/mds.hpp"

#include <random>
#include <sstream>

namespace epmd {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t acc = 1;
    for (int i = 1; i <= k; ++i) acc = acc * static_cast<std::uint64_t>(n - k + i) / i;
    return acc;
}

Matrix submatrix(const ParityCheckMatrix& pcm, const std::vector<int>& subset) {
    const std::size_t ell = static_cast<std::size_t>(pcm.ell);
    Matrix out(pcm.mat.field(), pcm.mat.rows(), subset.size() * ell);
    for (std::size_t j = 0; j < subset.size(); ++j) {
        const int b = subset[j];
        if (b < 1 || b > pcm.n) throw InvalidParams("submatrix: block index out of range");
        for (std::size_t rr = 0; rr < pcm.mat.rows(); ++rr)
            for (std::size_t c = 0; c < ell; ++c)
                out.at(rr, j * ell + c) = pcm.mat.at(rr, (b - 1) * ell + c);
    }
    return out;
}

MdsReport verify_mds(const ParityCheckMatrix& pcm) {
    const std::size_t ell = static_cast<std::size_t>(pcm.ell);
    if (pcm.mat.rows() % ell != 0) throw InvalidParams("verify_mds: row count not a multiple of ell");
    const int r = static_cast<int>(pcm.mat.rows() / ell);
    MdsReport report;
    // lexicographic r-subsets of [1, n]
    std::vector<int> subset(r);
    for (int i = 0; i < r; ++i) subset[i] = i + 1;
    while (true) {
        ++report.subsets_checked;
        Matrix sub = submatrix(pcm, subset);
        if (mat_rank(std::move(sub)) != static_cast<std::size_t>(r) * ell) {
            report.failing_subset = subset;
            report.is_mds = false;
            return report;
        }
        // advance to the next subset
        int i = r - 1;
        while (i >= 0 && subset[i] == pcm.n - (r - 1 - i)) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < r; ++j) subset[j] = subset[j - 1] + 1;
    }
    report.is_mds = true;
    return report;
}

Rational sampling_failure_bound(const CodeParams& params) {
    const std::int64_t weight = static_cast<std::int64_t>(binomial(params.n, params.r)) *
                                params.r * params.ell;
    return Rational::of(weight, static_cast<std::int64_t>(params.field->order() - 1));
}

double sampling_headroom(const CodeParams& params) {
    const Rational b = sampling_failure_bound(params);
    return static_cast<double>(b.den) / static_cast<double>(b.num);
}

CodeParams sample_code(const CodeParams& base, std::uint64_t seed, int max_retries) {
    validate_params(base);
    if (base.rho != 0) {
        if (verify_mds(build_parity_matrix(base)).is_mds) return base;
    }
    std::mt19937_64 rng(seed);
    const std::uint64_t m = base.field->order() - 1;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        CodeParams cand = base;
        cand.rho = static_cast<fe>(1 + rng() % m);
        if (verify_mds(build_parity_matrix(cand)).is_mds) return cand;
    }
    std::ostringstream os;
    os << "sample_code: no MDS rho within " << max_retries
       << " draws (failure bound per draw " << sampling_failure_bound(base).str() << ")";
    throw RetriesExhausted(os.str());
}

}  // namespace epmd
