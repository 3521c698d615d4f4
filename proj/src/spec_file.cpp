// SPDX-License-Identifier: Apache-2.0

#include "epmd/spec_file.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "epmd/mds.hpp"

namespace epmd {

namespace {

std::string hex_of(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

std::uint64_t parse_hex(const std::string& s) {
    if (s.empty()) throw IoError("spec: empty polynomial string");
    std::uint64_t v = 0;
    std::istringstream is(s);
    is >> std::hex >> v;
    if (is.fail() || !is.eof()) throw IoError("spec: bad polynomial string '" + s + "'");
    return v;
}

}  // namespace

CodeSpecFile spec_from_params(const CodeParams& params, std::uint64_t seed) {
    CodeSpecFile spec;
    spec.n = params.n;
    spec.k = params.k;
    spec.t = params.t;
    spec.field_bits = params.field->w();
    spec.poly = params.field->poly();
    spec.lambda = params.lambda;
    spec.rho = params.rho;
    spec.seed = seed;
    return spec;
}

CodeParams params_from_spec(const CodeSpecFile& spec) {
    if (spec.version != 1) throw InvalidParams("spec: unsupported version");
    auto field = std::make_shared<const Field>(spec.field_bits, spec.poly);
    CodeParams p = make_params(spec.n, spec.k, spec.t, std::move(field), spec.lambda, spec.rho);
    validate_params(p, /*require_rho=*/true);
    return p;
}

std::string to_json(const CodeSpecFile& spec) {
    nlohmann::json j;
    j["version"] = spec.version;
    j["n"] = spec.n;
    j["k"] = spec.k;
    j["t"] = spec.t;
    j["field_bits"] = spec.field_bits;
    j["poly"] = hex_of(spec.poly);
    j["lambda"] = spec.lambda;
    j["rho"] = spec.rho;
    j["seed"] = spec.seed;
    return j.dump(2) + "\n";
}

CodeSpecFile spec_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("spec: invalid JSON: ") + e.what());
    }
    CodeSpecFile spec;
    try {
        spec.version = j.at("version").get<int>();
        spec.n = j.at("n").get<int>();
        spec.k = j.at("k").get<int>();
        spec.t = j.at("t").get<int>();
        spec.field_bits = j.at("field_bits").get<unsigned>();
        spec.poly = parse_hex(j.at("poly").get<std::string>());
        spec.lambda = j.at("lambda").get<std::vector<fe>>();
        spec.rho = j.at("rho").get<fe>();
        spec.seed = j.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("spec: missing or mistyped field: ") + e.what());
    }
    return spec;
}

void save_spec(const std::string& path, const CodeSpecFile& spec) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("spec: cannot open '" + path + "' for writing");
    out << to_json(spec);
    if (!out.flush()) throw IoError("spec: write to '" + path + "' failed");
}

CodeSpecFile load_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("spec: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return spec_from_json(buf.str());
}

CodeParams load_params(const std::string& path, bool skip_verify) {
    CodeParams params = params_from_spec(load_spec(path));
    if (!skip_verify) {
        const MdsReport report = verify_mds(build_parity_matrix(params));
        if (!report.is_mds) {
            std::ostringstream os;
            os << "spec '" << path << "' is not MDS: erasing blocks {";
            for (std::size_t i = 0; i < report.failing_subset->size(); ++i)
                os << (i ? "," : "") << (*report.failing_subset)[i];
            os << "} is unrecoverable";
            throw VerificationFailed(os.str());
        }
    }
    return params;
}

}  // namespace epmd
