// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace epmd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field
struct ZeroInverse : Error {
    using Error::Error;
};

// linalg
struct SingularMatrix : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};

// construction / parameter validation
struct InvalidParams : Error {
    using Error::Error;
};

// mds sampling
struct RetriesExhausted : Error {
    using Error::Error;
};
struct VerificationFailed : Error {
    using Error::Error;
};

// codec
struct InconsistentInput : Error {
    using Error::Error;
};

// repair
struct InvalidBlock : Error {
    using Error::Error;
};
struct PlanMismatch : Error {
    using Error::Error;
};

// simulator
struct ScenarioInfeasible : Error {
    using Error::Error;
};

// file I/O and on-disk formats
struct IoError : Error {
    using Error::Error;
};

}  // namespace epmd
