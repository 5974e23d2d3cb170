#pragma once

#include <stdexcept>
#include <string>

namespace mssgcl {

// Base for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file (bad token, missing file). Carries file/line context in the message.
struct ParseError : Error {
    using Error::Error;
};

// Input parsed but violates dataset consistency (edge crossing graphs, unpaired direction, ...).
struct IntegrityError : Error {
    using Error::Error;
};

// Bad hyperparameter, config key, or call that violates a documented precondition
// of the training/eval configuration surface.
struct ConfigError : Error {
    using Error::Error;
};

// Tensor shape mismatch; message names the primitive and the shapes involved.
struct DimensionError : Error {
    using Error::Error;
};

// API contract violation (missing gradient, non-scalar backward root, ...).
struct ContractError : Error {
    using Error::Error;
};

// Filesystem / serialization failure, including checkpoint corruption.
struct IoError : Error {
    using Error::Error;
};

// Training aborted on a non-finite loss; carries the offending step.
struct TrainAbort : Error {
    size_t epoch;
    size_t step;
    TrainAbort(size_t e, size_t s, const std::string& what_arg)
        : Error(what_arg), epoch(e), step(s) {}
};

} // namespace mssgcl
