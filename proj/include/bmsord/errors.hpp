#pragma once

#include <stdexcept>
#include <string>

namespace bmsord {

// Base class for all library errors. The CLI maps anything derived from
// Error to exit code 2 (validation failure); everything else is a bug.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoBracket : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};
struct NonFinite : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct InvalidParameter : Error {
    using Error::Error;
};
struct InvalidMass : Error {
    using Error::Error;
};
struct InvalidPosition : Error {
    using Error::Error;
};
struct MassSumError : Error {
    using Error::Error;
};
struct NonZeroTail : Error {
    using Error::Error;
};
struct RejectionExhausted : Error {
    using Error::Error;
};
struct Infeasible : Error {
    using Error::Error;
};

// Short class name for the machine-readable CLI error line.
inline const char* error_kind(const Error& e) {
    if (dynamic_cast<const NoBracket*>(&e)) return "NoBracket";
    if (dynamic_cast<const NoConvergence*>(&e)) return "NoConvergence";
    if (dynamic_cast<const NonFinite*>(&e)) return "NonFinite";
    if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
    if (dynamic_cast<const InvalidParameter*>(&e)) return "InvalidParameter";
    if (dynamic_cast<const InvalidMass*>(&e)) return "InvalidMass";
    if (dynamic_cast<const InvalidPosition*>(&e)) return "InvalidPosition";
    if (dynamic_cast<const MassSumError*>(&e)) return "MassSum";
    if (dynamic_cast<const NonZeroTail*>(&e)) return "NonZeroTail";
    if (dynamic_cast<const RejectionExhausted*>(&e)) return "RejectionExhausted";
    if (dynamic_cast<const Infeasible*>(&e)) return "Infeasible";
    return "Error";
}

}  // namespace bmsord
