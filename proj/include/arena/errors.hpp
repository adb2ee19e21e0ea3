#pragma once

#include <stdexcept>
#include <string>

namespace arena {

// Base class for all harness errors. Subclasses mark the failure domain so
// callers can distinguish a broken input from a broken environment.
struct ArenaError : std::runtime_error {
    explicit ArenaError(const std::string& what) : std::runtime_error(what) {}
};

// Wire-format parse failures; the message identifies the offending line.
struct MalformedInput : ArenaError {
    using ArenaError::ArenaError;
};

// Brute-force foil invoked beyond its documented instance ceiling.
struct InstanceTooLarge : ArenaError {
    using ArenaError::ArenaError;
};

// Reference and foil disagreed during generation self-check.
struct OracleDisagreement : ArenaError {
    using ArenaError::ArenaError;
};

// Foil completed within the calibrated limit; instance sizes are too small.
struct CalibrationInversion : ArenaError {
    using ArenaError::ArenaError;
};

struct SandboxUnavailable : ArenaError {
    using ArenaError::ArenaError;
};

// Guest runtime missing or workspace creation failed; distinct from any Verdict.
struct SandboxSetupError : ArenaError {
    using ArenaError::ArenaError;
};

struct TransportError : ArenaError {
    using ArenaError::ArenaError;
};

struct ContextOverflow : ArenaError {
    using ArenaError::ArenaError;
};

struct ProviderRefusal : ArenaError {
    using ArenaError::ArenaError;
};

struct NoJsonFound : ArenaError {
    using ArenaError::ArenaError;
};

struct JudgeParseError : ArenaError {
    using ArenaError::ArenaError;
};

// A trial aborted mid-flight; the partial trajectory has been persisted.
struct GatewayError : ArenaError {
    using ArenaError::ArenaError;
};

struct EmptyInput : ArenaError {
    using ArenaError::ArenaError;
};

struct MixedCohort : ArenaError {
    using ArenaError::ArenaError;
};

struct ShapeMismatch : ArenaError {
    using ArenaError::ArenaError;
};

struct NonpositiveTime : ArenaError {
    using ArenaError::ArenaError;
};

struct CorruptLog : ArenaError {
    using ArenaError::ArenaError;
};

struct ConfigError : ArenaError {
    using ArenaError::ArenaError;
};

}  // namespace arena
