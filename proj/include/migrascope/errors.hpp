#pragma once

#include <stdexcept>
#include <string>

namespace migrascope {

enum class ErrorKind {
    ProfileParse,
    InvalidProfile,
    StaleVersion,
    UnknownPlatform,
    UnknownPrimitive,
    UnboundFeature,
    UnparsableInput,
    RuleConflict,
    EmptyDependencySet,
    FeatureSetMismatch,
    GasLimitExceeded,
    DerivationExhausted,
    AccountExists,
    NotOwner,
    AlreadyMigrated,
    OracleUnavailable,
    FixtureIncomplete,
    Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace migrascope
