#include "migrascope/errors.hpp"

namespace migrascope {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ProfileParse: return "ProfileParse";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::StaleVersion: return "StaleVersion";
    case ErrorKind::UnknownPlatform: return "UnknownPlatform";
    case ErrorKind::UnknownPrimitive: return "UnknownPrimitive";
    case ErrorKind::UnboundFeature: return "UnboundFeature";
    case ErrorKind::UnparsableInput: return "UnparsableInput";
    case ErrorKind::RuleConflict: return "RuleConflict";
    case ErrorKind::EmptyDependencySet: return "EmptyDependencySet";
    case ErrorKind::FeatureSetMismatch: return "FeatureSetMismatch";
    case ErrorKind::GasLimitExceeded: return "GasLimitExceeded";
    case ErrorKind::DerivationExhausted: return "DerivationExhausted";
    case ErrorKind::AccountExists: return "AccountExists";
    case ErrorKind::NotOwner: return "NotOwner";
    case ErrorKind::AlreadyMigrated: return "AlreadyMigrated";
    case ErrorKind::OracleUnavailable: return "OracleUnavailable";
    case ErrorKind::FixtureIncomplete: return "FixtureIncomplete";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

} // namespace migrascope
