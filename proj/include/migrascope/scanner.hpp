#pragma once

#include <set>
#include <string>
#include <vector>

namespace migrascope {

struct FunctionSig {
    std::string name;
    std::vector<std::string> parameter_types;
    bool mutating = true; // false for view/pure

    std::string canonical() const; // "name(type1,type2)"
    bool operator==(const FunctionSig&) const = default;
    bool operator<(const FunctionSig& rhs) const;
};

struct EventSig {
    std::string name;
    std::vector<std::string> parameter_types;

    std::string canonical() const;
    bool operator==(const EventSig&) const = default;
    bool operator<(const EventSig& rhs) const;
};

/// Lexical summary of a contract: public surface plus pattern-derived hints.
/// Intermediate form between raw input and a FeatureProfile.
struct ContractDescriptor {
    std::vector<FunctionSig> functions; // sorted, unique per canonical signature
    std::vector<EventSig> events;       // sorted
    std::set<std::string> interface_ids; // 4-byte hex constants, "0x" + 8 lowercase digits
    std::set<std::string> storage_hints;
    std::vector<std::string> warnings;

    bool has_function(const std::string& canonical_fragment) const;
    bool has_mutating_function() const;
};

struct HintRule {
    std::string hint;
    std::vector<std::string> any_of_patterns;   // regex over comment/string-stripped source
    std::vector<std::string> any_of_signatures; // substring over canonical signatures
    bool any_mutating_function = false;
};

/// Tokenizes the input, strips comments and string literals, and matches
/// declaration patterns; no AST is built. Input is either curly-brace
/// contract source or a JSON ABI document (leading '[' or '{' means ABI).
/// Raises Error(UnparsableInput) when tokenization fails or input is empty.
ContractDescriptor scan_contract(const std::string& source_text,
                                 const std::vector<HintRule>& hint_rules);

} // namespace migrascope
