#include "migrascope/scanner.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

#include "migrascope/errors.hpp"
#include "migrascope/json_util.hpp"

namespace migrascope {

namespace {

std::string join_types(const std::vector<std::string>& types) {
    std::string out;
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += types[i];
    }
    return out;
}

} // namespace

std::string FunctionSig::canonical() const {
    return name + "(" + join_types(parameter_types) + ")";
}

bool FunctionSig::operator<(const FunctionSig& rhs) const {
    return canonical() < rhs.canonical();
}

std::string EventSig::canonical() const {
    return name + "(" + join_types(parameter_types) + ")";
}

bool EventSig::operator<(const EventSig& rhs) const {
    return canonical() < rhs.canonical();
}

bool ContractDescriptor::has_function(const std::string& canonical_fragment) const {
    return std::any_of(functions.begin(), functions.end(), [&](const FunctionSig& fn) {
        return fn.canonical().find(canonical_fragment) != std::string::npos;
    });
}

bool ContractDescriptor::has_mutating_function() const {
    return std::any_of(functions.begin(), functions.end(),
                       [](const FunctionSig& fn) { return fn.mutating; });
}

namespace {

struct Token {
    enum class Kind { identifier, number, punct };
    Kind kind;
    std::string text;
};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool ident_char(char c) {
    return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

// Removes comments and string literals, keeping everything else verbatim so
// regex hint patterns see the original spacing. Unterminated constructs fail.
std::string strip_source(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (c == '/' && i + 1 < n && text[i + 1] == '/') {
            while (i < n && text[i] != '\n') {
                ++i;
            }
            continue;
        }
        if (c == '/' && i + 1 < n && text[i + 1] == '*') {
            std::size_t end = text.find("*/", i + 2);
            if (end == std::string::npos) {
                raise(ErrorKind::UnparsableInput, "unterminated block comment");
            }
            out += ' ';
            i = end + 2;
            continue;
        }
        if (c == '"' || c == '\'') {
            char quote = c;
            std::size_t j = i + 1;
            while (j < n && text[j] != quote) {
                if (text[j] == '\\' && j + 1 < n) {
                    ++j;
                }
                if (text[j] == '\n') {
                    raise(ErrorKind::UnparsableInput, "unterminated string literal");
                }
                ++j;
            }
            if (j >= n) {
                raise(ErrorKind::UnparsableInput, "unterminated string literal");
            }
            out += quote;
            out += quote;
            i = j + 1;
            continue;
        }
        out += c;
        ++i;
    }
    return out;
}

std::vector<Token> tokenize(const std::string& stripped) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = stripped.size();
    while (i < n) {
        char c = stripped[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i + 1;
            while (j < n && ident_char(stripped[j])) {
                ++j;
            }
            tokens.push_back({Token::Kind::identifier, stripped.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i + 1;
            while (j < n && (std::isalnum(static_cast<unsigned char>(stripped[j])) ||
                             stripped[j] == 'x' || stripped[j] == 'X')) {
                ++j;
            }
            tokens.push_back({Token::Kind::number, stripped.substr(i, j - i)});
            i = j;
            continue;
        }
        tokens.push_back({Token::Kind::punct, std::string(1, c)});
        ++i;
    }
    return tokens;
}

std::string normalize_type(const std::string& type) {
    if (type == "uint") {
        return "uint256";
    }
    if (type == "int") {
        return "int256";
    }
    return type;
}

bool keyword_skipped_in_params(const std::string& word) {
    return word == "memory" || word == "calldata" || word == "storage" ||
           word == "indexed" || word == "payable";
}

// Parses a parenthesized parameter list starting at the '(' index.
// Returns the index just past ')' or npos when malformed.
std::size_t parse_params(const std::vector<Token>& tokens, std::size_t open,
                         std::vector<std::string>& out_types) {
    std::size_t i = open + 1;
    int depth = 1;
    std::vector<std::string> segment;
    auto flush = [&]() {
        if (segment.empty()) {
            return;
        }
        std::string type = normalize_type(segment.front());
        for (std::size_t k = 1; k + 1 < segment.size(); ++k) {
            if (segment[k] == "[" && segment[k + 1] == "]") {
                type += "[]";
            }
        }
        out_types.push_back(type);
        segment.clear();
    };
    while (i < tokens.size()) {
        const Token& token = tokens[i];
        if (token.kind == Token::Kind::punct) {
            if (token.text == "(") {
                ++depth;
            } else if (token.text == ")") {
                --depth;
                if (depth == 0) {
                    flush();
                    return i + 1;
                }
            } else if (token.text == "," && depth == 1) {
                flush();
                ++i;
                continue;
            }
            if (token.text == "[" || token.text == "]") {
                segment.push_back(token.text);
            }
            ++i;
            continue;
        }
        if (!keyword_skipped_in_params(token.text)) {
            segment.push_back(token.text);
        }
        ++i;
    }
    return std::string::npos;
}

void scan_declarations(const std::vector<Token>& tokens, ContractDescriptor& descriptor) {
    std::set<std::string> seen_functions;
    std::set<std::string> seen_events;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& token = tokens[i];
        if (token.kind == Token::Kind::number && token.text.size() == 10 &&
            (token.text.rfind("0x", 0) == 0 || token.text.rfind("0X", 0) == 0)) {
            std::string id = token.text;
            std::transform(id.begin(), id.end(), id.begin(),
                           [](unsigned char c) { return std::tolower(c); });
            bool all_hex = std::all_of(id.begin() + 2, id.end(), [](unsigned char c) {
                return std::isxdigit(c);
            });
            if (all_hex) {
                descriptor.interface_ids.insert(id);
            }
            continue;
        }
        if (token.kind != Token::Kind::identifier) {
            continue;
        }
        if (token.text == "function" || token.text == "event") {
            bool is_event = token.text == "event";
            if (i + 2 >= tokens.size() || tokens[i + 1].kind != Token::Kind::identifier ||
                tokens[i + 2].text != "(") {
                descriptor.warnings.push_back("skipped malformed " + token.text + " declaration");
                continue;
            }
            std::string name = tokens[i + 1].text;
            std::vector<std::string> types;
            std::size_t next = parse_params(tokens, i + 2, types);
            if (next == std::string::npos) {
                descriptor.warnings.push_back("unbalanced parameter list for " + name);
                continue;
            }
            if (is_event) {
                EventSig sig{name, types};
                if (seen_events.insert(sig.canonical()).second) {
                    descriptor.events.push_back(sig);
                }
                i = next - 1;
                continue;
            }
            // Modifier window up to the body or terminator.
            bool mutating = true;
            bool hidden = false;
            std::size_t j = next;
            while (j < tokens.size() && tokens[j].text != "{" && tokens[j].text != ";") {
                const std::string& word = tokens[j].text;
                if (word == "view" || word == "pure") {
                    mutating = false;
                } else if (word == "internal" || word == "private") {
                    hidden = true;
                }
                ++j;
            }
            if (!hidden) {
                FunctionSig sig{name, types, mutating};
                if (seen_functions.insert(sig.canonical()).second) {
                    descriptor.functions.push_back(sig);
                }
            }
            i = next - 1;
        }
    }
    std::sort(descriptor.functions.begin(), descriptor.functions.end());
    std::sort(descriptor.events.begin(), descriptor.events.end());
}

void scan_abi(const std::string& text, ContractDescriptor& descriptor) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        raise(ErrorKind::UnparsableInput, "input looks like JSON ABI but does not parse");
    }
    if (doc.is_object()) {
        if (!doc.contains("abi") || !doc.at("abi").is_array()) {
            raise(ErrorKind::UnparsableInput, "JSON object input lacks an \"abi\" array");
        }
        doc = doc.at("abi");
    }
    if (!doc.is_array()) {
        raise(ErrorKind::UnparsableInput, "JSON ABI input must be an array");
    }
    std::set<std::string> seen_functions;
    std::set<std::string> seen_events;
    for (const auto& entry : doc) {
        if (!entry.is_object()) {
            descriptor.warnings.push_back("skipped non-object ABI entry");
            continue;
        }
        std::string type = entry.value("type", std::string{"function"});
        if (type != "function" && type != "event") {
            continue;
        }
        std::vector<std::string> types;
        for (const auto& input : entry.value("inputs", nlohmann::json::array())) {
            types.push_back(normalize_type(input.value("type", std::string{})));
        }
        std::string name = entry.value("name", std::string{});
        if (name.empty()) {
            descriptor.warnings.push_back("skipped unnamed ABI entry");
            continue;
        }
        if (type == "event") {
            EventSig sig{name, types};
            if (seen_events.insert(sig.canonical()).second) {
                descriptor.events.push_back(sig);
            }
            continue;
        }
        std::string mutability = entry.value("stateMutability", std::string{"nonpayable"});
        FunctionSig sig{name, types, mutability != "view" && mutability != "pure"};
        if (seen_functions.insert(sig.canonical()).second) {
            descriptor.functions.push_back(sig);
        }
    }
    std::sort(descriptor.functions.begin(), descriptor.functions.end());
    std::sort(descriptor.events.begin(), descriptor.events.end());
}

void apply_hint_rules(const std::vector<HintRule>& rules, const std::string& stripped,
                      ContractDescriptor& descriptor) {
    for (const HintRule& rule : rules) {
        bool fired = false;
        for (const std::string& pattern : rule.any_of_patterns) {
            if (stripped.empty()) {
                break;
            }
            try {
                std::regex re(pattern, std::regex::ECMAScript);
                if (std::regex_search(stripped, re)) {
                    fired = true;
                    break;
                }
            } catch (const std::regex_error&) {
                raise(ErrorKind::ProfileParse, "bad hint pattern for " + rule.hint);
            }
        }
        if (!fired) {
            for (const std::string& needle : rule.any_of_signatures) {
                for (const FunctionSig& fn : descriptor.functions) {
                    if (fn.canonical().find(needle) != std::string::npos) {
                        fired = true;
                        break;
                    }
                }
                if (fired) {
                    break;
                }
            }
        }
        if (!fired && rule.any_mutating_function && descriptor.has_mutating_function()) {
            fired = true;
        }
        if (fired) {
            descriptor.storage_hints.insert(rule.hint);
        }
    }
}

} // namespace

ContractDescriptor scan_contract(const std::string& source_text,
                                 const std::vector<HintRule>& hint_rules) {
    ContractDescriptor descriptor;
    std::size_t first = source_text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        raise(ErrorKind::UnparsableInput, "empty input");
    }
    if (source_text[first] == '[' || source_text[first] == '{') {
        scan_abi(source_text, descriptor);
        apply_hint_rules(hint_rules, std::string{}, descriptor);
        return descriptor;
    }
    std::string stripped = strip_source(source_text);
    std::vector<Token> tokens = tokenize(stripped);
    if (tokens.empty()) {
        raise(ErrorKind::UnparsableInput, "no tokens in input");
    }
    scan_declarations(tokens, descriptor);
    apply_hint_rules(hint_rules, stripped, descriptor);
    return descriptor;
}

} // namespace migrascope
