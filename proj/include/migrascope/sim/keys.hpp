#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "migrascope/sim/sha256.hpp"

namespace migrascope::sim {

/// Signature domains for the two chain models. Key material is valid only
/// within its own domain; nothing verifies across domains.
enum class KeyDomain { secp256k1_ecdsa, ed25519_eddsa };
const char* to_string(KeyDomain domain);

using PublicKey = std::array<std::uint8_t, 32>; // hex() via the Digest overload
using EvmAddress = std::array<std::uint8_t, 20>;

std::string hex(const EvmAddress& address);

/// Hash-based stand-in signature. The scheme binds the domain tag into both
/// key derivation and verification, so cross-domain reuse always fails; it
/// makes no secrecy claims.
struct Signature {
    KeyDomain domain = KeyDomain::secp256k1_ecdsa;
    std::array<std::uint8_t, 32> key_opening{};
    Digest digest{};
};

struct Keypair {
    KeyDomain domain = KeyDomain::secp256k1_ecdsa;
    std::array<std::uint8_t, 32> secret{};

    PublicKey public_key() const;
    EvmAddress evm_address() const; // last 20 bytes of a tagged hash of the public key
    Signature sign(const std::vector<std::uint8_t>& message) const;
    Signature sign(const std::string& message) const;
};

Keypair generate_keypair(KeyDomain domain, std::mt19937_64& rng);

bool verify(KeyDomain required_domain, const PublicKey& signer,
            const std::vector<std::uint8_t>& message, const Signature& signature);
bool verify(KeyDomain required_domain, const PublicKey& signer,
            const std::string& message, const Signature& signature);

} // namespace migrascope::sim
