#include "migrascope/sim/keys.hpp"

#include <algorithm>

namespace migrascope::sim {

const char* to_string(KeyDomain domain) {
    switch (domain) {
    case KeyDomain::secp256k1_ecdsa: return "secp256k1-ecdsa";
    case KeyDomain::ed25519_eddsa: return "ed25519-eddsa";
    }
    return "?";
}

std::string hex(const EvmAddress& address) {
    return "0x" + hex(address.data(), address.size());
}

namespace {

std::vector<std::uint8_t> tagged(KeyDomain domain, const char* purpose,
                                 const std::array<std::uint8_t, 32>& secret) {
    std::vector<std::uint8_t> bytes;
    const std::string tag = std::string(to_string(domain)) + "|" + purpose + "|";
    bytes.insert(bytes.end(), tag.begin(), tag.end());
    bytes.insert(bytes.end(), secret.begin(), secret.end());
    return bytes;
}

} // namespace

PublicKey Keypair::public_key() const {
    return sha256(tagged(domain, "pub", secret));
}

EvmAddress Keypair::evm_address() const {
    PublicKey pub = public_key();
    std::vector<std::uint8_t> bytes{'a', 'd', 'd', 'r', '|'};
    bytes.insert(bytes.end(), pub.begin(), pub.end());
    Digest digest = sha256(bytes);
    EvmAddress address{};
    std::copy(digest.begin() + 12, digest.end(), address.begin());
    return address;
}

Signature Keypair::sign(const std::vector<std::uint8_t>& message) const {
    std::vector<std::uint8_t> bytes = tagged(domain, "sig", secret);
    bytes.insert(bytes.end(), message.begin(), message.end());
    return Signature{domain, secret, sha256(bytes)};
}

Signature Keypair::sign(const std::string& message) const {
    return sign(std::vector<std::uint8_t>(message.begin(), message.end()));
}

Keypair generate_keypair(KeyDomain domain, std::mt19937_64& rng) {
    Keypair pair;
    pair.domain = domain;
    for (std::size_t i = 0; i < pair.secret.size(); i += 8) {
        std::uint64_t word = rng();
        for (std::size_t b = 0; b < 8; ++b) {
            pair.secret[i + b] = static_cast<std::uint8_t>(word >> (8 * b));
        }
    }
    return pair;
}

bool verify(KeyDomain required_domain, const PublicKey& signer,
            const std::vector<std::uint8_t>& message, const Signature& signature) {
    if (signature.domain != required_domain) {
        return false;
    }
    Keypair opening{signature.domain, signature.key_opening};
    if (opening.public_key() != signer) {
        return false;
    }
    return opening.sign(message).digest == signature.digest;
}

bool verify(KeyDomain required_domain, const PublicKey& signer,
            const std::string& message, const Signature& signature) {
    return verify(required_domain, signer,
                  std::vector<std::uint8_t>(message.begin(), message.end()), signature);
}

} // namespace migrascope::sim
