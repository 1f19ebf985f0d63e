#include "migrascope/sim/sha256.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace migrascope::sim {

Digest sha256(const std::uint8_t* data, std::size_t size) {
    Digest out{};
    unsigned int written = 0;
    if (EVP_Digest(data, size, out.data(), &written, EVP_sha256(), nullptr) != 1 ||
        written != out.size()) {
        throw std::runtime_error("sha256 digest failed");
    }
    return out;
}

Digest sha256(const std::vector<std::uint8_t>& data) {
    return sha256(data.data(), data.size());
}

Digest sha256(const std::string& data) {
    return sha256(reinterpret_cast<const std::uint8_t*>(data.data()), data.size());
}

std::string hex(const std::uint8_t* data, std::size_t size) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(size * 2);
    for (std::size_t i = 0; i < size; ++i) {
        out += digits[data[i] >> 4];
        out += digits[data[i] & 0x0F];
    }
    return out;
}

std::string hex(const Digest& digest) {
    return hex(digest.data(), digest.size());
}

} // namespace migrascope::sim
