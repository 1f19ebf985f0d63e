#include "migrascope/sim/pda.hpp"

#include "migrascope/errors.hpp"

namespace migrascope::sim {

DerivedAddress derive_pda(const std::vector<std::vector<std::uint8_t>>& seeds,
                          const ProgramId& program_id) {
    if (seeds.empty()) {
        raise(ErrorKind::DerivationExhausted, "seed list must be non-empty");
    }
    std::vector<std::uint8_t> base;
    for (const auto& seed : seeds) {
        base.insert(base.end(), seed.begin(), seed.end());
    }
    base.insert(base.end(), program_id.begin(), program_id.end());
    const std::size_t bump_slot = base.size();
    base.push_back(0);
    base.push_back('P');
    base.push_back('D');
    base.push_back('A');
    for (int bump = 255; bump >= 0; --bump) {
        base[bump_slot] = static_cast<std::uint8_t>(bump);
        Digest digest = sha256(base);
        if (digest.back() != 0xFF) { // off-curve stand-in
            DerivedAddress out;
            out.address = digest;
            out.bump = static_cast<std::uint8_t>(bump);
            return out;
        }
    }
    raise(ErrorKind::DerivationExhausted, "all 256 bump seeds produced on-curve digests");
}

std::vector<std::uint8_t> seed_bytes(const std::string& text) {
    return {text.begin(), text.end()};
}

std::vector<std::uint8_t> seed_bytes(std::uint64_t value) {
    std::vector<std::uint8_t> out(8);
    for (std::size_t i = 0; i < 8; ++i) {
        out[i] = static_cast<std::uint8_t>(value >> (8 * (7 - i)));
    }
    return out;
}

std::vector<std::uint8_t> seed_bytes(const AccountAddress& address) {
    return {address.begin(), address.end()};
}

} // namespace migrascope::sim
