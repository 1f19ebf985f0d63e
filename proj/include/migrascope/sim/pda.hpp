#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "migrascope/sim/keys.hpp"

namespace migrascope::sim {

using AccountAddress = std::array<std::uint8_t, 32>; // hex() via the Digest overload
using ProgramId = std::array<std::uint8_t, 32>;

struct DerivedAddress {
    AccountAddress address{};
    std::uint8_t bump = 0;
};

/// Deterministic program-derived address: for bump 255 down to 0, hash
/// concat(seeds) || program_id || bump || "PDA" and take the first digest
/// whose final byte is not 0xFF (stand-in for the off-curve requirement).
/// Error(DerivationExhausted) if every bump fails.
DerivedAddress derive_pda(const std::vector<std::vector<std::uint8_t>>& seeds,
                          const ProgramId& program_id);

std::vector<std::uint8_t> seed_bytes(const std::string& text);
std::vector<std::uint8_t> seed_bytes(std::uint64_t value); // big-endian, 8 bytes
std::vector<std::uint8_t> seed_bytes(const AccountAddress& address);

} // namespace migrascope::sim
