#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace migrascope::sim {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(const std::uint8_t* data, std::size_t size);
Digest sha256(const std::vector<std::uint8_t>& data);
Digest sha256(const std::string& data);

std::string hex(const std::uint8_t* data, std::size_t size);
std::string hex(const Digest& digest);

} // namespace migrascope::sim
