#pragma once

#include <array>
#include <optional>
#include <string>

namespace migrascope {

/// The four functional layers of the architecture model, ordered from the
/// lowest (cryptographic) to the highest (ownership/capability).
enum class Layer {
    cryptographic = 0,
    state_management = 1,
    transaction_processing = 2,
    ownership_capability = 3,
};

constexpr std::size_t layer_count = 4;

/// Canonical bottom-up ordering of the four layers.
const std::array<Layer, layer_count>& layer_order();

const char* to_string(Layer layer);
std::optional<Layer> layer_from_string(const std::string& text);

/// Strictly-lower comparison in the canonical order.
inline bool layer_below(Layer lhs, Layer rhs) {
    return static_cast<int>(lhs) < static_cast<int>(rhs);
}

} // namespace migrascope
