#include "migrascope/layer.hpp"

namespace migrascope {

const std::array<Layer, layer_count>& layer_order() {
    static const std::array<Layer, layer_count> order = {
        Layer::cryptographic,
        Layer::state_management,
        Layer::transaction_processing,
        Layer::ownership_capability,
    };
    return order;
}

const char* to_string(Layer layer) {
    switch (layer) {
    case Layer::cryptographic: return "cryptographic";
    case Layer::state_management: return "state-management";
    case Layer::transaction_processing: return "transaction-processing";
    case Layer::ownership_capability: return "ownership-capability";
    }
    return "unknown";
}

std::optional<Layer> layer_from_string(const std::string& text) {
    for (Layer layer : layer_order()) {
        if (text == to_string(layer)) {
            return layer;
        }
    }
    return std::nullopt;
}

} // namespace migrascope
