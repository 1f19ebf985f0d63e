#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "migrascope/sim/keys.hpp"

namespace migrascope::sim {

struct GasModel {
    std::uint64_t base_per_tx = 21000;
    std::uint64_t per_mint = 50000;
    std::uint64_t block_gas_limit = 30000000;

    std::uint64_t batch_cost(std::size_t count) const {
        return base_per_tx + per_mint * static_cast<std::uint64_t>(count);
    }
    /// Largest batch size the affine cost still fits in a block.
    std::size_t max_batch_size() const {
        return static_cast<std::size_t>((block_gas_limit - base_per_tx) / per_mint);
    }
};

enum class EvmTxKind { mint, batch_mint, transfer, burn };
const char* to_string(EvmTxKind kind);

struct EvmHistoryEntry {
    std::uint64_t tx_index = 0;
    EvmTxKind kind = EvmTxKind::mint;
    std::vector<std::uint64_t> token_ids;
    std::optional<EvmAddress> prior_owner;
    std::optional<EvmAddress> new_owner;
    std::uint64_t gas = 0;
};

/// Account-mapping chain model: numeric ids keyed in one owner map, an
/// affine gas model and an append-only history.
class EvmLikeLedger {
public:
    explicit EvmLikeLedger(GasModel gas = {}, std::uint32_t royalty_bps = 500,
                           EvmAddress royalty_receiver = {});

    /// Assigns the next sequential id (starting at 1), records owner and uri.
    std::uint64_t mint(const EvmAddress& owner, const std::string& uri);

    /// Atomic: succeeds iff base_per_tx + per_mint * n <= block_gas_limit,
    /// and the reported gas is exactly that affine value.
    /// Error(GasLimitExceeded) otherwise, with no partial mint.
    std::vector<std::uint64_t> batch_mint(const EvmAddress& owner,
                                          const std::vector<std::string>& uris);

    /// Owner-or-approved transfer, authorized by a source-domain signature
    /// over "transfer:<id>:<to>". Error(NotOwner) otherwise.
    void transfer(std::uint64_t token_id, const Keypair& caller, const EvmAddress& to);
    void approve(std::uint64_t token_id, const Keypair& owner, const EvmAddress& operator_address);

    /// Removes the token; used by the bridge after signature checks.
    void burn(std::uint64_t token_id);

    std::optional<EvmAddress> owner_of(std::uint64_t token_id) const;
    std::optional<std::string> token_uri(std::uint64_t token_id) const;
    /// Owner-to-tokens query; `visited` reports how many index entries were
    /// touched (native enumeration visits one per owned token).
    std::vector<std::uint64_t> tokens_of(const EvmAddress& owner, std::size_t* visited = nullptr) const;
    std::pair<EvmAddress, std::uint64_t> royalty_info(std::uint64_t token_id,
                                                      std::uint64_t sale_price) const;

    std::uint64_t next_id() const { return next_id_; }
    std::size_t token_count() const { return owners_.size(); }
    std::uint64_t mint_count() const { return mint_count_; }
    std::uint64_t burn_count() const { return burn_count_; }
    std::uint32_t royalty_bps() const { return royalty_bps_; }
    const GasModel& gas_model() const { return gas_; }
    const std::vector<EvmHistoryEntry>& history() const { return history_; }
    std::uint64_t last_tx_gas() const;

private:
    std::uint64_t record(EvmTxKind kind, std::vector<std::uint64_t> ids,
                         std::optional<EvmAddress> prior, std::optional<EvmAddress> now,
                         std::uint64_t gas);
    void assign(std::uint64_t id, const EvmAddress& owner, const std::string& uri);

    GasModel gas_;
    std::uint32_t royalty_bps_;
    EvmAddress royalty_receiver_;
    std::uint64_t next_id_ = 1;
    std::map<std::uint64_t, EvmAddress> owners_;
    std::map<std::uint64_t, std::string> uris_;
    std::map<std::uint64_t, EvmAddress> approvals_;
    std::map<EvmAddress, std::set<std::uint64_t>> owner_index_;
    std::vector<EvmHistoryEntry> history_;
    std::uint64_t mint_count_ = 0;
    std::uint64_t burn_count_ = 0;
};

} // namespace migrascope::sim
