#include "migrascope/sim/evm_ledger.hpp"

#include "migrascope/errors.hpp"

namespace migrascope::sim {

const char* to_string(EvmTxKind kind) {
    switch (kind) {
    case EvmTxKind::mint: return "mint";
    case EvmTxKind::batch_mint: return "batch-mint";
    case EvmTxKind::transfer: return "transfer";
    case EvmTxKind::burn: return "burn";
    }
    return "?";
}

EvmLikeLedger::EvmLikeLedger(GasModel gas, std::uint32_t royalty_bps, EvmAddress royalty_receiver)
    : gas_(gas), royalty_bps_(royalty_bps), royalty_receiver_(royalty_receiver) {}

std::uint64_t EvmLikeLedger::record(EvmTxKind kind, std::vector<std::uint64_t> ids,
                                    std::optional<EvmAddress> prior,
                                    std::optional<EvmAddress> now, std::uint64_t gas) {
    EvmHistoryEntry entry;
    entry.tx_index = static_cast<std::uint64_t>(history_.size());
    entry.kind = kind;
    entry.token_ids = std::move(ids);
    entry.prior_owner = prior;
    entry.new_owner = now;
    entry.gas = gas;
    history_.push_back(std::move(entry));
    return history_.back().tx_index;
}

void EvmLikeLedger::assign(std::uint64_t id, const EvmAddress& owner, const std::string& uri) {
    owners_[id] = owner;
    uris_[id] = uri;
    owner_index_[owner].insert(id);
    ++mint_count_;
}

std::uint64_t EvmLikeLedger::mint(const EvmAddress& owner, const std::string& uri) {
    std::uint64_t id = next_id_++;
    assign(id, owner, uri);
    record(EvmTxKind::mint, {id}, std::nullopt, owner, gas_.batch_cost(1));
    return id;
}

std::vector<std::uint64_t> EvmLikeLedger::batch_mint(const EvmAddress& owner,
                                                     const std::vector<std::string>& uris) {
    if (uris.empty()) {
        raise(ErrorKind::GasLimitExceeded, "batch must contain at least one mint");
    }
    std::uint64_t cost = gas_.batch_cost(uris.size());
    if (cost > gas_.block_gas_limit) {
        raise(ErrorKind::GasLimitExceeded,
              "batch of " + std::to_string(uris.size()) + " needs " + std::to_string(cost) +
                  " gas against a limit of " + std::to_string(gas_.block_gas_limit));
    }
    std::vector<std::uint64_t> ids;
    ids.reserve(uris.size());
    for (const std::string& uri : uris) {
        std::uint64_t id = next_id_++;
        assign(id, owner, uri);
        ids.push_back(id);
    }
    record(EvmTxKind::batch_mint, ids, std::nullopt, owner, cost);
    return ids;
}

void EvmLikeLedger::transfer(std::uint64_t token_id, const Keypair& caller, const EvmAddress& to) {
    auto it = owners_.find(token_id);
    if (it == owners_.end()) {
        raise(ErrorKind::NotOwner, "token " + std::to_string(token_id) + " does not exist");
    }
    EvmAddress caller_address = caller.evm_address();
    bool approved = false;
    auto approval = approvals_.find(token_id);
    if (approval != approvals_.end() && approval->second == caller_address) {
        approved = true;
    }
    if (!approved && caller_address != it->second) {
        raise(ErrorKind::NotOwner, "caller is neither owner nor approved for token " +
                                       std::to_string(token_id));
    }
    std::string message = "transfer:" + std::to_string(token_id) + ":" + hex(to);
    if (!verify(KeyDomain::secp256k1_ecdsa, caller.public_key(), message,
                caller.sign(message))) {
        raise(ErrorKind::NotOwner, "transfer signature does not verify");
    }
    EvmAddress prior = it->second;
    owner_index_[prior].erase(token_id);
    if (owner_index_[prior].empty()) {
        owner_index_.erase(prior);
    }
    it->second = to;
    owner_index_[to].insert(token_id);
    approvals_.erase(token_id);
    record(EvmTxKind::transfer, {token_id}, prior, to, gas_.base_per_tx);
}

void EvmLikeLedger::approve(std::uint64_t token_id, const Keypair& owner,
                            const EvmAddress& operator_address) {
    auto it = owners_.find(token_id);
    if (it == owners_.end() || owner.evm_address() != it->second) {
        raise(ErrorKind::NotOwner, "only the owner may approve");
    }
    approvals_[token_id] = operator_address;
}

void EvmLikeLedger::burn(std::uint64_t token_id) {
    auto it = owners_.find(token_id);
    if (it == owners_.end()) {
        raise(ErrorKind::NotOwner, "token " + std::to_string(token_id) + " does not exist");
    }
    EvmAddress prior = it->second;
    owner_index_[prior].erase(token_id);
    if (owner_index_[prior].empty()) {
        owner_index_.erase(prior);
    }
    owners_.erase(it);
    uris_.erase(token_id);
    approvals_.erase(token_id);
    ++burn_count_;
    record(EvmTxKind::burn, {token_id}, prior, std::nullopt, gas_.base_per_tx);
}

std::optional<EvmAddress> EvmLikeLedger::owner_of(std::uint64_t token_id) const {
    auto it = owners_.find(token_id);
    if (it == owners_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<std::string> EvmLikeLedger::token_uri(std::uint64_t token_id) const {
    auto it = uris_.find(token_id);
    if (it == uris_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<std::uint64_t> EvmLikeLedger::tokens_of(const EvmAddress& owner,
                                                    std::size_t* visited) const {
    std::vector<std::uint64_t> out;
    std::size_t touched = 0;
    auto it = owner_index_.find(owner);
    if (it != owner_index_.end()) {
        for (std::uint64_t id : it->second) {
            ++touched;
            out.push_back(id);
        }
    }
    if (visited != nullptr) {
        *visited = touched;
    }
    return out;
}

std::pair<EvmAddress, std::uint64_t> EvmLikeLedger::royalty_info(std::uint64_t token_id,
                                                                 std::uint64_t sale_price) const {
    (void)token_id; // collection-wide share
    return {royalty_receiver_, sale_price * royalty_bps_ / 10000};
}

std::uint64_t EvmLikeLedger::last_tx_gas() const {
    return history_.empty() ? 0 : history_.back().gas;
}

} // namespace migrascope::sim
