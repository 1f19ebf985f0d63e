#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "migrascope/sim/keys.hpp"
#include "migrascope/sim/pda.hpp"

namespace migrascope::sim {

enum class AccountKind { mint, token_account, metadata };
const char* to_string(AccountKind kind);

struct Creator {
    PublicKey address{};
    std::uint8_t share = 100; // percentage
};

struct MintData {
    std::uint64_t supply = 0;
    std::uint8_t decimals = 0;
    std::uint8_t bump = 0;
};

struct TokenAccountData {
    AccountAddress mint{};
    PublicKey wallet{};
    std::uint64_t amount = 0;
    std::optional<PublicKey> delegate;
};

struct MetadataData {
    AccountAddress mint{};
    std::string name;
    std::string symbol;
    std::string uri;
    std::uint32_t seller_fee_basis_points = 0;
    std::vector<Creator> creators;
};

struct AccountRecord {
    PublicKey owner_authority{};
    AccountKind kind = AccountKind::mint;
    std::uint64_t rent_paid = 0;
    std::variant<MintData, TokenAccountData, MetadataData> data;
};

/// Account/PDA chain model: every piece of state lives in its own
/// rent-funded account; one token account holds balance 1 per mint.
class SplLikeLedger {
public:
    explicit SplLikeLedger(std::uint64_t rent_per_account = 2039280,
                           std::uint64_t compute_budget = 1400000);

    /// Creates the mint account at its derived address plus a token account
    /// for the creator and a metadata account at a derived address.
    /// Error(AccountExists) when the derived mint address is occupied.
    AccountAddress mint_nft(const PublicKey& creator,
                            const std::vector<std::vector<std::uint8_t>>& seeds,
                            const std::string& name, const std::string& symbol,
                            const std::string& uri, std::uint32_t royalty_bps,
                            const std::vector<Creator>& creators);

    /// Owner-or-delegate transfer authorized by an ed25519-domain signature
    /// over "transfer:<mint>:<to>". Error(NotOwner) otherwise.
    void transfer(const AccountAddress& mint, const Keypair& caller, const PublicKey& to);
    void approve_delegate(const AccountAddress& mint, const Keypair& owner, const PublicKey& delegate);

    /// Closing refunds exactly the rent charged at creation. Only empty token
    /// accounts can be closed. Returns the refunded amount.
    std::uint64_t close_account(const AccountAddress& address);

    std::optional<PublicKey> owner_of(const AccountAddress& mint) const;
    std::optional<MetadataData> metadata_of(const AccountAddress& mint) const;
    AccountAddress metadata_address(const AccountAddress& mint) const;
    AccountAddress token_account_address(const PublicKey& wallet, const AccountAddress& mint) const;

    /// Owner-to-tokens query by full account scan; `visited` reports how many
    /// accounts were inspected.
    std::vector<AccountAddress> mints_of(const PublicKey& wallet, std::size_t* visited = nullptr) const;

    bool account_exists(const AccountAddress& address) const;
    const std::map<AccountAddress, AccountRecord>& accounts() const { return accounts_; }
    std::uint64_t rent_per_account() const { return rent_per_account_; }
    std::uint64_t rent_escrowed() const { return rent_escrowed_; }
    std::uint64_t compute_budget() const { return compute_budget_; }
    std::uint64_t tx_count() const { return tx_count_; }
    std::uint64_t mint_tx_count() const { return mint_tx_count_; }
    std::size_t mint_account_count() const;

    /// NFT exclusivity: exactly one token account with amount 1 per mint.
    bool check_exclusivity() const;
    /// Canonical digest over the full account state; equal states hash equal.
    Digest state_digest() const;

    static const ProgramId& token_program_id();
    static const ProgramId& metadata_program_id();
    static const ProgramId& ata_program_id();

private:
    AccountRecord& create_account(const AccountAddress& address, AccountKind kind,
                                  const PublicKey& authority);
    TokenAccountData* find_holder(const AccountAddress& mint, AccountAddress* holder_address);

    std::uint64_t rent_per_account_;
    std::uint64_t compute_budget_;
    std::uint64_t rent_escrowed_ = 0;
    std::uint64_t tx_count_ = 0;
    std::uint64_t mint_tx_count_ = 0;
    std::map<AccountAddress, AccountRecord> accounts_;
};

} // namespace migrascope::sim
