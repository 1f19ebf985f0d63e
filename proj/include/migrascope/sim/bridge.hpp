#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "migrascope/sim/evm_ledger.hpp"
#include "migrascope/sim/spl_ledger.hpp"

namespace migrascope::sim {

/// Claim a source owner signs to request migration of one token to a target
/// wallet. The canonical byte encoding is what gets signed and attested.
struct MigrationClaim {
    std::uint64_t token_id = 0;
    EvmAddress source_owner{};
    PublicKey target_wallet{};

    std::vector<std::uint8_t> bytes() const;
};

struct Attestation {
    MigrationClaim claim;
    std::string oracle_id;
};

/// Trusted in-process component linking source-domain signatures to target
/// addresses. Availability is a toggle so its failure mode can be exercised.
class SignatureLinkOracle {
public:
    explicit SignatureLinkOracle(bool available = true, std::string oracle_id = "desk-oracle")
        : available_(available), oracle_id_(std::move(oracle_id)) {}

    /// Verifies the secp256k1-domain signature over the claim and issues an
    /// attestation naming the target wallet. Error(OracleUnavailable) when
    /// switched off; Error(NotOwner) when the signature does not verify.
    Attestation attest(const MigrationClaim& claim, const PublicKey& signer,
                       const Signature& signature) const;

    bool available() const { return available_; }
    void set_available(bool available) { available_ = available; }

private:
    bool available_;
    std::string oracle_id_;
};

struct MigrationRecord {
    std::uint64_t source_token_id = 0;
    std::uint64_t burn_tx_index = 0;
    Attestation attestation;
    AccountAddress minted_mint{};
    std::string carried_uri;
    std::uint32_t carried_royalty_bps = 0;
};

/// Registry of completed migrations; one record per source token id.
class BridgeState {
public:
    explicit BridgeState(std::string collection_tag = "MIGR")
        : collection_tag_(std::move(collection_tag)) {}

    /// Burn-and-mint migration of one token. The owner keypair signs the
    /// claim, the oracle attests, the source token is burned, and the target
    /// mint is created at seeds (collection tag, token id) with the uri
    /// carried unchanged and the numeric id kept as a name annotation.
    MigrationRecord migrate(EvmLikeLedger& source, SplLikeLedger& target,
                            std::uint64_t token_id, const SignatureLinkOracle& oracle,
                            const Keypair& owner_key, const PublicKey& target_wallet);

    bool migrated(std::uint64_t token_id) const { return records_.count(token_id) != 0; }
    const std::map<std::uint64_t, MigrationRecord>& records() const { return records_; }
    const std::string& collection_tag() const { return collection_tag_; }

private:
    std::string collection_tag_;
    std::map<std::uint64_t, MigrationRecord> records_;
};

} // namespace migrascope::sim
