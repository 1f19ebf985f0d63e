#include "migrascope/sim/bridge.hpp"

#include "migrascope/errors.hpp"
#include "migrascope/sim/pda.hpp"

namespace migrascope::sim {

std::vector<std::uint8_t> MigrationClaim::bytes() const {
    std::vector<std::uint8_t> out;
    const std::string header = "migrate|";
    out.insert(out.end(), header.begin(), header.end());
    for (std::size_t i = 0; i < 8; ++i) {
        out.push_back(static_cast<std::uint8_t>(token_id >> (8 * (7 - i))));
    }
    out.insert(out.end(), source_owner.begin(), source_owner.end());
    out.insert(out.end(), target_wallet.begin(), target_wallet.end());
    return out;
}

Attestation SignatureLinkOracle::attest(const MigrationClaim& claim, const PublicKey& signer,
                                        const Signature& signature) const {
    if (!available_) {
        raise(ErrorKind::OracleUnavailable, "signature-link oracle is switched off");
    }
    if (!verify(KeyDomain::secp256k1_ecdsa, signer, claim.bytes(), signature)) {
        raise(ErrorKind::NotOwner, "claim signature does not verify in the source domain");
    }
    return Attestation{claim, oracle_id_};
}

MigrationRecord BridgeState::migrate(EvmLikeLedger& source, SplLikeLedger& target,
                                     std::uint64_t token_id, const SignatureLinkOracle& oracle,
                                     const Keypair& owner_key, const PublicKey& target_wallet) {
    if (migrated(token_id)) {
        raise(ErrorKind::AlreadyMigrated,
              "token " + std::to_string(token_id) + " already has a migration record");
    }
    auto owner = source.owner_of(token_id);
    if (!owner) {
        raise(ErrorKind::NotOwner, "token " + std::to_string(token_id) + " does not exist on source");
    }
    if (*owner != owner_key.evm_address()) {
        raise(ErrorKind::NotOwner, "caller does not own token " + std::to_string(token_id));
    }

    MigrationClaim claim{token_id, *owner, target_wallet};
    Attestation attestation =
        oracle.attest(claim, owner_key.public_key(), owner_key.sign(claim.bytes()));

    std::string uri = source.token_uri(token_id).value_or("");
    std::uint32_t royalty_bps = source.royalty_bps();

    source.burn(token_id);
    std::uint64_t burn_tx = source.history().back().tx_index;

    // Numeric identity survives only as a metadata annotation on the target.
    std::string name = collection_tag_ + " #" + std::to_string(token_id);
    AccountAddress mint = target.mint_nft(
        target_wallet, {seed_bytes(collection_tag_), seed_bytes(token_id)}, name,
        collection_tag_, uri, royalty_bps, {Creator{target_wallet, 100}});

    MigrationRecord record{token_id, burn_tx, attestation, mint, uri, royalty_bps};
    records_.emplace(token_id, record);
    return record;
}

} // namespace migrascope::sim
