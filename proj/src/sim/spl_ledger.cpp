#include "migrascope/sim/spl_ledger.hpp"

#include <algorithm>

#include "migrascope/errors.hpp"

namespace migrascope::sim {

const char* to_string(AccountKind kind) {
    switch (kind) {
    case AccountKind::mint: return "mint";
    case AccountKind::token_account: return "token-account";
    case AccountKind::metadata: return "metadata";
    }
    return "?";
}

namespace {

ProgramId make_program_id(std::uint8_t fill) {
    ProgramId id{};
    id.fill(fill);
    return id;
}

} // namespace

const ProgramId& SplLikeLedger::token_program_id() {
    static const ProgramId id = make_program_id(0x01);
    return id;
}

const ProgramId& SplLikeLedger::metadata_program_id() {
    static const ProgramId id = make_program_id(0x02);
    return id;
}

const ProgramId& SplLikeLedger::ata_program_id() {
    static const ProgramId id = make_program_id(0x03);
    return id;
}

SplLikeLedger::SplLikeLedger(std::uint64_t rent_per_account, std::uint64_t compute_budget)
    : rent_per_account_(rent_per_account), compute_budget_(compute_budget) {}

AccountRecord& SplLikeLedger::create_account(const AccountAddress& address, AccountKind kind,
                                             const PublicKey& authority) {
    if (accounts_.count(address)) {
        raise(ErrorKind::AccountExists, "account already exists at " + hex(address));
    }
    AccountRecord record;
    record.owner_authority = authority;
    record.kind = kind;
    record.rent_paid = rent_per_account_;
    rent_escrowed_ += rent_per_account_;
    return accounts_.emplace(address, std::move(record)).first->second;
}

AccountAddress SplLikeLedger::metadata_address(const AccountAddress& mint) const {
    return derive_pda({seed_bytes(std::string("metadata")), seed_bytes(mint)},
                      metadata_program_id())
        .address;
}

AccountAddress SplLikeLedger::token_account_address(const PublicKey& wallet,
                                                    const AccountAddress& mint) const {
    std::vector<std::uint8_t> wallet_seed(wallet.begin(), wallet.end());
    return derive_pda({seed_bytes(std::string("ata")), wallet_seed, seed_bytes(mint)},
                      ata_program_id())
        .address;
}

AccountAddress SplLikeLedger::mint_nft(const PublicKey& creator,
                                       const std::vector<std::vector<std::uint8_t>>& seeds,
                                       const std::string& name, const std::string& symbol,
                                       const std::string& uri, std::uint32_t royalty_bps,
                                       const std::vector<Creator>& creators) {
    DerivedAddress derived = derive_pda(seeds, token_program_id());
    if (accounts_.count(derived.address)) {
        raise(ErrorKind::AccountExists, "derived mint address already occupied");
    }

    AccountRecord& mint_record = create_account(derived.address, AccountKind::mint, creator);
    mint_record.data = MintData{1, 0, derived.bump};

    AccountAddress ata = token_account_address(creator, derived.address);
    AccountRecord& token_record = create_account(ata, AccountKind::token_account, creator);
    token_record.data = TokenAccountData{derived.address, creator, 1, std::nullopt};

    AccountAddress meta = metadata_address(derived.address);
    AccountRecord& meta_record = create_account(meta, AccountKind::metadata, creator);
    meta_record.data = MetadataData{derived.address, name, symbol, uri, royalty_bps, creators};

    ++tx_count_;
    ++mint_tx_count_;
    return derived.address;
}

std::size_t SplLikeLedger::mint_account_count() const {
    std::size_t count = 0;
    for (const auto& [address, record] : accounts_) {
        (void)address;
        if (record.kind == AccountKind::mint) {
            ++count;
        }
    }
    return count;
}

TokenAccountData* SplLikeLedger::find_holder(const AccountAddress& mint,
                                             AccountAddress* holder_address) {
    for (auto& [address, record] : accounts_) {
        if (record.kind != AccountKind::token_account) {
            continue;
        }
        auto& data = std::get<TokenAccountData>(record.data);
        if (data.mint == mint && data.amount == 1) {
            if (holder_address != nullptr) {
                *holder_address = address;
            }
            return &data;
        }
    }
    return nullptr;
}

void SplLikeLedger::transfer(const AccountAddress& mint, const Keypair& caller,
                             const PublicKey& to) {
    AccountAddress holder_address{};
    TokenAccountData* holder = find_holder(mint, &holder_address);
    if (holder == nullptr) {
        raise(ErrorKind::NotOwner, "no token account holds this mint");
    }
    PublicKey caller_key = caller.public_key();
    bool authorized = caller_key == holder->wallet ||
                      (holder->delegate && *holder->delegate == caller_key);
    if (!authorized) {
        raise(ErrorKind::NotOwner, "caller is neither owner nor delegate of the token account");
    }
    std::string message = "transfer:" + hex(mint) + ":" + hex(to);
    if (!verify(KeyDomain::ed25519_eddsa, caller_key, message, caller.sign(message))) {
        raise(ErrorKind::NotOwner, "transfer signature does not verify");
    }

    holder->amount = 0;
    holder->delegate.reset();

    AccountAddress destination = token_account_address(to, mint);
    auto it = accounts_.find(destination);
    if (it == accounts_.end()) {
        AccountRecord& record = create_account(destination, AccountKind::token_account, to);
        record.data = TokenAccountData{mint, to, 1, std::nullopt};
    } else {
        std::get<TokenAccountData>(it->second.data).amount = 1;
    }
    ++tx_count_;
}

void SplLikeLedger::approve_delegate(const AccountAddress& mint, const Keypair& owner,
                                     const PublicKey& delegate) {
    TokenAccountData* holder = find_holder(mint, nullptr);
    if (holder == nullptr || holder->wallet != owner.public_key()) {
        raise(ErrorKind::NotOwner, "only the holding wallet may delegate");
    }
    holder->delegate = delegate;
    ++tx_count_;
}

std::uint64_t SplLikeLedger::close_account(const AccountAddress& address) {
    auto it = accounts_.find(address);
    if (it == accounts_.end()) {
        raise(ErrorKind::NotOwner, "no account at " + hex(address));
    }
    if (it->second.kind == AccountKind::token_account &&
        std::get<TokenAccountData>(it->second.data).amount != 0) {
        raise(ErrorKind::NotOwner, "cannot close a token account holding a balance");
    }
    std::uint64_t refund = it->second.rent_paid;
    rent_escrowed_ -= refund;
    accounts_.erase(it);
    ++tx_count_;
    return refund;
}

std::optional<PublicKey> SplLikeLedger::owner_of(const AccountAddress& mint) const {
    for (const auto& [address, record] : accounts_) {
        (void)address;
        if (record.kind != AccountKind::token_account) {
            continue;
        }
        const auto& data = std::get<TokenAccountData>(record.data);
        if (data.mint == mint && data.amount == 1) {
            return data.wallet;
        }
    }
    return std::nullopt;
}

std::optional<MetadataData> SplLikeLedger::metadata_of(const AccountAddress& mint) const {
    auto it = accounts_.find(metadata_address(mint));
    if (it == accounts_.end() || it->second.kind != AccountKind::metadata) {
        return std::nullopt;
    }
    return std::get<MetadataData>(it->second.data);
}

std::vector<AccountAddress> SplLikeLedger::mints_of(const PublicKey& wallet,
                                                    std::size_t* visited) const {
    std::vector<AccountAddress> out;
    std::size_t touched = 0;
    // No owner index exists in the account model; every account is scanned.
    for (const auto& [address, record] : accounts_) {
        (void)address;
        ++touched;
        if (record.kind != AccountKind::token_account) {
            continue;
        }
        const auto& data = std::get<TokenAccountData>(record.data);
        if (data.wallet == wallet && data.amount == 1) {
            out.push_back(data.mint);
        }
    }
    if (visited != nullptr) {
        *visited = touched;
    }
    return out;
}

bool SplLikeLedger::account_exists(const AccountAddress& address) const {
    return accounts_.count(address) != 0;
}

bool SplLikeLedger::check_exclusivity() const {
    std::map<AccountAddress, std::size_t> holders;
    for (const auto& [address, record] : accounts_) {
        (void)address;
        if (record.kind == AccountKind::mint) {
            holders.emplace(address, 0);
        }
    }
    for (const auto& [address, record] : accounts_) {
        (void)address;
        if (record.kind != AccountKind::token_account) {
            continue;
        }
        const auto& data = std::get<TokenAccountData>(record.data);
        if (data.amount == 1) {
            ++holders[data.mint];
        } else if (data.amount != 0) {
            return false;
        }
    }
    for (const auto& [mint, count] : holders) {
        (void)mint;
        if (count != 1) {
            return false;
        }
    }
    return true;
}

Digest SplLikeLedger::state_digest() const {
    std::vector<std::uint8_t> bytes;
    auto push = [&bytes](const std::uint8_t* data, std::size_t size) {
        bytes.insert(bytes.end(), data, data + size);
    };
    for (const auto& [address, record] : accounts_) {
        push(address.data(), address.size());
        bytes.push_back(static_cast<std::uint8_t>(record.kind));
        push(record.owner_authority.data(), record.owner_authority.size());
        if (const auto* mint = std::get_if<MintData>(&record.data)) {
            bytes.push_back(mint->bump);
            bytes.push_back(static_cast<std::uint8_t>(mint->supply));
        } else if (const auto* token = std::get_if<TokenAccountData>(&record.data)) {
            push(token->mint.data(), token->mint.size());
            push(token->wallet.data(), token->wallet.size());
            bytes.push_back(static_cast<std::uint8_t>(token->amount));
        } else if (const auto* meta = std::get_if<MetadataData>(&record.data)) {
            push(meta->mint.data(), meta->mint.size());
            push(reinterpret_cast<const std::uint8_t*>(meta->name.data()), meta->name.size());
            push(reinterpret_cast<const std::uint8_t*>(meta->uri.data()), meta->uri.size());
            bytes.push_back(static_cast<std::uint8_t>(meta->seller_fee_basis_points >> 8));
            bytes.push_back(static_cast<std::uint8_t>(meta->seller_fee_basis_points & 0xFF));
            for (const Creator& creator : meta->creators) {
                push(creator.address.data(), creator.address.size());
                bytes.push_back(creator.share);
            }
        }
    }
    return sha256(bytes);
}

} // namespace migrascope::sim
