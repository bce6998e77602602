// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#include "cerberus/chain.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

namespace cerberus {

namespace {

using ordered_json = nlohmann::ordered_json;

Bytes encode_genesis_blob(const std::string& network_id, std::uint32_t interval,
                          const Digest& rules_id, const Digest& impl_id,
                          const std::vector<Account>& authorities) {
  ByteWriter writer;
  writer.u16(static_cast<std::uint16_t>(network_id.size()));
  writer.raw(to_bytes(network_id));
  writer.u32(interval);
  writer.raw(rules_id.view());
  writer.raw(impl_id.view());
  writer.u16(static_cast<std::uint16_t>(authorities.size()));
  for (const Account& a : authorities) {
    writer.raw(a.public_key.view());
  }
  return writer.take();
}

struct GenesisConfig {
  ChainConfig config;
  std::vector<Account> authorities;
};

GenesisConfig decode_genesis_blob(ByteView blob) {
  ByteReader reader(blob);
  GenesisConfig g;
  std::uint16_t len = reader.u16();
  ByteView id = reader.raw(len);
  g.config.network_id.assign(id.begin(), id.end());
  g.config.block_interval = reader.u32();
  g.config.rules_engine_id = Digest::from_bytes(reader.raw(32));
  g.config.impl_engine_id = Digest::from_bytes(reader.raw(32));
  std::uint16_t count = reader.u16();
  for (std::uint16_t i = 0; i < count; ++i) {
    g.authorities.push_back(
        Account::make(PublicKey::from_bytes(reader.raw(32)), Role::Authority));
  }
  reader.expect_done();
  return g;
}

}  // namespace

ChainConfig ChainConfig::with_default_contracts(std::string network_id,
                                                std::uint32_t block_interval) {
  ChainConfig config;
  config.network_id = std::move(network_id);
  config.block_interval = block_interval;
  config.rules_engine_id = sha256(to_bytes("CERBERUS-RULES-ENGINE-V1"));
  config.impl_engine_id = sha256(to_bytes("CERBERUS-IMPL-ENGINE-V1"));
  return config;
}

const char* reject_reason_name(RejectReason reason) {
  switch (reason) {
    case RejectReason::None: return "none";
    case RejectReason::Malformed: return "malformed";
    case RejectReason::UnknownSender: return "unknown-sender";
    case RejectReason::BadSignature: return "bad-signature";
    case RejectReason::Blacklisted: return "blacklisted";
    case RejectReason::PolicyUnmet: return "policy-unmet";
    case RejectReason::Conflict: return "conflict";
  }
  return "unknown";
}

TxValidation TxValidation::reject(RejectReason r, std::string detail) {
  TxValidation v;
  v.ok = false;
  v.reason = r;
  v.detail = std::move(detail);
  return v;
}

Block Chain::build_genesis_block(const std::vector<Account>& authorities,
                                 const ChainConfig& config) {
  AdminOpPayload genesis_op;
  genesis_op.op = AdminOpKind::Genesis;
  genesis_op.genesis_blob =
      encode_genesis_blob(config.network_id, config.block_interval,
                          config.rules_engine_id, config.impl_engine_id, authorities);
  Transaction tx;
  tx.kind = TxKind::AdminOp;
  tx.sender = authorities.front().address;
  tx.payload = genesis_op.encode();

  Block block;
  block.height = 0;
  block.prev_hash = Digest{};
  block.timestamp = 0;
  block.producer = authorities.front().address;
  block.transactions.push_back(std::move(tx));
  // The genesis block carries a zero signature: it is validated by
  // recomputation from its embedded configuration, which keeps genesis
  // reproducible without access to any secret key.
  block.producer_signature = Signature{};
  return block;
}

void Chain::seed_revocation_authority() {
  AuthorityListEntry accreditor;
  accreditor.org = authorities_.front().address;
  accreditor.keys[0] = authorities_[0].public_key;
  accreditor.keys[1] = authorities_[1 % authorities_.size()].public_key;
  revocation_.authority_list.push_back(accreditor);
}

Chain Chain::genesis(const std::vector<Account>& authorities, ChainConfig config) {
  if (authorities.empty()) {
    throw std::invalid_argument("genesis requires at least one authority");
  }
  for (const Account& a : authorities) {
    if (a.role != Role::Authority) {
      throw std::invalid_argument("genesis accounts must all have the authority role");
    }
    if (a.address != address_of(a.public_key)) {
      throw std::invalid_argument("authority address does not match its public key");
    }
  }
  Chain chain;
  chain.config_ = std::move(config);
  chain.authorities_ = authorities;
  for (const Account& a : authorities) {
    chain.accounts_[a.address] = a;
    chain.policies_[a.address] = SigningPolicy{1, {a.public_key}};
  }
  chain.seed_revocation_authority();
  chain.blocks_.push_back(build_genesis_block(authorities, chain.config_));
  return chain;
}

Address Chain::scheduled_producer(std::uint64_t block_height) const {
  return authorities_[block_height % authorities_.size()].address;
}

const Account* Chain::find_account(const Address& address) const {
  auto it = accounts_.find(address);
  return it == accounts_.end() ? nullptr : &it->second;
}

const SigningPolicy* Chain::policy_for(const Address& address) const {
  auto it = policies_.find(address);
  return it == policies_.end() ? nullptr : &it->second;
}

std::optional<std::uint64_t> Chain::blacklisted_height(const Address& address) const {
  auto it = blacklist_.find(address);
  if (it == blacklist_.end()) return std::nullopt;
  return it->second;
}

bool Chain::university_registered(const Address& address) const {
  const Account* account = find_account(address);
  return account != nullptr && account->role == Role::University;
}

const std::string* Chain::account_name(const Address& address) const {
  auto it = names_.find(address);
  return it == names_.end() ? nullptr : &it->second;
}

std::optional<TxLocation> Chain::find_issued_root(const Digest& batch_root) const {
  auto it = issued_.find(batch_root);
  if (it == issued_.end()) return std::nullopt;
  return it->second;
}

// -- transaction builders -----------------------------------------------------

Transaction Chain::make_register_university_tx(const KeyPair& authority_key,
                                               std::string name,
                                               const PublicKey& account_key,
                                               SigningPolicy policy) const {
  const Account* sender = find_account(authority_key.address());
  if (sender == nullptr || sender->role != Role::Authority) {
    throw PolicyError("only an authority can register a university");
  }
  AdminOpPayload op;
  op.op = AdminOpKind::AddUniversity;
  op.name = std::move(name);
  op.account_key = account_key;
  op.policy = std::move(policy);
  Transaction tx;
  tx.kind = TxKind::AdminOp;
  tx.sender = sender->address;
  tx.payload = op.encode();
  tx.sign_with(authority_key);
  return tx;
}

Transaction Chain::make_blacklist_tx(const KeyPair& authority_key,
                                     const Address& target) const {
  const Account* sender = find_account(authority_key.address());
  if (sender == nullptr || sender->role != Role::Authority) {
    throw PolicyError("only an authority can blacklist a key");
  }
  AdminOpPayload op;
  op.op = AdminOpKind::BlacklistKey;
  op.target = target;
  Transaction tx;
  tx.kind = TxKind::AdminOp;
  tx.sender = sender->address;
  tx.payload = op.encode();
  tx.sign_with(authority_key);
  return tx;
}

Transaction Chain::make_add_authority_tx(const KeyPair& authority_key, std::string name,
                                         const PublicKey& account_key) const {
  const Account* sender = find_account(authority_key.address());
  if (sender == nullptr || sender->role != Role::Authority) {
    throw PolicyError("only an authority can extend the authority set");
  }
  AdminOpPayload op;
  op.op = AdminOpKind::AddAuthority;
  op.name = std::move(name);
  op.account_key = account_key;
  Transaction tx;
  tx.kind = TxKind::AdminOp;
  tx.sender = sender->address;
  tx.payload = op.encode();
  tx.sign_with(authority_key);
  return tx;
}

Transaction Chain::create_issue_tx(const Address& university, const Digest& batch_root,
                                   const std::vector<const KeyPair*>& signers) const {
  const SigningPolicy* policy = policy_for(university);
  if (policy == nullptr || !university_registered(university)) {
    throw PolicyError("university is not registered");
  }
  std::set<PublicKey> distinct;
  for (const KeyPair* signer : signers) {
    if (policy->contains(signer->public_key())) {
      distinct.insert(signer->public_key());
    }
  }
  if (distinct.size() < policy->required) {
    throw PolicyError("signer set does not satisfy the university signing policy");
  }
  IssueBatchPayload payload;
  payload.batch_root = batch_root;
  payload.rules_engine_id = config_.rules_engine_id;
  payload.impl_engine_id = config_.impl_engine_id;
  Transaction tx;
  tx.kind = TxKind::IssueBatch;
  tx.sender = university;
  tx.payload = payload.encode();
  for (const KeyPair* signer : signers) {
    tx.sign_with(*signer);
  }
  return tx;
}

Transaction Chain::make_revocation_tx(const Address& sender,
                                      const RevocationCallPayload& call,
                                      const KeyPair& caller_key) const {
  if (call.caller_key != caller_key.public_key()) {
    throw std::invalid_argument("revocation call names a different caller key");
  }
  Transaction tx;
  tx.kind = TxKind::RevocationCall;
  tx.sender = sender;
  tx.payload = call.encode();
  tx.sign_with(caller_key);
  return tx;
}

// -- validation ---------------------------------------------------------------

TxValidation Chain::validate_tx(const Transaction& tx) const {
  // Structure first: the payload must decode for its kind.
  IssueBatchPayload issue;
  AdminOpPayload admin;
  RevocationCallPayload call;
  try {
    switch (tx.kind) {
      case TxKind::IssueBatch:
        issue = IssueBatchPayload::decode(tx.payload);
        break;
      case TxKind::AdminOp:
        admin = AdminOpPayload::decode(tx.payload);
        break;
      case TxKind::RevocationCall:
        call = RevocationCallPayload::decode(tx.payload);
        break;
    }
  } catch (const CodecError& e) {
    return TxValidation::reject(RejectReason::Malformed, e.what());
  }
  if (tx.kind == TxKind::AdminOp && admin.op == AdminOpKind::Genesis) {
    return TxValidation::reject(RejectReason::Malformed,
                                "genesis op is only valid in block 0");
  }

  const Account* sender = find_account(tx.sender);
  if (sender == nullptr) {
    return TxValidation::reject(RejectReason::UnknownSender,
                                "sender address is not registered");
  }
  switch (tx.kind) {
    case TxKind::IssueBatch:
      if (sender->role != Role::University) {
        return TxValidation::reject(RejectReason::UnknownSender,
                                    "sender is not a registered university");
      }
      break;
    case TxKind::AdminOp:
      if (sender->role != Role::Authority) {
        return TxValidation::reject(RejectReason::UnknownSender,
                                    "admin operations require an authority sender");
      }
      break;
    case TxKind::RevocationCall:
      if (sender->role == Role::Observer) {
        return TxValidation::reject(RejectReason::UnknownSender,
                                    "observers cannot originate transactions");
      }
      break;
  }
  if (blacklisted_height(tx.sender)) {
    return TxValidation::reject(RejectReason::Blacklisted, "sender is blacklisted");
  }

  // Signatures: every listed signature must verify and belong to a key the
  // sender is authorized to use.
  if (tx.signatures.empty()) {
    return TxValidation::reject(RejectReason::BadSignature, "transaction is unsigned");
  }
  const SigningPolicy* policy = policy_for(tx.sender);
  std::set<PublicKey> authorized;
  if (policy != nullptr) {
    authorized.insert(policy->keys.begin(), policy->keys.end());
  }
  authorized.insert(sender->public_key);
  Bytes message = tx.unsigned_bytes();
  std::set<PublicKey> valid_signers;
  for (const TxSignature& sig : tx.signatures) {
    if (!authorized.contains(sig.signer)) {
      return TxValidation::reject(RejectReason::BadSignature,
                                  "signature by a key outside the sender's key set");
    }
    if (!verify_signature(sig.signer, message, sig.signature)) {
      return TxValidation::reject(RejectReason::BadSignature,
                                  "signature verification failed");
    }
    valid_signers.insert(sig.signer);
  }

  switch (tx.kind) {
    case TxKind::IssueBatch: {
      if (policy == nullptr || valid_signers.size() < policy->required) {
        return TxValidation::reject(RejectReason::PolicyUnmet,
                                    "fewer distinct signatures than the policy requires");
      }
      if (issue.rules_engine_id != config_.rules_engine_id ||
          issue.impl_engine_id != config_.impl_engine_id) {
        return TxValidation::reject(RejectReason::Malformed,
                                    "transaction names unknown revocation contracts");
      }
      if (issued_.contains(issue.batch_root)) {
        return TxValidation::reject(RejectReason::Conflict,
                                    "batch root already issued");
      }
      break;
    }
    case TxKind::AdminOp: {
      switch (admin.op) {
        case AdminOpKind::AddUniversity: {
          Address new_address = address_of(admin.account_key);
          if (find_account(new_address) != nullptr) {
            return TxValidation::reject(RejectReason::Conflict,
                                        "account already registered");
          }
          if (blacklisted_height(new_address)) {
            return TxValidation::reject(RejectReason::Blacklisted,
                                        "cannot register a blacklisted address");
          }
          if (admin.policy.keys.empty() || admin.policy.required == 0 ||
              admin.policy.required > admin.policy.keys.size()) {
            return TxValidation::reject(RejectReason::Malformed,
                                        "invalid signing policy");
          }
          break;
        }
        case AdminOpKind::AddAuthority: {
          Address new_address = address_of(admin.account_key);
          if (find_account(new_address) != nullptr) {
            return TxValidation::reject(RejectReason::Conflict,
                                        "account already registered");
          }
          break;
        }
        case AdminOpKind::BlacklistKey:
          // Blacklisting an unknown address is a recorded no-op guard.
          break;
        case AdminOpKind::Genesis:
          break;  // rejected above
      }
      break;
    }
    case TxKind::RevocationCall: {
      if (!valid_signers.contains(call.caller_key)) {
        return TxValidation::reject(RejectReason::BadSignature,
                                    "revocation caller key did not sign");
      }
      break;
    }
  }
  return TxValidation::accept();
}

std::optional<RevocationOutcome> Chain::apply_tx(const Transaction& tx,
                                                 std::uint64_t block_height) {
  switch (tx.kind) {
    case TxKind::IssueBatch: {
      IssueBatchPayload issue = IssueBatchPayload::decode(tx.payload);
      issued_.emplace(issue.batch_root, TxLocation{block_height, tx.id()});
      issued_roots_.insert(issue.batch_root);
      return std::nullopt;
    }
    case TxKind::AdminOp: {
      AdminOpPayload admin = AdminOpPayload::decode(tx.payload);
      switch (admin.op) {
        case AdminOpKind::AddUniversity: {
          Account account = Account::make(admin.account_key, Role::University);
          accounts_[account.address] = account;
          policies_[account.address] = admin.policy;
          names_[account.address] = admin.name;
          break;
        }
        case AdminOpKind::BlacklistKey:
          blacklist_.emplace(admin.target, block_height);
          break;
        case AdminOpKind::AddAuthority: {
          Account account = Account::make(admin.account_key, Role::Authority);
          accounts_[account.address] = account;
          policies_[account.address] = SigningPolicy{1, {account.public_key}};
          names_[account.address] = admin.name;
          authorities_.push_back(account);
          break;
        }
        case AdminOpKind::Genesis:
          break;  // handled during genesis construction
      }
      return std::nullopt;
    }
    case TxKind::RevocationCall: {
      RevocationCallPayload call = RevocationCallPayload::decode(tx.payload);
      return apply_revocation_call(revocation_, call, issued_roots_);
    }
  }
  return std::nullopt;
}

ProducedBlock Chain::produce_block(const KeyPair& producer_key,
                                   const std::vector<Transaction>& pending) {
  const std::uint64_t next = blocks_.size();
  const Address producer = producer_key.address();
  const Account* account = find_account(producer);
  if (account == nullptr || account->role != Role::Authority) {
    throw PolicyError("block production requires an authority key");
  }
  if (scheduled_producer(next) != producer) {
    throw PolicyError("producer is not scheduled for this height");
  }

  ProducedBlock result;
  Block block;
  block.height = next;
  block.prev_hash = head().hash();
  block.timestamp = static_cast<std::int64_t>(next) *
                    static_cast<std::int64_t>(config_.block_interval);
  block.producer = producer;

  // Stage the state so intra-block effects (a blacklist ahead of a sender's
  // transaction, a duplicate root) are seen by later transactions.
  Chain staged = *this;
  for (const Transaction& tx : pending) {
    TxValidation validation = staged.validate_tx(tx);
    if (!validation.ok) {
      result.rejected.emplace_back(tx.id(), validation);
      continue;
    }
    auto outcome = staged.apply_tx(tx, next);
    result.applied.push_back(AppliedTx{tx.id(), outcome});
    block.transactions.push_back(tx);
  }
  block.sign_with(producer_key);

  BlockValidation appended = append_block(block, ValidationMode::Strict);
  if (!appended.ok) {
    throw std::logic_error("produced block failed self-validation: " + appended.detail);
  }
  result.block = std::move(block);
  return result;
}

BlockValidation Chain::check_block(const Block& block) const {
  const std::uint64_t next = blocks_.size();
  if (block.height != next) {
    return {false, "unexpected height"};
  }
  if (block.prev_hash != head().hash()) {
    return {false, "hash link mismatch"};
  }
  std::int64_t expected_ts = static_cast<std::int64_t>(next) *
                             static_cast<std::int64_t>(config_.block_interval);
  if (block.timestamp != expected_ts) {
    return {false, "timestamp violates the logical clock"};
  }
  const Account* producer = find_account(block.producer);
  if (producer == nullptr || producer->role != Role::Authority) {
    return {false, "producer is not an authority"};
  }
  if (scheduled_producer(next) != block.producer) {
    return {false, "producer is out of schedule"};
  }
  if (!block.signature_valid(producer->public_key)) {
    return {false, "producer signature invalid"};
  }
  Chain staged = *this;
  for (const Transaction& tx : block.transactions) {
    TxValidation validation = staged.validate_tx(tx);
    if (!validation.ok) {
      return {false, std::string("invalid transaction: ") + validation.detail};
    }
    staged.apply_tx(tx, next);
  }
  return {};
}

BlockValidation Chain::append_block(const Block& block, ValidationMode mode) {
  if (mode == ValidationMode::Strict) {
    BlockValidation validation = check_block(block);
    if (!validation.ok) return validation;
  }
  blocks_.push_back(block);
  for (const Transaction& tx : block.transactions) {
    try {
      apply_tx(tx, block.height);
    } catch (const CodecError&) {
      // Permissive replay of a damaged chain: the audit reports it.
    }
  }
  return {};
}

std::optional<Transaction> Chain::query_tx(std::uint64_t block_number,
                                           const Digest& tx_id) const {
  if (block_number >= blocks_.size()) return std::nullopt;
  for (const Transaction& tx : blocks_[block_number].transactions) {
    if (tx.id() == tx_id) return tx;
  }
  return std::nullopt;
}

AuditReport Chain::audit(std::size_t max_violations) const {
  AuditReport report;
  auto full = [&] { return report.violations.size() >= max_violations; };
  if (blocks_.empty()) {
    report.violations.push_back({0, "empty-chain", "chain has no blocks"});
    return report;
  }

  // Genesis: recompute the block from its embedded configuration.
  GenesisConfig genesis_config;
  try {
    const Block& genesis_block = blocks_.front();
    if (genesis_block.transactions.size() != 1) {
      throw CodecError("genesis block must hold exactly the genesis op", 0);
    }
    AdminOpPayload op = AdminOpPayload::decode(genesis_block.transactions[0].payload);
    if (op.op != AdminOpKind::Genesis) {
      throw CodecError("block 0 does not carry the genesis op", 0);
    }
    genesis_config = decode_genesis_blob(op.genesis_blob);
    if (genesis_config.authorities.empty()) {
      throw CodecError("genesis authority set is empty", 0);
    }
    Block expected =
        build_genesis_block(genesis_config.authorities, genesis_config.config);
    if (!(expected == genesis_block)) {
      report.violations.push_back(
          {0, "genesis-mismatch", "genesis block deviates from its configuration"});
    }
  } catch (const CodecError& e) {
    report.violations.push_back({0, "genesis-malformed", e.what()});
    return report;
  }

  Chain replayed = Chain::genesis(genesis_config.authorities, genesis_config.config);
  for (std::size_t i = 1; i < blocks_.size() && !full(); ++i) {
    const Block& block = blocks_[i];
    const std::uint64_t h = block.height;
    if (block.height != i) {
      report.violations.push_back({h, "height", "heights are not contiguous"});
    }
    if (block.prev_hash != replayed.blocks_[i - 1].hash()) {
      report.violations.push_back({h, "hash-link", "prev_hash does not match parent"});
    }
    std::int64_t expected_ts =
        static_cast<std::int64_t>(i) *
        static_cast<std::int64_t>(replayed.config_.block_interval);
    if (block.timestamp != expected_ts) {
      report.violations.push_back({h, "timestamp", "timestamp violates the logical clock"});
    }
    const Account* producer = replayed.find_account(block.producer);
    if (producer == nullptr || producer->role != Role::Authority) {
      report.violations.push_back({h, "producer-role", "producer is not an authority"});
    } else {
      if (replayed.scheduled_producer(i) != block.producer) {
        report.violations.push_back({h, "producer-schedule", "producer out of schedule"});
      }
      if (!block.signature_valid(producer->public_key)) {
        report.violations.push_back({h, "producer-signature", "block signature invalid"});
      }
    }
    replayed.blocks_.push_back(block);
    for (const Transaction& tx : block.transactions) {
      TxValidation validation = replayed.validate_tx(tx);
      if (!validation.ok) {
        report.violations.push_back(
            {h, std::string("tx-") + reject_reason_name(validation.reason),
             validation.detail});
        continue;
      }
      try {
        replayed.apply_tx(tx, h);
      } catch (const CodecError& e) {
        report.violations.push_back({h, "tx-malformed", e.what()});
      }
    }
  }

  // The audited chain must agree with the replayed state it claims to carry.
  if (!full() && replayed.revocation_.state_digest() != revocation_.state_digest()) {
    report.violations.push_back(
        {height(), "state-divergence", "replayed revocation state differs"});
  }
  return report;
}

// -- persistence ----------------------------------------------------------

Bytes Chain::serialize() const {
  ByteWriter writer;
  for (const Block& block : blocks_) {
    Bytes record = block.encode();
    writer.u32(static_cast<std::uint32_t>(record.size()));
    writer.raw(record);
  }
  return writer.take();
}

Chain Chain::replay(ByteView data, ValidationMode mode) {
  ByteReader reader(data);
  std::uint32_t genesis_len = reader.u32();
  ByteView genesis_record = reader.raw(genesis_len);
  ByteReader genesis_reader(genesis_record);
  Block genesis_block = Block::decode(genesis_reader);
  genesis_reader.expect_done();

  if (genesis_block.transactions.size() != 1) {
    throw CodecError("genesis block must hold exactly the genesis op", 0);
  }
  AdminOpPayload op = AdminOpPayload::decode(genesis_block.transactions[0].payload);
  if (op.op != AdminOpKind::Genesis) {
    throw CodecError("block 0 does not carry the genesis op", 0);
  }
  GenesisConfig genesis_config = decode_genesis_blob(op.genesis_blob);
  if (genesis_config.authorities.empty()) {
    throw CodecError("genesis authority set is empty", 0);
  }
  Chain chain = Chain::genesis(genesis_config.authorities, genesis_config.config);
  if (!(chain.blocks_.front() == genesis_block)) {
    if (mode == ValidationMode::Strict) {
      throw CodecError("genesis block deviates from its configuration", 0);
    }
    chain.blocks_.front() = genesis_block;
  }

  while (!reader.done()) {
    std::size_t at = reader.offset();
    std::uint32_t len = reader.u32();
    ByteView record = reader.raw(len);
    ByteReader block_reader(record);
    Block block = Block::decode(block_reader);
    block_reader.expect_done();
    BlockValidation validation = chain.append_block(block, mode);
    if (!validation.ok) {
      throw CodecError("invalid block during replay: " + validation.detail, at);
    }
  }
  return chain;
}

std::string Chain::manifest_json() const {
  ordered_json manifest;
  manifest["format"] = 1;
  manifest["network_id"] = config_.network_id;
  manifest["genesis_hash"] = genesis_hash().hex();
  manifest["block_interval"] = config_.block_interval;
  manifest["rules_engine_id"] = config_.rules_engine_id.hex();
  manifest["impl_engine_id"] = config_.impl_engine_id.hex();
  ordered_json roster = ordered_json::array();
  for (const Account& a : authorities_) {
    roster.push_back({{"address", a.address.hex()}, {"public_key", a.public_key.hex()}});
  }
  manifest["authorities"] = std::move(roster);
  return manifest.dump(2) + "\n";
}

void Chain::save(const std::string& ledger_path, const std::string& manifest_path) const {
  {
    std::ofstream out(ledger_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write ledger file: " + ledger_path);
    Bytes data = serialize();
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
  }
  std::ofstream manifest(manifest_path, std::ios::trunc);
  if (!manifest) throw std::runtime_error("cannot write manifest: " + manifest_path);
  manifest << manifest_json();
}

namespace {
Bytes read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}
}  // namespace

Chain Chain::load(const std::string& ledger_path, const std::string& manifest_path,
                  ValidationMode mode) {
  Bytes data = read_file_bytes(ledger_path);
  Chain chain = replay(ByteView(data.data(), data.size()), mode);

  ordered_json manifest = ordered_json::parse(read_file_bytes(manifest_path));
  if (manifest.at("network_id").get<std::string>() != chain.config_.network_id) {
    throw CodecError("manifest network id does not match the ledger", 0);
  }
  if (manifest.at("genesis_hash").get<std::string>() != chain.genesis_hash().hex()) {
    throw CodecError("manifest genesis hash does not match the ledger", 0);
  }
  return chain;
}

AuditReport audit_ledger_bytes(ByteView data, const std::optional<Digest>& expected_genesis,
                               std::size_t max_violations) {
  AuditReport report;
  try {
    Chain chain = Chain::replay(data, ValidationMode::Permissive);
    report = chain.audit(max_violations);
    if (expected_genesis && chain.genesis_hash() != *expected_genesis) {
      report.violations.push_back(
          {0, "genesis-hash", "genesis hash does not match the manifest"});
    }
  } catch (const CodecError& e) {
    report.violations.push_back(
        {0, "parse-error", std::string(e.what()) + " at offset " + std::to_string(e.offset())});
  }
  return report;
}

}  // namespace cerberus
