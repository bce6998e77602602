// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cerberus/block.hpp"
#include "cerberus/bytes.hpp"
#include "cerberus/digest.hpp"
#include "cerberus/keys.hpp"
#include "cerberus/revocation.hpp"
#include "cerberus/tx.hpp"

namespace cerberus {

/// Network-wide parameters fixed at genesis and embedded in block 0.
struct ChainConfig {
  std::string network_id = "cerberus";
  std::uint32_t block_interval = 5;  // logical time units per block
  Digest rules_engine_id;
  Digest impl_engine_id;

  static ChainConfig with_default_contracts(std::string network_id = "cerberus",
                                            std::uint32_t block_interval = 5);
};

enum class RejectReason : std::uint8_t {
  None = 0,
  Malformed,
  UnknownSender,
  BadSignature,
  Blacklisted,
  PolicyUnmet,
  Conflict,
};

const char* reject_reason_name(RejectReason reason);

struct TxValidation {
  bool ok = true;
  RejectReason reason = RejectReason::None;
  std::string detail;

  static TxValidation accept() { return {}; }
  static TxValidation reject(RejectReason r, std::string detail);
};

struct BlockValidation {
  bool ok = true;
  std::string detail;
};

struct TxLocation {
  std::uint64_t block_height = 0;
  Digest tx_id;
};

struct AuditViolation {
  std::uint64_t height = 0;
  std::string code;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditViolation> violations;
  bool clean() const { return violations.empty(); }
};

/// Result of including one transaction in a block, surfaced so callers can
/// observe contract outcomes (e.g. the process hash of a revocation).
struct AppliedTx {
  Digest tx_id;
  std::optional<RevocationOutcome> revocation;
};

struct ProducedBlock {
  Block block;
  std::vector<AppliedTx> applied;
  std::vector<std::pair<Digest, TxValidation>> rejected;
};

/// Strict validation is the honest-node behavior. Permissive replay exists so
/// observers can load a suspect chain far enough to audit it.
enum class ValidationMode { Strict, Permissive };

/// Append-only proof-of-authority chain plus the state derived from it. The
/// chain has a single-writer contract: one context appends blocks while any
/// number of readers query a snapshot.
class Chain {
 public:
  /// Builds the deterministic genesis block from the initial authority set.
  /// The revoking Authority-List is seeded with the accreditation body's
  /// entry (the first two authority keys).
  static Chain genesis(const std::vector<Account>& authorities, ChainConfig config);

  // -- transaction builders -------------------------------------------------
  Transaction make_register_university_tx(const KeyPair& authority_key, std::string name,
                                          const PublicKey& account_key,
                                          SigningPolicy policy) const;
  Transaction make_blacklist_tx(const KeyPair& authority_key, const Address& target) const;
  Transaction make_add_authority_tx(const KeyPair& authority_key, std::string name,
                                    const PublicKey& account_key) const;
  /// Builds and signs an IssueBatch transaction. Throws PolicyError when the
  /// signer set cannot satisfy the university's policy.
  Transaction create_issue_tx(const Address& university, const Digest& batch_root,
                              const std::vector<const KeyPair*>& signers) const;
  Transaction make_revocation_tx(const Address& sender, const RevocationCallPayload& call,
                                 const KeyPair& caller_key) const;

  // -- consensus ------------------------------------------------------------
  TxValidation validate_tx(const Transaction& tx) const;
  /// Produces, signs, appends and applies the next block. Invalid pending
  /// transactions are dropped and reported, not included.
  ProducedBlock produce_block(const KeyPair& producer_key,
                              const std::vector<Transaction>& pending);
  /// Replica-side handler: validates the whole block, then applies it.
  BlockValidation append_block(const Block& block,
                               ValidationMode mode = ValidationMode::Strict);

  std::optional<Transaction> query_tx(std::uint64_t block_number,
                                      const Digest& tx_id) const;
  std::optional<TxLocation> find_issued_root(const Digest& batch_root) const;

  /// Re-validates every link, signature, schedule and policy from genesis.
  /// `max_violations` short-circuits the pass once that many findings are
  /// collected (detection sweeps only need the first).
  AuditReport audit(std::size_t max_violations = SIZE_MAX) const;

  // -- accessors ------------------------------------------------------------
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& head() const { return blocks_.back(); }
  std::uint64_t height() const { return blocks_.back().height; }
  Digest genesis_hash() const { return blocks_.front().hash(); }
  const ChainConfig& config() const { return config_; }
  const std::vector<Account>& authority_set() const { return authorities_; }
  Address scheduled_producer(std::uint64_t block_height) const;
  const Account* find_account(const Address& address) const;
  const SigningPolicy* policy_for(const Address& address) const;
  std::optional<std::uint64_t> blacklisted_height(const Address& address) const;
  bool university_registered(const Address& address) const;
  const std::string* account_name(const Address& address) const;
  const RevocationState& revocation() const { return revocation_; }
  const std::set<Digest>& issued_roots() const { return issued_roots_; }

  // -- persistence ----------------------------------------------------------
  Bytes serialize() const;
  static Chain replay(ByteView data, ValidationMode mode = ValidationMode::Strict);
  std::string manifest_json() const;
  void save(const std::string& ledger_path, const std::string& manifest_path) const;
  static Chain load(const std::string& ledger_path, const std::string& manifest_path,
                    ValidationMode mode = ValidationMode::Strict);

 private:
  Chain() = default;

  static Block build_genesis_block(const std::vector<Account>& authorities,
                                   const ChainConfig& config);
  BlockValidation check_block(const Block& block) const;
  /// Applies one validated transaction to the derived state.
  std::optional<RevocationOutcome> apply_tx(const Transaction& tx,
                                            std::uint64_t block_height);
  void seed_revocation_authority();

  ChainConfig config_;
  std::vector<Block> blocks_;

  std::vector<Account> authorities_;
  std::map<Address, Account> accounts_;
  std::map<Address, SigningPolicy> policies_;
  std::map<Address, std::string> names_;
  std::map<Address, std::uint64_t> blacklist_;
  std::map<Digest, TxLocation> issued_;
  std::set<Digest> issued_roots_;
  RevocationState revocation_;
};

/// Parses and audits a persisted ledger byte stream. Parse failures surface
/// as violations rather than exceptions, so a truncated or bit-flipped file
/// is still a clean audit *finding*. When the expected genesis hash (from the
/// sidecar manifest) is supplied, a rewritten genesis block is flagged too.
AuditReport audit_ledger_bytes(ByteView data,
                               const std::optional<Digest>& expected_genesis = std::nullopt,
                               std::size_t max_violations = SIZE_MAX);

}  // namespace cerberus
