// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cerberus/bytes.hpp"
#include "cerberus/digest.hpp"
#include "cerberus/keys.hpp"
#include "cerberus/merkle.hpp"

namespace cerberus {

/// One organization allowed to take part in revocation. Each org holds
/// exactly two keys; its two keys count as two distinct approvers, so a
/// single org can complete a revocation on its own.
struct AuthorityListEntry {
  Address org;
  std::array<PublicKey, 2> keys;

  bool operator==(const AuthorityListEntry&) const = default;
};

/// A revocation that has been initiated but not yet confirmed.
struct PendingRevocation {
  Digest document_hash;           // leaf digest or batch root (D_H)
  Digest process_hash;            // handle returned to the initiator (P_H)
  std::set<PublicKey> approvals;  // distinct keys that passed the rules check

  std::size_t revoke_count() const { return approvals.size(); }

  bool operator==(const PendingRevocation&) const = default;
};

/// Full contract state: the revoking Authority-List (rules engine) and the
/// pending/revoked documents (implementation engine). Mutates only through
/// the operations below, which are exactly the RevocationCall transitions.
struct RevocationState {
  std::vector<AuthorityListEntry> authority_list;
  std::map<Digest, PendingRevocation> pending;  // keyed by process hash
  std::set<Digest> revoke_list;
  std::size_t required_count = 2;
  // Once-per-document rule: every (key, document) pair that ever passed the
  // rules check, plus the per-document counter the rules engine keeps.
  std::set<std::pair<PublicKey, Digest>> sign_history;
  std::map<Digest, std::size_t> document_counters;

  bool operator==(const RevocationState&) const = default;

  bool is_listed(const PublicKey& key) const;
  bool org_listed(const Address& org) const;

  /// Deterministic digest of the whole state, for replay comparisons.
  Digest state_digest() const;
};

/// Domain-separation tag bound into every process hash.
inline constexpr std::string_view kProcessHashTag = "CERBERUS-REVOKE-V1";

/// P_H = H(document ∥ initiating key ∥ tag): reproducible and bound to both
/// the document and the initiator.
Digest process_hash_for(const Digest& document_hash, const PublicKey& initiator);

enum class RevocationStatus : std::uint8_t {
  Ok = 0,
  NotAuthorized,    // rules check failed: unlisted key or repeated signature
  UnknownDocument,  // document does not match any issued credential
  UnknownProcess,   // confirm referenced a process hash that is not pending
  InvalidEntry,     // authority entry malformed (must carry exactly two keys)
};

const char* revocation_status_name(RevocationStatus status);

struct RevocationOutcome {
  RevocationStatus status = RevocationStatus::Ok;
  std::optional<Digest> process_hash;  // set on successful initiation
  bool completed = false;              // set when a confirm filled the quota

  bool ok() const { return status == RevocationStatus::Ok; }
};

/// Merkle proof that a leaf digest belongs to an issued batch: the root the
/// proof folds to must be one of the issued batch roots.
struct LeafProof {
  Digest batch_root;
  AuthPath path;

  bool operator==(const LeafProof&) const = default;
};

/// Rules engine membership rule: the caller's org must already be listed.
/// Adding an already-listed org is a set-union no-op.
RevocationOutcome add_revoking_authority(RevocationState& state, const PublicKey& caller,
                                         const AuthorityListEntry& entry);

/// Rules engine check: true iff the key belongs to a listed org and has not
/// previously signed for this document. On success the (key, document) pair
/// is recorded and the per-document revoke counter increments.
bool rules_check(RevocationState& state, const PublicKey& key, const Digest& document_hash);

/// Implementation engine, phase one. `issued_roots` is the set of batch roots
/// accredited on chain; a leaf document needs `proof` tying it to one of
/// them. Returns the process hash on success.
RevocationOutcome revoke_document(RevocationState& state, const PublicKey& key,
                                  const Digest& document_hash,
                                  const std::set<Digest>& issued_roots,
                                  const std::optional<LeafProof>& proof = std::nullopt);

/// Implementation engine, phase two. When the second distinct key passes the
/// rules check the document enters the Revoke-List and the pending entry
/// closes.
RevocationOutcome confirm_revocation(RevocationState& state, const PublicKey& key,
                                     const Digest& process_hash);

/// True iff the leaf itself or the batch root covering it has been revoked.
bool is_revoked(const RevocationState& state, const Digest& leaf_digest,
                const Digest& batch_root);

// ---------------------------------------------------------------------------
// RevocationCall wire payloads (see docs/formats.md for the byte layout).

enum class RevocationFn : std::uint8_t { AddAuth = 1, Revoke = 2, Confirm = 3 };

struct RevocationCallPayload {
  RevocationFn fn = RevocationFn::Revoke;
  PublicKey caller_key;
  // AddAuth arguments. Key count travels on the wire so that malformed
  // entries (1 or 3 keys) can be rejected by the engine, not the parser.
  Address org;
  std::vector<PublicKey> org_keys;
  // Revoke arguments
  Digest document_hash;
  std::optional<LeafProof> proof;
  // Confirm arguments
  Digest process_hash;

  bool operator==(const RevocationCallPayload&) const = default;

  Bytes encode() const;
  static RevocationCallPayload decode(ByteView bytes);
};

/// Applies a decoded call to the state. Dispatches on the function tag; the
/// caller key must already be authenticated by the ledger layer.
RevocationOutcome apply_revocation_call(RevocationState& state,
                                        const RevocationCallPayload& call,
                                        const std::set<Digest>& issued_roots);

}  // namespace cerberus
