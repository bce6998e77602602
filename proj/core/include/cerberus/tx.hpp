// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cerberus/bytes.hpp"
#include "cerberus/digest.hpp"
#include "cerberus/keys.hpp"

namespace cerberus {

enum class Role : std::uint8_t { Authority = 1, University = 2, Observer = 3 };

const char* role_name(Role role);

struct Account {
  Address address;
  PublicKey public_key;
  Role role = Role::Observer;

  bool operator==(const Account&) const = default;

  static Account make(const PublicKey& key, Role role) {
    return Account{address_of(key), key, role};
  }
};

/// m-of-n signing policy: at least `required` distinct keys out of `keys`
/// must sign.
struct SigningPolicy {
  std::size_t required = 1;
  std::vector<PublicKey> keys;

  bool operator==(const SigningPolicy&) const = default;
  bool contains(const PublicKey& key) const;
};

enum class TxKind : std::uint8_t { IssueBatch = 1, AdminOp = 2, RevocationCall = 3 };

const char* tx_kind_name(TxKind kind);

struct TxSignature {
  PublicKey signer;
  Signature signature;

  bool operator==(const TxSignature&) const = default;
};

/// Signed ledger record. The id is the hash of the canonical unsigned bytes,
/// so every signer commits to the same id and the id never depends on the
/// signature set.
struct Transaction {
  TxKind kind = TxKind::IssueBatch;
  Address sender;
  Bytes payload;
  std::vector<TxSignature> signatures;

  bool operator==(const Transaction&) const = default;

  Bytes unsigned_bytes() const;
  Digest id() const { return sha256(unsigned_bytes()); }
  void sign_with(const KeyPair& keypair);

  Bytes encode() const;
  static Transaction decode(ByteReader& reader);
};

/// IssueBatch payload: the batch Merkle root plus the identifiers of the two
/// revocation contracts governing the batch.
struct IssueBatchPayload {
  Digest batch_root;
  Digest rules_engine_id;
  Digest impl_engine_id;

  Bytes encode() const;
  static IssueBatchPayload decode(ByteView bytes);
};

enum class AdminOpKind : std::uint8_t {
  Genesis = 0,
  AddUniversity = 1,
  BlacklistKey = 2,
  AddAuthority = 3,
};

/// AdminOp payload for registry mutations by the accreditation body.
struct AdminOpPayload {
  AdminOpKind op = AdminOpKind::AddUniversity;
  std::string name;                     // AddUniversity / AddAuthority
  PublicKey account_key;                // AddUniversity / AddAuthority
  SigningPolicy policy;                 // AddUniversity
  Address target;                       // BlacklistKey
  Bytes genesis_blob;                   // Genesis

  Bytes encode() const;
  static AdminOpPayload decode(ByteView bytes);
};

}  // namespace cerberus
