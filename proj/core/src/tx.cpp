// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#include "cerberus/tx.hpp"

#include <algorithm>
#include <stdexcept>

namespace cerberus {

const char* role_name(Role role) {
  switch (role) {
    case Role::Authority: return "authority";
    case Role::University: return "university";
    case Role::Observer: return "observer";
  }
  return "unknown";
}

const char* tx_kind_name(TxKind kind) {
  switch (kind) {
    case TxKind::IssueBatch: return "issue_batch";
    case TxKind::AdminOp: return "admin_op";
    case TxKind::RevocationCall: return "revocation_call";
  }
  return "unknown";
}

bool SigningPolicy::contains(const PublicKey& key) const {
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

Bytes Transaction::unsigned_bytes() const {
  ByteWriter writer;
  writer.u8(static_cast<std::uint8_t>(kind));
  writer.raw(sender.view());
  writer.u32(static_cast<std::uint32_t>(payload.size()));
  writer.raw(payload);
  return writer.take();
}

void Transaction::sign_with(const KeyPair& keypair) {
  Bytes message = unsigned_bytes();
  signatures.push_back(TxSignature{keypair.public_key(), keypair.sign(message)});
}

Bytes Transaction::encode() const {
  ByteWriter writer;
  writer.raw(unsigned_bytes());
  writer.u16(static_cast<std::uint16_t>(signatures.size()));
  for (const TxSignature& s : signatures) {
    writer.raw(s.signer.view());
    writer.raw(s.signature.view());
  }
  return writer.take();
}

Transaction Transaction::decode(ByteReader& reader) {
  Transaction tx;
  std::size_t at = reader.offset();
  std::uint8_t kind = reader.u8();
  if (kind < 1 || kind > 3) {
    throw CodecError("unknown transaction kind", at);
  }
  tx.kind = static_cast<TxKind>(kind);
  tx.sender = Address::from_bytes(reader.raw(20));
  std::uint32_t len = reader.u32();
  ByteView payload = reader.raw(len);
  tx.payload.assign(payload.begin(), payload.end());
  std::uint16_t count = reader.u16();
  for (std::uint16_t i = 0; i < count; ++i) {
    TxSignature sig;
    sig.signer = PublicKey::from_bytes(reader.raw(32));
    sig.signature = Signature::from_bytes(reader.raw(64));
    tx.signatures.push_back(sig);
  }
  return tx;
}

Bytes IssueBatchPayload::encode() const {
  ByteWriter writer;
  writer.raw(batch_root.view());
  writer.raw(rules_engine_id.view());
  writer.raw(impl_engine_id.view());
  return writer.take();
}

IssueBatchPayload IssueBatchPayload::decode(ByteView bytes) {
  ByteReader reader(bytes);
  IssueBatchPayload p;
  p.batch_root = Digest::from_bytes(reader.raw(32));
  p.rules_engine_id = Digest::from_bytes(reader.raw(32));
  p.impl_engine_id = Digest::from_bytes(reader.raw(32));
  reader.expect_done();
  return p;
}

Bytes AdminOpPayload::encode() const {
  ByteWriter writer;
  writer.u8(static_cast<std::uint8_t>(op));
  switch (op) {
    case AdminOpKind::Genesis:
      writer.raw(genesis_blob);
      break;
    case AdminOpKind::AddUniversity: {
      writer.u16(static_cast<std::uint16_t>(name.size()));
      writer.raw(to_bytes(name));
      writer.raw(account_key.view());
      writer.u8(static_cast<std::uint8_t>(policy.required));
      writer.u8(static_cast<std::uint8_t>(policy.keys.size()));
      for (const PublicKey& k : policy.keys) writer.raw(k.view());
      break;
    }
    case AdminOpKind::BlacklistKey:
      writer.raw(target.view());
      break;
    case AdminOpKind::AddAuthority:
      writer.u16(static_cast<std::uint16_t>(name.size()));
      writer.raw(to_bytes(name));
      writer.raw(account_key.view());
      break;
  }
  return writer.take();
}

AdminOpPayload AdminOpPayload::decode(ByteView bytes) {
  ByteReader reader(bytes);
  AdminOpPayload p;
  std::size_t at = reader.offset();
  std::uint8_t op = reader.u8();
  if (op > 3) throw CodecError("unknown admin op", at);
  p.op = static_cast<AdminOpKind>(op);
  switch (p.op) {
    case AdminOpKind::Genesis: {
      ByteView rest = reader.raw(reader.remaining());
      p.genesis_blob.assign(rest.begin(), rest.end());
      break;
    }
    case AdminOpKind::AddUniversity: {
      std::uint16_t len = reader.u16();
      ByteView name = reader.raw(len);
      p.name.assign(name.begin(), name.end());
      p.account_key = PublicKey::from_bytes(reader.raw(32));
      p.policy.required = reader.u8();
      std::uint8_t n = reader.u8();
      for (std::uint8_t i = 0; i < n; ++i) {
        p.policy.keys.push_back(PublicKey::from_bytes(reader.raw(32)));
      }
      break;
    }
    case AdminOpKind::BlacklistKey:
      p.target = Address::from_bytes(reader.raw(20));
      break;
    case AdminOpKind::AddAuthority: {
      std::uint16_t len = reader.u16();
      ByteView name = reader.raw(len);
      p.name.assign(name.begin(), name.end());
      p.account_key = PublicKey::from_bytes(reader.raw(32));
      break;
    }
  }
  reader.expect_done();
  return p;
}

}  // namespace cerberus
