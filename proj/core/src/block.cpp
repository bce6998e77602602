// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#include "cerberus/block.hpp"

namespace cerberus {

Bytes Block::preimage() const {
  ByteWriter writer;
  writer.u64(height);
  writer.raw(prev_hash.view());
  writer.u64(static_cast<std::uint64_t>(timestamp));
  writer.raw(producer.view());
  writer.u32(static_cast<std::uint32_t>(transactions.size()));
  for (const Transaction& tx : transactions) {
    Bytes encoded = tx.encode();
    writer.u32(static_cast<std::uint32_t>(encoded.size()));
    writer.raw(encoded);
  }
  return writer.take();
}

void Block::sign_with(const KeyPair& producer_key) {
  producer_signature = producer_key.sign(hash().view());
}

bool Block::signature_valid(const PublicKey& producer_pubkey) const {
  return verify_signature(producer_pubkey, hash().view(), producer_signature);
}

Bytes Block::encode() const {
  ByteWriter writer;
  writer.raw(preimage());
  writer.raw(producer_signature.view());
  return writer.take();
}

Block Block::decode(ByteReader& reader) {
  Block block;
  block.height = reader.u64();
  block.prev_hash = Digest::from_bytes(reader.raw(32));
  block.timestamp = static_cast<std::int64_t>(reader.u64());
  block.producer = Address::from_bytes(reader.raw(20));
  std::uint32_t count = reader.u32();
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint32_t len = reader.u32();
    ByteView encoded = reader.raw(len);
    ByteReader tx_reader(encoded);
    block.transactions.push_back(Transaction::decode(tx_reader));
    tx_reader.expect_done();
  }
  block.producer_signature = Signature::from_bytes(reader.raw(64));
  return block;
}

}  // namespace cerberus
