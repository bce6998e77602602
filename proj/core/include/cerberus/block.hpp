// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "cerberus/bytes.hpp"
#include "cerberus/digest.hpp"
#include "cerberus/keys.hpp"
#include "cerberus/tx.hpp"

namespace cerberus {

/// One ledger block. The hash covers header and body; the producer signature
/// covers the hash. Timestamps are logical: height × block interval.
struct Block {
  std::uint64_t height = 0;
  Digest prev_hash;
  std::int64_t timestamp = 0;
  Address producer;
  std::vector<Transaction> transactions;
  Signature producer_signature;

  bool operator==(const Block&) const = default;

  Bytes preimage() const;
  Digest hash() const { return sha256(preimage()); }
  void sign_with(const KeyPair& producer_key);
  bool signature_valid(const PublicKey& producer_pubkey) const;

  Bytes encode() const;
  static Block decode(ByteReader& reader);
};

}  // namespace cerberus
