// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#include "cerberus/digest.hpp"

#include <sodium.h>

#include <algorithm>

namespace cerberus {

bool Digest::is_zero() const {
  return std::all_of(bytes.begin(), bytes.end(), [](std::uint8_t b) { return b == 0; });
}

Digest Digest::from_hex(std::string_view hex) {
  Bytes raw = cerberus::from_hex(hex);
  return from_bytes(raw);
}

Digest Digest::from_bytes(ByteView data) {
  if (data.size() != 32) {
    throw CodecError("digest must be exactly 32 bytes", 0);
  }
  Digest d;
  std::copy(data.begin(), data.end(), d.bytes.begin());
  return d;
}

Digest sha256(ByteView data) {
  Digest out;
  crypto_hash_sha256(out.bytes.data(), data.data(), data.size());
  return out;
}

Digest sha256_concat(const Digest& left, const Digest& right) {
  std::array<std::uint8_t, 64> buf;
  std::copy(left.bytes.begin(), left.bytes.end(), buf.begin());
  std::copy(right.bytes.begin(), right.bytes.end(), buf.begin() + 32);
  return sha256(ByteView(buf.data(), buf.size()));
}

}  // namespace cerberus
