// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "cerberus/bytes.hpp"
#include "cerberus/digest.hpp"

namespace cerberus {

struct PublicKey {
  std::array<std::uint8_t, 32> bytes{};
  auto operator<=>(const PublicKey&) const = default;
  std::string hex() const { return to_hex(bytes); }
  ByteView view() const { return ByteView(bytes.data(), bytes.size()); }
  static PublicKey from_bytes(ByteView data);
  static PublicKey from_hex(std::string_view hex);
};

struct Signature {
  std::array<std::uint8_t, 64> bytes{};
  auto operator<=>(const Signature&) const = default;
  ByteView view() const { return ByteView(bytes.data(), bytes.size()); }
  static Signature from_bytes(ByteView data);
};

/// 20-byte account identifier: the leading bytes of H(public key).
struct Address {
  std::array<std::uint8_t, 20> bytes{};
  auto operator<=>(const Address&) const = default;
  std::string hex() const { return to_hex(bytes); }
  ByteView view() const { return ByteView(bytes.data(), bytes.size()); }
  static Address from_bytes(ByteView data);
  static Address from_hex(std::string_view hex);
};

Address address_of(const PublicKey& key);

/// Ed25519 key pair. Generation from a 32-byte seed is deterministic, which
/// keeps simulated networks and test fixtures reproducible.
class KeyPair {
 public:
  static KeyPair from_seed(ByteView seed32);
  static KeyPair from_seed(const Digest& seed) { return from_seed(seed.view()); }

  const PublicKey& public_key() const { return public_key_; }
  Address address() const { return address_of(public_key_); }
  ByteView seed() const { return ByteView(seed_.data(), seed_.size()); }

  Signature sign(ByteView message) const;

 private:
  KeyPair() = default;
  PublicKey public_key_;
  std::array<std::uint8_t, 64> secret_key_{};
  std::array<std::uint8_t, 32> seed_{};
};

bool verify_signature(const PublicKey& key, ByteView message, const Signature& sig);

}  // namespace cerberus
