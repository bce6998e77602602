// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#include "cerberus/keys.hpp"

#include <sodium.h>

#include <algorithm>
#include <stdexcept>

namespace cerberus {

namespace {
struct SodiumInit {
  SodiumInit() {
    if (sodium_init() < 0) {
      throw std::runtime_error("libsodium initialization failed");
    }
  }
};
const SodiumInit kSodiumInit{};
}  // namespace

PublicKey PublicKey::from_bytes(ByteView data) {
  if (data.size() != 32) throw CodecError("public key must be 32 bytes", 0);
  PublicKey k;
  std::copy(data.begin(), data.end(), k.bytes.begin());
  return k;
}

PublicKey PublicKey::from_hex(std::string_view hex) {
  return from_bytes(cerberus::from_hex(hex));
}

Signature Signature::from_bytes(ByteView data) {
  if (data.size() != 64) throw CodecError("signature must be 64 bytes", 0);
  Signature s;
  std::copy(data.begin(), data.end(), s.bytes.begin());
  return s;
}

Address Address::from_bytes(ByteView data) {
  if (data.size() != 20) throw CodecError("address must be 20 bytes", 0);
  Address a;
  std::copy(data.begin(), data.end(), a.bytes.begin());
  return a;
}

Address Address::from_hex(std::string_view hex) {
  return from_bytes(cerberus::from_hex(hex));
}

Address address_of(const PublicKey& key) {
  Digest h = sha256(key.view());
  Address a;
  std::copy(h.bytes.begin(), h.bytes.begin() + 20, a.bytes.begin());
  return a;
}

KeyPair KeyPair::from_seed(ByteView seed32) {
  if (seed32.size() != 32) {
    throw std::invalid_argument("key seed must be 32 bytes");
  }
  KeyPair kp;
  std::copy(seed32.begin(), seed32.end(), kp.seed_.begin());
  crypto_sign_seed_keypair(kp.public_key_.bytes.data(), kp.secret_key_.data(),
                           kp.seed_.data());
  return kp;
}

Signature KeyPair::sign(ByteView message) const {
  Signature sig;
  crypto_sign_detached(sig.bytes.data(), nullptr, message.data(), message.size(),
                       secret_key_.data());
  return sig;
}

bool verify_signature(const PublicKey& key, ByteView message, const Signature& sig) {
  return crypto_sign_verify_detached(sig.bytes.data(), message.data(), message.size(),
                                     key.bytes.data()) == 0;
}

}  // namespace cerberus
