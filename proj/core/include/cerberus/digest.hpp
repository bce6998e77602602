// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "cerberus/bytes.hpp"

namespace cerberus {

/// 32-byte SHA-256 digest. Every fingerprint in the system is one of these.
struct Digest {
  std::array<std::uint8_t, 32> bytes{};

  auto operator<=>(const Digest&) const = default;

  std::string hex() const { return to_hex(bytes); }
  ByteView view() const { return ByteView(bytes.data(), bytes.size()); }
  bool is_zero() const;

  static Digest from_hex(std::string_view hex);
  static Digest from_bytes(ByteView data);
};

/// SHA-256 of a single buffer.
Digest sha256(ByteView data);

/// SHA-256 of the concatenation left ∥ right without materializing it.
Digest sha256_concat(const Digest& left, const Digest& right);

}  // namespace cerberus
