// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cerberus/bytes.hpp"
#include "cerberus/digest.hpp"
#include "cerberus/merkle.hpp"
#include "cerberus/record.hpp"

namespace cerberus {

/// Fixed widths (bytes) of the degree_code text fields. Every field is
/// zero-padded to its width, so the non-path portion of a degree_code is
/// always 214 bytes and the whole payload is 214 + 32 × height.
struct FieldWidths {
  std::size_t name = 40;
  std::size_t serial = 16;
  std::size_t title = 40;
  std::size_t year = 4;
  std::size_t university = 40;

  std::size_t text_block() const { return name + serial + title + year + university; }
  // text block + id/transcript hash (32) + block number (8) + tx id (32)
  // + leaf index (2)
  std::size_t fixed_prefix() const { return text_block() + 74; }
};

/// Contents of the first QR code: degree plaintext, the commitment to the
/// id/transcript data, the ledger coordinates of the issuing transaction and
/// the authentication path. Sibling sides are not encoded; they derive from
/// the leaf index.
struct DegreeCodePayload {
  DegreeInfo degree_info;
  Digest id_transcript_hash;
  std::uint64_t block_number = 0;
  Digest tx_id;
  AuthPath auth_path;

  bool operator==(const DegreeCodePayload&) const = default;
};

/// Contents of the second QR code: transcript plaintext only. The identity
/// document number is deliberately absent; the verifier enters it manually.
struct IdTranscriptCodePayload {
  std::vector<Course> courses;
  std::vector<std::string> grades;
  Decimal2 gpa;
  Decimal2 cgpa;

  bool operator==(const IdTranscriptCodePayload&) const = default;
};

Bytes encode_degree_code(const DegreeCodePayload& payload, const FieldWidths& widths = {});
DegreeCodePayload decode_degree_code(ByteView bytes, const FieldWidths& widths = {});

Bytes encode_id_transcript_code(const IdTranscriptCodePayload& payload);
IdTranscriptCodePayload decode_id_transcript_code(ByteView bytes);

/// Builds the second payload from a full record (drops the id number).
IdTranscriptCodePayload id_transcript_payload(const IdTranscriptInfo& info);

enum class EccLevel : std::uint8_t { L = 0, M = 1, Q = 2, H = 3 };

/// Byte-mode data capacity (data codewords) of one QR version at one error
/// correction level, per the ISO/IEC 18004 error correction characteristics.
std::size_t qr_capacity(int version, EccLevel level);

/// Error correction level used for credential codes. Level H is the unique
/// setting under which the sizing model lands on exact version capacities at
/// the reference payload sizes (406 bytes = version 21, 596 = version 26).
inline constexpr EccLevel kCredentialEccLevel = EccLevel::H;

struct QrSpec {
  int version = 0;                 // 1..40
  EccLevel ecc_level = kCredentialEccLevel;
  int modules_per_side = 0;        // 17 + 4 * version
  std::size_t capacity_bytes = 0;  // byte-mode capacity of the chosen version
  double min_size_inches = 0.0;    // (scan distance / 10) * (modules / 25)
};

/// Selects the smallest version that holds payload_len at the given level and
/// applies the minimum-size model. Throws std::invalid_argument when the
/// payload exceeds version 40.
QrSpec qr_spec(std::size_t payload_len, double scan_distance_inches,
               EccLevel level = kCredentialEccLevel);

}  // namespace cerberus
