// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "cerberus/chain.hpp"
#include "cerberus/codec.hpp"
#include "cerberus/digest.hpp"
#include "cerberus/record.hpp"

namespace cerberus {

enum class Verdict : std::uint8_t {
  Verified = 0,
  ContentMismatch,
  NotFound,
  Revoked,
  UniversityBlacklisted,
};

const char* verdict_name(Verdict verdict);

enum class RevocationSource : std::uint8_t { Individual = 0, Batch = 1 };

/// Outcome of a degree verification, with the evidence that produced it.
struct VerificationResult {
  Verdict verdict = Verdict::NotFound;
  std::optional<Digest> recomputed_root;
  std::optional<Digest> onchain_root;
  std::optional<Digest> leaf_digest;
  std::optional<RevocationSource> revocation_source;
  std::string detail;

  bool verified() const { return verdict == Verdict::Verified; }
  std::string to_json() const;
};

/// Fig.-5-style degree verification: recompute the leaf from the plaintext
/// and the id/transcript hash, fold the authentication path, fetch the
/// transaction by (block number, tx id), compare roots, then consult the
/// revocation list and the issuer's standing.
VerificationResult verify_degree(const DegreeCodePayload& payload, const Chain& chain,
                                 const RevocationState& revocation);

/// Transcript verification: the verifier types the id document number, the
/// transcript plaintext comes from the code, and the pair must hash to the
/// commitment obtained from a verified degree code.
bool verify_transcript(const IdTranscriptCodePayload& payload,
                       const std::string& id_number_entered, const Digest& expected_hash);

/// Decodes a Base64 degree code (the resume form) and delegates to
/// verify_degree. Undecodable text yields a NotFound verdict carrying the
/// parse evidence.
VerificationResult verify_resume_code(const std::string& payload_text, const Chain& chain,
                                      const RevocationState& revocation);

}  // namespace cerberus
