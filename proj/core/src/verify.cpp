// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#include "cerberus/verify.hpp"

#include <nlohmann/json.hpp>

#include "cerberus/merkle.hpp"

namespace cerberus {

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::Verified: return "Verified";
    case Verdict::ContentMismatch: return "ContentMismatch";
    case Verdict::NotFound: return "NotFound";
    case Verdict::Revoked: return "Revoked";
    case Verdict::UniversityBlacklisted: return "UniversityBlacklisted";
  }
  return "unknown";
}

std::string VerificationResult::to_json() const {
  nlohmann::ordered_json doc;
  doc["verdict"] = verdict_name(verdict);
  if (leaf_digest) doc["leaf"] = leaf_digest->hex();
  if (recomputed_root) doc["recomputed_root"] = recomputed_root->hex();
  if (onchain_root) doc["onchain_root"] = onchain_root->hex();
  if (revocation_source) {
    doc["revocation_source"] =
        *revocation_source == RevocationSource::Batch ? "batch" : "individual";
  }
  if (!detail.empty()) doc["detail"] = detail;
  return doc.dump();
}

VerificationResult verify_degree(const DegreeCodePayload& payload, const Chain& chain,
                                 const RevocationState& revocation) {
  VerificationResult result;

  // Recompute the fingerprint chain from the disclosed plaintext. Only the
  // degree plaintext and the id/transcript hash are needed here.
  Digest degree_hash = sha256(canonical_bytes(payload.degree_info));
  Digest leaf = make_leaf(degree_hash, payload.id_transcript_hash);
  result.leaf_digest = leaf;

  Digest recomputed = leaf;
  for (const PathEntry& entry : payload.auth_path.entries) {
    recomputed = (entry.side == Side::Right) ? sha256_concat(recomputed, entry.sibling)
                                             : sha256_concat(entry.sibling, recomputed);
  }
  result.recomputed_root = recomputed;

  // Locate the accreditation transaction by its ledger coordinates.
  std::optional<Transaction> tx = chain.query_tx(payload.block_number, payload.tx_id);
  if (!tx || tx->kind != TxKind::IssueBatch) {
    result.verdict = Verdict::NotFound;
    result.detail = "no accreditation record at the given block/transaction";
    return result;
  }
  IssueBatchPayload issue;
  try {
    issue = IssueBatchPayload::decode(tx->payload);
  } catch (const CodecError&) {
    result.verdict = Verdict::NotFound;
    result.detail = "accreditation record is malformed";
    return result;
  }
  result.onchain_root = issue.batch_root;

  // The issuing transaction must itself be validly signed for its policy;
  // otherwise the credential was never properly accredited.
  const SigningPolicy* policy = chain.policy_for(tx->sender);
  std::set<PublicKey> valid_signers;
  Bytes message = tx->unsigned_bytes();
  for (const TxSignature& sig : tx->signatures) {
    if (policy != nullptr && policy->contains(sig.signer) &&
        verify_signature(sig.signer, message, sig.signature)) {
      valid_signers.insert(sig.signer);
    }
  }
  if (policy == nullptr || valid_signers.size() < policy->required) {
    result.verdict = Verdict::NotFound;
    result.detail = "issuer signatures do not satisfy the signing policy";
    return result;
  }

  if (recomputed != issue.batch_root) {
    result.verdict = Verdict::ContentMismatch;
    result.detail = "recomputed batch root does not match the accredited root";
    return result;
  }

  // Content is authentic; revocation status comes next.
  if (revocation.revoke_list.contains(issue.batch_root)) {
    result.verdict = Verdict::Revoked;
    result.revocation_source = RevocationSource::Batch;
    return result;
  }
  if (revocation.revoke_list.contains(leaf)) {
    result.verdict = Verdict::Revoked;
    result.revocation_source = RevocationSource::Individual;
    return result;
  }

  // Issuer standing: a credential accredited after its university was
  // blacklisted is not trustworthy. Credentials issued before the
  // blacklisting remain verified.
  if (auto blacklisted = chain.blacklisted_height(tx->sender)) {
    if (*blacklisted < payload.block_number) {
      result.verdict = Verdict::UniversityBlacklisted;
      result.detail = "issuer was blacklisted before this credential was accredited";
      return result;
    }
  }

  result.verdict = Verdict::Verified;
  return result;
}

bool verify_transcript(const IdTranscriptCodePayload& payload,
                       const std::string& id_number_entered, const Digest& expected_hash) {
  IdTranscriptInfo info;
  info.id_document_number = id_number_entered;
  info.courses = payload.courses;
  info.grades = payload.grades;
  info.gpa = payload.gpa;
  info.cgpa = payload.cgpa;
  Bytes canonical;
  try {
    canonical = canonical_bytes(info);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return sha256(canonical) == expected_hash;
}

VerificationResult verify_resume_code(const std::string& payload_text, const Chain& chain,
                                      const RevocationState& revocation) {
  DegreeCodePayload payload;
  try {
    Bytes raw = from_base64(payload_text);
    payload = decode_degree_code(ByteView(raw.data(), raw.size()));
  } catch (const CodecError& e) {
    VerificationResult result;
    result.verdict = Verdict::NotFound;
    result.detail = std::string("undecodable code: ") + e.what();
    return result;
  }
  return verify_degree(payload, chain, revocation);
}

}  // namespace cerberus
