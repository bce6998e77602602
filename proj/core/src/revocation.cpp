// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#include "cerberus/revocation.hpp"

#include <algorithm>

namespace cerberus {

bool RevocationState::is_listed(const PublicKey& key) const {
  for (const AuthorityListEntry& entry : authority_list) {
    if (entry.keys[0] == key || entry.keys[1] == key) return true;
  }
  return false;
}

bool RevocationState::org_listed(const Address& org) const {
  return std::any_of(authority_list.begin(), authority_list.end(),
                     [&](const AuthorityListEntry& e) { return e.org == org; });
}

Digest RevocationState::state_digest() const {
  ByteWriter writer;
  writer.u32(static_cast<std::uint32_t>(authority_list.size()));
  for (const AuthorityListEntry& entry : authority_list) {
    writer.raw(entry.org.view());
    writer.raw(entry.keys[0].view());
    writer.raw(entry.keys[1].view());
  }
  writer.u32(static_cast<std::uint32_t>(pending.size()));
  for (const auto& [ph, p] : pending) {
    writer.raw(ph.view());
    writer.raw(p.document_hash.view());
    writer.u32(static_cast<std::uint32_t>(p.approvals.size()));
    for (const PublicKey& k : p.approvals) writer.raw(k.view());
  }
  writer.u32(static_cast<std::uint32_t>(revoke_list.size()));
  for (const Digest& d : revoke_list) writer.raw(d.view());
  writer.u32(static_cast<std::uint32_t>(sign_history.size()));
  for (const auto& [key, doc] : sign_history) {
    writer.raw(key.view());
    writer.raw(doc.view());
  }
  return sha256(writer.bytes());
}

Digest process_hash_for(const Digest& document_hash, const PublicKey& initiator) {
  ByteWriter writer;
  writer.raw(document_hash.view());
  writer.raw(initiator.view());
  writer.raw(to_bytes(kProcessHashTag));
  return sha256(writer.bytes());
}

const char* revocation_status_name(RevocationStatus status) {
  switch (status) {
    case RevocationStatus::Ok: return "ok";
    case RevocationStatus::NotAuthorized: return "not_authorized";
    case RevocationStatus::UnknownDocument: return "unknown_document";
    case RevocationStatus::UnknownProcess: return "unknown_process";
    case RevocationStatus::InvalidEntry: return "invalid_entry";
  }
  return "unknown";
}

RevocationOutcome add_revoking_authority(RevocationState& state, const PublicKey& caller,
                                         const AuthorityListEntry& entry) {
  RevocationOutcome outcome;
  if (!state.is_listed(caller)) {
    outcome.status = RevocationStatus::NotAuthorized;
    return outcome;
  }
  if (state.org_listed(entry.org)) {
    // Union semantics: the org is already a member.
    return outcome;
  }
  state.authority_list.push_back(entry);
  return outcome;
}

bool rules_check(RevocationState& state, const PublicKey& key, const Digest& document_hash) {
  if (!state.is_listed(key)) return false;
  auto record = std::make_pair(key, document_hash);
  if (state.sign_history.contains(record)) return false;
  state.sign_history.insert(record);
  state.document_counters[document_hash] += 1;
  return true;
}

namespace {

bool document_exists(const Digest& document_hash, const std::set<Digest>& issued_roots,
                     const std::optional<LeafProof>& proof) {
  if (issued_roots.contains(document_hash)) return true;  // batch revocation
  if (!proof) return false;
  return issued_roots.contains(proof->batch_root) &&
         verify_path(document_hash, proof->path, proof->batch_root);
}

}  // namespace

RevocationOutcome revoke_document(RevocationState& state, const PublicKey& key,
                                  const Digest& document_hash,
                                  const std::set<Digest>& issued_roots,
                                  const std::optional<LeafProof>& proof) {
  RevocationOutcome outcome;
  if (!document_exists(document_hash, issued_roots, proof)) {
    outcome.status = RevocationStatus::UnknownDocument;
    return outcome;
  }
  if (!rules_check(state, key, document_hash)) {
    outcome.status = RevocationStatus::NotAuthorized;
    return outcome;
  }
  Digest ph = process_hash_for(document_hash, key);
  PendingRevocation pending;
  pending.document_hash = document_hash;
  pending.process_hash = ph;
  pending.approvals.insert(key);
  state.pending[ph] = std::move(pending);
  outcome.process_hash = ph;
  return outcome;
}

RevocationOutcome confirm_revocation(RevocationState& state, const PublicKey& key,
                                     const Digest& process_hash) {
  RevocationOutcome outcome;
  auto it = state.pending.find(process_hash);
  if (it == state.pending.end()) {
    outcome.status = RevocationStatus::UnknownProcess;
    return outcome;
  }
  PendingRevocation& pending = it->second;
  if (!rules_check(state, key, pending.document_hash)) {
    outcome.status = RevocationStatus::NotAuthorized;
    return outcome;
  }
  pending.approvals.insert(key);
  if (pending.revoke_count() == state.required_count) {
    state.revoke_list.insert(pending.document_hash);
    state.pending.erase(it);
    outcome.completed = true;
  }
  return outcome;
}

bool is_revoked(const RevocationState& state, const Digest& leaf_digest,
                const Digest& batch_root) {
  return state.revoke_list.contains(leaf_digest) || state.revoke_list.contains(batch_root);
}

Bytes RevocationCallPayload::encode() const {
  ByteWriter writer;
  writer.u8(static_cast<std::uint8_t>(fn));
  writer.raw(caller_key.view());
  switch (fn) {
    case RevocationFn::AddAuth:
      writer.raw(org.view());
      writer.u8(static_cast<std::uint8_t>(org_keys.size()));
      for (const PublicKey& k : org_keys) writer.raw(k.view());
      break;
    case RevocationFn::Revoke:
      writer.raw(document_hash.view());
      writer.u8(proof ? 1 : 0);
      if (proof) {
        writer.raw(proof->batch_root.view());
        writer.u32(static_cast<std::uint32_t>(proof->path.leaf_index));
        writer.u8(static_cast<std::uint8_t>(proof->path.entries.size()));
        for (const PathEntry& e : proof->path.entries) {
          writer.u8(static_cast<std::uint8_t>(e.side));
          writer.raw(e.sibling.view());
        }
      }
      break;
    case RevocationFn::Confirm:
      writer.raw(process_hash.view());
      break;
  }
  return writer.take();
}

RevocationCallPayload RevocationCallPayload::decode(ByteView bytes) {
  ByteReader reader(bytes);
  RevocationCallPayload call;
  std::size_t at = reader.offset();
  std::uint8_t fn = reader.u8();
  if (fn < 1 || fn > 3) throw CodecError("unknown revocation function", at);
  call.fn = static_cast<RevocationFn>(fn);
  call.caller_key = PublicKey::from_bytes(reader.raw(32));
  switch (call.fn) {
    case RevocationFn::AddAuth: {
      call.org = Address::from_bytes(reader.raw(20));
      std::uint8_t count = reader.u8();
      for (std::uint8_t i = 0; i < count; ++i) {
        call.org_keys.push_back(PublicKey::from_bytes(reader.raw(32)));
      }
      break;
    }
    case RevocationFn::Revoke: {
      call.document_hash = Digest::from_bytes(reader.raw(32));
      if (reader.u8() != 0) {
        LeafProof proof;
        proof.batch_root = Digest::from_bytes(reader.raw(32));
        proof.path.leaf_index = reader.u32();
        std::uint8_t count = reader.u8();
        for (std::uint8_t i = 0; i < count; ++i) {
          std::size_t side_at = reader.offset();
          std::uint8_t side = reader.u8();
          if (side > 1) throw CodecError("invalid path side", side_at);
          PathEntry entry;
          entry.side = static_cast<Side>(side);
          entry.sibling = Digest::from_bytes(reader.raw(32));
          proof.path.entries.push_back(entry);
        }
        call.proof = std::move(proof);
      }
      break;
    }
    case RevocationFn::Confirm:
      call.process_hash = Digest::from_bytes(reader.raw(32));
      break;
  }
  reader.expect_done();
  return call;
}

RevocationOutcome apply_revocation_call(RevocationState& state,
                                        const RevocationCallPayload& call,
                                        const std::set<Digest>& issued_roots) {
  switch (call.fn) {
    case RevocationFn::AddAuth: {
      if (call.org_keys.size() != 2) {
        return RevocationOutcome{RevocationStatus::InvalidEntry, std::nullopt, false};
      }
      AuthorityListEntry entry;
      entry.org = call.org;
      entry.keys = {call.org_keys[0], call.org_keys[1]};
      return add_revoking_authority(state, call.caller_key, entry);
    }
    case RevocationFn::Revoke:
      return revoke_document(state, call.caller_key, call.document_hash, issued_roots,
                             call.proof);
    case RevocationFn::Confirm:
      return confirm_revocation(state, call.caller_key, call.process_hash);
  }
  return RevocationOutcome{RevocationStatus::NotAuthorized, std::nullopt, false};
}

}  // namespace cerberus
