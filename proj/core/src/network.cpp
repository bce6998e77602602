// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#include "cerberus/network.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <stdexcept>

#include "cerberus/verify.hpp"

namespace cerberus {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string zero_padded(std::size_t value, int width = 4) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%0*zu", width, value);
  return buf;
}

void write_file(const std::string& path, ByteView data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

}  // namespace

std::uint32_t BusConfig::latency(std::size_t from, std::size_t to) const {
  auto it = link_latency.find({from, to});
  return it == link_latency.end() ? latency_ticks : it->second;
}

KeyPair actor_keypair(std::uint64_t seed, const std::string& actor_name) {
  ByteWriter writer;
  writer.u64(seed);
  writer.raw(to_bytes(actor_name));
  return KeyPair::from_seed(sha256(writer.bytes()));
}

std::vector<StudentRecord> synthetic_batch(std::size_t count, const std::string& serial_prefix,
                                           const std::string& university_name, int year) {
  static const char* kGrades[] = {"A", "B+", "B", "A-", "C+"};
  std::vector<StudentRecord> records;
  records.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    StudentRecord r;
    r.degree.student_name = "Student " + zero_padded(i);
    r.degree.degree_serial = serial_prefix + zero_padded(i);
    r.degree.degree_title = "BSc Computer Science";
    r.degree.award_year = year;
    r.degree.university_name = university_name;
    r.id_transcript.id_document_number = "ID-" + zero_padded((i * 7919 + 13) % 10000000, 7);
    r.id_transcript.courses = {
        {"CS101", "Programming Fundamentals", Decimal2::from_hundredths(300)},
        {"CS201", "Data Structures", Decimal2::from_hundredths(400)},
        {"MA101", "Calculus", Decimal2::from_hundredths(300)},
    };
    r.id_transcript.grades = {kGrades[i % 5], kGrades[(i + 1) % 5], kGrades[(i + 2) % 5]};
    r.id_transcript.gpa = Decimal2::from_hundredths(200 + (i * 37) % 201);
    r.id_transcript.cgpa = Decimal2::from_hundredths(200 + (i * 53) % 201);
    records.push_back(std::move(r));
  }
  return records;
}

World::World(const WorldConfig& config) : config_(config), rng_(config.bus.seed) {
  if (config.authorities == 0) {
    throw std::invalid_argument("a world needs at least one authority");
  }
  std::vector<Account> authority_accounts;
  std::vector<KeyPair> authority_keys;
  for (std::size_t i = 0; i < config.authorities; ++i) {
    KeyPair kp = actor_keypair(config.seed, "authority-" + std::to_string(i));
    authority_accounts.push_back(Account::make(kp.public_key(), Role::Authority));
    authority_keys.push_back(kp);
  }
  Chain genesis = Chain::genesis(
      authority_accounts,
      ChainConfig::with_default_contracts(config.network_id, config.block_interval));

  for (std::size_t i = 0; i < config.authorities; ++i) {
    SimNode node("authority:" + std::to_string(i), Role::Authority, genesis);
    node.account = authority_accounts[i];
    node.keys.push_back(authority_keys[i]);
    nodes_.push_back(std::move(node));
  }
  for (const UniversitySpec& u : config.universities) {
    SimNode node("university:" + u.name, Role::University, genesis);
    for (std::size_t j = 0; j < u.key_count; ++j) {
      node.keys.push_back(
          actor_keypair(config.seed, "university-" + u.name + "-key" + std::to_string(j)));
    }
    node.account = Account::make(node.keys.front().public_key(), Role::University);
    nodes_.push_back(std::move(node));
  }
  for (const std::string& name : config.observers) {
    SimNode node("observer:" + name, Role::Observer, genesis);
    node.account = Account::make(actor_keypair(config.seed, "observer-" + name).public_key(),
                                 Role::Observer);
    nodes_.push_back(std::move(node));
  }
}

std::size_t World::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].name == name) return i;
  }
  throw std::invalid_argument("unknown actor: " + name);
}

void World::emit(ordered_json event) {
  if (sink_) sink_(std::move(event));
}

double World::draw_unit() {
  // 53-bit mantissa draw; bit-stable across standard library implementations.
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

void World::schedule(Message message, std::size_t from) {
  for (std::size_t to = 0; to < nodes_.size(); ++to) {
    if (to == from) continue;
    if (config_.bus.drop_rate > 0.0 && draw_unit() < config_.bus.drop_rate) {
      emit({{"tick", now_},
            {"event", "delivery_dropped"},
            {"from", nodes_[from].name},
            {"to", nodes_[to].name},
            {"kind", message.kind == Message::Kind::Tx ? "tx" : "block"}});
      continue;
    }
    Message m = message;
    m.from = from;
    m.to = to;
    std::uint64_t at = now_ + config_.bus.latency(from, to);
    queue_.emplace(std::make_pair(at, seq_++), std::move(m));
  }
}

bool World::broadcast_tx(std::size_t origin, const Transaction& tx) {
  const SimNode& node = nodes_.at(origin);
  bool permitted = false;
  switch (tx.kind) {
    case TxKind::IssueBatch:
      permitted = node.role == Role::University;
      break;
    case TxKind::AdminOp:
      permitted = node.role == Role::Authority;
      break;
    case TxKind::RevocationCall:
      permitted = node.role != Role::Observer;
      break;
  }
  if (!permitted) {
    emit({{"tick", now_},
          {"event", "broadcast_refused"},
          {"node", node.name},
          {"kind", tx_kind_name(tx.kind)},
          {"reason", "role does not permit this transaction kind"}});
    return false;
  }
  emit({{"tick", now_},
        {"event", "tx_submitted"},
        {"node", node.name},
        {"kind", tx_kind_name(tx.kind)},
        {"tx_id", tx.id().hex()}});
  // The origin handles its own transaction immediately (authorities pool it).
  handle_tx(origin, tx);
  Message m;
  m.kind = Message::Kind::Tx;
  m.tx = tx;
  schedule(std::move(m), origin);
  return true;
}

void World::broadcast_block(std::size_t origin, const Block& block) {
  Message m;
  m.kind = Message::Kind::Block;
  m.block = block;
  schedule(std::move(m), origin);
}

void World::handle_tx(std::size_t to, const Transaction& tx) {
  SimNode& node = nodes_.at(to);
  if (node.role != Role::Authority) return;  // only authorities keep a pool
  Digest id = tx.id();
  if (node.seen_txs.contains(id)) return;
  TxValidation validation = node.chain.validate_tx(tx);
  if (!validation.ok) {
    emit({{"tick", now_},
          {"event", "tx_rejected"},
          {"node", node.name},
          {"tx_id", id.hex()},
          {"reason", reject_reason_name(validation.reason)},
          {"detail", validation.detail}});
    return;
  }
  node.seen_txs.insert(id);
  node.pool.push_back(tx);
  emit({{"tick", now_}, {"event", "tx_pooled"}, {"node", node.name}, {"tx_id", id.hex()}});
}

void World::handle_block(std::size_t to, const Block& block) {
  SimNode& node = nodes_.at(to);
  if (block.height <= node.chain.height()) return;  // stale or duplicate
  BlockValidation validation = node.chain.append_block(block, ValidationMode::Strict);
  if (!validation.ok) {
    emit({{"tick", now_},
          {"event", "block_rejected"},
          {"node", node.name},
          {"height", block.height},
          {"reason", validation.detail}});
    return;
  }
  emit({{"tick", now_},
        {"event", "block_accepted"},
        {"node", node.name},
        {"height", block.height},
        {"hash", block.hash().hex()}});
  // Included transactions leave the pool for good.
  std::set<Digest> included;
  for (const Transaction& tx : block.transactions) included.insert(tx.id());
  std::erase_if(node.pool,
                [&](const Transaction& tx) { return included.contains(tx.id()); });
  for (const Digest& id : included) node.seen_txs.insert(id);
}

void World::produce_phase() {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    SimNode& node = nodes_[i];
    if (node.role != Role::Authority || node.pool.empty()) continue;
    std::uint64_t next = node.chain.height() + 1;
    if (node.chain.scheduled_producer(next) != node.account.address) continue;

    std::vector<Transaction> pending = node.pool;
    ProducedBlock produced = node.chain.produce_block(node.keys.front(), pending);
    emit({{"tick", now_},
          {"event", "block_produced"},
          {"node", node.name},
          {"height", produced.block.height},
          {"txs", produced.block.transactions.size()},
          {"hash", produced.block.hash().hex()}});
    for (const auto& [tx_id, validation] : produced.rejected) {
      emit({{"tick", now_},
            {"event", "tx_dropped"},
            {"node", node.name},
            {"tx_id", tx_id.hex()},
            {"reason", reject_reason_name(validation.reason)}});
    }
    for (const AppliedTx& applied : produced.applied) {
      if (applied.revocation) {
        ordered_json event{{"tick", now_},
                           {"event", "revocation_call"},
                           {"node", node.name},
                           {"tx_id", applied.tx_id.hex()},
                           {"status", revocation_status_name(applied.revocation->status)},
                           {"completed", applied.revocation->completed}};
        if (applied.revocation->process_hash) {
          event["process"] = applied.revocation->process_hash->hex();
        }
        emit(std::move(event));
      }
    }

    std::set<Digest> included;
    for (const Transaction& tx : produced.block.transactions) included.insert(tx.id());
    std::erase_if(node.pool,
                  [&](const Transaction& tx) { return included.contains(tx.id()); });
    // Permanently invalid transactions leave the pool too; only
    // not-yet-registered senders earn a retry.
    for (const auto& [tx_id, validation] : produced.rejected) {
      if (validation.reason != RejectReason::UnknownSender) {
        std::erase_if(node.pool,
                      [&](const Transaction& tx) { return tx.id() == tx_id; });
      }
    }
    broadcast_block(i, produced.block);
  }
}

void World::tick() {
  while (!queue_.empty() && queue_.begin()->first.first <= now_) {
    Message message = std::move(queue_.begin()->second);
    queue_.erase(queue_.begin());
    deliver(message);
  }
  if (now_ > 0 && now_ % config_.block_interval == 0) {
    produce_phase();
  }
  ++now_;
}

void World::deliver(const Message& message) {
  if (message.kind == Message::Kind::Tx) {
    handle_tx(message.to, message.tx);
  } else {
    handle_block(message.to, message.block);
  }
}

void World::run_until(std::uint64_t tick_count) {
  while (now_ < tick_count) tick();
}

void World::tamper_chain(std::size_t node_index, std::size_t byte_offset) {
  SimNode& node = nodes_.at(node_index);
  Bytes data = node.chain.serialize();
  if (data.empty()) return;
  byte_offset %= data.size();
  data[byte_offset] ^= 0x01;
  node.chain = Chain::replay(ByteView(data.data(), data.size()), ValidationMode::Permissive);
  emit({{"tick", now_},
        {"event", "history_tampered"},
        {"node", node.name},
        {"byte", byte_offset}});
}

bool World::converged() const {
  Digest head = nodes_.front().chain.head().hash();
  return std::all_of(nodes_.begin(), nodes_.end(), [&](const SimNode& n) {
    return n.chain.head().hash() == head;
  });
}

Digest World::world_hash() const {
  ByteWriter writer;
  for (const SimNode& node : nodes_) {
    writer.raw(node.chain.head().hash().view());
    writer.u64(node.chain.height());
    writer.u64(node.pool.size());
    writer.raw(node.chain.revocation().state_digest().view());
  }
  return sha256(writer.bytes());
}

// ---------------------------------------------------------------------------

std::string Transcript::to_jsonl() const {
  std::string out;
  for (const ordered_json& line : lines) {
    out += line.dump();
    out += '\n';
  }
  return out;
}

ScenarioRunner::ScenarioRunner(const std::string& scenario_json,
                               std::optional<std::uint64_t> seed_override) {
  scenario_ = ordered_json::parse(scenario_json);
  WorldConfig config;
  config.seed = seed_override.value_or(scenario_.value("seed", 0ULL));
  config.bus.seed = config.seed;
  config.authorities = scenario_.value("authorities", 3ULL);
  config.block_interval = scenario_.value("block_interval", 5U);
  config.bus.latency_ticks = scenario_.value("latency_ticks", 1U);
  config.bus.drop_rate = scenario_.value("drop_rate", 0.0);
  config.network_id = scenario_.value("network_id", std::string("cerberus-sim"));
  if (scenario_.contains("universities")) {
    for (const auto& u : scenario_["universities"]) {
      UniversitySpec spec;
      spec.name = u.at("name").get<std::string>();
      spec.key_count = u.value("keys", 2ULL);
      spec.required = u.value("required", 2ULL);
      config.universities.push_back(std::move(spec));
    }
  }
  if (scenario_.contains("observers")) {
    for (const auto& o : scenario_["observers"]) {
      config.observers.push_back(o.get<std::string>());
    }
  }
  max_ticks_ = scenario_.at("max_ticks").get<std::uint64_t>();
  world_ = std::make_unique<World>(config);

  if (scenario_.contains("actions")) {
    for (const auto& a : scenario_["actions"]) {
      Action action;
      action.tick = a.at("tick").get<std::uint64_t>();
      action.params = a;
      // Fail fast on unknown actors so a bad script cannot half-run.
      for (const char* key : {"actor", "node", "of"}) {
        if (a.contains(key)) world_->index_of(a.at(key).get<std::string>());
      }
      actions_.push_back(std::move(action));
    }
  }
}

std::size_t ScenarioRunner::resolve_actor(const std::string& actor) const {
  return world_->index_of(actor);
}

ScenarioRunner::Bundle* ScenarioRunner::find_bundle_by_serial(const std::string& serial) {
  for (Bundle& bundle : bundles_) {
    for (std::size_t i = 0; i < bundle.records.size(); ++i) {
      if (bundle.records[i].degree.degree_serial == serial) return &bundle;
    }
  }
  return nullptr;
}

void ScenarioRunner::refresh_bundles() {
  for (Bundle& bundle : bundles_) {
    if (bundle.included) continue;
    std::size_t origin = world_->index_of("university:" + bundle.university);
    if (auto loc = world_->node(origin).chain.find_issued_root(bundle.tree.root())) {
      bundle.included = true;
      bundle.block_number = loc->block_height;
      bundle.tx_id = loc->tx_id;
      transcript_.lines.push_back({{"tick", world_->now()},
                                   {"event", "batch_accredited"},
                                   {"university", bundle.university},
                                   {"root", bundle.tree.root().hex()},
                                   {"block", bundle.block_number},
                                   {"tx_id", bundle.tx_id.hex()}});
    }
  }
}

void ScenarioRunner::execute(const Action& action) {
  const ordered_json& p = action.params;
  const std::string kind = p.at("action").get<std::string>();
  World& w = *world_;

  auto event = [&](ordered_json e) { transcript_.lines.push_back(std::move(e)); };
  // "authority" may be written as an index or a string in scripts.
  auto authority_label = [&](const ordered_json& j) -> std::string {
    if (!j.contains("authority")) return "0";
    const auto& v = j.at("authority");
    return v.is_number() ? std::to_string(v.get<int>()) : v.get<std::string>();
  };

  try {
    if (kind == "register_university") {
      std::size_t auth = w.index_of("authority:" + authority_label(p));
      std::size_t uni = w.index_of("university:" + p.at("university").get<std::string>());
      SimNode& authority = w.node(auth);
      SimNode& university = w.node(uni);
      SigningPolicy policy;
      policy.required = 0;
      for (const KeyPair& kp : university.keys) policy.keys.push_back(kp.public_key());
      policy.required = p.value("required", policy.keys.size());
      Transaction tx = authority.chain.make_register_university_tx(
          authority.keys.front(), p.at("university").get<std::string>(),
          university.account.public_key, policy);
      w.broadcast_tx(auth, tx);
    } else if (kind == "add_revocation_authority") {
      std::size_t auth = w.index_of("authority:" + authority_label(p));
      std::size_t uni = w.index_of("university:" + p.at("university").get<std::string>());
      SimNode& authority = w.node(auth);
      SimNode& university = w.node(uni);
      RevocationCallPayload call;
      call.fn = RevocationFn::AddAuth;
      call.caller_key = authority.keys.front().public_key();
      call.org = university.account.address;
      call.org_keys = {university.keys[0].public_key(), university.keys[1].public_key()};
      Transaction tx = authority.chain.make_revocation_tx(authority.account.address, call,
                                                          authority.keys.front());
      w.broadcast_tx(auth, tx);
    } else if (kind == "issue") {
      std::size_t uni = w.index_of("university:" + p.at("university").get<std::string>());
      SimNode& university = w.node(uni);
      Bundle bundle;
      bundle.university = p.at("university").get<std::string>();
      if (p.contains("file")) {
        std::ifstream in(p.at("file").get<std::string>());
        if (!in) throw std::runtime_error("cannot open students file");
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        bundle.records = load_students_json(text);
      } else {
        bundle.records = synthetic_batch(p.at("batch_size").get<std::size_t>(),
                                         p.value("serial_prefix", std::string("S-")),
                                         bundle.university, p.value("year", 2020));
      }
      bundle.tree = build_batch_tree(bundle.records);
      std::vector<const KeyPair*> signers;
      for (const KeyPair& kp : university.keys) signers.push_back(&kp);
      Transaction tx = university.chain.create_issue_tx(university.account.address,
                                                        bundle.tree.root(), signers);
      event({{"tick", w.now()},
             {"event", "batch_prepared"},
             {"university", bundle.university},
             {"students", bundle.records.size()},
             {"height", bundle.tree.height()},
             {"root", bundle.tree.root().hex()}});
      bundles_.push_back(std::move(bundle));
      w.broadcast_tx(uni, tx);
    } else if (kind == "submit_unsigned") {
      std::size_t uni = w.index_of("university:" + p.at("university").get<std::string>());
      SimNode& university = w.node(uni);
      IssueBatchPayload payload;
      payload.batch_root = sha256(to_bytes("unsigned"));
      payload.rules_engine_id = university.chain.config().rules_engine_id;
      payload.impl_engine_id = university.chain.config().impl_engine_id;
      Transaction tx;
      tx.kind = TxKind::IssueBatch;
      tx.sender = university.account.address;
      tx.payload = payload.encode();
      w.broadcast_tx(uni, tx);
    } else if (kind == "verify") {
      std::size_t at = w.index_of(p.at("node").get<std::string>());
      const std::string serial = p.at("serial").get<std::string>();
      Bundle* bundle = find_bundle_by_serial(serial);
      if (bundle == nullptr) throw std::runtime_error("serial not issued in this scenario");
      std::size_t index = 0;
      for (; index < bundle->records.size(); ++index) {
        if (bundle->records[index].degree.degree_serial == serial) break;
      }
      const StudentRecord& record = bundle->records[index];
      DegreeCodePayload payload;
      payload.degree_info = record.degree;
      payload.id_transcript_hash = sha256(canonical_bytes(record.id_transcript));
      payload.block_number = bundle->block_number;
      payload.tx_id = bundle->tx_id;
      payload.auth_path = auth_path(bundle->tree, index);
      Bytes wire = encode_degree_code(payload);
      DegreeCodePayload decoded = decode_degree_code(ByteView(wire.data(), wire.size()));
      const SimNode& at_node = w.node(at);
      VerificationResult result =
          verify_degree(decoded, at_node.chain, at_node.chain.revocation());
      event({{"tick", w.now()},
             {"event", "verify"},
             {"node", at_node.name},
             {"serial", serial},
             {"verdict", verdict_name(result.verdict)}});
    } else if (kind == "revoke_init") {
      std::size_t actor = resolve_actor(p.at("actor").get<std::string>());
      SimNode& node = w.node(actor);
      const KeyPair& key = node.keys.at(p.value("key", 0ULL));
      RevocationCallPayload call;
      call.fn = RevocationFn::Revoke;
      call.caller_key = key.public_key();
      if (p.contains("serial")) {
        Bundle* bundle = find_bundle_by_serial(p.at("serial").get<std::string>());
        if (bundle == nullptr) throw std::runtime_error("serial not issued in this scenario");
        std::size_t index = 0;
        for (; index < bundle->records.size(); ++index) {
          if (bundle->records[index].degree.degree_serial ==
              p.at("serial").get<std::string>())
            break;
        }
        call.document_hash = leaf_of(bundle->records[index]);
        call.proof = LeafProof{bundle->tree.root(), auth_path(bundle->tree, index)};
      } else {
        std::size_t bundle_index = p.at("batch").get<std::size_t>();
        call.document_hash = bundles_.at(bundle_index).tree.root();
      }
      last_process_hash_ = process_hash_for(call.document_hash, call.caller_key);
      Transaction tx = node.chain.make_revocation_tx(node.account.address, call, key);
      event({{"tick", w.now()},
             {"event", "revoke_initiated"},
             {"node", node.name},
             {"document", call.document_hash.hex()},
             {"process", last_process_hash_->hex()}});
      w.broadcast_tx(actor, tx);
    } else if (kind == "revoke_confirm") {
      std::size_t actor = resolve_actor(p.at("actor").get<std::string>());
      SimNode& node = w.node(actor);
      const KeyPair& key = node.keys.at(p.value("key", 0ULL));
      RevocationCallPayload call;
      call.fn = RevocationFn::Confirm;
      call.caller_key = key.public_key();
      if (p.contains("process") && p.at("process").get<std::string>() != "last") {
        call.process_hash = Digest::from_hex(p.at("process").get<std::string>());
      } else {
        if (!last_process_hash_) throw std::runtime_error("no revocation was initiated");
        call.process_hash = *last_process_hash_;
      }
      Transaction tx = node.chain.make_revocation_tx(node.account.address, call, key);
      event({{"tick", w.now()},
             {"event", "revoke_confirm_submitted"},
             {"node", node.name},
             {"process", call.process_hash.hex()}});
      w.broadcast_tx(actor, tx);
    } else if (kind == "blacklist") {
      std::size_t auth = w.index_of("authority:" + authority_label(p));
      std::size_t uni = w.index_of("university:" + p.at("university").get<std::string>());
      SimNode& authority = w.node(auth);
      Transaction tx = authority.chain.make_blacklist_tx(authority.keys.front(),
                                                         w.node(uni).account.address);
      w.broadcast_tx(auth, tx);
    } else if (kind == "bad_block") {
      std::size_t actor = resolve_actor(p.at("actor").get<std::string>());
      SimNode& node = w.node(actor);
      const std::string flavor = p.value("flavor", std::string("non_authority"));
      Block block;
      block.height = node.chain.height() + 1;
      block.prev_hash = node.chain.head().hash();
      block.timestamp = static_cast<std::int64_t>(block.height) *
                        static_cast<std::int64_t>(node.chain.config().block_interval);
      block.producer = node.account.address;
      if (flavor == "bad_signature") {
        // Producer field claims the scheduled authority but the signature is
        // forged garbage.
        block.producer = node.chain.scheduled_producer(block.height);
        block.producer_signature = Signature{};
      } else if (!node.keys.empty()) {
        block.sign_with(node.keys.front());
      }
      event({{"tick", w.now()},
             {"event", "bad_block_emitted"},
             {"node", node.name},
             {"flavor", flavor},
             {"height", block.height}});
      w.broadcast_block(actor, block);
    } else if (kind == "tamper") {
      std::size_t target = w.index_of(p.at("node").get<std::string>());
      w.tamper_chain(target, p.value("byte", 100ULL));
    } else if (kind == "audit") {
      std::size_t auditor = w.index_of(p.at("node").get<std::string>());
      std::size_t of = w.index_of(p.value("of", p.at("node").get<std::string>()));
      AuditReport report = w.node(of).chain.audit();
      ordered_json violations = ordered_json::array();
      for (const AuditViolation& v : report.violations) {
        violations.push_back({{"height", v.height}, {"code", v.code}});
      }
      event({{"tick", w.now()},
             {"event", "audit"},
             {"node", w.node(auditor).name},
             {"of", w.node(of).name},
             {"violations", report.violations.size()},
             {"findings", std::move(violations)}});
    } else {
      throw std::invalid_argument("unknown scenario action: " + kind);
    }
  } catch (const PolicyError& e) {
    event({{"tick", w.now()}, {"event", "action_error"}, {"action", kind}, {"error", e.what()}});
  } catch (const std::runtime_error& e) {
    event({{"tick", w.now()}, {"event", "action_error"}, {"action", kind}, {"error", e.what()}});
  }
}

Transcript ScenarioRunner::run() {
  transcript_.lines.clear();
  world_->set_event_sink(
      [this](ordered_json event) { transcript_.lines.push_back(std::move(event)); });
  transcript_.lines.push_back({{"event", "scenario_start"},
                               {"name", scenario_.value("name", std::string("scenario"))},
                               {"seed", world_->config().seed},
                               {"genesis", world_->node(0).chain.genesis_hash().hex()}});
  for (std::uint64_t t = 0; t < max_ticks_; ++t) {
    for (const Action& action : actions_) {
      if (action.tick == t) execute(action);
    }
    world_->tick();
    refresh_bundles();
  }
  transcript_.lines.push_back({{"event", "world_hash"},
                               {"hash", world_->world_hash().hex()},
                               {"converged", world_->converged()}});
  return transcript_;
}

void ScenarioRunner::export_artifacts(const std::string& dir) const {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  world_->node(0).chain.save(dir + "/ledger.dat", dir + "/manifest.json");
  for (std::size_t b = 0; b < bundles_.size(); ++b) {
    const Bundle& bundle = bundles_[b];
    if (!bundle.included) continue;
    std::string batch_dir = dir + "/payloads/batch-" + zero_padded(b);
    fs::create_directories(batch_dir);
    for (std::size_t i = 0; i < bundle.records.size(); ++i) {
      const StudentRecord& record = bundle.records[i];
      DegreeCodePayload payload;
      payload.degree_info = record.degree;
      payload.id_transcript_hash = sha256(canonical_bytes(record.id_transcript));
      payload.block_number = bundle.block_number;
      payload.tx_id = bundle.tx_id;
      payload.auth_path = auth_path(bundle.tree, i);
      Bytes degree = encode_degree_code(payload);
      Bytes idtr = encode_id_transcript_code(id_transcript_payload(record.id_transcript));
      std::string base = batch_dir + "/" + zero_padded(i);
      write_file(base + ".degree.bin", ByteView(degree.data(), degree.size()));
      write_text(base + ".degree.b64", to_base64(ByteView(degree.data(), degree.size())) + "\n");
      write_file(base + ".idtranscript.bin", ByteView(idtr.data(), idtr.size()));
      write_text(base + ".idtranscript.b64",
                 to_base64(ByteView(idtr.data(), idtr.size())) + "\n");
    }
  }
}

}  // namespace cerberus
