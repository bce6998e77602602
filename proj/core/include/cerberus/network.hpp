// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cerberus/chain.hpp"
#include "cerberus/codec.hpp"
#include "cerberus/keys.hpp"
#include "cerberus/merkle.hpp"
#include "cerberus/record.hpp"

namespace cerberus {

/// Message bus parameters. The same seed always yields the same delivery
/// schedule, including drops.
struct BusConfig {
  std::uint64_t seed = 0;
  std::uint32_t latency_ticks = 1;
  double drop_rate = 0.0;
  // Per-link overrides keyed by (from, to) node index.
  std::map<std::pair<std::size_t, std::size_t>, std::uint32_t> link_latency;

  std::uint32_t latency(std::size_t from, std::size_t to) const;
};

struct UniversitySpec {
  std::string name;
  std::size_t key_count = 2;
  std::size_t required = 2;
};

struct WorldConfig {
  std::uint64_t seed = 0;
  std::size_t authorities = 3;
  std::uint32_t block_interval = 5;
  BusConfig bus;
  std::vector<UniversitySpec> universities;
  std::vector<std::string> observers;
  std::string network_id = "cerberus-sim";
};

/// One simulated participant: its account, its keys (authorities hold one,
/// universities their policy keys, observers none) and its chain replica.
struct SimNode {
  SimNode(std::string name, Role role, Chain replica)
      : name(std::move(name)), role(role), chain(std::move(replica)) {}

  std::string name;
  Role role;
  Account account;
  std::vector<KeyPair> keys;
  Chain chain;
  std::vector<Transaction> pool;  // authorities only
  std::set<Digest> seen_txs;
};

/// Deterministic in-process network. Nodes exchange transactions and blocks
/// over the bus; the world advances in discrete ticks. Honest replicas apply
/// strict validation, so convergence is guaranteed only under loss-free
/// delivery (forks are out of scope).
class World {
 public:
  using EventSink = std::function<void(nlohmann::ordered_json)>;

  explicit World(const WorldConfig& config);

  std::size_t node_count() const { return nodes_.size(); }
  SimNode& node(std::size_t index) { return nodes_.at(index); }
  const SimNode& node(std::size_t index) const { return nodes_.at(index); }
  std::size_t index_of(const std::string& name) const;
  std::uint64_t now() const { return now_; }
  const WorldConfig& config() const { return config_; }

  void set_event_sink(EventSink sink) { sink_ = std::move(sink); }

  /// Role-gated broadcast. Returns false (and emits an event) when the
  /// origin's role does not permit originating this transaction kind.
  bool broadcast_tx(std::size_t origin, const Transaction& tx);
  void broadcast_block(std::size_t origin, const Block& block);

  /// Delivers due messages, then lets the scheduled authority produce a
  /// block on interval boundaries (only when it has pending transactions).
  void tick();
  void run_until(std::uint64_t tick_count);

  /// Flips one byte inside a node's chain copy (byzantine history rewrite);
  /// the replica is reloaded permissively so an audit can see the damage.
  void tamper_chain(std::size_t node_index, std::size_t byte_offset);

  bool converged() const;
  Digest world_hash() const;

 private:
  struct Message {
    enum class Kind { Tx, Block } kind;
    std::size_t from = 0;
    std::size_t to = 0;
    Transaction tx;
    Block block;
  };

  void emit(nlohmann::ordered_json event);
  void deliver(const Message& message);
  void handle_tx(std::size_t to, const Transaction& tx);
  void handle_block(std::size_t to, const Block& block);
  void produce_phase();
  void schedule(Message message, std::size_t from);
  double draw_unit();

  WorldConfig config_;
  std::vector<SimNode> nodes_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Message> queue_;
  std::mt19937_64 rng_;
  std::uint64_t now_ = 0;
  std::uint64_t seq_ = 0;
  EventSink sink_;
};

/// Deterministic keypair for a named actor under a world seed.
KeyPair actor_keypair(std::uint64_t seed, const std::string& actor_name);

/// Deterministic synthetic student batch used by scenarios and benchmarks.
std::vector<StudentRecord> synthetic_batch(std::size_t count, const std::string& serial_prefix,
                                           const std::string& university_name,
                                           int year = 2020);

struct Transcript {
  std::vector<nlohmann::ordered_json> lines;
  std::string to_jsonl() const;
};

/// Parses a scenario script (JSON), drives a World through it and returns the
/// ordered transcript. Scripts referencing unknown actors fail fast.
class ScenarioRunner {
 public:
  explicit ScenarioRunner(const std::string& scenario_json,
                          std::optional<std::uint64_t> seed_override = std::nullopt);

  Transcript run();
  World& world() { return *world_; }
  const World& world() const { return *world_; }

  /// Writes ledger, manifest and payload files under `dir` (used by the CLI
  /// and by determinism checks). Must be called after run().
  void export_artifacts(const std::string& dir) const;

 private:
  struct Bundle {
    std::string university;
    std::vector<StudentRecord> records;
    BatchTree tree;
    bool included = false;
    std::uint64_t block_number = 0;
    Digest tx_id;
  };

  struct Action {
    std::uint64_t tick = 0;
    nlohmann::ordered_json params;
  };

  void execute(const Action& action);
  std::size_t resolve_actor(const std::string& actor) const;
  Bundle* find_bundle_by_serial(const std::string& serial);
  void refresh_bundles();

  nlohmann::ordered_json scenario_;
  std::uint64_t max_ticks_ = 0;
  std::vector<Action> actions_;
  std::unique_ptr<World> world_;
  std::vector<Bundle> bundles_;
  std::optional<Digest> last_process_hash_;
  Transcript transcript_;
};

}  // namespace cerberus
