// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "cerberus/digest.hpp"
#include "cerberus/record.hpp"

namespace cerberus {

/// Which side of the running hash a sibling sits on during path replay.
enum class Side : std::uint8_t { Left = 0, Right = 1 };

struct PathEntry {
  Digest sibling;
  Side side = Side::Right;

  bool operator==(const PathEntry&) const = default;
};

/// Sibling digests from a leaf up to the root. Entry count equals the tree
/// height; a duplicated node is its own sibling and is recorded as
/// side = Right.
struct AuthPath {
  std::vector<PathEntry> entries;
  std::size_t leaf_index = 0;

  bool operator==(const AuthPath&) const = default;
};

/// Merkle tree over one graduating batch. Level 0 holds the leaves; every
/// level with an odd node count duplicates its last digest before pairing, so
/// level k+1 has ceil(|level k| / 2) nodes. The top level is the single root.
struct BatchTree {
  std::vector<std::vector<Digest>> levels;

  std::size_t height() const { return levels.size() - 1; }
  std::size_t leaf_count() const { return levels.front().size(); }
  const std::vector<Digest>& leaves() const { return levels.front(); }
  const Digest& root() const { return levels.back().front(); }
};

/// H(degree_hash ∥ id_transcript_hash): the per-student leaf. Committing to
/// the two data sets separately is what enables selective disclosure.
Digest make_leaf(const Digest& degree_hash, const Digest& id_transcript_hash);

/// Leaf digest of a full student record.
Digest leaf_of(const StudentRecord& record);

/// Builds the batch tree over pre-computed leaf digests.
BatchTree build_tree(std::vector<Digest> leaves);

/// Validates the records (non-empty batch, unique serials, field invariants)
/// and builds the tree over their leaves in input order.
BatchTree build_batch_tree(const std::vector<StudentRecord>& records,
                           const RecordLimits& limits = {});

/// Extracts the authentication path for one leaf. Throws std::out_of_range
/// for a bad index.
AuthPath auth_path(const BatchTree& tree, std::size_t leaf_index);

/// Folds the leaf through the path; true iff the replay reproduces root.
bool verify_path(const Digest& leaf, const AuthPath& path, const Digest& root);

/// Sibling sides are fully determined by the leaf position: bit k of the
/// index says whether the node is a right child at level k. Used when a path
/// travels without explicit side bytes.
std::vector<Side> sides_for_index(std::size_t leaf_index, std::size_t height);

}  // namespace cerberus
