// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#include "cerberus/merkle.hpp"

#include <set>
#include <stdexcept>

namespace cerberus {

Digest make_leaf(const Digest& degree_hash, const Digest& id_transcript_hash) {
  return sha256_concat(degree_hash, id_transcript_hash);
}

Digest leaf_of(const StudentRecord& record) {
  return make_leaf(sha256(canonical_bytes(record.degree)),
                   sha256(canonical_bytes(record.id_transcript)));
}

BatchTree build_tree(std::vector<Digest> leaves) {
  if (leaves.empty()) {
    throw std::invalid_argument("batch must contain at least one record");
  }
  BatchTree tree;
  tree.levels.push_back(std::move(leaves));
  do {
    const std::vector<Digest>& level = tree.levels.back();
    std::vector<Digest> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i < level.size(); i += 2) {
      // Odd node count: the last digest pairs with itself.
      const Digest& left = level[i];
      const Digest& right = (i + 1 < level.size()) ? level[i + 1] : level[i];
      next.push_back(sha256_concat(left, right));
    }
    tree.levels.push_back(std::move(next));
  } while (tree.levels.back().size() > 1);
  return tree;
}

BatchTree build_batch_tree(const std::vector<StudentRecord>& records,
                           const RecordLimits& limits) {
  if (records.empty()) {
    throw std::invalid_argument("batch must contain at least one record");
  }
  std::set<std::string> serials;
  std::vector<Digest> leaves;
  leaves.reserve(records.size());
  for (const StudentRecord& r : records) {
    validate(r, limits);
    if (!serials.insert(r.degree.degree_serial).second) {
      throw std::invalid_argument("duplicate degree serial in batch: " +
                                  r.degree.degree_serial);
    }
    leaves.push_back(leaf_of(r));
  }
  return build_tree(std::move(leaves));
}

AuthPath auth_path(const BatchTree& tree, std::size_t leaf_index) {
  if (leaf_index >= tree.leaf_count()) {
    throw std::out_of_range("leaf index out of range");
  }
  AuthPath path;
  path.leaf_index = leaf_index;
  path.entries.reserve(tree.height());
  std::size_t index = leaf_index;
  for (std::size_t level = 0; level < tree.height(); ++level) {
    const std::vector<Digest>& nodes = tree.levels[level];
    std::size_t sibling;
    Side side;
    if (index % 2 == 0) {
      // Right sibling; at an odd level end the node is duplicated and acts
      // as its own sibling.
      sibling = (index + 1 < nodes.size()) ? index + 1 : index;
      side = Side::Right;
    } else {
      sibling = index - 1;
      side = Side::Left;
    }
    path.entries.push_back(PathEntry{nodes[sibling], side});
    index /= 2;
  }
  return path;
}

bool verify_path(const Digest& leaf, const AuthPath& path, const Digest& root) {
  Digest acc = leaf;
  for (const PathEntry& entry : path.entries) {
    acc = (entry.side == Side::Right) ? sha256_concat(acc, entry.sibling)
                                      : sha256_concat(entry.sibling, acc);
  }
  return acc == root;
}

std::vector<Side> sides_for_index(std::size_t leaf_index, std::size_t height) {
  std::vector<Side> sides;
  sides.reserve(height);
  for (std::size_t level = 0; level < height; ++level) {
    sides.push_back(((leaf_index >> level) & 1) ? Side::Left : Side::Right);
  }
  return sides;
}

}  // namespace cerberus
