// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "cerberus/merkle.hpp"
#include "cerberus/network.hpp"
#include "cerberus/record.hpp"
#include "test_support.hpp"

using namespace cerberus;
using cerberus::test::fixture_record;
using cerberus::test::RecordGen;

namespace {

// Test-only reference: recompute the root by materializing every level with
// explicit pre-padding, independent of BatchTree's pairing loop.
Digest oracle_root(const std::vector<Digest>& leaves) {
  if (leaves.size() == 1) {
    Bytes buf(leaves[0].bytes.begin(), leaves[0].bytes.end());
    buf.insert(buf.end(), leaves[0].bytes.begin(), leaves[0].bytes.end());
    return sha256(ByteView(buf.data(), buf.size()));
  }
  std::vector<Digest> level = leaves;
  while (level.size() > 1) {
    if (level.size() % 2 != 0) level.push_back(level.back());
    std::vector<Digest> parents;
    for (std::size_t i = 0; i < level.size(); i += 2) {
      Bytes buf(level[i].bytes.begin(), level[i].bytes.end());
      buf.insert(buf.end(), level[i + 1].bytes.begin(), level[i + 1].bytes.end());
      parents.push_back(sha256(ByteView(buf.data(), buf.size())));
    }
    level = std::move(parents);
  }
  return level.front();
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t h = 0;
  std::size_t cap = 1;
  while (cap < n) {
    cap *= 2;
    ++h;
  }
  return h;
}

}  // namespace

TEST_CASE("sha256 standard vectors") {
  CHECK(sha256(ByteView{}).hex() ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  Bytes abc = to_bytes("abc");
  CHECK(sha256(ByteView(abc.data(), abc.size())).hex() ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256(ByteView{}).bytes.size() == 32);
}

TEST_CASE("canonical degree encoding matches the stated layout") {
  DegreeInfo d{"Alice", "D-001", "BSc CS", 2020, "NUST"};
  Bytes encoded = canonical_bytes(d);
  std::string expected =
      "Alice\x1f" "D-001\x1f" "BSc CS\x1f" "2020\x1f" "NUST";
  CHECK(std::string(encoded.begin(), encoded.end()) == expected);
}

TEST_CASE("records differing in one field encode differently") {
  DegreeInfo a{"Alice", "D-001", "BSc CS", 2020, "NUST"};
  DegreeInfo b = a;
  b.award_year = 2021;
  CHECK(canonical_bytes(a) != canonical_bytes(b));
}

TEST_CASE("fields containing separators are rejected at ingestion") {
  DegreeInfo d{"Alice", "D-001", "BSc CS", 2020, "NUST"};
  d.student_name = std::string("Ali") + '\x1f' + "ce";
  CHECK_THROWS_AS(canonical_bytes(d), std::invalid_argument);
  d.student_name = std::string("Ali") + '\x1e' + "ce";
  CHECK_THROWS_AS(canonical_bytes(d), std::invalid_argument);

  IdTranscriptInfo t = fixture_record().id_transcript;
  t.grades[0] = std::string("A") + '\x1e';
  CHECK_THROWS_AS(canonical_bytes(t), std::invalid_argument);
}

TEST_CASE("canonical encodings round-trip for 1000 random records") {
  RecordGen gen(0xC3D2E1F0);
  for (int i = 0; i < 1000; ++i) {
    StudentRecord r = gen.record();
    Bytes d = canonical_bytes(r.degree);
    Bytes t = canonical_bytes(r.id_transcript);
    CHECK(parse_degree_info(ByteView(d.data(), d.size())) == r.degree);
    CHECK(parse_id_transcript_info(ByteView(t.data(), t.size())) == r.id_transcript);
  }
}

TEST_CASE("record validation enforces the invariants") {
  StudentRecord r = fixture_record();
  SUBCASE("empty field") {
    r.degree.student_name.clear();
    CHECK_THROWS_AS(validate(r), std::invalid_argument);
  }
  SUBCASE("year range") {
    r.degree.award_year = 1899;
    CHECK_THROWS_AS(validate(r), std::invalid_argument);
    r.degree.award_year = 2201;
    CHECK_THROWS_AS(validate(r), std::invalid_argument);
  }
  SUBCASE("course/grade length mismatch") {
    r.id_transcript.grades.pop_back();
    CHECK_THROWS_AS(validate(r), std::invalid_argument);
  }
  SUBCASE("non-positive credit hours") {
    r.id_transcript.courses[0].credit_hours = Decimal2::from_hundredths(0);
    CHECK_THROWS_AS(validate(r), std::invalid_argument);
  }
  SUBCASE("gpa above scale") {
    r.id_transcript.gpa = Decimal2::from_hundredths(401);
    CHECK_THROWS_AS(validate(r), std::invalid_argument);
  }
}

TEST_CASE("leaf fingerprint: golden fixture and order sensitivity") {
  StudentRecord r = fixture_record();
  Digest dh = sha256(ByteView(canonical_bytes(r.degree).data(),
                              canonical_bytes(r.degree).size()));
  Bytes degree_bytes = canonical_bytes(r.degree);
  Bytes idtr_bytes = canonical_bytes(r.id_transcript);
  Digest degree_hash = sha256(ByteView(degree_bytes.data(), degree_bytes.size()));
  Digest idtr_hash = sha256(ByteView(idtr_bytes.data(), idtr_bytes.size()));

  CHECK(degree_hash.hex() == cerberus::test::kFixtureDegreeHashHex);
  CHECK(idtr_hash.hex() == cerberus::test::kFixtureIdTranscriptHashHex);

  Digest leaf = make_leaf(degree_hash, idtr_hash);
  CHECK(leaf.hex() == cerberus::test::kFixtureLeafHex);
  CHECK(leaf_of(r) == leaf);

  // make_leaf is H(d ∥ t) byte for byte.
  Bytes cat(degree_hash.bytes.begin(), degree_hash.bytes.end());
  cat.insert(cat.end(), idtr_hash.bytes.begin(), idtr_hash.bytes.end());
  CHECK(sha256(ByteView(cat.data(), cat.size())) == leaf);

  // Swapping the arguments changes the digest.
  CHECK(make_leaf(idtr_hash, degree_hash).hex() == cerberus::test::kFixtureLeafSwappedHex);
  CHECK(make_leaf(idtr_hash, degree_hash) != leaf);
  (void)dh;
}

TEST_CASE("batch tree heights reproduce the reference table") {
  const std::pair<std::size_t, std::size_t> rows[] = {
      {50, 6}, {100, 7}, {200, 8}, {500, 9}, {1000, 10}, {2000, 11}, {4000, 12}};
  for (const auto& [count, height] : rows) {
    BatchTree tree = build_batch_tree(synthetic_batch(count, "S-", "NUST"));
    CHECK(tree.height() == height);
    CHECK(tree.leaf_count() == count);
  }
}

TEST_CASE("tree height follows ceil(log2(n)) under per-level duplication") {
  RecordGen gen(7);
  std::vector<Digest> leaves;
  for (std::size_t n = 2; n <= 300; ++n) {
    leaves.push_back(leaf_of(gen.record()));
    if (leaves.size() != n) leaves.resize(n, leaves.back());
    BatchTree tree = build_tree(leaves);
    CHECK(tree.height() == ceil_log2(n));
  }
}

TEST_CASE("single record: forced duplication, height 1") {
  std::vector<StudentRecord> records{fixture_record()};
  BatchTree tree = build_batch_tree(records);
  CHECK(tree.height() == 1);
  Digest leaf = leaf_of(records[0]);
  CHECK(tree.root() == sha256_concat(leaf, leaf));
}

TEST_CASE("three records: root equals the hand-folded oracle") {
  std::vector<StudentRecord> records = synthetic_batch(3, "T-", "NUST");
  BatchTree tree = build_batch_tree(records);
  CHECK(tree.height() == 2);
  Digest l0 = leaf_of(records[0]);
  Digest l1 = leaf_of(records[1]);
  Digest l2 = leaf_of(records[2]);
  Digest expected = sha256_concat(sha256_concat(l0, l1), sha256_concat(l2, l2));
  CHECK(tree.root() == expected);
}

TEST_CASE("roots match the brute-force oracle for every n up to 64") {
  RecordGen gen(42);
  std::vector<Digest> leaves;
  for (std::size_t n = 1; n <= 64; ++n) {
    leaves.push_back(leaf_of(gen.record()));
    BatchTree tree = build_tree(leaves);
    CHECK(tree.root() == oracle_root(leaves));
  }
}

TEST_CASE("batch construction rejects bad input") {
  CHECK_THROWS_AS(build_batch_tree({}), std::invalid_argument);
  std::vector<StudentRecord> records = synthetic_batch(3, "D-", "NUST");
  records[2].degree.degree_serial = records[0].degree.degree_serial;
  CHECK_THROWS_AS(build_batch_tree(records), std::invalid_argument);
}

TEST_CASE("authentication path sizes match the reference table") {
  BatchTree t100 = build_batch_tree(synthetic_batch(100, "S-", "NUST"));
  AuthPath p = auth_path(t100, 17);
  CHECK(p.entries.size() == 7);
  CHECK(p.entries.size() * 32 == 224);

  BatchTree t2000 = build_batch_tree(synthetic_batch(2000, "S-", "NUST"));
  CHECK(auth_path(t2000, 1999).entries.size() == 11);
  CHECK(auth_path(t2000, 0).entries.size() * 32 == 352);
}

TEST_CASE("single-leaf path: the leaf is its own sibling, side right") {
  std::vector<StudentRecord> records{fixture_record()};
  BatchTree tree = build_batch_tree(records);
  AuthPath path = auth_path(tree, 0);
  REQUIRE(path.entries.size() == 1);
  CHECK(path.entries[0].sibling == leaf_of(records[0]));
  CHECK(path.entries[0].side == Side::Right);
  CHECK(verify_path(leaf_of(records[0]), path, tree.root()));
}

TEST_CASE("path extraction rejects an out-of-range index") {
  BatchTree tree = build_batch_tree(synthetic_batch(4, "S-", "NUST"));
  CHECK_THROWS_AS(auth_path(tree, 4), std::out_of_range);
}

TEST_CASE("every leaf of a 100-record tree verifies; mutations do not") {
  std::vector<StudentRecord> records = synthetic_batch(100, "S-", "NUST");
  BatchTree tree = build_batch_tree(records);
  for (std::size_t i = 0; i < records.size(); ++i) {
    Digest leaf = leaf_of(records[i]);
    AuthPath path = auth_path(tree, i);
    CHECK(verify_path(leaf, path, tree.root()));

    // One flipped bit anywhere falsifies the proof.
    AuthPath tampered = path;
    tampered.entries[i % tampered.entries.size()].sibling.bytes[i % 32] ^= 0x01;
    CHECK_FALSE(verify_path(leaf, tampered, tree.root()));

    Digest bad_leaf = leaf;
    bad_leaf.bytes[i % 32] ^= 0x80;
    CHECK_FALSE(verify_path(bad_leaf, path, tree.root()));

    Digest bad_root = tree.root();
    bad_root.bytes[(i * 7) % 32] ^= 0x01;
    CHECK_FALSE(verify_path(leaf, path, bad_root));
  }
}

TEST_CASE("a path from one tree never verifies against another tree's root") {
  BatchTree a = build_batch_tree(synthetic_batch(16, "A-", "NUST"));
  BatchTree b = build_batch_tree(synthetic_batch(16, "B-", "LUMS"));
  std::vector<StudentRecord> records_a = synthetic_batch(16, "A-", "NUST");
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK_FALSE(verify_path(leaf_of(records_a[i]), auth_path(a, i), b.root()));
  }
}

TEST_CASE("identical record lists produce identical roots") {
  std::vector<StudentRecord> records = synthetic_batch(33, "S-", "NUST");
  CHECK(build_batch_tree(records).root() == build_batch_tree(records).root());
}

TEST_CASE("sides derived from the leaf index agree with extracted paths") {
  std::vector<StudentRecord> records = synthetic_batch(21, "S-", "NUST");
  BatchTree tree = build_batch_tree(records);
  for (std::size_t i = 0; i < records.size(); ++i) {
    AuthPath path = auth_path(tree, i);
    std::vector<Side> derived = sides_for_index(i, tree.height());
    for (std::size_t k = 0; k < path.entries.size(); ++k) {
      CHECK(path.entries[k].side == derived[k]);
    }
  }
}
