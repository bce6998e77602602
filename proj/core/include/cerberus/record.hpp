// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "cerberus/bytes.hpp"
#include "cerberus/decimal.hpp"
#include "cerberus/digest.hpp"

namespace cerberus {

// Field and item separators of the canonical record encoding. Text fields may
// not contain either byte (nor any other C0 control), which is what makes the
// encoding injective.
inline constexpr std::uint8_t kFieldSep = 0x1F;
inline constexpr std::uint8_t kItemSep = 0x1E;

struct DegreeInfo {
  std::string student_name;
  std::string degree_serial;
  std::string degree_title;
  int award_year = 0;
  std::string university_name;

  bool operator==(const DegreeInfo&) const = default;
};

struct Course {
  std::string code;
  std::string title;
  Decimal2 credit_hours;

  bool operator==(const Course&) const = default;
};

struct IdTranscriptInfo {
  std::string id_document_number;
  std::vector<Course> courses;
  std::vector<std::string> grades;  // aligned with courses
  Decimal2 gpa;
  Decimal2 cgpa;

  bool operator==(const IdTranscriptInfo&) const = default;
};

struct StudentRecord {
  DegreeInfo degree;
  IdTranscriptInfo id_transcript;

  bool operator==(const StudentRecord&) const = default;
};

/// Validation limits. gpa/cgpa must lie in [0, max_scale].
struct RecordLimits {
  Decimal2 max_scale = Decimal2::from_hundredths(400);
  int min_year = 1900;
  int max_year = 2200;
};

/// Checks the type invariants; throws std::invalid_argument describing the
/// first violation. Rejected inputs never reach the hashing pipeline.
void validate(const DegreeInfo& info, const RecordLimits& limits = {});
void validate(const IdTranscriptInfo& info, const RecordLimits& limits = {});
void validate(const StudentRecord& record, const RecordLimits& limits = {});

/// Canonical encodings: fields in declaration order joined by 0x1F, list
/// items joined by 0x1E, decimals with exactly two fractional digits. The
/// same value always encodes to the same bytes.
Bytes canonical_bytes(const DegreeInfo& info);
Bytes canonical_bytes(const IdTranscriptInfo& info);

/// Inverse of the canonical encodings, used by round-trip checks and by the
/// transcript verification flow (the verifier re-forms the encoding from
/// plaintext). Throws CodecError on malformed input.
DegreeInfo parse_degree_info(ByteView data);
IdTranscriptInfo parse_id_transcript_info(ByteView data);

/// Parses the batch input JSON (array of student objects). Validates every
/// record.
std::vector<StudentRecord> load_students_json(const std::string& json_text,
                                              const RecordLimits& limits = {});
std::string students_to_json(const std::vector<StudentRecord>& records);

}  // namespace cerberus
