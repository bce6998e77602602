// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>
#include <string>
#include <vector>

#include "cerberus/digest.hpp"
#include "cerberus/record.hpp"

namespace cerberus::test {

/// Fixture record used across suites. The canonical-encoding goldens below
/// were computed once with an independent SHA-256 tool and frozen.
inline StudentRecord fixture_record() {
  StudentRecord r;
  r.degree.student_name = "Alice";
  r.degree.degree_serial = "D-001";
  r.degree.degree_title = "BSc CS";
  r.degree.award_year = 2020;
  r.degree.university_name = "NUST";
  r.id_transcript.id_document_number = "35202-1234567-1";
  r.id_transcript.courses = {
      {"CS101", "Intro to Computing", Decimal2::from_hundredths(300)},
      {"CS102", "Data Structures", Decimal2::from_hundredths(400)},
  };
  r.id_transcript.grades = {"A", "B+"};
  r.id_transcript.gpa = Decimal2::from_hundredths(385);
  r.id_transcript.cgpa = Decimal2::from_hundredths(371);
  return r;
}

inline constexpr const char* kFixtureDegreeHashHex =
    "466af482270beb51da9d13fb8308d01b5f0257bc538bb2529cc7516f3c563f6b";
inline constexpr const char* kFixtureIdTranscriptHashHex =
    "51359f86bc5a1ed882f3afd882aa797e871c118e5225177cbd73b8bf5c67090c";
inline constexpr const char* kFixtureLeafHex =
    "fa97c060127042675915c36a426f3edd6d9a1d04f387addba4521319334f1003";
inline constexpr const char* kFixtureLeafSwappedHex =
    "c62c4a605c8cffe624a60c809fce20d22f5e220459c49f71d632f0081be531c1";

/// Generator for round-trip property tests: printable text, no control bytes.
class RecordGen {
 public:
  explicit RecordGen(std::uint64_t seed) : rng_(seed) {}

  std::string text(std::size_t min_len = 1, std::size_t max_len = 24) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<int> ch(0x20, 0x7E);
    std::string out;
    std::size_t n = len(rng_);
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<char>(ch(rng_)));
    return out;
  }

  Decimal2 decimal(std::int64_t max_hundredths = 400) {
    std::uniform_int_distribution<std::int64_t> d(0, max_hundredths);
    return Decimal2::from_hundredths(d(rng_));
  }

  StudentRecord record() {
    StudentRecord r;
    r.degree.student_name = text();
    r.degree.degree_serial = text(1, 12);
    r.degree.degree_title = text();
    r.degree.award_year = 1900 + static_cast<int>(rng_() % 301);
    r.degree.university_name = text();
    r.id_transcript.id_document_number = text(1, 16);
    std::size_t courses = rng_() % 6;
    for (std::size_t i = 0; i < courses; ++i) {
      Course c;
      c.code = text(1, 8);
      c.title = text(1, 30);
      c.credit_hours = Decimal2::from_hundredths(25 + static_cast<std::int64_t>(rng_() % 600));
      r.id_transcript.courses.push_back(std::move(c));
      r.id_transcript.grades.push_back(text(1, 3));
    }
    r.id_transcript.gpa = decimal();
    r.id_transcript.cgpa = decimal();
    return r;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cerberus::test
