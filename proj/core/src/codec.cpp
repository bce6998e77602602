// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#include "cerberus/codec.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace cerberus {

namespace {

// ISO/IEC 18004 data codewords per version (index 1..40) and level, i.e. the
// byte budget left after error correction codewords are set aside.
constexpr std::size_t kDataCodewords[41][4] = {
    {0, 0, 0, 0},  // version 0 unused
    {19, 16, 13, 9},       {34, 28, 22, 16},      {55, 44, 34, 26},
    {80, 64, 48, 36},      {108, 86, 62, 46},     {136, 108, 76, 60},
    {156, 124, 88, 66},    {194, 154, 110, 86},   {232, 182, 132, 100},
    {274, 216, 154, 122},  {324, 254, 180, 140},  {370, 290, 206, 158},
    {428, 334, 244, 180},  {461, 365, 261, 197},  {523, 415, 295, 223},
    {589, 453, 325, 253},  {647, 507, 367, 283},  {721, 563, 397, 313},
    {795, 627, 445, 341},  {861, 669, 485, 385},  {932, 714, 512, 406},
    {1006, 782, 568, 442}, {1094, 860, 614, 464}, {1174, 914, 664, 514},
    {1276, 1000, 718, 538},{1370, 1062, 754, 596},{1468, 1128, 808, 628},
    {1531, 1193, 871, 661},{1631, 1267, 911, 701},{1735, 1373, 985, 745},
    {1843, 1455, 1033, 793},{1955, 1541, 1115, 845},{2071, 1631, 1171, 901},
    {2191, 1725, 1231, 961},{2306, 1812, 1286, 986},{2434, 1914, 1354, 1054},
    {2566, 1992, 1426, 1096},{2702, 2102, 1502, 1142},{2812, 2216, 1582, 1222},
    {2956, 2334, 1666, 1276},
};

void write_padded(Bytes& out, const std::string& value, std::size_t width,
                  const char* field) {
  if (value.size() > width) {
    throw std::invalid_argument(std::string(field) + " exceeds its field width of " +
                                std::to_string(width) + " bytes");
  }
  out.insert(out.end(), value.begin(), value.end());
  out.insert(out.end(), width - value.size(), 0);
}

std::string read_padded(ByteReader& reader, std::size_t width, const char* field) {
  std::size_t at = reader.offset();
  ByteView raw = reader.raw(width);
  std::size_t len = width;
  while (len > 0 && raw[len - 1] == 0) --len;
  for (std::size_t i = 0; i < len; ++i) {
    if (raw[i] < 0x20) {
      throw CodecError(std::string(field) + " contains a control byte", at + i);
    }
  }
  return std::string(raw.begin(), raw.begin() + len);
}

std::string read_short_string(ByteReader& reader) {
  std::size_t len = reader.u8();
  ByteView raw = reader.raw(len);
  return std::string(raw.begin(), raw.end());
}

void write_short_string(ByteWriter& writer, const std::string& value, const char* field) {
  if (value.size() > 255) {
    throw std::invalid_argument(std::string(field) + " exceeds 255 bytes");
  }
  writer.u8(static_cast<std::uint8_t>(value.size()));
  writer.raw(to_bytes(value));
}

}  // namespace

Bytes encode_degree_code(const DegreeCodePayload& payload, const FieldWidths& widths) {
  validate(payload.degree_info);
  const AuthPath& path = payload.auth_path;
  if (path.entries.empty() || path.entries.size() > 16) {
    throw std::invalid_argument("authentication path height must be in 1..16");
  }
  if (path.leaf_index >> path.entries.size() != 0) {
    throw std::invalid_argument("leaf index does not fit the path height");
  }
  // Sides travel implicitly: they must match the ones the index dictates.
  std::vector<Side> expected = sides_for_index(path.leaf_index, path.entries.size());
  for (std::size_t i = 0; i < path.entries.size(); ++i) {
    if (path.entries[i].side != expected[i]) {
      throw std::invalid_argument("path sides are inconsistent with the leaf index");
    }
  }

  Bytes out;
  out.reserve(widths.fixed_prefix() + 32 * path.entries.size());
  const DegreeInfo& d = payload.degree_info;
  write_padded(out, d.student_name, widths.name, "student_name");
  write_padded(out, d.degree_serial, widths.serial, "degree_serial");
  write_padded(out, d.degree_title, widths.title, "degree_title");
  write_padded(out, std::to_string(d.award_year), widths.year, "award_year");
  write_padded(out, d.university_name, widths.university, "university_name");

  ByteWriter tail;
  tail.raw(payload.id_transcript_hash.view());
  tail.u64(payload.block_number);
  tail.raw(payload.tx_id.view());
  tail.u16(static_cast<std::uint16_t>(path.leaf_index));
  for (const PathEntry& entry : path.entries) {
    tail.raw(entry.sibling.view());
  }
  Bytes tail_bytes = tail.take();
  out.insert(out.end(), tail_bytes.begin(), tail_bytes.end());

  if (qr_capacity(40, kCredentialEccLevel) < out.size()) {
    throw std::invalid_argument("degree_code exceeds QR version 40 capacity");
  }
  return out;
}

DegreeCodePayload decode_degree_code(ByteView bytes, const FieldWidths& widths) {
  const std::size_t prefix = widths.fixed_prefix();
  if (bytes.size() < prefix + 32) {
    throw CodecError("degree_code too short", bytes.size());
  }
  if ((bytes.size() - prefix) % 32 != 0) {
    throw CodecError("degree_code path bytes not a multiple of 32", prefix);
  }
  const std::size_t height = (bytes.size() - prefix) / 32;
  if (height > 16) {
    throw CodecError("degree_code path too long", prefix);
  }

  ByteReader reader(bytes);
  DegreeCodePayload payload;
  DegreeInfo& d = payload.degree_info;
  d.student_name = read_padded(reader, widths.name, "student_name");
  d.degree_serial = read_padded(reader, widths.serial, "degree_serial");
  d.degree_title = read_padded(reader, widths.title, "degree_title");
  std::size_t year_at = reader.offset();
  std::string year_text = read_padded(reader, widths.year, "award_year");
  auto [ptr, ec] = std::from_chars(year_text.data(), year_text.data() + year_text.size(),
                                   d.award_year);
  if (ec != std::errc() || ptr != year_text.data() + year_text.size()) {
    throw CodecError("award year is not a decimal integer", year_at);
  }
  d.university_name = read_padded(reader, widths.university, "university_name");
  try {
    validate(d);
  } catch (const std::invalid_argument& e) {
    throw CodecError(e.what(), 0);
  }

  payload.id_transcript_hash = Digest::from_bytes(reader.raw(32));
  payload.block_number = reader.u64();
  payload.tx_id = Digest::from_bytes(reader.raw(32));
  std::size_t index_at = reader.offset();
  payload.auth_path.leaf_index = reader.u16();
  if (payload.auth_path.leaf_index >> height != 0) {
    throw CodecError("leaf index does not fit the path height", index_at);
  }
  std::vector<Side> sides = sides_for_index(payload.auth_path.leaf_index, height);
  for (std::size_t i = 0; i < height; ++i) {
    payload.auth_path.entries.push_back(
        PathEntry{Digest::from_bytes(reader.raw(32)), sides[i]});
  }
  reader.expect_done();
  return payload;
}

IdTranscriptCodePayload id_transcript_payload(const IdTranscriptInfo& info) {
  validate(info);
  return IdTranscriptCodePayload{info.courses, info.grades, info.gpa, info.cgpa};
}

Bytes encode_id_transcript_code(const IdTranscriptCodePayload& payload) {
  if (payload.courses.size() != payload.grades.size()) {
    throw std::invalid_argument("courses and grades must have equal length");
  }
  if (payload.courses.size() > 0xFFFF) {
    throw std::invalid_argument("too many courses");
  }
  ByteWriter writer;
  writer.u16(static_cast<std::uint16_t>(payload.courses.size()));
  for (const Course& c : payload.courses) {
    write_short_string(writer, c.code, "course code");
    write_short_string(writer, c.title, "course title");
    writer.u32(static_cast<std::uint32_t>(c.credit_hours.hundredths()));
  }
  for (const std::string& g : payload.grades) {
    write_short_string(writer, g, "grade");
  }
  writer.u32(static_cast<std::uint32_t>(payload.gpa.hundredths()));
  writer.u32(static_cast<std::uint32_t>(payload.cgpa.hundredths()));
  Bytes out = writer.take();
  if (qr_capacity(40, kCredentialEccLevel) < out.size()) {
    throw std::invalid_argument("id/transcript_code exceeds QR version 40 capacity");
  }
  return out;
}

IdTranscriptCodePayload decode_id_transcript_code(ByteView bytes) {
  ByteReader reader(bytes);
  IdTranscriptCodePayload payload;
  std::size_t count = reader.u16();
  for (std::size_t i = 0; i < count; ++i) {
    Course c;
    c.code = read_short_string(reader);
    c.title = read_short_string(reader);
    c.credit_hours = Decimal2::from_hundredths(reader.u32());
    payload.courses.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < count; ++i) {
    payload.grades.push_back(read_short_string(reader));
  }
  payload.gpa = Decimal2::from_hundredths(reader.u32());
  payload.cgpa = Decimal2::from_hundredths(reader.u32());
  reader.expect_done();
  return payload;
}

std::size_t qr_capacity(int version, EccLevel level) {
  if (version < 1 || version > 40) {
    throw std::invalid_argument("QR version must be in 1..40");
  }
  return kDataCodewords[version][static_cast<int>(level)];
}

QrSpec qr_spec(std::size_t payload_len, double scan_distance_inches, EccLevel level) {
  if (scan_distance_inches <= 0.0) {
    throw std::invalid_argument("scan distance must be positive");
  }
  for (int version = 1; version <= 40; ++version) {
    if (qr_capacity(version, level) >= payload_len) {
      QrSpec spec;
      spec.version = version;
      spec.ecc_level = level;
      spec.modules_per_side = 17 + 4 * version;
      spec.capacity_bytes = qr_capacity(version, level);
      spec.min_size_inches =
          (scan_distance_inches / 10.0) * (spec.modules_per_side / 25.0);
      return spec;
    }
  }
  throw std::invalid_argument("payload does not fit any QR version at this level");
}

}  // namespace cerberus
