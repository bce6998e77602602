// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#include "cerberus/record.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <stdexcept>

namespace cerberus {

namespace {

using ordered_json = nlohmann::ordered_json;

void check_text(const std::string& value, const char* field, bool allow_empty = false) {
  if (!allow_empty && value.empty()) {
    throw std::invalid_argument(std::string(field) + " must not be empty");
  }
  for (unsigned char c : value) {
    if (c < 0x20) {
      throw std::invalid_argument(std::string(field) +
                                  " contains a control byte (0x00-0x1F are reserved)");
    }
  }
}

void append_text(Bytes& out, const std::string& value) {
  out.insert(out.end(), value.begin(), value.end());
}

std::vector<std::string> split(ByteView data, std::uint8_t sep) {
  std::vector<std::string> parts;
  std::string current;
  for (std::uint8_t b : data) {
    if (b == sep) {
      parts.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(static_cast<char>(b));
    }
  }
  parts.push_back(std::move(current));
  return parts;
}

int parse_year(const std::string& text, std::size_t offset) {
  int year = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), year);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw CodecError("award year is not a decimal integer", offset);
  }
  return year;
}

}  // namespace

void validate(const DegreeInfo& info, const RecordLimits& limits) {
  check_text(info.student_name, "student_name");
  check_text(info.degree_serial, "degree_serial");
  check_text(info.degree_title, "degree_title");
  check_text(info.university_name, "university_name");
  if (info.award_year < limits.min_year || info.award_year > limits.max_year) {
    throw std::invalid_argument("award_year out of range");
  }
}

void validate(const IdTranscriptInfo& info, const RecordLimits& limits) {
  check_text(info.id_document_number, "id_document_number");
  if (info.courses.size() != info.grades.size()) {
    throw std::invalid_argument("courses and grades must have equal length");
  }
  for (const Course& c : info.courses) {
    check_text(c.code, "course code");
    check_text(c.title, "course title");
    if (c.credit_hours.hundredths() <= 0) {
      throw std::invalid_argument("credit_hours must be positive");
    }
  }
  for (const std::string& g : info.grades) {
    check_text(g, "grade");
  }
  if (info.gpa > limits.max_scale || info.cgpa > limits.max_scale) {
    throw std::invalid_argument("gpa/cgpa above grading scale");
  }
}

void validate(const StudentRecord& record, const RecordLimits& limits) {
  validate(record.degree, limits);
  validate(record.id_transcript, limits);
}

Bytes canonical_bytes(const DegreeInfo& info) {
  validate(info);
  Bytes out;
  append_text(out, info.student_name);
  out.push_back(kFieldSep);
  append_text(out, info.degree_serial);
  out.push_back(kFieldSep);
  append_text(out, info.degree_title);
  out.push_back(kFieldSep);
  append_text(out, std::to_string(info.award_year));
  out.push_back(kFieldSep);
  append_text(out, info.university_name);
  return out;
}

Bytes canonical_bytes(const IdTranscriptInfo& info) {
  validate(info);
  Bytes out;
  append_text(out, info.id_document_number);
  out.push_back(kFieldSep);
  // Courses flatten to (code, title, credit_hours) triples joined by 0x1E.
  bool first = true;
  for (const Course& c : info.courses) {
    if (!first) out.push_back(kItemSep);
    first = false;
    append_text(out, c.code);
    out.push_back(kItemSep);
    append_text(out, c.title);
    out.push_back(kItemSep);
    append_text(out, c.credit_hours.str());
  }
  out.push_back(kFieldSep);
  first = true;
  for (const std::string& g : info.grades) {
    if (!first) out.push_back(kItemSep);
    first = false;
    append_text(out, g);
  }
  out.push_back(kFieldSep);
  append_text(out, info.gpa.str());
  out.push_back(kFieldSep);
  append_text(out, info.cgpa.str());
  return out;
}

DegreeInfo parse_degree_info(ByteView data) {
  std::vector<std::string> fields = split(data, kFieldSep);
  if (fields.size() != 5) {
    throw CodecError("degree_info must have exactly 5 fields", 0);
  }
  DegreeInfo info;
  info.student_name = fields[0];
  info.degree_serial = fields[1];
  info.degree_title = fields[2];
  info.award_year = parse_year(fields[3], 0);
  info.university_name = fields[4];
  validate(info);
  return info;
}

IdTranscriptInfo parse_id_transcript_info(ByteView data) {
  std::vector<std::string> fields = split(data, kFieldSep);
  if (fields.size() != 5) {
    throw CodecError("id/transcript_info must have exactly 5 fields", 0);
  }
  IdTranscriptInfo info;
  info.id_document_number = fields[0];
  if (!fields[1].empty()) {
    auto items = split(to_bytes(fields[1]), kItemSep);
    if (items.size() % 3 != 0) {
      throw CodecError("course list must be (code,title,credits) triples", 0);
    }
    for (std::size_t i = 0; i < items.size(); i += 3) {
      Course c;
      c.code = items[i];
      c.title = items[i + 1];
      c.credit_hours = Decimal2::parse(items[i + 2]);
      info.courses.push_back(std::move(c));
    }
  }
  if (!fields[2].empty()) {
    for (auto& g : split(to_bytes(fields[2]), kItemSep)) {
      info.grades.push_back(std::move(g));
    }
  }
  info.gpa = Decimal2::parse(fields[3]);
  info.cgpa = Decimal2::parse(fields[4]);
  validate(info);
  return info;
}

std::vector<StudentRecord> load_students_json(const std::string& json_text,
                                              const RecordLimits& limits) {
  ordered_json doc = ordered_json::parse(json_text);
  if (!doc.is_array()) {
    throw std::invalid_argument("students file must be a JSON array");
  }
  std::vector<StudentRecord> records;
  records.reserve(doc.size());
  for (const auto& item : doc) {
    StudentRecord r;
    r.degree.student_name = item.at("name").get<std::string>();
    r.degree.degree_serial = item.at("serial").get<std::string>();
    r.degree.degree_title = item.at("title").get<std::string>();
    r.degree.award_year = item.at("year").get<int>();
    r.degree.university_name = item.at("university").get<std::string>();
    r.id_transcript.id_document_number = item.at("id_number").get<std::string>();
    for (const auto& cj : item.at("courses")) {
      Course c;
      c.code = cj.at("code").get<std::string>();
      c.title = cj.at("title").get<std::string>();
      c.credit_hours = Decimal2::from_double(cj.at("credits").get<double>());
      r.id_transcript.courses.push_back(std::move(c));
    }
    for (const auto& gj : item.at("grades")) {
      r.id_transcript.grades.push_back(gj.get<std::string>());
    }
    r.id_transcript.gpa = Decimal2::from_double(item.at("gpa").get<double>());
    r.id_transcript.cgpa = Decimal2::from_double(item.at("cgpa").get<double>());
    validate(r, limits);
    records.push_back(std::move(r));
  }
  return records;
}

std::string students_to_json(const std::vector<StudentRecord>& records) {
  ordered_json doc = ordered_json::array();
  for (const StudentRecord& r : records) {
    ordered_json item;
    item["name"] = r.degree.student_name;
    item["serial"] = r.degree.degree_serial;
    item["title"] = r.degree.degree_title;
    item["year"] = r.degree.award_year;
    item["university"] = r.degree.university_name;
    item["id_number"] = r.id_transcript.id_document_number;
    ordered_json courses = ordered_json::array();
    for (const Course& c : r.id_transcript.courses) {
      courses.push_back({{"code", c.code}, {"title", c.title}, {"credits", c.credit_hours.to_double()}});
    }
    item["courses"] = std::move(courses);
    item["grades"] = r.id_transcript.grades;
    item["gpa"] = r.id_transcript.gpa.to_double();
    item["cgpa"] = r.id_transcript.cgpa.to_double();
    doc.push_back(std::move(item));
  }
  return doc.dump(2);
}

}  // namespace cerberus
