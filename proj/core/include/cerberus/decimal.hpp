// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cerberus {

/// Non-negative decimal with exactly two fractional digits, stored in
/// hundredths. Grade points and credit hours round-trip exactly through the
/// canonical text form ("3.85").
class Decimal2 {
 public:
  constexpr Decimal2() = default;
  static Decimal2 from_hundredths(std::int64_t hundredths);
  static Decimal2 from_double(double value);
  static Decimal2 parse(std::string_view text);

  std::int64_t hundredths() const { return hundredths_; }
  double to_double() const { return static_cast<double>(hundredths_) / 100.0; }
  std::string str() const;

  auto operator<=>(const Decimal2&) const = default;

 private:
  std::int64_t hundredths_ = 0;
};

}  // namespace cerberus
