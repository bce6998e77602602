// Copyright 2026 The Cerberus Authors
// SPDX-License-Identifier: Apache-2.0

#include "cerberus/decimal.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cerberus {

Decimal2 Decimal2::from_hundredths(std::int64_t hundredths) {
  if (hundredths < 0) {
    throw std::invalid_argument("decimal value must be non-negative");
  }
  Decimal2 d;
  d.hundredths_ = hundredths;
  return d;
}

Decimal2 Decimal2::from_double(double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument("decimal value must be finite and non-negative");
  }
  return from_hundredths(static_cast<std::int64_t>(std::llround(value * 100.0)));
}

Decimal2 Decimal2::parse(std::string_view text) {
  std::size_t dot = text.find('.');
  if (dot == std::string_view::npos || text.size() - dot - 1 != 2) {
    throw std::invalid_argument("decimal must have exactly two fractional digits");
  }
  std::int64_t whole = 0;
  if (dot == 0) throw std::invalid_argument("decimal missing integer part");
  for (std::size_t i = 0; i < dot; ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("invalid decimal digit");
    whole = whole * 10 + (c - '0');
  }
  std::int64_t frac = 0;
  for (std::size_t i = dot + 1; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("invalid decimal digit");
    frac = frac * 10 + (c - '0');
  }
  return from_hundredths(whole * 100 + frac);
}

std::string Decimal2::str() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld.%02lld",
                static_cast<long long>(hundredths_ / 100),
                static_cast<long long>(hundredths_ % 100));
  return buf;
}

}  // namespace cerberus
