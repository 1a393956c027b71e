// Canonical bracketed text form of AVMs:
//
//   [index: e1, sort: event, composed-of: [...], duration: [number: 30, unit: seconds]]
//
// Features are emitted in a fixed order; unknown features follow in
// alphabetical order. `sort` is omitted for top, and for measure records
// under duration/quantity/distance/proximal-distance, where it is implied.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eventcalc/avm.hpp"

namespace eventcalc {

class TextError : public std::runtime_error {
 public:
  TextError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

bool is_measure_feature(std::string_view feature);

/// Throws std::invalid_argument when `a` contains pattern variables.
std::string canonical_text(const Avm& a);

/// Like canonical_text but admits pattern variables (written `?Name`).
std::string pattern_text(const Avm& a);

/// Inverse of canonical_text up to feature order and whitespace. Pattern
/// variables are accepted; callers that need ground input check is_ground.
Avm parse_text(std::string_view text);

}  // namespace eventcalc
