// Exact rational measures and the closed unit table.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace eventcalc {

// Compare against Rational(k), not a bare integer: with Boost 1.74 under C++20
// rational == int recurses through the rewritten candidates.
using Rational = boost::rational<std::int64_t>;

/// "30", "5/2". Negative numbers print with a leading '-'.
std::string rational_to_string(const Rational& r);

/// Accepts "30", "5/2" and "0.5"; nullopt on anything else.
std::optional<Rational> parse_rational(std::string_view text);

enum class Dimension { time, volume, distance, count };

std::string_view dimension_name(Dimension d);

class UnitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Measure {
  Rational number;
  std::string unit;

  friend bool operator==(const Measure&, const Measure&) = default;
};

/// Closed conversion table: seconds, minutes; gallons; yards, miles;
/// individuals. Unit atoms are the plural forms used in AVMs.
class UnitTable {
 public:
  static const UnitTable& standard();

  bool known(std::string_view unit) const;
  /// Throws UnitError for unknown units.
  Dimension dimension_of(std::string_view unit) const;
  Rational factor_to_base(std::string_view unit) const;
  std::string_view base_unit(Dimension d) const;
};

Dimension dimension_of(const Measure& m);

/// Exact rescale. Throws UnitError across dimensions.
Measure convert(const Measure& m, std::string_view target_unit);

/// Compares after conversion to the base unit. Throws UnitError across
/// dimensions.
bool measure_leq(const Measure& a, const Measure& b);

}  // namespace eventcalc
