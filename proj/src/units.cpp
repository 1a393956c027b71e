#include "eventcalc/units.hpp"

#include <array>
#include <charconv>

namespace eventcalc {

namespace {

struct UnitRow {
  std::string_view unit;
  Dimension dimension;
  std::int64_t factor;
};

constexpr std::array<UnitRow, 6> kUnits = {{
    {"seconds", Dimension::time, 1},
    {"minutes", Dimension::time, 60},
    {"gallons", Dimension::volume, 1},
    {"yards", Dimension::distance, 1},
    {"miles", Dimension::distance, 1760},
    {"individuals", Dimension::count, 1},
}};

const UnitRow& row(std::string_view unit) {
  for (const auto& r : kUnits) {
    if (r.unit == unit) return r;
  }
  throw UnitError("unknown unit '" + std::string(unit) + "'");
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
  return out;
}

std::optional<Rational> parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (!num || !den || *den <= 0) return std::nullopt;
    return Rational(*num, *den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = parse_int(text.substr(0, dot));
    std::string_view frac = text.substr(dot + 1);
    auto frac_digits = parse_int(frac);
    if (!whole || !frac_digits || *whole < 0 || frac.size() > 12 ||
        frac.front() == '-' || frac.front() == '+')
      return std::nullopt;
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    return Rational(*whole) + Rational(*frac_digits, scale);
  }
  auto v = parse_int(text);
  if (!v) return std::nullopt;
  return Rational(*v);
}

std::string_view dimension_name(Dimension d) {
  switch (d) {
    case Dimension::time: return "time";
    case Dimension::volume: return "volume";
    case Dimension::distance: return "distance";
    case Dimension::count: return "count";
  }
  return "?";
}

const UnitTable& UnitTable::standard() {
  static const UnitTable table;
  return table;
}

bool UnitTable::known(std::string_view unit) const {
  for (const auto& r : kUnits) {
    if (r.unit == unit) return true;
  }
  return false;
}

Dimension UnitTable::dimension_of(std::string_view unit) const {
  return row(unit).dimension;
}

Rational UnitTable::factor_to_base(std::string_view unit) const {
  return Rational(row(unit).factor);
}

std::string_view UnitTable::base_unit(Dimension d) const {
  for (const auto& r : kUnits) {
    if (r.dimension == d && r.factor == 1) return r.unit;
  }
  return {};
}

Dimension dimension_of(const Measure& m) {
  return UnitTable::standard().dimension_of(m.unit);
}

Measure convert(const Measure& m, std::string_view target_unit) {
  const auto& table = UnitTable::standard();
  Dimension from = table.dimension_of(m.unit);
  Dimension to = table.dimension_of(target_unit);
  if (from != to) {
    throw UnitError("cannot convert " + m.unit + " (" +
                    std::string(dimension_name(from)) + ") to " +
                    std::string(target_unit) + " (" +
                    std::string(dimension_name(to)) + ")");
  }
  Rational scaled =
      m.number * table.factor_to_base(m.unit) / table.factor_to_base(target_unit);
  return Measure{scaled, std::string(target_unit)};
}

bool measure_leq(const Measure& a, const Measure& b) {
  Measure b_in_a = convert(b, a.unit);
  return a.number <= b_in_a.number;
}

}  // namespace eventcalc
