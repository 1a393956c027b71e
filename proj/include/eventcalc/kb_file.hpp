// Text persistence of knowledge bases.
//
//   eventcalc-kb 1
//   fact [index: e1, sort: event, ...]
//   rate e2 1/6 gallons per seconds
//
// Facts are stored in canonical text, so load followed by save reproduces
// the file byte for byte.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eventcalc/avm.hpp"
#include "eventcalc/calculus.hpp"

namespace eventcalc {

inline constexpr std::string_view kKbHeader = "eventcalc-kb 1";

class KbFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws KbFileError naming the line for malformed input, and when a rate
/// refers to an index no fact defines.
Kb parse_kb(std::string_view text);
std::string kb_text(const Kb& kb);

Kb load_kb(const std::string& file);
void save_kb(const std::string& file, const Kb& kb);

/// Renames the indices of a freshly parsed fact so that they are unused in
/// `kb`: eventualities become eN, paths pN and every other named node xN,
/// each numbered from the lowest free N.
Avm assign_indices(const Avm& fact, const Kb& kb);

/// The process a rate for `index` attaches to: `index` itself, or the
/// composed-of filler when `index` is the root of an event fact. Throws
/// KbFileError when nothing in the KB defines `index`.
std::string rate_target(const Kb& kb, const std::string& index);

}  // namespace eventcalc
