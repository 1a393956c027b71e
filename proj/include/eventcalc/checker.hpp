// Well-sortedness of eventuality descriptions.
//
// The constraint set is closed:
//
//   C1 composed-of-needs-continuum         composed-of points at a continuum
//                                          and the host is its delimited
//                                          counterpart
//   C2 process-incremental-continuum       a process fills its incremental
//                                          role with a continuum
//   C3 event-incremental-delimited         an event predicated directly fills
//                                          its incremental role with a
//                                          delimited entity
//   C4 constant-roles-delimited            agent, goal and ref-obj are never
//                                          continua
//   C5 path-pred-restriction               path sorts obey their predicate
//   C6 distance-needs-delimited-or-measure distance sits on delimited motion
//                                          or on a for-measured event
//   C7 fill-verbs-event-only               fill is predicated of events, or
//                                          of bare-plural continua under
//                                          composed-of
//
// plus unknown-pred for atoms missing from the lexicon.

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eventcalc/avm.hpp"
#include "eventcalc/lexicon.hpp"

namespace eventcalc {

enum class Constraint {
  composed_of_needs_continuum,
  process_incremental_continuum,
  event_incremental_delimited,
  constant_roles_delimited,
  path_pred_restriction,
  distance_needs_delimited_or_measure,
  fill_verbs_event_only,
  unknown_pred,
};

/// "C1" ... "C7"; "unknown-pred" has no code and yields "C0".
std::string_view constraint_code(Constraint c);
std::string_view constraint_name(Constraint c);

struct Diagnostic {
  Constraint constraint;
  FeaturePath path;
  std::string message;
  std::pair<Sort, Sort> offending;  // (found, required)

  /// `<constraint-name> at <dotted.path>: <message>`
  std::string to_string() const;
};

/// Every violation of the closed constraint set, sorted by path and code.
std::vector<Diagnostic> check(const Avm& a, const Lexicon& lexicon = Lexicon::standard());

struct AdverbialCompatibility {
  bool for_temporal = false;
  bool in_temporal = false;
  bool for_distance = false;

  friend bool operator==(const AdverbialCompatibility&,
                         const AdverbialCompatibility&) = default;
};

/// Which adverbials the description's pred-bearing core admits. The core is
/// re-sorted as a process under a for-measure and as an event under a direct
/// in-measure; each candidate is then run through check. Throws
/// std::invalid_argument for non-eventualities.
AdverbialCompatibility adverbial_compatibility(
    const Avm& a, const Lexicon& lexicon = Lexicon::standard());

}  // namespace eventcalc
