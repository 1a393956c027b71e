// Inference over eventuality descriptions.
//
// Rules are pattern pairs over Avms with '?'-variables, plus side
// conditions that are decidable once the left-hand side has matched. The
// shipped rules are:
//
//   duration_weaken      [E1 event, composed-of E, duration N1 U]
//                          => [E2 event, composed-of E, duration N2 U]
//                          where 0 <= N2 <= N1, E2 fresh, N2 supplied
//   quantity_derive      [E1 event, composed-of [E process, pred V, agent A,
//                          patient X, goal G], duration N1 U1]
//                          => [E1 event, pred V, agent A, goal G,
//                              patient [X1 object, composed-of X,
//                                       quantity N2 U2], duration N1 U1]
//                          where V is a transfer verb, X a substance and
//                          N2 = rate(E, U2, U1) * N1
//   path_measure_equiv   along-path for-distance form <=> bare distance form
//
// existential_weaken drops amount, name or pred information from patients
// and is not pattern based.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "eventcalc/avm.hpp"
#include "eventcalc/lexicon.hpp"
#include "eventcalc/units.hpp"

namespace eventcalc {

struct RateFact {
  std::string process_index;
  std::string quantity_unit;
  std::string time_unit;
  Rational rate;  // quantity units per time unit, > 0

  friend bool operator==(const RateFact&, const RateFact&) = default;
};

class KbError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable snapshot of facts and rates; the `with_*` members return a new
/// snapshot.
class Kb {
 public:
  const std::vector<Avm>& facts() const { return facts_; }
  const std::vector<RateFact>& rates() const { return rates_; }

  /// Throws KbError when the fact is not ground, or when a fact with the
  /// same root index does not unify with it.
  Kb with_fact(Avm fact) const;
  /// Throws KbError for non-positive rates or unknown units.
  Kb with_rate(RateFact rate) const;

  const Avm* fact(const std::string& root_index) const;
  /// True when `index` names any node of any fact.
  bool defines(const std::string& index) const;

 private:
  std::vector<Avm> facts_;
  std::vector<RateFact> rates_;
};

enum class Failure { rule_inapplicable, side_condition_violated, rate_unknown };

std::string_view failure_name(Failure f);

class CalculusError : public std::runtime_error {
 public:
  CalculusError(Failure kind, const std::string& message);
  Failure kind() const { return kind_; }

 private:
  Failure kind_;
};

using Bindings = std::map<std::string, Value>;

struct AtMost {
  std::string lhs, rhs;  // lhs <= rhs
};
struct NonNegative {
  std::string var;
};
struct RateTimes {
  // result = rate(process, result_unit, time_unit) * duration
  std::string result, result_unit, process, time_unit, duration;
};
struct InCategory {
  std::string var;
  Category category;
};
struct HasSort {
  std::string var;
  Sort sort;
};

using Condition = std::variant<AtMost, NonNegative, RateTimes, InCategory, HasSort>;

struct Rule {
  std::string name;
  Avm lhs;
  Avm rhs;
  std::vector<Condition> conditions;
  std::set<std::string> fresh;       // instantiated with fresh names
  std::set<std::string> parameters;  // supplied by the caller
  std::set<std::string> optional;    // may be absent; rhs features then vanish
};

/// Every rhs variable is bound by the lhs, a condition, a parameter or
/// freshness. Returns the offending variables.
std::vector<std::string> unbound_rhs_variables(const Rule& rule);

const Rule& duration_rule();
const Rule& quantity_rule();
const Rule& path_to_bare_rule();
const Rule& path_to_measure_rule();
const std::vector<const Rule*>& standard_rules();

struct Derivation {
  std::string rule;
  Bindings bindings;
  Avm result;
};

/// All conclusions of `rule` from `fact`. Throws CalculusError describing
/// the first obstacle when there are none.
std::vector<Derivation> apply_rule(const Rule& rule, const Avm& fact, const Kb& kb,
                                   const Bindings& parameters = {},
                                   const Lexicon& lexicon = Lexicon::standard());

Avm duration_weaken(const Avm& fact, const Rational& n2, const Kb& kb);
Avm quantity_derive(const Avm& fact, const Kb& kb);
std::vector<Avm> existential_weaken(const Avm& fact);
Avm path_measure_equiv(const Avm& fact);

/// `<rule> [<var>=<value>, ...]`, variables without their '?'.
std::string format_step(const Derivation& d);

struct EntailOptions {
  std::size_t max_depth = 4;
};

struct EntailResult {
  bool entailed = false;
  std::optional<std::string> source;  // root index of the KB fact used
  std::vector<Derivation> witness;
  std::optional<Avm> derived;
};

/// Goal-directed search: facts and their derivatives (up to max_depth rule
/// applications) are tested against the query by subsumption. Numeric
/// parameters of the duration rule are read off the query's duration, or,
/// when it has none, solved from its patient quantity and a stored rate.
EntailResult entails(const Kb& kb, const Avm& query, const EntailOptions& options = {});

/// Forward closure with the duration rule instantiated at the given
/// values (in each fact's own unit).
std::vector<Avm> derivation_closure(const Kb& kb, const std::vector<Rational>& durations,
                                    std::size_t max_depth = 4);

}  // namespace eventcalc
