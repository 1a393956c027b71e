// Sorted attribute-value structures.
//
// An Avm is a tree: an index variable, a sort and a finite map from feature
// names to values. Sharing of participants is expressed by equal index
// variables, never by pointer identity. Avms are immutable; the `with*`
// members return modified copies.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eventcalc/sorts.hpp"
#include "eventcalc/units.hpp"

namespace eventcalc {

struct Atom {
  std::string name;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Schematic variable of a rule pattern. Names carry a leading '?'
/// ("?E1", "?N2") so that capitalised atoms such as the name A stay atoms.
struct Var {
  std::string name;
  friend bool operator==(const Var&, const Var&) = default;
};

bool is_var_name(std::string_view name);

class Avm;

class Value {
 public:
  Value(Atom a) : v_(std::move(a)) {}
  Value(Rational n) : v_(n) {}
  Value(Var x) : v_(std::move(x)) {}
  Value(Avm a);

  bool is_atom() const { return std::holds_alternative<Atom>(v_); }
  bool is_number() const { return std::holds_alternative<Rational>(v_); }
  bool is_var() const { return std::holds_alternative<Var>(v_); }
  bool is_avm() const { return std::holds_alternative<std::shared_ptr<const Avm>>(v_); }

  const Atom& atom() const { return std::get<Atom>(v_); }
  const Rational& number() const { return std::get<Rational>(v_); }
  const Var& var() const { return std::get<Var>(v_); }
  const Avm& avm() const { return *std::get<std::shared_ptr<const Avm>>(v_); }

  const Atom* if_atom() const { return std::get_if<Atom>(&v_); }
  const Avm* if_avm() const {
    auto p = std::get_if<std::shared_ptr<const Avm>>(&v_);
    return p ? p->get() : nullptr;
  }

  friend bool operator==(const Value& a, const Value& b);

 private:
  std::variant<Atom, Rational, Var, std::shared_ptr<const Avm>> v_;
};

using FeaturePath = std::vector<std::string>;

std::string dotted(const FeaturePath& path);

class Avm {
 public:
  using Features = std::map<std::string, Value>;

  Avm() = default;
  Avm(std::string index, Sort sort, Features features = {})
      : index_(std::move(index)), sort_(sort), features_(std::move(features)) {}

  /// Empty for an anonymous node; '?'-prefixed for a pattern variable.
  const std::string& index() const { return index_; }
  Sort sort() const { return sort_; }
  const Features& features() const { return features_; }

  bool has(std::string_view feature) const;
  const Value* get(std::string_view feature) const;
  const Avm* get_avm(std::string_view feature) const;
  std::optional<std::string> get_atom(std::string_view feature) const;

  Avm with(std::string feature, Value value) const;
  Avm without(std::string_view feature) const;
  Avm with_sort(Sort s) const;
  Avm with_index(std::string index) const;

  friend bool operator==(const Avm&, const Avm&) = default;

 private:
  std::string index_;
  Sort sort_ = Sort::top;
  Features features_;
};

/// Measure record `[number: N, unit: U]` of sort measure.
Avm make_measure(const Measure& m);
/// Reads a measure record back; nullopt unless it has a number and a unit atom.
std::optional<Measure> read_measure(const Avm& a);

/// Follows features left to right; the empty path yields the Avm itself.
std::optional<Value> get_path(const Avm& a, std::span<const std::string> path);

/// Short human-readable rendering of a value for diagnostics.
std::string describe(const Value& v);

struct Clash {
  FeaturePath path;
  std::string left;
  std::string right;
};

using UnifyResult = std::variant<Avm, Clash>;

/// Sorted unification. Sorts meet; shared features unify recursively;
/// index variables met at the same node are aliased and every member of an
/// alias class is renamed to its least name. Pattern variables bind to the
/// value they meet.
UnifyResult unify(const Avm& a, const Avm& b);

/// True iff `general` describes `specific`: every feature of the general
/// structure is present and compatible, sorts are no more specific, and
/// index variables map consistently onto those of `specific`.
bool subsumes(const Avm& general, const Avm& specific);

/// Equal up to a bijective renaming of index and pattern variables.
bool alpha_equal(const Avm& a, const Avm& b);

/// Fresh variable name derived from `base`; safe to call concurrently.
std::string fresh_name(std::string_view base);

/// Consistently replaces every index and pattern variable by a fresh name.
Avm rename_fresh(const Avm& a);

/// Applies an explicit renaming to indices (and '?' variables).
Avm rename(const Avm& a, const std::map<std::string, std::string>& mapping);

bool is_ground(const Avm& a);

/// Every named index occurring in `a`, in pre-order.
std::vector<std::string> indices_of(const Avm& a);

/// Paths of every nested Avm node, the root included as the empty path.
std::vector<FeaturePath> node_paths(const Avm& a);

}  // namespace eventcalc
