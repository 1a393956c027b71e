#include "eventcalc/calculus.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "eventcalc/text.hpp"

namespace eventcalc {

// --- knowledge base -------------------------------------------------------

Kb Kb::with_fact(Avm fact) const {
  if (!is_ground(fact)) throw KbError("facts must be ground");
  for (const auto& f : facts_) {
    if (f.index().empty() || f.index() != fact.index()) continue;
    UnifyResult u = unify(f, fact);
    if (auto* c = std::get_if<Clash>(&u)) {
      throw KbError("fact " + fact.index() + " conflicts with the stored fact at " +
                    dotted(c->path) + ": " + c->left + " vs " + c->right);
    }
  }
  Kb out = *this;
  out.facts_.push_back(std::move(fact));
  return out;
}

Kb Kb::with_rate(RateFact rate) const {
  if (rate.rate <= 0) throw KbError("rates must be positive");
  const auto& table = UnitTable::standard();
  if (!table.known(rate.quantity_unit) || !table.known(rate.time_unit))
    throw KbError("unknown unit in rate " + rate.quantity_unit + " per " +
                  rate.time_unit);
  if (table.dimension_of(rate.time_unit) != Dimension::time)
    throw KbError("rate denominator " + rate.time_unit + " is not a time unit");
  Kb out = *this;
  out.rates_.push_back(std::move(rate));
  return out;
}

const Avm* Kb::fact(const std::string& root_index) const {
  for (const auto& f : facts_) {
    if (f.index() == root_index) return &f;
  }
  return nullptr;
}

bool Kb::defines(const std::string& index) const {
  for (const auto& f : facts_) {
    auto names = indices_of(f);
    if (std::find(names.begin(), names.end(), index) != names.end()) return true;
  }
  return false;
}

// --- errors ---------------------------------------------------------------

std::string_view failure_name(Failure f) {
  switch (f) {
    case Failure::rule_inapplicable: return "rule-inapplicable";
    case Failure::side_condition_violated: return "side-condition-violated";
    case Failure::rate_unknown: return "rate-unknown";
  }
  return "?";
}

CalculusError::CalculusError(Failure kind, const std::string& message)
    : std::runtime_error(std::string(failure_name(kind)) + ": " + message),
      kind_(kind) {}

// --- rules ----------------------------------------------------------------

namespace {

void pattern_vars(const Avm& a, std::set<std::string>& out) {
  if (is_var_name(a.index())) out.insert(a.index());
  for (const auto& [f, v] : a.features()) {
    if (v.is_var()) out.insert(v.var().name);
    else if (v.is_avm()) pattern_vars(v.avm(), out);
  }
}

Rule make_duration_rule() {
  Rule r;
  r.name = "duration_weaken";
  r.lhs = parse_text(
      "[index: ?E1, sort: event, composed-of: ?E,"
      " duration: [number: ?N1, unit: ?U]]");
  r.rhs = parse_text(
      "[index: ?E2, sort: event, composed-of: ?E,"
      " duration: [number: ?N2, unit: ?U]]");
  r.conditions = {NonNegative{"?N2"}, AtMost{"?N2", "?N1"}};
  r.fresh = {"?E2"};
  r.parameters = {"?N2"};
  return r;
}

Rule make_quantity_rule() {
  Rule r;
  r.name = "quantity_derive";
  r.lhs = parse_text(
      "[index: ?E1, sort: event,"
      " composed-of: [index: ?E, sort: process, pred: ?V, agent: ?A,"
      "               patient: ?X, goal: ?G],"
      " duration: [number: ?N1, unit: ?U1]]");
  r.rhs = parse_text(
      "[index: ?E1, sort: event, pred: ?V, agent: ?A,"
      " patient: [index: ?X1, sort: object, composed-of: ?X,"
      "           quantity: [number: ?N2, unit: ?U2]],"
      " goal: ?G, duration: [number: ?N1, unit: ?U1]]");
  r.conditions = {InCategory{"?V", Category::transfer_verb},
                  HasSort{"?X", Sort::substance},
                  RateTimes{"?N2", "?U2", "?E", "?U1", "?N1"}};
  r.fresh = {"?X1"};
  r.optional = {"?G"};
  return r;
}

constexpr const char* kAlongMeasured =
    "[index: ?E1, sort: event,"
    " composed-of: [index: ?E, sort: process, pred: ?V, agent: ?A,"
    "   path: [index: ?P, sort: non-delimited-path, pred: along, ref-obj: ?R,"
    "          proximal-distance: ?D2]],"
    " distance: ?D]";

constexpr const char* kAlongBare =
    "[index: ?E1, sort: event, pred: ?V, agent: ?A,"
    " path: [index: ?P, sort: delimited-path, pred: along, ref-obj: ?R,"
    "        proximal-distance: ?D2],"
    " distance: ?D]";

Rule make_path_rule(bool to_bare) {
  Rule r;
  r.name = "path_measure_equiv";
  r.lhs = parse_text(to_bare ? kAlongMeasured : kAlongBare);
  r.rhs = parse_text(to_bare ? kAlongBare : kAlongMeasured);
  r.conditions = {InCategory{"?V", Category::motion_verb}};
  r.fresh = to_bare ? std::set<std::string>{"?P"} : std::set<std::string>{"?E", "?P"};
  r.optional = {"?A", "?D2"};
  return r;
}

}  // namespace

std::vector<std::string> unbound_rhs_variables(const Rule& rule) {
  std::set<std::string> bound, needed;
  pattern_vars(rule.lhs, bound);
  pattern_vars(rule.rhs, needed);
  bound.insert(rule.fresh.begin(), rule.fresh.end());
  bound.insert(rule.parameters.begin(), rule.parameters.end());
  for (const auto& c : rule.conditions) {
    if (auto* rt = std::get_if<RateTimes>(&c)) {
      bound.insert(rt->result);
      bound.insert(rt->result_unit);
    }
  }
  std::vector<std::string> out;
  for (const auto& v : needed) {
    if (!bound.count(v)) out.push_back(v);
  }
  return out;
}

const Rule& duration_rule() {
  static const Rule r = make_duration_rule();
  return r;
}

const Rule& quantity_rule() {
  static const Rule r = make_quantity_rule();
  return r;
}

const Rule& path_to_bare_rule() {
  static const Rule r = make_path_rule(true);
  return r;
}

const Rule& path_to_measure_rule() {
  static const Rule r = make_path_rule(false);
  return r;
}

const std::vector<const Rule*>& standard_rules() {
  static const std::vector<const Rule*> rules = {
      &duration_rule(), &quantity_rule(), &path_to_bare_rule(),
      &path_to_measure_rule()};
  return rules;
}

// --- matching and instantiation ------------------------------------------

namespace {

class Engine {
 public:
  Engine(const Rule& rule, const Kb& kb, const Lexicon& lex)
      : rule_(rule), kb_(kb), lex_(lex) {}

  bool match(const Avm& p, const Avm& f, Bindings& b) const {
    if (!sort_leq(f.sort(), p.sort())) return false;
    if (is_var_name(p.index())) {
      if (!bind(p.index(), Value(Atom{f.index()}), b)) return false;
    } else if (!p.index().empty() && p.index() != f.index()) {
      return false;
    }
    for (const auto& [feature, pv] : p.features()) {
      const Value* fv = f.get(feature);
      if (!fv) {
        if (pv.is_var() && rule_.optional.count(pv.var().name)) continue;
        return false;
      }
      if (pv.is_var()) {
        if (!bind(pv.var().name, *fv, b)) return false;
      } else if (pv.is_avm()) {
        if (!fv->is_avm() || !match(pv.avm(), fv->avm(), b)) return false;
      } else if (!(pv == *fv)) {
        return false;
      }
    }
    return true;
  }

  // Expands each binding set through the side conditions. Throws the first
  // obstacle if no set survives.
  std::vector<Bindings> conditions(Bindings start) const {
    std::vector<Bindings> live{std::move(start)};
    for (const auto& c : rule_.conditions) {
      std::vector<Bindings> next;
      std::optional<CalculusError> first;
      for (auto& b : live) {
        try {
          auto more = std::visit([&](const auto& cond) { return eval(cond, b); }, c);
          next.insert(next.end(), more.begin(), more.end());
        } catch (const CalculusError& e) {
          if (!first) first = e;
        }
      }
      if (next.empty()) {
        if (first) throw *first;
        throw CalculusError(Failure::side_condition_violated,
                            rule_.name + ": no binding satisfies the side condition");
      }
      live = std::move(next);
    }
    return live;
  }

  Avm instantiate(const Avm& p, const Bindings& b) const {
    std::string index = p.index();
    if (is_var_name(index)) index = b.at(index).atom().name;
    Avm::Features out;
    for (const auto& [feature, pv] : p.features()) {
      if (pv.is_var()) {
        auto it = b.find(pv.var().name);
        if (it == b.end()) {
          if (rule_.optional.count(pv.var().name)) continue;
          throw std::logic_error(rule_.name + ": unbound variable " + pv.var().name);
        }
        out.emplace(feature, it->second);
      } else if (pv.is_avm()) {
        out.emplace(feature, Value(instantiate(pv.avm(), b)));
      } else {
        out.emplace(feature, pv);
      }
    }
    return Avm(std::move(index), p.sort(), std::move(out));
  }

 private:
  const Rule& rule_;
  const Kb& kb_;
  const Lexicon& lex_;

  static bool bind(const std::string& var, const Value& v, Bindings& b) {
    auto [it, inserted] = b.emplace(var, v);
    return inserted || it->second == v;
  }

  static const Rational& number(const Bindings& b, const std::string& var) {
    auto it = b.find(var);
    if (it == b.end() || !it->second.is_number())
      throw CalculusError(Failure::rule_inapplicable, var + " is not a number");
    return it->second.number();
  }

  static std::string atom(const Bindings& b, const std::string& var) {
    auto it = b.find(var);
    if (it == b.end() || !it->second.is_atom())
      throw CalculusError(Failure::rule_inapplicable, var + " is not an atom");
    return it->second.atom().name;
  }

  std::vector<Bindings> eval(const AtMost& c, const Bindings& b) const {
    const Rational &l = number(b, c.lhs), &r = number(b, c.rhs);
    if (l > r)
      throw CalculusError(Failure::side_condition_violated,
                          rule_.name + ": " + rational_to_string(l) + " exceeds " +
                              rational_to_string(r));
    return {b};
  }

  std::vector<Bindings> eval(const NonNegative& c, const Bindings& b) const {
    if (number(b, c.var) < 0)
      throw CalculusError(Failure::side_condition_violated,
                          rule_.name + ": " + c.var.substr(1) + " is negative");
    return {b};
  }

  std::vector<Bindings> eval(const InCategory& c, const Bindings& b) const {
    std::string pred = atom(b, c.var);
    const LexicalEntry* e = lex_.entry(pred);
    if (!e || e->category != c.category)
      throw CalculusError(Failure::rule_inapplicable,
                          rule_.name + ": '" + pred + "' is not a " +
                              std::string(category_name(c.category)));
    return {b};
  }

  std::vector<Bindings> eval(const HasSort& c, const Bindings& b) const {
    auto it = b.find(c.var);
    const Avm* a = it == b.end() ? nullptr : it->second.if_avm();
    if (!a || !sort_leq(a->sort(), c.sort))
      throw CalculusError(Failure::rule_inapplicable,
                          rule_.name + ": " + c.var.substr(1) + " is not a " +
                              std::string(sort_name(c.sort)));
    return {b};
  }

  std::vector<Bindings> eval(const RateTimes& c, const Bindings& b) const {
    std::string process = atom(b, c.process);
    std::string time_unit = atom(b, c.time_unit);
    Measure span{number(b, c.duration), time_unit};
    const auto& table = UnitTable::standard();
    std::vector<Bindings> out;
    for (const auto& r : kb_.rates()) {
      if (r.process_index != process) continue;
      if (!table.known(time_unit) ||
          table.dimension_of(time_unit) != table.dimension_of(r.time_unit))
        continue;
      Bindings next = b;
      Rational n = r.rate * convert(span, r.time_unit).number;
      if (!bind(c.result, Value(n), next) ||
          !bind(c.result_unit, Value(Atom{r.quantity_unit}), next))
        continue;
      out.push_back(std::move(next));
    }
    if (out.empty())
      throw CalculusError(Failure::rate_unknown,
                          "no rate for process " + process + " per " + time_unit);
    return out;
  }
};

}  // namespace

std::vector<Derivation> apply_rule(const Rule& rule, const Avm& fact, const Kb& kb,
                                   const Bindings& parameters, const Lexicon& lexicon) {
  Engine engine(rule, kb, lexicon);
  Bindings b = parameters;
  if (!engine.match(rule.lhs, fact, b))
    throw CalculusError(Failure::rule_inapplicable,
                        rule.name + ": fact does not match the rule's premise");
  for (const auto& p : rule.parameters) {
    if (!b.count(p))
      throw std::invalid_argument(rule.name + " needs parameter " + p.substr(1));
  }
  std::vector<Derivation> out;
  for (Bindings& solved : engine.conditions(std::move(b))) {
    for (const auto& f : rule.fresh) {
      std::string base = f.substr(1);
      std::transform(base.begin(), base.end(), base.begin(),
                     [](unsigned char ch) { return std::tolower(ch); });
      solved.insert_or_assign(f, Value(Atom{fresh_name(base)}));
    }
    Avm result = engine.instantiate(rule.rhs, solved);
    out.push_back(Derivation{rule.name, std::move(solved), std::move(result)});
  }
  return out;
}

Avm duration_weaken(const Avm& fact, const Rational& n2, const Kb& kb) {
  return apply_rule(duration_rule(), fact, kb, {{"?N2", Value(n2)}}).front().result;
}

Avm quantity_derive(const Avm& fact, const Kb& kb) {
  return apply_rule(quantity_rule(), fact, kb).front().result;
}

Avm path_measure_equiv(const Avm& fact) {
  Kb none;
  try {
    return apply_rule(path_to_bare_rule(), fact, none).front().result;
  } catch (const CalculusError& e) {
    if (e.kind() != Failure::rule_inapplicable) throw;
  }
  return apply_rule(path_to_measure_rule(), fact, none).front().result;
}

// --- existential weakening -------------------------------------------------

std::vector<Avm> existential_weaken(const Avm& fact) {
  std::vector<Avm> out;
  auto push = [&](Avm a) {
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
  };

  // Patients of the root and of a composed-of core.
  std::vector<std::vector<std::string>> sites = {{"patient"}, {"composed-of", "patient"}};
  for (const auto& site : sites) {
    auto v = get_path(fact, site);
    if (!v || !v->is_avm()) continue;
    const Avm& nominal = v->avm();

    std::vector<std::string> droppable;
    for (const char* f : {"card", "quantity", "name"}) {
      if (nominal.has(f)) droppable.emplace_back(f);
    }
    std::vector<Avm> weaker;
    for (unsigned mask = 1; mask < (1u << droppable.size()); ++mask) {
      Avm w = nominal;
      for (std::size_t i = 0; i < droppable.size(); ++i) {
        if (mask & (1u << i)) w = w.without(droppable[i]);
      }
      weaker.push_back(std::move(w));
    }
    if (nominal.has("pred")) weaker.push_back(Avm(nominal.index(), nominal.sort()));

    for (const auto& w : weaker) {
      if (site.size() == 1) {
        push(fact.with("patient", Value(w)));
      } else {
        const Avm& core = fact.get_avm("composed-of")->with("patient", Value(w));
        push(fact.with("composed-of", Value(core)));
      }
    }
  }
  return out;
}

// --- search ---------------------------------------------------------------

std::string format_step(const Derivation& d) {
  std::string out = d.rule + " [";
  bool first = true;
  for (const auto& [var, value] : d.bindings) {
    if (!first) out += ", ";
    first = false;
    out += var.substr(is_var_name(var) ? 1 : 0) + "=";
    if (const Avm* a = value.if_avm()) out += a->index().empty() ? describe(value) : a->index();
    else out += describe(value);
  }
  return out + "]";
}

namespace {

std::string normalized_key(const Avm& a) {
  std::map<std::string, std::string> mapping;
  for (const auto& n : indices_of(a)) mapping.emplace(n, "_" + std::to_string(mapping.size()));
  return canonical_text(rename(a, mapping));
}

struct State {
  Avm avm;
  std::string source;
  std::vector<Derivation> witness;
};

// One round of rule applications. Duration parameters come from `durations`
// when non-null, otherwise from the query's duration.
std::vector<State> successors(const State& s, const Kb& kb,
                              const std::function<std::vector<Rational>(const Avm&)>& n2s) {
  std::vector<State> out;
  auto extend = [&](Derivation d) {
    State next{d.result, s.source, s.witness};
    next.witness.push_back(std::move(d));
    out.push_back(std::move(next));
  };
  auto attempt = [&](const Rule& r, const Bindings& params) {
    try {
      for (auto& d : apply_rule(r, s.avm, kb, params)) extend(std::move(d));
    } catch (const CalculusError&) {
    }
  };

  for (const Rational& n2 : n2s(s.avm)) attempt(duration_rule(), {{"?N2", Value(n2)}});
  attempt(quantity_rule(), {});
  attempt(path_to_bare_rule(), {});
  attempt(path_to_measure_rule(), {});
  for (auto& w : existential_weaken(s.avm)) {
    extend(Derivation{"existential_weaken", {{"?E", Value(Atom{w.index()})}}, w});
  }
  return out;
}

}  // namespace

namespace {

// The query with its duration restated in the unit `fact` uses, when both
// carry durations of one dimension.
Avm in_units_of(const Avm& query, const Avm& fact) {
  const Avm* q = query.get_avm("duration");
  const Avm* f = fact.get_avm("duration");
  auto qm = q ? read_measure(*q) : std::nullopt;
  auto fm = f ? read_measure(*f) : std::nullopt;
  if (!qm || !fm || qm->unit == fm->unit) return query;
  const auto& table = UnitTable::standard();
  if (!table.known(qm->unit) || !table.known(fm->unit) ||
      table.dimension_of(qm->unit) != table.dimension_of(fm->unit))
    return query;
  return query.with("duration", Value(q->with("number", Value(convert(*qm, fm->unit).number))
                                          .with("unit", Value(Atom{fm->unit}))));
}

}  // namespace

EntailResult entails(const Kb& kb, const Avm& query, const EntailOptions& options) {
  std::optional<Measure> wanted;
  if (const Avm* d = query.get_avm("duration")) wanted = read_measure(*d);

  auto n2s = [&](const Avm& fact) -> std::vector<Rational> {
    const Avm* d = fact.get_avm("duration");
    auto have = d ? read_measure(*d) : std::nullopt;
    if (!wanted || !have) return {};
    const auto& table = UnitTable::standard();
    if (!table.known(wanted->unit) || !table.known(have->unit) ||
        table.dimension_of(wanted->unit) != table.dimension_of(have->unit))
      return {};
    return {convert(*wanted, have->unit).number};
  };

  // Without a duration in the query, a quantity fixes N2 through the rate.
  std::optional<Measure> wanted_quantity;
  if (auto q = get_path(query, std::vector<std::string>{"patient", "quantity"}); q && q->is_avm())
    wanted_quantity = read_measure(q->avm());
  auto n2s_or_quantity = [&](const Avm& fact) -> std::vector<Rational> {
    if (wanted) return n2s(fact);
    const Avm* d = fact.get_avm("duration");
    const Avm* core = fact.get_avm("composed-of");
    auto have = d ? read_measure(*d) : std::nullopt;
    if (!wanted_quantity || !have || !core) return {};
    const auto& table = UnitTable::standard();
    if (!table.known(wanted_quantity->unit) || !table.known(have->unit)) return {};
    for (const auto& r : kb.rates()) {
      if (r.process_index != core->index()) continue;
      if (table.dimension_of(r.quantity_unit) != table.dimension_of(wanted_quantity->unit) ||
          table.dimension_of(r.time_unit) != table.dimension_of(have->unit))
        continue;
      Rational per_fact_unit =
          r.rate * table.factor_to_base(have->unit) / table.factor_to_base(r.time_unit);
      return {convert(*wanted_quantity, r.quantity_unit).number / per_fact_unit};
    }
    return {};
  };

  std::set<std::string> seen;
  std::deque<std::pair<State, std::size_t>> queue;
  for (const auto& f : kb.facts()) {
    if (seen.insert(normalized_key(f)).second) queue.push_back({State{f, f.index(), {}}, 0});
  }
  while (!queue.empty()) {
    auto [state, depth] = std::move(queue.front());
    queue.pop_front();
    if (subsumes(in_units_of(query, state.avm), state.avm)) {
      return EntailResult{true, state.source, std::move(state.witness), state.avm};
    }
    if (depth >= options.max_depth) continue;
    for (auto& next : successors(state, kb, n2s_or_quantity)) {
      if (seen.insert(normalized_key(next.avm)).second)
        queue.push_back({std::move(next), depth + 1});
    }
  }
  return EntailResult{};
}

std::vector<Avm> derivation_closure(const Kb& kb, const std::vector<Rational>& durations,
                                    std::size_t max_depth) {
  auto n2s = [&](const Avm&) { return durations; };
  std::set<std::string> seen;
  std::vector<State> frontier;
  for (const auto& f : kb.facts()) {
    if (seen.insert(normalized_key(f)).second) frontier.push_back(State{f, f.index(), {}});
  }
  std::vector<Avm> out;
  for (std::size_t depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
    std::vector<State> next;
    for (const auto& s : frontier) {
      for (auto& n : successors(s, kb, n2s)) {
        if (!seen.insert(normalized_key(n.avm)).second) continue;
        out.push_back(n.avm);
        next.push_back(std::move(n));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace eventcalc
