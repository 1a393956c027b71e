#include "eventcalc/checker.hpp"

#include <algorithm>
#include <stdexcept>

namespace eventcalc {

std::string_view constraint_code(Constraint c) {
  switch (c) {
    case Constraint::composed_of_needs_continuum: return "C1";
    case Constraint::process_incremental_continuum: return "C2";
    case Constraint::event_incremental_delimited: return "C3";
    case Constraint::constant_roles_delimited: return "C4";
    case Constraint::path_pred_restriction: return "C5";
    case Constraint::distance_needs_delimited_or_measure: return "C6";
    case Constraint::fill_verbs_event_only: return "C7";
    case Constraint::unknown_pred: return "C0";
  }
  return "?";
}

std::string_view constraint_name(Constraint c) {
  switch (c) {
    case Constraint::composed_of_needs_continuum: return "composed-of-needs-continuum";
    case Constraint::process_incremental_continuum: return "process-incremental-continuum";
    case Constraint::event_incremental_delimited: return "event-incremental-delimited";
    case Constraint::constant_roles_delimited: return "constant-roles-delimited";
    case Constraint::path_pred_restriction: return "path-pred-restriction";
    case Constraint::distance_needs_delimited_or_measure:
      return "distance-needs-delimited-or-measure";
    case Constraint::fill_verbs_event_only: return "fill-verbs-event-only";
    case Constraint::unknown_pred: return "unknown-pred";
  }
  return "?";
}

std::string Diagnostic::to_string() const {
  return std::string(constraint_name(constraint)) + " at " + dotted(path) + ": " +
         message;
}

namespace {

std::string sn(Sort s) { return std::string(sort_name(s)); }

Sort sort_of(const Value& v) {
  if (const Avm* a = v.if_avm()) return a->sort();
  if (v.is_number()) return Sort::number_sort;
  return Sort::atom_sort;
}

// Continuum a delimited sort is composed of; used only for messages.
Sort continuum_for(Sort delimited) {
  switch (delimited) {
    case Sort::event: return Sort::process;
    case Sort::object: return Sort::substance;
    case Sort::delimited_path: return Sort::non_delimited_path;
    default: return Sort::top;
  }
}

class Checker {
 public:
  Checker(const Lexicon& lex) : lex_(lex) {}

  std::vector<Diagnostic> run(const Avm& a) {
    FeaturePath path;
    node(a, path, false);
    std::sort(out_.begin(), out_.end(), [](const Diagnostic& x, const Diagnostic& y) {
      if (x.path != y.path) return x.path < y.path;
      return constraint_code(x.constraint) < constraint_code(y.constraint);
    });
    return std::move(out_);
  }

 private:
  const Lexicon& lex_;
  std::vector<Diagnostic> out_;

  void report(Constraint c, const FeaturePath& at, std::string msg, Sort found,
              Sort required) {
    out_.push_back(Diagnostic{
        c, at, "[" + std::string(constraint_code(c)) + "] " + std::move(msg),
        {found, required}});
  }

  static FeaturePath child(const FeaturePath& p, std::string_view f) {
    FeaturePath q = p;
    q.emplace_back(f);
    return q;
  }

  void node(const Avm& n, FeaturePath& path, bool composed_filler) {
    const LexicalEntry* entry = nullptr;
    if (auto pred = n.get_atom("pred")) {
      entry = lex_.entry(*pred);
      if (!entry) {
        report(Constraint::unknown_pred, child(path, "pred"),
               "pred '" + *pred + "' is not in the lexicon", Sort::atom_sort,
               Sort::top);
      }
    }

    composed_of(n, path);
    if (entry) incremental(n, *entry, path, composed_filler);
    constant_roles(n, path);
    path_restriction(n, path);
    distance(n, path);

    for (const auto& [f, v] : n.features()) {
      if (const Avm* sub = v.if_avm()) {
        path.push_back(f);
        node(*sub, path, f == "composed-of");
        path.pop_back();
      }
    }
  }

  void composed_of(const Avm& n, const FeaturePath& path) {
    const Avm* filler = n.get_avm("composed-of");
    if (!filler) return;
    FeaturePath at = child(path, "composed-of");
    if (!is_continuum(filler->sort())) {
      Sort wanted = continuum_for(n.sort());
      report(Constraint::composed_of_needs_continuum, at,
             "composed-of filler of sort " + sn(filler->sort()) +
                 " is not a continuum" +
                 (wanted != Sort::top ? " (needs " + sn(wanted) + ")" : ""),
             filler->sort(), wanted);
      return;
    }
    Sort host = delimited_counterpart(filler->sort());
    if (!sort_leq(n.sort(), host)) {
      report(Constraint::composed_of_needs_continuum, at,
             "host of sort " + sn(n.sort()) + " cannot be composed of a " +
                 sn(filler->sort()) + " (needs " + sn(host) + ")",
             n.sort(), host);
    }
  }

  void incremental(const Avm& n, const LexicalEntry& e, const FeaturePath& path,
                   bool composed_filler) {
    if (e.category == Category::fill_verb) {
      fill(n, path, composed_filler);
      return;
    }
    if (!e.incremental_role) return;
    const Value* v = n.get(*e.incremental_role);
    if (!v) return;
    FeaturePath at = child(path, *e.incremental_role);
    Sort found = sort_of(*v);
    if (n.sort() == Sort::process && !is_continuum(found)) {
      Sort wanted = e.category == Category::motion_verb ? Sort::non_delimited_path
                                                        : Sort::substance;
      report(Constraint::process_incremental_continuum, at,
             "process " + e.pred + " needs a continuum " + *e.incremental_role +
                 ", found " + sn(found),
             found, wanted);
    } else if (n.sort() == Sort::event && v->is_avm() && !is_delimited(found)) {
      Sort wanted = e.category == Category::motion_verb ? Sort::delimited_path
                                                        : Sort::object;
      report(Constraint::event_incremental_delimited, at,
             "event " + e.pred + " needs a delimited " + *e.incremental_role +
                 ", found " + sn(found),
             found, wanted);
    }
  }

  void fill(const Avm& n, const FeaturePath& path, bool composed_filler) {
    const Avm* patient = n.get_avm("patient");
    if (!patient) return;
    FeaturePath at = child(path, "patient");
    if (n.sort() == Sort::process && is_delimited(patient->sort())) {
      report(Constraint::fill_verbs_event_only, at,
             "fill sets a terminal point; a process cannot fill a delimited " +
                 sn(patient->sort()),
             patient->sort(), Sort::substance);
    } else if (is_continuum(patient->sort()) && !composed_filler) {
      report(Constraint::fill_verbs_event_only, at,
             "fill over a " + sn(patient->sort()) +
                 " is only available under a for-measure",
             patient->sort(), Sort::object);
    }
  }

  void constant_roles(const Avm& n, const FeaturePath& path) {
    for (std::string_view role : {"agent", "goal", "ref-obj"}) {
      const Avm* v = n.get_avm(role);
      if (!v || !is_continuum(v->sort())) continue;
      report(Constraint::constant_roles_delimited, child(path, role),
             std::string(role) + " must stay constant but is a " + sn(v->sort()),
             v->sort(), delimited_counterpart(v->sort()));
    }
  }

  void path_restriction(const Avm& n, const FeaturePath& path) {
    const Avm* p = n.get_avm("path");
    if (!p) return;
    FeaturePath at = child(path, "path");
    auto pred = p->get_atom("pred");
    if (!pred) {
      if (!sort_leq(p->sort(), Sort::path))
        report(Constraint::path_pred_restriction, at,
               "path filler of sort " + sn(p->sort()) + " is not a path",
               p->sort(), Sort::path);
      return;
    }
    const LexicalEntry* e = lex_.entry(*pred);
    if (!e) return;  // reported as unknown-pred
    if (e->category != Category::path_pred) {
      report(Constraint::path_pred_restriction, at,
             "'" + *pred + "' is not a path predicate", p->sort(), Sort::path);
      return;
    }
    Sort allowed = e->path_sort_restriction.value_or(Sort::path);
    if (*pred == "to" && p->sort() == Sort::non_delimited_path) {
      report(Constraint::path_pred_restriction, at,
             "to specifies an endpoint, which no non-delimited path has",
             p->sort(), Sort::delimited_path);
    } else if (!sort_leq(p->sort(), allowed)) {
      report(Constraint::path_pred_restriction, at,
             *pred + " needs a path of sort " + sn(allowed) + ", found " +
                 sn(p->sort()),
             p->sort(), allowed);
    }
  }

  void distance(const Avm& n, const FeaturePath& path) {
    if (!n.has("distance")) return;
    FeaturePath at = child(path, "distance");
    if (n.sort() == Sort::process) {
      report(Constraint::distance_needs_delimited_or_measure, at,
             "distance cannot be predicated of a process", n.sort(), Sort::event);
      return;
    }
    if (const Avm* core = n.get_avm("composed-of")) {
      const Avm* p = core->get_avm("path");
      if (p && is_delimited(p->sort())) {
        report(Constraint::distance_needs_delimited_or_measure, at,
               "a for-distance measures a path continuum, but the path is "
               "delimited",
               p->sort(), Sort::non_delimited_path);
      }
      return;
    }
    if (n.sort() != Sort::event || !n.has("pred")) {
      report(Constraint::distance_needs_delimited_or_measure, at,
             "distance needs a directly predicated event or a for-measure",
             n.sort(), Sort::event);
      return;
    }
    const Avm* p = n.get_avm("path");
    if (p && !is_delimited(p->sort())) {
      report(Constraint::distance_needs_delimited_or_measure, at,
             "distance cannot be predicated of a " + sn(p->sort()), p->sort(),
             Sort::delimited_path);
    }
  }
};

Avm resort_path(const Avm& core, const Lexicon& lex, Sort wanted) {
  const Avm* p = core.get_avm("path");
  if (!p) return core;
  auto pred = p->get_atom("pred");
  const LexicalEntry* e = pred ? lex.entry(*pred) : nullptr;
  if (!e || !e->path_sort_restriction ||
      !sort_leq(wanted, *e->path_sort_restriction))
    return core;
  return core.with("path", Value(p->with_sort(wanted)));
}

}  // namespace

std::vector<Diagnostic> check(const Avm& a, const Lexicon& lexicon) {
  return Checker(lexicon).run(a);
}

AdverbialCompatibility adverbial_compatibility(const Avm& a, const Lexicon& lexicon) {
  if (!sort_leq(a.sort(), Sort::eventuality) || a.sort() == Sort::bottom)
    throw std::invalid_argument("adverbial compatibility needs an eventuality, got " +
                                std::string(sort_name(a.sort())));
  const Avm* inner = a.get_avm("composed-of");
  Avm core = (inner ? *inner : a).without("duration").without("distance");

  Avm as_process = resort_path(core.with_sort(Sort::process), lexicon,
                               Sort::non_delimited_path);
  Avm as_event =
      resort_path(core.with_sort(Sort::event), lexicon, Sort::delimited_path);

  auto measured = [](const Avm& c, const char* feature, Measure m) {
    return Avm("", Sort::event, {{"composed-of", Value(c)}, {feature, Value(make_measure(m))}});
  };

  AdverbialCompatibility out;
  out.for_temporal =
      check(measured(as_process, "duration", {1, "seconds"}), lexicon).empty();
  out.in_temporal =
      check(as_event.with("duration", Value(make_measure({1, "seconds"}))), lexicon)
          .empty();
  auto pred = core.get_atom("pred");
  const LexicalEntry* e = pred ? lexicon.entry(*pred) : nullptr;
  if (e && e->category == Category::motion_verb) {
    out.for_distance =
        check(measured(as_process, "distance", {1, "miles"}), lexicon).empty();
  }
  return out;
}

}  // namespace eventcalc
