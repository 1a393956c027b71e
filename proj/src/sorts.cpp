#include "eventcalc/sorts.hpp"

#include <optional>

namespace eventcalc {

namespace {

// Immediate parent in the tree part of the lattice; bottom is handled apart.
std::optional<Sort> parent(Sort s) {
  switch (s) {
    case Sort::top:
    case Sort::bottom:
      return std::nullopt;
    case Sort::event:
    case Sort::process:
      return Sort::eventuality;
    case Sort::object:
    case Sort::substance:
      return Sort::material;
    case Sort::delimited_path:
    case Sort::non_delimited_path:
      return Sort::path;
    default:
      return Sort::top;
  }
}

}  // namespace

std::string_view sort_name(Sort s) {
  switch (s) {
    case Sort::top: return "top";
    case Sort::eventuality: return "eventuality";
    case Sort::event: return "event";
    case Sort::process: return "process";
    case Sort::material: return "material";
    case Sort::object: return "object";
    case Sort::substance: return "substance";
    case Sort::path: return "path";
    case Sort::delimited_path: return "delimited-path";
    case Sort::non_delimited_path: return "non-delimited-path";
    case Sort::measure: return "measure";
    case Sort::atom_sort: return "atom-sort";
    case Sort::number_sort: return "number-sort";
    case Sort::bottom: return "bottom";
  }
  return "?";
}

Sort sort_from_name(std::string_view name) {
  for (Sort s : kAllSorts) {
    if (sort_name(s) == name) return s;
  }
  throw SortError("unknown sort '" + std::string(name) + "'");
}

bool sort_leq(Sort a, Sort b) {
  if (a == Sort::bottom || b == Sort::top) return true;
  if (b == Sort::bottom) return a == Sort::bottom;
  for (std::optional<Sort> s = a; s; s = parent(*s)) {
    if (*s == b) return true;
  }
  return false;
}

Sort sort_meet(Sort a, Sort b) {
  // Tree-shaped apart from bottom, so incomparable sorts only meet at bottom.
  if (sort_leq(a, b)) return a;
  if (sort_leq(b, a)) return b;
  return Sort::bottom;
}

bool is_continuum(Sort s) {
  return s == Sort::process || s == Sort::substance ||
         s == Sort::non_delimited_path;
}

bool is_delimited(Sort s) {
  return s == Sort::event || s == Sort::object || s == Sort::delimited_path;
}

Sort delimited_counterpart(Sort continuum) {
  switch (continuum) {
    case Sort::process: return Sort::event;
    case Sort::substance: return Sort::object;
    case Sort::non_delimited_path: return Sort::delimited_path;
    default:
      throw SortError("sort '" + std::string(sort_name(continuum)) +
                      "' is not a continuum");
  }
}

}  // namespace eventcalc
