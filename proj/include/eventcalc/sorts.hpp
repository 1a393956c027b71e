// Fixed sort ontology for eventuality descriptions.
//
// The lattice is closed: top covers the six kind sorts, each of the three
// cross-cutting kinds (eventuality, material, path) splits into a delimited
// sort and a continuum sort, and bottom sits below everything.

#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eventcalc {

enum class Sort {
  top,
  eventuality,
  event,
  process,
  material,
  object,
  substance,
  path,
  delimited_path,
  non_delimited_path,
  measure,
  atom_sort,
  number_sort,
  bottom,
};

inline constexpr std::array<Sort, 14> kAllSorts = {
    Sort::top,        Sort::eventuality,    Sort::event,
    Sort::process,    Sort::material,       Sort::object,
    Sort::substance,  Sort::path,           Sort::delimited_path,
    Sort::non_delimited_path, Sort::measure, Sort::atom_sort,
    Sort::number_sort, Sort::bottom,
};

class SortError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lower-case hyphenated name, as written in AVM text.
std::string_view sort_name(Sort s);

/// Throws SortError naming the atom when it is not one of the fourteen sorts.
Sort sort_from_name(std::string_view name);

bool sort_leq(Sort a, Sort b);
Sort sort_meet(Sort a, Sort b);

/// process, substance and non-delimited-path.
bool is_continuum(Sort s);

/// event, object and delimited-path.
bool is_delimited(Sort s);

/// Maps a continuum onto the sort of the entities composed of it.
/// Throws SortError for non-continuum input.
Sort delimited_counterpart(Sort continuum);

}  // namespace eventcalc
