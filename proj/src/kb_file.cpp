#include "eventcalc/kb_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "eventcalc/text.hpp"

namespace eventcalc {

Kb parse_kb(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0;
  auto fail = [&](const std::string& msg) -> KbFileError {
    return KbFileError("line " + std::to_string(n) + ": " + msg);
  };
  if (!std::getline(in, line) || line != kKbHeader) {
    n = 1;
    throw fail("expected header '" + std::string(kKbHeader) + "'");
  }
  n = 1;
  Kb kb;
  std::vector<std::pair<std::size_t, RateFact>> rates;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    if (line.rfind("fact ", 0) == 0) {
      try {
        Avm a = parse_text(std::string_view(line).substr(5));
        kb = kb.with_fact(std::move(a));
      } catch (const TextError& e) {
        throw fail(e.what());
      } catch (const KbError& e) {
        throw fail(e.what());
      }
    } else if (line.rfind("rate ", 0) == 0) {
      std::istringstream fields(line.substr(5));
      std::string index, number, qty, per, time, extra;
      fields >> index >> number >> qty >> per >> time;
      if (time.empty() || per != "per" || (fields >> extra))
        throw fail("expected 'rate <index> <number> <unit> per <unit>'");
      auto r = parse_rational(number);
      if (!r) throw fail("malformed rate '" + number + "'");
      rates.emplace_back(n, RateFact{index, qty, time, *r});
    } else {
      throw fail("expected a fact or rate line");
    }
  }
  for (auto& [at, rate] : rates) {
    n = at;
    if (!kb.defines(rate.process_index))
      throw fail("rate refers to undefined index '" + rate.process_index + "'");
    try {
      kb = kb.with_rate(std::move(rate));
    } catch (const KbError& e) {
      throw fail(e.what());
    }
  }
  return kb;
}

std::string kb_text(const Kb& kb) {
  std::string out(kKbHeader);
  out += '\n';
  for (const auto& f : kb.facts()) out += "fact " + canonical_text(f) + "\n";
  for (const auto& r : kb.rates()) {
    out += "rate " + r.process_index + " " + rational_to_string(r.rate) + " " +
           r.quantity_unit + " per " + r.time_unit + "\n";
  }
  return out;
}

Kb load_kb(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw KbFileError("cannot open knowledge base '" + file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kb(buf.str());
}

void save_kb(const std::string& file, const Kb& kb) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw KbFileError("cannot write knowledge base '" + file + "'");
  out << kb_text(kb);
  if (!out) throw KbFileError("failed writing knowledge base '" + file + "'");
}

namespace {

char prefix_for(Sort s) {
  if (sort_leq(s, Sort::eventuality) && s != Sort::bottom) return 'e';
  if (sort_leq(s, Sort::path) && s != Sort::bottom) return 'p';
  return 'x';
}

void plan(const Avm& a, std::map<std::string, char>& kinds, std::vector<std::string>& order) {
  if (!a.index().empty() && kinds.emplace(a.index(), prefix_for(a.sort())).second)
    order.push_back(a.index());
  for (const auto& [f, v] : a.features()) {
    if (const Avm* sub = v.if_avm()) plan(*sub, kinds, order);
  }
}

}  // namespace

Avm assign_indices(const Avm& fact, const Kb& kb) {
  std::set<std::string> used;
  for (const auto& f : kb.facts()) {
    for (auto& n : indices_of(f)) used.insert(n);
  }
  std::map<std::string, char> kinds;
  std::vector<std::string> order;
  plan(fact, kinds, order);

  std::map<char, int> next{{'e', 1}, {'p', 1}, {'x', 1}};
  std::map<std::string, std::string> mapping;
  for (const auto& old : order) {
    char k = kinds.at(old);
    std::string name;
    do {
      name = std::string(1, k) + std::to_string(next[k]++);
    } while (used.count(name));
    used.insert(name);
    mapping.emplace(old, name);
  }
  return rename(fact, mapping);
}

std::string rate_target(const Kb& kb, const std::string& index) {
  if (const Avm* f = kb.fact(index)) {
    if (const Avm* core = f->get_avm("composed-of"); core && !core->index().empty())
      return core->index();
  }
  if (!kb.defines(index)) throw KbFileError("no fact defines index '" + index + "'");
  return index;
}

}  // namespace eventcalc
