#include "eventcalc/avm.hpp"

#include <atomic>
#include <functional>
#include <sstream>

namespace eventcalc {

bool is_var_name(std::string_view name) {
  return !name.empty() && name.front() == '?';
}

Value::Value(Avm a) : v_(std::make_shared<const Avm>(std::move(a))) {}

bool operator==(const Value& a, const Value& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (a.is_avm()) return a.avm() == b.avm();
  if (a.is_atom()) return a.atom() == b.atom();
  if (a.is_number()) return a.number() == b.number();
  return a.var() == b.var();
}

std::string dotted(const FeaturePath& path) {
  if (path.empty()) return ".";
  std::string out;
  for (const auto& f : path) {
    if (!out.empty()) out += '.';
    out += f;
  }
  return out;
}

bool Avm::has(std::string_view feature) const {
  return features_.find(std::string(feature)) != features_.end();
}

const Value* Avm::get(std::string_view feature) const {
  auto it = features_.find(std::string(feature));
  return it == features_.end() ? nullptr : &it->second;
}

const Avm* Avm::get_avm(std::string_view feature) const {
  const Value* v = get(feature);
  return v ? v->if_avm() : nullptr;
}

std::optional<std::string> Avm::get_atom(std::string_view feature) const {
  const Value* v = get(feature);
  if (!v || !v->is_atom()) return std::nullopt;
  return v->atom().name;
}

Avm Avm::with(std::string feature, Value value) const {
  Avm out = *this;
  out.features_.insert_or_assign(std::move(feature), std::move(value));
  return out;
}

Avm Avm::without(std::string_view feature) const {
  Avm out = *this;
  out.features_.erase(std::string(feature));
  return out;
}

Avm Avm::with_sort(Sort s) const {
  Avm out = *this;
  out.sort_ = s;
  return out;
}

Avm Avm::with_index(std::string index) const {
  Avm out = *this;
  out.index_ = std::move(index);
  return out;
}

Avm make_measure(const Measure& m) {
  return Avm("", Sort::measure,
             {{"number", Value(m.number)}, {"unit", Value(Atom{m.unit})}});
}

std::optional<Measure> read_measure(const Avm& a) {
  const Value* n = a.get("number");
  auto u = a.get_atom("unit");
  if (!n || !n->is_number() || !u) return std::nullopt;
  return Measure{n->number(), *u};
}

std::optional<Value> get_path(const Avm& a, std::span<const std::string> path) {
  if (path.empty()) return Value(a);
  const Value* v = a.get(path.front());
  if (!v) return std::nullopt;
  if (path.size() == 1) return *v;
  const Avm* next = v->if_avm();
  if (!next) return std::nullopt;
  return get_path(*next, path.subspan(1));
}

std::string describe(const Value& v) {
  if (v.is_atom()) return v.atom().name;
  if (v.is_number()) return rational_to_string(v.number());
  if (v.is_var()) return v.var().name;
  const Avm& a = v.avm();
  std::string out = "[";
  if (!a.index().empty()) out += a.index() + " ";
  out += std::string(sort_name(a.sort()));
  if (auto pred = a.get_atom("pred")) out += " " + *pred;
  return out + "]";
}

// --- unification ----------------------------------------------------------

namespace {

struct ClashFound {
  Clash clash;
};

class Unifier {
 public:
  Avm run(const Avm& a, const Avm& b) {
    FeaturePath path;
    Avm raw = node(a, b, path);
    return finish(raw);
  }

 private:
  std::map<std::string, std::string> parent_;
  std::map<std::string, Value> bindings_;

  std::string find(const std::string& x) {
    auto it = parent_.find(x);
    if (it == parent_.end() || it->second == x) return x;
    std::string root = find(it->second);
    parent_[x] = root;
    return root;
  }

  void alias(const std::string& x, const std::string& y) {
    if (x.empty() || y.empty()) return;
    std::string rx = find(x), ry = find(y);
    if (rx == ry) return;
    // Least name represents the class, so the result is order independent.
    // Ground names outrank pattern variables.
    if (std::pair(is_var_name(ry), ry) < std::pair(is_var_name(rx), rx)) std::swap(rx, ry);
    parent_[rx] = rx;
    parent_[ry] = rx;
  }

  [[noreturn]] static void clash(const FeaturePath& path, std::string l,
                                 std::string r) {
    throw ClashFound{Clash{path, std::move(l), std::move(r)}};
  }

  Avm node(const Avm& a, const Avm& b, FeaturePath& path) {
    Sort s = sort_meet(a.sort(), b.sort());
    if (s == Sort::bottom) {
      clash(path, std::string(sort_name(a.sort())),
            std::string(sort_name(b.sort())));
    }
    alias(a.index(), b.index());
    std::string index = a.index().empty() ? b.index() : a.index();

    Avm::Features merged;
    auto ia = a.features().begin(), ea = a.features().end();
    auto ib = b.features().begin(), eb = b.features().end();
    while (ia != ea || ib != eb) {
      if (ib == eb || (ia != ea && ia->first < ib->first)) {
        merged.emplace(ia->first, ia->second);
        ++ia;
      } else if (ia == ea || ib->first < ia->first) {
        merged.emplace(ib->first, ib->second);
        ++ib;
      } else {
        path.push_back(ia->first);
        merged.emplace(ia->first, value(ia->second, ib->second, path));
        path.pop_back();
        ++ia;
        ++ib;
      }
    }
    return Avm(index, s, std::move(merged));
  }

  Value value(const Value& x, const Value& y, FeaturePath& path) {
    if (x.is_var()) return bind(x.var(), y, path);
    if (y.is_var()) return bind(y.var(), x, path);
    if (x.is_avm() && y.is_avm()) return Value(node(x.avm(), y.avm(), path));
    if (x == y && !x.is_avm()) return x;
    clash(path, describe(x), describe(y));
  }

  Value bind(const Var& v, const Value& other, FeaturePath& path) {
    auto it = bindings_.find(v.name);
    if (it == bindings_.end()) {
      bindings_.emplace(v.name, other);
      return other;
    }
    if (other.is_var() && other.var() == v) return it->second;
    Value merged = value(it->second, other, path);
    bindings_.insert_or_assign(v.name, merged);
    return merged;
  }

  Value resolve(const Value& v, int depth = 0) {
    if (v.is_var()) {
      auto it = bindings_.find(v.var().name);
      if (it == bindings_.end() || depth > 64) return v;
      return resolve(it->second, depth + 1);
    }
    if (v.is_avm()) return Value(finish(v.avm()));
    return v;
  }

  Avm finish(const Avm& a) {
    std::string index = a.index().empty() ? "" : find(a.index());
    Avm::Features out;
    for (const auto& [f, v] : a.features()) out.emplace(f, resolve(v));
    return Avm(index, a.sort(), std::move(out));
  }
};

}  // namespace

UnifyResult unify(const Avm& a, const Avm& b) {
  try {
    return Unifier{}.run(a, b);
  } catch (const ClashFound& c) {
    return c.clash;
  }
}

// --- subsumption ----------------------------------------------------------

namespace {

class Matcher {
 public:
  // `bijective` additionally demands that distinct general names map to
  // distinct specific names, and that both structures have the same shape.
  explicit Matcher(bool exact) : exact_(exact) {}

  bool node(const Avm& g, const Avm& s) {
    if (exact_ ? g.sort() != s.sort() : !sort_leq(s.sort(), g.sort()))
      return false;
    if (!name(g.index(), s.index())) return false;
    if (exact_ && g.features().size() != s.features().size()) return false;
    for (const auto& [f, gv] : g.features()) {
      const Value* sv = s.get(f);
      if (!sv || !value(gv, *sv)) return false;
    }
    return true;
  }

 private:
  bool exact_;
  std::map<std::string, std::string> forward_;
  std::map<std::string, std::string> backward_;

  bool name(const std::string& g, const std::string& s) {
    if (g.empty()) return !exact_ || s.empty();
    if (exact_ && s.empty()) return false;
    auto [it, inserted] = forward_.emplace(g, s);
    if (!inserted && it->second != s) return false;
    if (exact_) {
      auto [jt, ins2] = backward_.emplace(s, g);
      if (!ins2 && jt->second != g) return false;
    }
    return true;
  }

  bool value(const Value& g, const Value& s) {
    if (g.is_var()) {
      if (exact_) return s.is_var() && name(g.var().name, s.var().name);
      auto it = bound_.find(g.var().name);
      if (it == bound_.end()) {
        bound_.emplace(g.var().name, s);
        return true;
      }
      return it->second == s;
    }
    if (g.is_avm()) return s.is_avm() && node(g.avm(), s.avm());
    return g == s;
  }

  std::map<std::string, Value> bound_;
};

}  // namespace

bool subsumes(const Avm& general, const Avm& specific) {
  return Matcher(false).node(general, specific);
}

bool alpha_equal(const Avm& a, const Avm& b) {
  return Matcher(true).node(a, b);
}

// --- renaming -------------------------------------------------------------

std::string fresh_name(std::string_view base) {
  static std::atomic<std::uint64_t> counter{0};
  std::string stem(base.substr(0, base.find('\'')));
  if (stem.empty()) stem = "v";
  return stem + "'" + std::to_string(counter.fetch_add(1) + 1);
}

namespace {

void collect(const Avm& a, std::vector<std::string>& out,
             std::set<std::string>& seen, bool with_vars) {
  auto note = [&](const std::string& n) {
    if (!n.empty() && seen.insert(n).second) out.push_back(n);
  };
  note(a.index());
  for (const auto& [f, v] : a.features()) {
    if (v.is_avm()) collect(v.avm(), out, seen, with_vars);
    else if (with_vars && v.is_var()) note(v.var().name);
  }
}

}  // namespace

Avm rename(const Avm& a, const std::map<std::string, std::string>& mapping) {
  auto map_name = [&](const std::string& n) {
    auto it = mapping.find(n);
    return it == mapping.end() ? n : it->second;
  };
  Avm::Features out;
  for (const auto& [f, v] : a.features()) {
    if (v.is_avm()) out.emplace(f, Value(rename(v.avm(), mapping)));
    else if (v.is_var()) out.emplace(f, Value(Var{map_name(v.var().name)}));
    else out.emplace(f, v);
  }
  return Avm(map_name(a.index()), a.sort(), std::move(out));
}

Avm rename_fresh(const Avm& a) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  collect(a, names, seen, true);
  std::map<std::string, std::string> mapping;
  for (const auto& n : names) mapping.emplace(n, fresh_name(n));
  return rename(a, mapping);
}

bool is_ground(const Avm& a) {
  if (is_var_name(a.index())) return false;
  for (const auto& [f, v] : a.features()) {
    if (v.is_var()) return false;
    if (v.is_avm() && !is_ground(v.avm())) return false;
  }
  return true;
}

std::vector<std::string> indices_of(const Avm& a) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect(a, out, seen, false);
  return out;
}

std::vector<FeaturePath> node_paths(const Avm& a) {
  std::vector<FeaturePath> out;
  FeaturePath path;
  std::function<void(const Avm&)> walk = [&](const Avm& n) {
    out.push_back(path);
    for (const auto& [f, v] : n.features()) {
      if (!v.is_avm()) continue;
      path.push_back(f);
      walk(v.avm());
      path.pop_back();
    }
  };
  walk(a);
  return out;
}

}  // namespace eventcalc
