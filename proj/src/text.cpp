#include "eventcalc/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace eventcalc {

namespace {

constexpr std::array<std::string_view, 17> kEmissionOrder = {
    "index",    "sort",     "pred",  "composed-of",       "agent",
    "patient",  "goal",     "path",  "ref-obj",           "card",
    "quantity", "proximal-distance", "duration",          "distance",
    "name",     "number",   "unit",
};

std::size_t rank(std::string_view feature) {
  auto it = std::find(kEmissionOrder.begin(), kEmissionOrder.end(), feature);
  return static_cast<std::size_t>(it - kEmissionOrder.begin());
}

void emit(const Avm& a, bool measure_slot, bool allow_vars, std::string& out);

void emit_value(const Value& v, std::string_view feature, bool allow_vars,
                std::string& out) {
  if (v.is_avm()) {
    emit(v.avm(), is_measure_feature(feature), allow_vars, out);
  } else if (v.is_var()) {
    if (!allow_vars)
      throw std::invalid_argument("pattern variable " + v.var().name +
                                  " in ground AVM");
    out += v.var().name;
  } else {
    out += describe(v);
  }
}

void emit(const Avm& a, bool measure_slot, bool allow_vars, std::string& out) {
  std::vector<std::pair<std::string_view, std::string>> items;
  if (!a.index().empty()) {
    if (is_var_name(a.index()) && !allow_vars)
      throw std::invalid_argument("pattern variable " + a.index() +
                                  " in ground AVM");
    items.emplace_back("index", a.index());
  }
  bool implied = measure_slot ? a.sort() == Sort::measure : a.sort() == Sort::top;
  if (!implied) items.emplace_back("sort", std::string(sort_name(a.sort())));

  std::vector<std::string_view> names;
  for (const auto& [f, v] : a.features()) names.push_back(f);
  std::stable_sort(names.begin(), names.end(),
                   [](std::string_view x, std::string_view y) {
                     return rank(x) < rank(y);
                   });
  for (auto name : names) {
    std::string rendered;
    emit_value(*a.get(name), name, allow_vars, rendered);
    items.emplace_back(name, std::move(rendered));
  }

  out += '[';
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i].first;
    out += ": ";
    out += items[i].second;
  }
  out += ']';
}

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ||
         c == '\'' || c == '/' || c == '.';
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Avm document() {
    skip();
    Avm a = avm(false);
    skip();
    if (pos_ != text_.size()) fail("trailing input after AVM");
    return a;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;

  [[noreturn]] void fail(const std::string& msg) const {
    throw TextError(line_, col_, msg);
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string word() {
    skip();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '?') advance();
    while (pos_ < text_.size() && word_char(text_[pos_])) advance();
    if (pos_ == start) fail("expected a name or number");
    return std::string(text_.substr(start, pos_ - start));
  }

  Value scalar() {
    std::size_t line = line_, col = col_;
    std::string w = word();
    if (is_var_name(w)) {
      if (w.size() == 1) throw TextError(line, col, "empty pattern variable");
      return Var{w};
    }
    if (std::isdigit(static_cast<unsigned char>(w.front()))) {
      auto r = parse_rational(w);
      if (!r) throw TextError(line, col, "malformed number '" + w + "'");
      return *r;
    }
    return Atom{w};
  }

  Avm avm(bool measure_slot) {
    expect('[');
    std::string index;
    std::optional<Sort> sort;
    Avm::Features features;
    bool saw_index = false;
    if (!peek(']')) {
      while (true) {
        std::size_t line = line_, col = col_;
        skip();
        line = line_;
        col = col_;
        std::string feature = word();
        expect(':');
        auto dup = [&] {
          throw TextError(line, col, "duplicate feature '" + feature + "'");
        };
        if (feature == "index") {
          if (saw_index) dup();
          saw_index = true;
          Value v = scalar();
          if (v.is_number())
            throw TextError(line, col, "index must be a variable name");
          index = v.is_var() ? v.var().name : v.atom().name;
        } else if (feature == "sort") {
          if (sort) dup();
          Value v = scalar();
          if (!v.is_atom()) throw TextError(line, col, "sort must be a name");
          try {
            sort = sort_from_name(v.atom().name);
          } catch (const SortError& e) {
            throw TextError(line, col, e.what());
          }
        } else {
          if (features.count(feature)) dup();
          Value v = peek('[') ? Value(avm(is_measure_feature(feature)))
                              : scalar();
          features.emplace(feature, std::move(v));
        }
        if (peek(',')) {
          advance();
          continue;
        }
        break;
      }
    }
    expect(']');
    Sort s = sort ? *sort : (measure_slot ? Sort::measure : Sort::top);
    return Avm(std::move(index), s, std::move(features));
  }
};

}  // namespace

TextError::TextError(std::size_t line, std::size_t column,
                     const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

bool is_measure_feature(std::string_view feature) {
  return feature == "duration" || feature == "quantity" ||
         feature == "distance" || feature == "proximal-distance";
}

std::string canonical_text(const Avm& a) {
  std::string out;
  emit(a, false, false, out);
  return out;
}

std::string pattern_text(const Avm& a) {
  std::string out;
  emit(a, false, true, out);
  return out;
}

Avm parse_text(std::string_view text) { return Reader(text).document(); }

}  // namespace eventcalc
