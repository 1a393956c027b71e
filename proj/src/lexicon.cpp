#include "eventcalc/lexicon.hpp"

#include <fstream>
#include <sstream>

namespace eventcalc {

namespace detail {
std::string_view default_lexicon_text();
}

namespace {

std::optional<TokenClass> class_from_name(std::string_view s) {
  if (s == "name") return TokenClass::name;
  if (s == "verb-past") return TokenClass::verb_past;
  if (s == "noun") return TokenClass::noun;
  if (s == "card-numeral") return TokenClass::card_numeral;
  if (s == "number") return TokenClass::number;
  if (s == "unit") return TokenClass::unit;
  if (s == "prep") return TokenClass::prep;
  if (s == "det") return TokenClass::det;
  if (s == "misc") return TokenClass::misc;
  return std::nullopt;
}

}  // namespace

std::string_view token_class_name(TokenClass c) {
  switch (c) {
    case TokenClass::name: return "name";
    case TokenClass::verb_past: return "verb-past";
    case TokenClass::noun: return "noun";
    case TokenClass::card_numeral: return "card-numeral";
    case TokenClass::number: return "number";
    case TokenClass::unit: return "unit";
    case TokenClass::prep: return "prep";
    case TokenClass::det: return "det";
    case TokenClass::misc: return "misc";
  }
  return "?";
}

std::string_view category_name(Category c) {
  switch (c) {
    case Category::transfer_verb: return "transfer-verb";
    case Category::fill_verb: return "fill-verb";
    case Category::motion_verb: return "motion-verb";
    case Category::nominal: return "nominal";
    case Category::path_pred: return "path-pred";
  }
  return "?";
}

const Lexicon& Lexicon::standard() {
  static const Lexicon lex = parse(detail::default_lexicon_text());
  return lex;
}

Lexicon Lexicon::load(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw LexiconError("cannot open lexicon '" + file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Lexicon Lexicon::parse(std::string_view text) {
  Lexicon lex;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> parts;
    for (std::string f; fields >> f;) parts.push_back(f);
    if (parts.empty()) continue;
    if (parts.size() < 3 || parts.size() > 4) {
      throw LexiconError("lexicon line " + std::to_string(n) +
                         ": expected '<surface> <class> <pred> [<extra>]'");
    }
    auto cls = class_from_name(parts[1]);
    if (!cls) {
      throw LexiconError("lexicon line " + std::to_string(n) +
                         ": unknown class '" + parts[1] + "'");
    }
    lex.add(Token{parts[0], *cls, parts[2], parts.size() == 4 ? parts[3] : ""}, n);
  }
  return lex;
}

void Lexicon::add(Token t, std::size_t line) {
  auto fail = [&](const std::string& msg) {
    throw LexiconError("lexicon line " + std::to_string(line) + ": " + msg);
  };
  if (tokens_.count(t.surface)) fail("duplicate surface '" + t.surface + "'");

  std::optional<LexicalEntry> e;
  if (t.cls == TokenClass::verb_past) {
    if (t.extra == "transfer-verb") {
      e = LexicalEntry{t.pred, Category::transfer_verb, "patient", {"agent", "goal"}, {}};
    } else if (t.extra == "fill-verb") {
      e = LexicalEntry{t.pred, Category::fill_verb, std::nullopt, {"agent"}, {}};
    } else if (t.extra == "motion-verb") {
      e = LexicalEntry{t.pred, Category::motion_verb, "path", {"agent"}, {}};
    } else {
      fail("verb '" + t.surface + "' needs a category");
    }
  } else if (t.cls == TokenClass::noun) {
    if (t.extra != "mass" && t.extra != "count" && t.extra != "plural")
      fail("noun '" + t.surface + "' must be mass, count or plural");
    e = LexicalEntry{t.pred, Category::nominal, std::nullopt, {}, {}};
  } else if (t.cls == TokenClass::prep &&
             (t.extra == "delimited-path" || t.extra == "path" ||
              t.extra == "non-delimited-path")) {
    e = LexicalEntry{t.pred, Category::path_pred, std::nullopt, {"ref-obj"},
                     sort_from_name(t.extra)};
  }

  if (e) {
    auto [it, inserted] = entries_.emplace(e->pred, *e);
    if (!inserted && it->second.category != e->category)
      fail("pred '" + e->pred + "' has conflicting categories");
  }
  order_.push_back(t.surface);
  tokens_.emplace(t.surface, std::move(t));
}

const Token* Lexicon::token(std::string_view surface) const {
  auto it = tokens_.find(std::string(surface));
  return it == tokens_.end() ? nullptr : &it->second;
}

const LexicalEntry* Lexicon::entry(std::string_view pred) const {
  auto it = entries_.find(std::string(pred));
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<std::string> Lexicon::surface(
    std::string_view pred, TokenClass cls,
    std::optional<std::string_view> extra) const {
  for (const auto& s : order_) {
    const Token& t = tokens_.at(s);
    if (t.cls == cls && t.pred == pred && (!extra || t.extra == *extra))
      return t.surface;
  }
  return std::nullopt;
}

}  // namespace eventcalc
