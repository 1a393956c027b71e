#include "eventcalc/grammar.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>

namespace eventcalc {

ParseError::ParseError(std::size_t token, const std::string& message)
    : std::runtime_error("token " + std::to_string(token + 1) + ": " + message),
      token_(token) {}

RealizeError::RealizeError(std::vector<FeaturePath> paths, const std::string& message)
    : std::runtime_error(message), paths_(std::move(paths)) {}

// --- numbers ---------------------------------------------------------------

namespace {

constexpr std::array<std::string_view, 20> kOnes = {
    "zero",    "one",     "two",       "three",    "four",
    "five",    "six",     "seven",     "eight",    "nine",
    "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};

constexpr std::array<std::string_view, 10> kTens = {
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"};

std::optional<std::int64_t> below_hundred(std::string_view w) {
  for (std::size_t i = 0; i < kOnes.size(); ++i) {
    if (kOnes[i] == w) return static_cast<std::int64_t>(i);
  }
  std::string_view head = w.substr(0, w.find('-'));
  for (std::size_t t = 2; t < kTens.size(); ++t) {
    if (kTens[t] != head) continue;
    if (head.size() == w.size()) return static_cast<std::int64_t>(t * 10);
    std::string_view tail = w.substr(head.size() + 1);
    for (std::size_t i = 1; i < 10; ++i) {
      if (kOnes[i] == tail) return static_cast<std::int64_t>(t * 10 + i);
    }
  }
  return std::nullopt;
}

std::string words_below_thousand(std::int64_t n) {
  std::string out;
  if (n >= 100) {
    out = std::string(kOnes[n / 100]) + " hundred";
    n %= 100;
    if (n == 0) return out;
    out += ' ';
  }
  if (n < 20) return out + std::string(kOnes[n]);
  out += kTens[n / 10];
  if (n % 10) out += "-" + std::string(kOnes[n % 10]);
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string capitalized(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

}  // namespace

std::string number_words(const Rational& n) {
  if (n.denominator() != 1 || n < 0) return rational_to_string(n);
  std::int64_t v = n.numerator();
  if (v >= 1000000) return std::to_string(v);
  if (v < 1000) return words_below_thousand(v);
  std::string out = words_below_thousand(v / 1000) + " thousand";
  if (v % 1000) out += " " + words_below_thousand(v % 1000);
  return out;
}

// --- parsing ---------------------------------------------------------------

namespace {

std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == ',') {
      flush();
      out.emplace_back(",");
    } else {
      cur += c;
    }
  }
  flush();
  if (!out.empty() && out.back().size() > 1 && out.back().back() == '.' &&
      !std::isdigit(static_cast<unsigned char>(out.back()[out.back().size() - 2])))
    out.back().pop_back();
  return out;
}

enum class Adverbial { none, for_time, for_distance, in_time };

struct Nominal {
  Avm avm;
  bool something = false;
};

struct PathPhrase {
  std::string pred;
  Sort restriction;
  Avm ref;
  std::optional<Avm> proximal;
};

class SentenceParser {
 public:
  SentenceParser(std::string_view text, const Lexicon& lex)
      : toks_(tokenize(text)), lex_(lex) {}

  Avm run() {
    if (toks_.empty()) fail("empty sentence");
    const Token* subject = expect_class(TokenClass::name, "a name");
    const Token* verb = expect_class(TokenClass::verb_past, "a past-tense verb");
    const LexicalEntry* entry = lex_.entry(verb->pred);
    if (!entry) fail("verb '" + verb->surface + "' has no lexical entry");

    std::optional<Measure> bare_distance;
    std::optional<Nominal> patient, goal;
    std::optional<PathPhrase> path;

    if (entry->category == Category::motion_verb) {
      if (at_number()) {
        std::size_t at = pos_;
        bare_distance = measure();
        if (UnitTable::standard().dimension_of(bare_distance->unit) != Dimension::distance)
          fail_at(at, "a bare measure after a motion verb must be a distance");
      }
      if (const Token* t = peek_token(); t && t->cls == TokenClass::prep) {
        const LexicalEntry* pe = lex_.entry(t->pred);
        if (pe && pe->category == Category::path_pred) path = path_phrase();
      }
    } else {
      if (!at_end() && !at_adverbial() && !at_word("into")) patient = noun_phrase();
      if (at_word("into")) {
        ++pos_;
        goal = noun_phrase();
      }
    }

    Adverbial adverbial = Adverbial::none;
    std::optional<Measure> adverbial_measure;
    if (at_adverbial()) {
      bool is_for = lower(toks_[pos_]) == "for";
      ++pos_;
      std::size_t at = pos_;
      adverbial_measure = measure();
      Dimension d = UnitTable::standard().dimension_of(adverbial_measure->unit);
      if (d == Dimension::time) {
        adverbial = is_for ? Adverbial::for_time : Adverbial::in_time;
      } else if (d == Dimension::distance && is_for) {
        adverbial = Adverbial::for_distance;
      } else {
        fail_at(at, std::string(is_for ? "for" : "in") + "-adverbials cannot measure " +
                        std::string(dimension_name(d)));
      }
    }
    if (!at_end()) fail("unexpected '" + toks_[pos_] + "'");

    // Sort of the pred-bearing core.
    bool event_restricted =
        bare_distance || (path && path->restriction == Sort::delimited_path);
    Sort core_sort;
    switch (adverbial) {
      case Adverbial::for_time:
      case Adverbial::for_distance:
        core_sort = event_restricted ? Sort::event : Sort::process;
        break;
      case Adverbial::in_time:
        core_sort = Sort::event;
        break;
      case Adverbial::none:
        if (entry->category == Category::motion_verb) {
          core_sort = event_restricted ? Sort::event : Sort::process;
        } else if (entry->category == Category::transfer_verb) {
          bool continuum = !patient || (!patient->something &&
                                        is_continuum(patient->avm.sort()));
          core_sort = continuum ? Sort::process : Sort::event;
        } else {
          core_sort = Sort::event;
        }
        break;
    }

    bool wrapped = adverbial == Adverbial::for_time || adverbial == Adverbial::for_distance;
    Avm::Features core{{"pred", Value(Atom{entry->pred})},
                       {"agent", Value(Atom{subject->pred})}};
    if (patient) {
      Avm p = patient->avm;
      if (patient->something)
        p = p.with_sort(core_sort == Sort::process ? Sort::substance : Sort::object);
      core.emplace("patient", Value(std::move(p)));
    }
    if (goal) {
      Avm g = goal->avm;
      if (goal->something) g = g.with_sort(Sort::object);
      core.emplace("goal", Value(std::move(g)));
    }
    if (path) {
      Sort ps = path->restriction;
      if (ps == Sort::path)
        ps = core_sort == Sort::process ? Sort::non_delimited_path : Sort::delimited_path;
      Avm::Features pf{{"pred", Value(Atom{path->pred})}, {"ref-obj", Value(path->ref)}};
      if (path->proximal) pf.emplace("proximal-distance", Value(*path->proximal));
      core.emplace("path", Value(Avm(path_index_, ps, std::move(pf))));
    }
    if (bare_distance) core.emplace("distance", Value(make_measure(*bare_distance)));

    if (!wrapped) {
      Avm root("e1", core_sort, std::move(core));
      if (adverbial == Adverbial::in_time)
        root = root.with("duration", Value(make_measure(*adverbial_measure)));
      return root;
    }
    Avm inner("e2", core_sort, std::move(core));
    return Avm("e1", Sort::event,
               {{"composed-of", Value(std::move(inner))},
                {adverbial == Adverbial::for_time ? "duration" : "distance",
                 Value(make_measure(*adverbial_measure))}});
  }

 private:
  std::vector<std::string> toks_;
  const Lexicon& lex_;
  std::size_t pos_ = 0;
  int nominals_ = 0;
  std::string path_index_ = "p1";

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw ParseError(at, msg);
  }

  bool at_end() const { return pos_ >= toks_.size(); }

  const Token* peek_token() const {
    return at_end() ? nullptr : lex_.token(lower(toks_[pos_]));
  }

  bool at_word(std::string_view w) const { return !at_end() && lower(toks_[pos_]) == w; }

  bool at_adverbial() const { return at_word("for") || at_word("in"); }

  const Token* expect_class(TokenClass cls, const std::string& what) {
    const Token* t = peek_token();
    if (!t || t->cls != cls)
      fail("expected " + what + (at_end() ? "" : ", found '" + toks_[pos_] + "'"));
    ++pos_;
    return t;
  }

  void expect_word(std::string_view w) {
    if (!at_word(w)) fail("expected '" + std::string(w) + "'");
    ++pos_;
  }

  std::string next_nominal_index() { return "x" + std::to_string(++nominals_); }

  bool at_number() const {
    if (at_end()) return false;
    const std::string& t = toks_[pos_];
    if (std::isdigit(static_cast<unsigned char>(t[0]))) return true;
    return below_hundred(lower(t)).has_value();
  }

  Rational number() {
    const std::string& t = toks_[pos_];
    if (std::isdigit(static_cast<unsigned char>(t[0]))) {
      auto r = parse_rational(t);
      if (!r) fail("malformed number '" + t + "'");
      ++pos_;
      return *r;
    }
    std::int64_t total = 0;
    auto group = below_hundred(lower(t));
    if (!group) fail("expected a number");
    std::int64_t g = *group;
    ++pos_;
    while (!at_end()) {
      std::string w = lower(toks_[pos_]);
      if (w == "hundred" && g > 0 && g < 10) {
        g *= 100;
        ++pos_;
        if (!at_end())
          if (auto rest = below_hundred(lower(toks_[pos_])); rest && *rest > 0) {
            g += *rest;
            ++pos_;
          }
      } else if (w == "thousand" && total == 0 && g > 0) {
        total = g * 1000;
        g = 0;
        ++pos_;
        if (!at_end())
          if (auto rest = below_hundred(lower(toks_[pos_])); rest && *rest > 0) {
            g = *rest;
            ++pos_;
          }
      } else {
        break;
      }
    }
    return Rational(total + g);
  }

  Measure measure() {
    if (!at_number()) fail("expected a number");
    Rational n = number();
    const Token* u = expect_class(TokenClass::unit, "a unit");
    return Measure{n, u->pred};
  }

  Avm definite() {
    expect_word("the");
    const Token* n = expect_class(TokenClass::noun, "a noun");
    return Avm(next_nominal_index(), Sort::top, {{"pred", Value(Atom{n->pred})}});
  }

  PathPhrase path_phrase() {
    const Token* p = expect_class(TokenClass::prep, "a path preposition");
    const LexicalEntry* e = lex_.entry(p->pred);
    PathPhrase out{p->pred, e->path_sort_restriction.value_or(Sort::path), definite(), {}};
    if (at_word(",")) {
      ++pos_;
      if (!at_number()) fail("expected a proximal distance after ','");
      std::size_t at = pos_;
      Measure m = measure();
      if (UnitTable::standard().dimension_of(m.unit) != Dimension::distance)
        fail_at(at, "proximal distances are distances");
      expect_word("from");
      Avm ref = definite();
      out.proximal = make_measure(m).with("ref-obj", Value(std::move(ref)));
      if (at_word(",")) ++pos_;
    }
    return out;
  }

  Nominal noun_phrase() {
    if (at_end()) fail("expected a noun phrase");
    std::string w = lower(toks_[pos_]);
    if (w == "something") {
      ++pos_;
      return Nominal{Avm(next_nominal_index(), Sort::object), true};
    }
    if (w == "the") fail("definite noun phrases only name reference objects");
    if (w == "a") {
      ++pos_;
      const Token* n = expect_class(TokenClass::noun, "a noun");
      if (n->extra != "count") fail("'a' needs a singular count noun");
      return Nominal{Avm(next_nominal_index(), Sort::object,
                         {{"pred", Value(Atom{n->pred})}})};
    }
    if (at_number()) {
      Rational n = number();
      const Token* t = peek_token();
      if (t && t->cls == TokenClass::unit) {
        ++pos_;
        Measure q{n, t->pred};
        expect_word("of");
        const Token* stuff = expect_class(TokenClass::noun, "a noun");
        if (stuff->extra == "count") fail("measure phrases need a mass noun or plural");
        std::string x1 = next_nominal_index();
        Avm substance(next_nominal_index(), Sort::substance,
                      {{"pred", Value(Atom{stuff->pred})}});
        return Nominal{Avm(x1, Sort::object,
                           {{"composed-of", Value(std::move(substance))},
                            {"quantity", Value(make_measure(q))}})};
      }
      const Token* noun = expect_class(TokenClass::noun, "a noun");
      bool singular = n == Rational(1);
      if (noun->extra == "mass" || (singular && noun->extra != "count") ||
          (!singular && noun->extra != "plural"))
        fail("numeral does not agree with '" + noun->surface + "'");
      return Nominal{Avm(next_nominal_index(), Sort::object,
                         {{"pred", Value(Atom{noun->pred})}, {"card", Value(n)}})};
    }
    const Token* noun = expect_class(TokenClass::noun, "a noun phrase");
    if (noun->extra == "mass" || noun->extra == "plural") {
      return Nominal{Avm(next_nominal_index(), Sort::substance,
                         {{"pred", Value(Atom{noun->pred})}})};
    }
    // Singular count noun: only with a following name ("bucket A").
    if (at_end() || !std::isupper(static_cast<unsigned char>(toks_[pos_][0])))
      fail("singular '" + noun->surface + "' needs a determiner or a name");
    std::string name = toks_[pos_++];
    return Nominal{Avm(next_nominal_index(), Sort::object,
                       {{"pred", Value(Atom{noun->pred})}, {"name", Value(Atom{name})}})};
  }
};

}  // namespace

ParseResult parse_sentence(std::string_view sentence, const Lexicon& lexicon) {
  Avm avm = SentenceParser(sentence, lexicon).run();
  auto diagnostics = check(avm, lexicon);
  return ParseResult{std::move(avm), std::move(diagnostics)};
}

// --- realisation -----------------------------------------------------------

namespace {

class Realizer {
 public:
  explicit Realizer(const Lexicon& lex) : lex_(lex) {}

  std::string run(const Avm& a) {
    FeaturePath root;
    std::string out;
    if (const Avm* core = a.get_avm("composed-of")) {
      allow(a, root, {"composed-of", "duration", "distance"});
      const char* measured = a.has("duration") ? "duration" : "distance";
      if (a.has("duration") == a.has("distance")) {
        offending_.push_back(root);
        fail();
      }
      out = clause(*core, {"composed-of"}) + " for " + measure(a, {measured});
    } else if (a.has("pred")) {
      out = clause(a.without("duration"), root);
      if (a.has("duration"))
        out += (a.sort() == Sort::process ? " for " : " in ") + measure(a, {"duration"});
    } else {
      offending_.push_back(root);
    }
    fail();
    return out;
  }

 private:
  const Lexicon& lex_;
  std::vector<FeaturePath> offending_;

  void fail() const {
    if (offending_.empty()) return;
    std::string msg = "outside the sentence fragment:";
    for (const auto& p : offending_) msg += " " + dotted(p);
    throw RealizeError(offending_, msg);
  }

  static FeaturePath child(FeaturePath p, std::string_view f) {
    p.emplace_back(f);
    return p;
  }

  void allow(const Avm& a, const FeaturePath& at, std::initializer_list<std::string_view> ok) {
    for (const auto& [f, v] : a.features()) {
      if (std::find(ok.begin(), ok.end(), f) == ok.end()) offending_.push_back(child(at, f));
    }
  }

  std::string measure(const Avm& host, const FeaturePath& feature) {
    const Avm* m = host.get_avm(feature.front());
    auto parsed = m ? read_measure(*m) : std::nullopt;
    if (!parsed || !UnitTable::standard().known(parsed->unit)) {
      offending_.push_back(feature);
      return "?";
    }
    return measure_text(*parsed);
  }

  std::string measure_text(const Measure& m) {
    std::optional<std::string> unit;
    if (m.number == Rational(1)) unit = lex_.surface(m.unit, TokenClass::unit, "singular");
    if (!unit) unit = lex_.surface(m.unit, TokenClass::unit, "");
    return number_words(m.number) + " " + unit.value_or(m.unit);
  }

  std::optional<std::string> noun(const std::string& pred, std::string_view kind) {
    return lex_.surface(pred, TokenClass::noun, kind);
  }

  std::string clause(const Avm& c, const FeaturePath& at) {
    allow(c, at, {"pred", "agent", "patient", "goal", "path", "distance"});
    std::string out;
    auto agent = c.get_atom("agent");
    auto subject = agent ? lex_.surface(*agent, TokenClass::name) : std::nullopt;
    if (!subject) offending_.push_back(child(at, "agent"));
    out += capitalized(subject.value_or("?"));

    auto pred = c.get_atom("pred");
    auto verb = pred ? lex_.surface(*pred, TokenClass::verb_past) : std::nullopt;
    if (!verb) offending_.push_back(child(at, "pred"));
    out += " " + verb.value_or("?");

    if (c.has("distance")) {
      FeaturePath d = child(at, "distance");
      const Avm* m = c.get_avm("distance");
      auto parsed = m ? read_measure(*m) : std::nullopt;
      if (!parsed) offending_.push_back(d);
      else out += " " + measure_text(*parsed);
    }
    if (const Value* p = c.get("patient")) out += " " + nominal(*p, child(at, "patient"));
    if (const Value* g = c.get("goal")) out += " into " + nominal(*g, child(at, "goal"));
    if (const Value* p = c.get("path")) out += " " + path(*p, child(at, "path"));
    return out;
  }

  std::string definite(const Value& v, const FeaturePath& at) {
    const Avm* n = v.if_avm();
    auto pred = n ? n->get_atom("pred") : std::nullopt;
    auto surface = pred ? noun(*pred, "count") : std::nullopt;
    if (!surface) {
      offending_.push_back(at);
      return "?";
    }
    allow(*n, at, {"pred"});
    return "the " + *surface;
  }

  std::string path(const Value& v, const FeaturePath& at) {
    const Avm* p = v.if_avm();
    auto pred = p ? p->get_atom("pred") : std::nullopt;
    auto prep = pred ? lex_.surface(*pred, TokenClass::prep) : std::nullopt;
    if (!prep || !p->get("ref-obj")) {
      offending_.push_back(at);
      return "?";
    }
    allow(*p, at, {"pred", "ref-obj", "proximal-distance"});
    std::string out = *prep + " " + definite(*p->get("ref-obj"), child(at, "ref-obj"));
    if (const Avm* prox = p->get_avm("proximal-distance")) {
      FeaturePath pat = child(at, "proximal-distance");
      auto m = read_measure(*prox);
      const Value* ref = prox->get("ref-obj");
      if (!m || !ref) {
        offending_.push_back(pat);
        return out;
      }
      allow(*prox, pat, {"number", "unit", "ref-obj"});
      out += ", " + measure_text(*m) + " from " + definite(*ref, child(pat, "ref-obj")) + ",";
    }
    return out;
  }

  std::string nominal(const Value& v, const FeaturePath& at) {
    const Avm* n = v.if_avm();
    if (!n) {
      offending_.push_back(at);
      return "?";
    }
    auto pred = n->get_atom("pred");
    if (!pred) {
      if (n->has("composed-of")) {
        offending_.push_back(child(at, "composed-of"));
        return "?";
      }
      allow(*n, at, {});
      return "something";
    }

    // "five gallons of water", with or without an explicit substance.
    if (const Avm* q = n->get_avm("quantity")) {
      auto m = read_measure(*q);
      if (!m) offending_.push_back(child(at, "quantity"));
      allow(*n, at, {"pred", "quantity"});
      return (m ? measure_text(*m) : "?") + " of " + mass_or_plural(*pred, at);
    }
    if (n->has("quantity") || n->has("composed-of")) {
      offending_.push_back(child(at, n->has("quantity") ? "quantity" : "composed-of"));
      return "?";
    }
    if (is_continuum(n->sort())) {
      allow(*n, at, {"pred"});
      return mass_or_plural(*pred, at);
    }
    if (const Value* card = n->get("card")) {
      allow(*n, at, {"pred", "card"});
      if (!card->is_number()) {
        offending_.push_back(child(at, "card"));
        return "?";
      }
      auto surface = noun(*pred, card->number() == Rational(1) ? "count" : "plural");
      if (!surface) offending_.push_back(child(at, "pred"));
      return number_words(card->number()) + " " + surface.value_or("?");
    }
    auto surface = noun(*pred, "count");
    if (!surface) {
      offending_.push_back(child(at, "pred"));
      return "?";
    }
    if (auto name = n->get_atom("name")) {
      allow(*n, at, {"pred", "name"});
      return *surface + " " + *name;
    }
    allow(*n, at, {"pred"});
    return "a " + *surface;
  }

  // Mass noun, or the bare plural of a count noun. For objects composed of a
  // substance the substance supplies the noun.
  std::string mass_or_plural(const std::string& pred, const FeaturePath& at) {
    if (auto m = noun(pred, "mass")) return *m;
    if (auto p = noun(pred, "plural")) return *p;
    offending_.push_back(child(at, "pred"));
    return "?";
  }

 public:
  // Patient of the form [object, composed-of [substance, pred P], quantity Q].
  static Avm flatten_measured(const Avm& n) {
    const Avm* stuff = n.get_avm("composed-of");
    if (!stuff || n.has("pred") || !n.has("quantity")) return n;
    if (stuff->features().size() != 1 || !stuff->get_atom("pred")) return n;
    return n.without("composed-of").with("pred", *stuff->get("pred"));
  }
};

Avm flatten_nominals(const Avm& a) {
  Avm out = a;
  for (const auto& [f, v] : a.features()) {
    if (const Avm* sub = v.if_avm()) {
      Avm flat = flatten_nominals(*sub);
      if (f == "patient" || f == "goal") flat = Realizer::flatten_measured(flat);
      out = out.with(f, Value(std::move(flat)));
    }
  }
  return out;
}

}  // namespace

std::string realize(const Avm& a, const Lexicon& lexicon) {
  auto diagnostics = check(a, lexicon);
  if (!diagnostics.empty()) {
    std::vector<FeaturePath> paths;
    std::string msg = "not well-sorted:";
    for (const auto& d : diagnostics) {
      paths.push_back(d.path);
      msg += " " + d.to_string() + ";";
    }
    throw RealizeError(std::move(paths), msg);
  }
  return Realizer(lexicon).run(flatten_nominals(a));
}

// --- paraphrases -----------------------------------------------------------

std::vector<std::string> paraphrases(const Kb& kb, const std::string& index,
                                     std::size_t max, const Lexicon& lexicon) {
  const Avm* fact = kb.fact(index);
  if (!fact) throw std::invalid_argument("no fact with root index '" + index + "'");

  std::vector<Avm> sources{*fact};
  auto weakenings = existential_weaken(*fact);
  sources.insert(sources.end(), weakenings.begin(), weakenings.end());
  try {
    Avm derived = quantity_derive(*fact, kb);
    sources.push_back(derived);
    auto more = existential_weaken(derived);
    sources.insert(sources.end(), more.begin(), more.end());
  } catch (const CalculusError&) {
  }
  if (const Avm* d = fact->get_avm("duration"); d && fact->has("composed-of")) {
    if (auto m = read_measure(*d)) {
      std::vector<Rational> shorter;
      for (Rational n = m->number - 5; n > 0; n -= 5) shorter.push_back(n);
      if (shorter.empty() && m->number > 0) shorter.push_back(m->number / 2);
      for (const auto& n : shorter) {
        try {
          sources.push_back(duration_weaken(*fact, n, kb));
        } catch (const CalculusError&) {
        }
      }
    }
  }

  std::vector<std::string> out;
  auto emit = [&](const Avm& a) {
    if (out.size() >= max) return;
    try {
      std::string s = realize(a, lexicon);
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    } catch (const RealizeError&) {
    }
  };
  for (const auto& s : sources) {
    emit(s);
    // Restrictive in-measures can be dropped from directly predicated events.
    if (s.sort() == Sort::event && s.has("pred") && s.has("duration"))
      emit(s.without("duration"));
  }
  return out;
}

}  // namespace eventcalc
