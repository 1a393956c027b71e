// Controlled-English fragment: parsing into eventuality descriptions and
// realising descriptions as sentences.
//
//   sentence  := NAME VERB [measure] [np] [into np] [path-pp [, measure from the NOUN[,]]]
//                [(for | in) measure]
//   np        := something | a NOUN | NOUN | NUMBER NOUN | measure of NOUN
//              | NOUN NAME
//   path-pp   := (to | towards | along) the NOUN
//   measure   := NUMBER UNIT
//
// A for-adverbial is a measure phrase: it introduces composed-of and demotes
// the pred-bearing core to a continuum, unless the core is restricted to
// events (a to-path or a bare distance). An in-adverbial modifies the event
// directly. Verbs are simple past only.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eventcalc/avm.hpp"
#include "eventcalc/calculus.hpp"
#include "eventcalc/checker.hpp"
#include "eventcalc/lexicon.hpp"

namespace eventcalc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t token, const std::string& message);
  /// Zero-based token position of the failure.
  std::size_t token() const { return token_; }

 private:
  std::size_t token_;
};

class RealizeError : public std::runtime_error {
 public:
  RealizeError(std::vector<FeaturePath> paths, const std::string& message);
  const std::vector<FeaturePath>& paths() const { return paths_; }

 private:
  std::vector<FeaturePath> paths_;
};

struct ParseResult {
  Avm avm;  // built even when diagnostics are present
  std::vector<Diagnostic> diagnostics;

  bool well_sorted() const { return diagnostics.empty(); }
};

/// Throws ParseError when the sentence is outside the fragment.
ParseResult parse_sentence(std::string_view sentence,
                           const Lexicon& lexicon = Lexicon::standard());

/// Throws RealizeError for descriptions that fail the sortal check or use
/// features outside the fragment.
std::string realize(const Avm& a, const Lexicon& lexicon = Lexicon::standard());

/// Realisations of a fact and its weakenings and derivations, without
/// duplicates, at most `max` of them. Throws std::invalid_argument when no
/// fact has root index `index`.
std::vector<std::string> paraphrases(const Kb& kb, const std::string& index,
                                     std::size_t max,
                                     const Lexicon& lexicon = Lexicon::standard());

/// "thirty", "twenty-five", "two hundred"; non-integers as "5/2".
std::string number_words(const Rational& n);

}  // namespace eventcalc
