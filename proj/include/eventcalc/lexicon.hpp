// Closed lexicon shared by the sortal checker and the sentence grammar.
//
// File format, one entry per line (blank lines and '#' comments ignored):
//
//   <surface> <class> <pred-atom> [<extra>]
//
// Verb extras name the verb category (transfer-verb, fill-verb,
// motion-verb). Noun extras are mass, count or plural. Prepositions that
// head path phrases carry the sort their path must have (delimited-path or
// path); other prepositions carry their role in the fragment.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eventcalc/sorts.hpp"

namespace eventcalc {

enum class TokenClass { name, verb_past, noun, card_numeral, number, unit, prep, det, misc };

std::string_view token_class_name(TokenClass c);

struct Token {
  std::string surface;
  TokenClass cls;
  std::string pred;
  std::string extra;
};

enum class Category { transfer_verb, fill_verb, motion_verb, nominal, path_pred };

std::string_view category_name(Category c);

struct LexicalEntry {
  std::string pred;
  Category category;
  std::optional<std::string> incremental_role;
  std::set<std::string> constant_roles;
  std::optional<Sort> path_sort_restriction;
};

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Lexicon {
 public:
  /// The shipped default lexicon.
  static const Lexicon& standard();
  static Lexicon parse(std::string_view text);
  static Lexicon load(const std::string& file);

  const Token* token(std::string_view surface) const;
  const LexicalEntry* entry(std::string_view pred) const;

  /// First surface form of `pred` among tokens of class `cls`, restricted
  /// to tokens whose extra equals `extra` when one is given.
  std::optional<std::string> surface(
      std::string_view pred, TokenClass cls,
      std::optional<std::string_view> extra = std::nullopt) const;

  const std::map<std::string, LexicalEntry>& entries() const { return entries_; }

 private:
  void add(Token t, std::size_t line);

  std::map<std::string, Token> tokens_;
  std::vector<std::string> order_;
  std::map<std::string, LexicalEntry> entries_;
};

}  // namespace eventcalc
