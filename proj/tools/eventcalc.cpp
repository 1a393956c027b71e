// Batch front end: parse, check, realize, assert, rate, infer, paraphrase.
//
// Exit status depends only on the outcome class:
//   0 success / entailed      1 not entailed      2 parse or usage error
//   3 sortal clash            4 unrealizable      5 file or KB error

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eventcalc/calculus.hpp"
#include "eventcalc/checker.hpp"
#include "eventcalc/grammar.hpp"
#include "eventcalc/kb_file.hpp"
#include "eventcalc/lexicon.hpp"
#include "eventcalc/text.hpp"

using namespace eventcalc;

namespace {

enum Exit : int {
  kOk = 0,
  kNotEntailed = 1,
  kParseError = 2,
  kSortalClash = 3,
  kUnrealizable = 4,
  kFileError = 5,
};

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Avm read_avm_file(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_text(text);
  } catch (const TextError& e) {
    throw FileError(path + ":" + e.what());
  }
}

int report(const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) std::cout << d.to_string() << "\n";
  return diagnostics.empty() ? kOk : kSortalClash;
}

// Sentence or bracketed AVM. Returns nullopt after printing diagnostics.
std::optional<Avm> read_query(const std::string& text, const Lexicon& lex, int& status) {
  Avm query;
  if (!text.empty() && text.front() == '[') {
    query = parse_text(text);
  } else {
    query = parse_sentence(text, lex).avm;
  }
  auto diagnostics = check(query, lex);
  if (!diagnostics.empty()) {
    status = report(diagnostics);
    return std::nullopt;
  }
  return query;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sortal calculus of eventualities"};
  app.require_subcommand(1);
  std::string lexicon_file;
  app.add_option("--lexicon", lexicon_file, "Lexicon file (default: built in)");

  std::string sentence, avm_file, kb_file, index;
  std::size_t max = 20;
  std::vector<std::string> rate_args;

  auto* parse_cmd = app.add_subcommand("parse", "Parse a sentence into an AVM");
  parse_cmd->add_option("sentence", sentence)->required();

  auto* check_cmd = app.add_subcommand("check", "List sortal diagnostics of an AVM file");
  check_cmd->add_option("avm-file", avm_file)->required();

  auto* realize_cmd = app.add_subcommand("realize", "Realise an AVM file as a sentence");
  realize_cmd->add_option("avm-file", avm_file)->required();

  auto* assert_cmd = app.add_subcommand("assert", "Add a sentence to a knowledge base");
  assert_cmd->add_option("--kb", kb_file)->required();
  assert_cmd->add_option("sentence", sentence)->required();

  auto* rate_cmd = app.add_subcommand(
      "rate", "Record a transfer rate: <index> <number> <unit> per <unit>");
  rate_cmd->add_option("--kb", kb_file)->required();
  rate_cmd->add_option("args", rate_args)->required()->expected(5);

  auto* infer_cmd = app.add_subcommand("infer", "Ask whether a sentence or AVM follows");
  infer_cmd->add_option("--kb", kb_file)->required();
  infer_cmd->add_option("query", sentence)->required();

  auto* para_cmd = app.add_subcommand("paraphrase", "Sentences derivable from a fact");
  para_cmd->add_option("--kb", kb_file)->required();
  para_cmd->add_option("index", index)->required();
  para_cmd->add_option("--max", max, "Maximum number of sentences");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    Lexicon custom;
    if (!lexicon_file.empty()) custom = Lexicon::load(lexicon_file);
    const Lexicon& lex = lexicon_file.empty() ? Lexicon::standard() : custom;

    if (*parse_cmd) {
      ParseResult r = parse_sentence(sentence, lex);
      if (!r.well_sorted()) return report(r.diagnostics);
      std::cout << canonical_text(r.avm) << "\n";
      return kOk;
    }
    if (*check_cmd) return report(check(read_avm_file(avm_file), lex));
    if (*realize_cmd) {
      std::cout << realize(read_avm_file(avm_file), lex) << "\n";
      return kOk;
    }
    if (*assert_cmd) {
      Kb kb;
      if (std::filesystem::exists(kb_file)) kb = load_kb(kb_file);
      ParseResult r = parse_sentence(sentence, lex);
      if (!r.well_sorted()) return report(r.diagnostics);
      Avm fact = assign_indices(r.avm, kb);
      kb = kb.with_fact(fact);
      save_kb(kb_file, kb);
      std::cout << fact.index() << "\n";
      return kOk;
    }
    if (*rate_cmd) {
      Kb kb = load_kb(kb_file);
      if (rate_args[3] != "per") {
        std::cerr << "expected: rate <index> <number> <unit> per <unit>\n";
        return kParseError;
      }
      auto number = parse_rational(rate_args[1]);
      if (!number) {
        std::cerr << "malformed rate '" << rate_args[1] << "'\n";
        return kParseError;
      }
      std::string target = rate_target(kb, rate_args[0]);
      kb = kb.with_rate(RateFact{target, rate_args[2], rate_args[4], *number});
      save_kb(kb_file, kb);
      std::cout << target << "\n";
      return kOk;
    }
    if (*infer_cmd) {
      Kb kb = load_kb(kb_file);
      int status = kOk;
      auto query = read_query(sentence, lex, status);
      if (!query) return status;
      EntailResult r = entails(kb, *query);
      if (!r.entailed) {
        std::cout << "no\n";
        return kNotEntailed;
      }
      std::cout << "yes\n";
      std::cout << "from " << r.source.value_or("?") << "\n";
      for (std::size_t i = 0; i < r.witness.size(); ++i)
        std::cout << i + 1 << ". " << format_step(r.witness[i]) << "\n";
      if (r.derived) std::cout << "derived " << canonical_text(*r.derived) << "\n";
      return kOk;
    }
    if (*para_cmd) {
      Kb kb = load_kb(kb_file);
      if (!kb.fact(index)) {
        std::cerr << "no fact with root index '" << index << "'\n";
        return kFileError;
      }
      for (const auto& s : paraphrases(kb, index, max, lex)) std::cout << s << "\n";
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const TextError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kParseError;
  } catch (const RealizeError& e) {
    std::cerr << "unrealizable: " << e.what() << "\n";
    return kUnrealizable;
  } catch (const FileError& e) {
    std::cerr << e.what() << "\n";
    return kFileError;
  } catch (const KbFileError& e) {
    std::cerr << e.what() << "\n";
    return kFileError;
  } catch (const KbError& e) {
    std::cerr << e.what() << "\n";
    return kFileError;
  } catch (const LexiconError& e) {
    std::cerr << e.what() << "\n";
    return kFileError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}
