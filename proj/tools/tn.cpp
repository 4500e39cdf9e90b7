// tn: command-line front end for the Tree Notation toolkit.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "treenotation/codec.hpp"
#include "treenotation/diff.hpp"
#include "treenotation/grammar.hpp"
#include "treenotation/tree.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

// "-" reads standard input. Bytes are passed through untouched.
std::string readInput(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tn::Error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void printReport(std::ostream& out, const std::vector<tn::TlError>& errors) {
  out << tn::serialize(tn::errorReport(errors));
}

tn::Grammar grammarFrom(const std::string& path) {
  return tn::loadGrammar(readInput(path), path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree Notation toolkit"};
  app.require_subcommand(1);

  std::string input;
  std::string other;
  std::string grammarPath;
  bool typed = false;
  bool strict = false;
  bool fix = false;

  auto* fmt = app.add_subcommand("fmt", "Parse and re-serialize a document");
  fmt->add_option("file", input, "Input document, - for stdin")->required();

  auto* stats = app.add_subcommand("stats", "Print node count and maximum depth");
  stats->add_option("file", input, "Input document, - for stdin")->required();

  auto* fromJson = app.add_subcommand("from-json", "Convert JSON to Tree Notation");
  fromJson->add_flag("--typed", typed, "Emit JsonTL instead of the untyped projection");
  fromJson->add_option("file", input, "JSON input, - for stdin")->required();

  auto* toJson = app.add_subcommand("to-json", "Convert a JsonTL document to JSON");
  toJson->add_option("file", input, "JsonTL input, - for stdin")->required();

  auto* diffCmd = app.add_subcommand("diff", "Print the PatchTL script turning <a> into <b>");
  diffCmd->add_option("a", input, "Source document")->required();
  diffCmd->add_option("b", other, "Target document")->required();

  auto* patchCmd = app.add_subcommand("patch", "Apply a PatchTL script to a document");
  patchCmd->add_option("patchfile", other, "PatchTL script")->required();
  patchCmd->add_option("a", input, "Source document")->required();

  auto* checkCmd = app.add_subcommand("check", "Check a document against a grammar");
  checkCmd->add_flag("--strict", strict, "Exit 1 when errors remain");
  checkCmd->add_flag("--fix", fix, "Print the auto-corrected document instead of the errors");
  checkCmd->add_option("doc", input, "Document to check")->required();
  checkCmd->add_option("--grammar", grammarPath, "Grammar file")->required();

  auto* compileCmd = app.add_subcommand("compile", "Compile a document with a grammar's templates");
  compileCmd->add_option("doc", input, "Document to compile")->required();
  compileCmd->add_option("--grammar", grammarPath, "Grammar file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    if (fmt->parsed()) {
      std::cout << tn::serialize(tn::parse(readInput(input)));
    } else if (stats->parsed()) {
      const tn::TreeDocument doc = tn::parse(readInput(input));
      std::cout << "nodes " << tn::nodeCount(doc) << "\ndepth " << tn::maxDepth(doc);
    } else if (fromJson->parsed()) {
      const tn::JsonValue value = tn::JsonValue::parse(readInput(input));
      std::cout << tn::serialize(typed ? tn::fromJsonTyped(value) : tn::fromJsonUntyped(value));
    } else if (toJson->parsed()) {
      std::cout << tn::toJsonTyped(tn::parse(readInput(input))).dump(2) << '\n';
    } else if (diffCmd->parsed()) {
      const tn::Patch patch = tn::diff(tn::parse(readInput(input)), tn::parse(readInput(other)));
      std::cout << tn::serialize(patch.ops);
    } else if (patchCmd->parsed()) {
      const tn::Patch patch{tn::parse(readInput(other))};
      std::cout << tn::serialize(tn::apply(patch, tn::parse(readInput(input))));
    } else if (checkCmd->parsed()) {
      const tn::Grammar grammar = grammarFrom(grammarPath);
      tn::TreeDocument doc = tn::parse(readInput(input));
      if (fix) {
        doc = tn::autofix(doc, grammar);
        std::cout << tn::serialize(doc);
      }
      const auto errors = tn::check(doc, grammar);
      if (!fix) printReport(std::cout, errors);
      if (strict && !errors.empty()) return kDomainError;
    } else if (compileCmd->parsed()) {
      const tn::Grammar grammar = grammarFrom(grammarPath);
      std::cout << tn::compile(tn::parse(readInput(input)), grammar);
    }
  } catch (const tn::TlErrors& e) {
    printReport(std::cerr, e.errors());
    std::cerr << '\n';
    return kDomainError;
  } catch (const tn::CompileError& e) {
    if (e.pending().empty()) {
      std::cerr << e.what() << '\n';
    } else {
      printReport(std::cerr, e.pending());
      std::cerr << '\n';
    }
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "tn: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}
