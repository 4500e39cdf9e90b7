#include <doctest.h>

#include <unistd.h>

#include <algorithm>

#include "cli_support.hpp"
#include "json_oracle.hpp"
#include "treenotation/tree.hpp"

using tn::testing::runCli;

namespace {

const std::string kTn = TN_CLI_PATH;
const std::string kCorpus = TN_CORPUS_DIR;
const std::string kJsonTl = TN_GRAMMAR_DIR "/jsontl.grammar";
const std::string kMapTl = TN_GRAMMAR_DIR "/maptl.grammar";

}  // namespace

TEST_CASE("fmt is byte identity") {
  const auto r = runCli(kTn, {"fmt", kCorpus + "/01_web_stats.tn"});
  CHECK(r.exitCode == 0);
  CHECK(r.out == "title Web Stats\nvisitors\n mozilla 802");
}

TEST_CASE("dash reads standard input") {
  tn::testing::Scratch scratch;
  const auto input = scratch.file("in.tn", "a\n   b\n");
  const auto r = runCli(kTn, {"fmt", "-"}, input);
  CHECK(r.exitCode == 0);
  CHECK(r.out == "a\n   b\n");
}

TEST_CASE("stats") {
  auto r = runCli(kTn, {"stats", kCorpus + "/05_empty.tn"});
  CHECK(r.exitCode == 0);
  CHECK(r.out == "nodes 0\ndepth 0");
  r = runCli(kTn, {"stats", kCorpus + "/01_web_stats.tn"});
  CHECK(r.out == "nodes 3\ndepth 1");
  CHECK(tn::serialize(tn::parse(r.out)) == r.out);
}

TEST_CASE("to-json") {
  const auto r = runCli(kTn, {"to-json", kCorpus + "/03_jsontl.tn"});
  CHECK(r.exitCode == 0);
  CHECK(tn::testing::oracleEqual(r.out, R"({"dsl":"yrt","ma":902})"));

  const auto bad = runCli(kTn, {"to-json", kCorpus + "/01_web_stats.tn"});
  CHECK(bad.exitCode == 1);
  CHECK(bad.err.find("kind unknownNodeType") != std::string::npos);
}

TEST_CASE("from-json untyped and typed") {
  tn::testing::Scratch scratch;
  const auto json = scratch.file("in.json", R"({"title":"Web Stats","visitors":{"mozilla":802}})");
  auto r = runCli(kTn, {"from-json", json});
  CHECK(r.exitCode == 0);
  CHECK(r.out == "title Web Stats\nvisitors\n mozilla 802");

  const auto listing = scratch.file("l.json", R"({"dsl":"yrt","ma":902})");
  r = runCli(kTn, {"from-json", "--typed", listing});
  CHECK(r.exitCode == 0);
  CHECK(r.out == "o\n s dsl yrt\n n ma 902");

  const auto spaced = scratch.file("bad.json", R"({"two words":1})");
  CHECK(runCli(kTn, {"from-json", spaced}).exitCode == 1);
  const auto broken = scratch.file("broken.json", "{");
  CHECK(runCli(kTn, {"from-json", broken}).exitCode == 1);
}

TEST_CASE("diff and patch") {
  tn::testing::Scratch scratch;
  const auto a = scratch.file("a.tn", "visitors\n mozilla 802");
  const auto b = scratch.file("b.tn", "visitors\n mozilla 900");
  const auto d = runCli(kTn, {"diff", a, b});
  CHECK(d.exitCode == 0);
  CHECK(d.out == "descend\n delete 1\n insert\n  mozilla 900");
  const auto p = scratch.file("p.tn", d.out);
  const auto r = runCli(kTn, {"patch", p, a});
  CHECK(r.exitCode == 0);
  CHECK(r.out == "visitors\n mozilla 900");

  const auto overrun = scratch.file("bad.tn", "delete 5");
  const auto e = runCli(kTn, {"patch", overrun, a});
  CHECK(e.exitCode == 1);
  CHECK(e.err.find("patch mismatch") != std::string::npos);
}

TEST_CASE("check prints errors as Tree Notation") {
  tn::testing::Scratch scratch;
  const auto doc = scratch.file("doc.tn", "o\n x dsl yrt");
  auto r = runCli(kTn, {"check", doc, "--grammar", kJsonTl});
  CHECK(r.exitCode == 0);
  CHECK(r.out ==
        "error\n path 0 0\n kind unknownNodeType\n message unknown node type \"x\"\n suggestion a");

  r = runCli(kTn, {"check", "--strict", doc, "--grammar", kJsonTl});
  CHECK(r.exitCode == 1);

  r = runCli(kTn, {"check", kCorpus + "/03_jsontl.tn", "--grammar", kJsonTl, "--strict"});
  CHECK(r.exitCode == 0);
  CHECK(r.out.empty());

  const auto typo = scratch.file("typo.tn", "o\n ss dsl yrt\n n ma 902");
  r = runCli(kTn, {"check", "--fix", typo, "--grammar", kJsonTl});
  CHECK(r.exitCode == 0);
  CHECK(r.out == "o\n s dsl yrt\n n ma 902");

  const auto hopeless = scratch.file("hopeless.tn", "o\n qwxyz 1");
  r = runCli(kTn, {"check", "--fix", "--strict", hopeless, "--grammar", kJsonTl});
  CHECK(r.exitCode == 1);
  CHECK(r.out == "o\n qwxyz 1");

  const auto badGrammar = scratch.file("bad.grammar", "nodetype a\n root\n frobnicate");
  CHECK(runCli(kTn, {"check", doc, "--grammar", badGrammar}).exitCode == 1);
}

TEST_CASE("compile") {
  auto r = runCli(kTn, {"compile", kCorpus + "/03_jsontl.tn", "--grammar", kJsonTl});
  CHECK(r.exitCode == 0);
  CHECK(tn::testing::oracleEqual(r.out, R"({"dsl":"yrt","ma":902})"));

  r = runCli(kTn, {"compile", kCorpus + "/02_maptl.tn", "--grammar", kMapTl});
  CHECK(r.exitCode == 0);
  CHECK(r.out == "\"dsl\": \"Domain Specific Language\"\n\"sf\": \"San Francisco\"");

  tn::testing::Scratch scratch;
  const auto doc = scratch.file("doc.tn", "o\n x dsl yrt");
  r = runCli(kTn, {"compile", doc, "--grammar", kJsonTl});
  CHECK(r.exitCode == 1);
  CHECK(r.err.find("suggestion a") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(runCli(kTn, {}).exitCode == 2);
  CHECK(runCli(kTn, {"frobnicate"}).exitCode == 2);
  const auto r = runCli(kTn, {"fmt", "--bogus", kCorpus + "/01_web_stats.tn"});
  CHECK(r.exitCode == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(runCli(kTn, {"check", kCorpus + "/01_web_stats.tn"}).exitCode == 2);
  CHECK(runCli(kTn, {"diff", kCorpus + "/01_web_stats.tn"}).exitCode == 2);
  CHECK(runCli(kTn, {"fmt", kCorpus + "/does-not-exist.tn"}).exitCode == 1);
}
