#include <doctest.h>

#include "support.hpp"
#include "treenotation/diff.hpp"

using namespace tn;

namespace {

const std::string kWebStats = "title Web Stats\nvisitors\n mozilla 802";

std::string patchText(const std::string& a, const std::string& b) {
  return serialize(diff(parse(a), parse(b)).ops);
}

NodePath mismatchPath(const std::string& patch, const std::string& source) {
  try {
    apply(Patch{parse(patch)}, parse(source));
  } catch (const PatchError& e) {
    return e.path();
  }
  FAIL("expected PatchError");
  return {};
}

}  // namespace

TEST_CASE("identity diff is a single keep") {
  CHECK(patchText(kWebStats, kWebStats) == "keep 2");
  CHECK(patchText("", "") == "keep 0");
  CHECK(serialize(apply(Patch{parse("keep 2")}, parse(kWebStats))) == kWebStats);
  CHECK(serialize(apply(Patch{parse("keep 0")}, TreeDocument{})).empty());
}

TEST_CASE("changed child line") {
  const std::string patch = patchText("visitors\n mozilla 802", "visitors\n mozilla 900");
  CHECK(patch == "descend\n delete 1\n insert\n  mozilla 900");
  CHECK(serialize(apply(Patch{parse(patch)}, parse("visitors\n mozilla 802"))) ==
        "visitors\n mozilla 900");
}

TEST_CASE("whole subtrees are inserted and deleted") {
  CHECK(patchText("a\n x\nb", "b\nc\n y\n  z") == "delete 1\nkeep 1\ninsert\n c\n  y\n   z");
  CHECK(patchText("", "a") == "insert\n a");
  CHECK(patchText("a\nb", "") == "delete 2");
}

TEST_CASE("earliest match wins ties") {
  // Either "a" could pair with the single "a"; the earliest is kept.
  CHECK(patchText("a\na", "a") == "keep 1\ndelete 1");
  CHECK(patchText("x\ny", "y\nx") == "delete 1\nkeep 1\ninsert\n x");
}

TEST_CASE("apply errors name the failing position") {
  CHECK_THROWS_AS(apply(Patch{parse("delete 5")}, parse("one")), PatchError);
  CHECK(mismatchPath("delete 5", "one") == NodePath{{0}});
  CHECK(mismatchPath("keep 1", "a\nb") == NodePath{{1}});
  CHECK(mismatchPath("keep 1\ndescend\n keep 3", "a\nb\n c") == NodePath{{1, 0}});
  CHECK(mismatchPath("descend", "") == NodePath{{0}});
  CHECK(mismatchPath("move 1", "a") == NodePath{{0}});
  CHECK(mismatchPath("keep", "a") == NodePath{{0}});
  CHECK(mismatchPath("keep -1", "a") == NodePath{{0}});
  CHECK(mismatchPath("keep 1x", "a") == NodePath{{0}});
  CHECK(mismatchPath("keep 1\n x", "a") == NodePath{{0}});
  CHECK(mismatchPath("", "a") == NodePath{{0}});
}

TEST_CASE("patches preserve leading-XI first children") {
  const std::string a = "p\n  x\nq";
  const std::string b = "p\n  x\n y\nq";
  const Patch patch = diff(parse(a), parse(b));
  CHECK(serialize(apply(patch, parse(a))) == b);
  CHECK(serialize(apply(diff(parse("q"), parse("   lead\nq")), parse("q"))) == "   lead\nq");
  // Hand-written inserts that would displace such a child are refused.
  CHECK_THROWS_AS(apply(Patch{parse("keep 1\ninsert\n  z")}, parse("a")), PatchError);
}

TEST_CASE("random pairs: soundness, minimality, closure") {
  testing::Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const TreeDocument a = testing::randomDocument(rng);
    const TreeDocument b = i % 2 == 0 ? testing::mutate(rng, a) : testing::randomDocument(rng);
    const Patch patch = diff(a, b);
    REQUIRE(serialize(apply(patch, a)) == serialize(b));
    CHECK(hasEdits(patch) == (serialize(a) != serialize(b)));
    CHECK(serialize(parse(serialize(patch.ops))) == serialize(patch.ops));
    CHECK(Patch{parse(serialize(patch.ops))} == patch);
    CHECK(!hasEdits(diff(a, a)));
    CHECK(serialize(diff(a, a).ops) == "keep " + std::to_string(a.roots.size()));
  }
}
