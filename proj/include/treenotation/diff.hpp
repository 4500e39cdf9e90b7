#pragma once

#include "treenotation/tree.hpp"

namespace tn {

/// An edit script in PatchTL, itself a Tree Notation document.
///
/// Each root is one operation applied to the source's top-level siblings, in order:
///
///     keep <n>     copy the next n source siblings unchanged
///     delete <n>   drop the next n source siblings
///     insert       emit the child subtrees of this node
///     descend      copy the next source sibling's line and apply the child
///                  operations to its children
///
/// Operations must consume every source sibling at each level.
struct Patch {
  TreeDocument ops;

  bool operator==(const Patch&) const = default;
};

/// Line-keyed LCS per sibling level with earliest-match tie-breaking.
/// diff(a, a) is the single operation "keep <roots>".
Patch diff(const TreeDocument& a, const TreeDocument& b);

/// Throws PatchError when the patch is malformed or its counts do not fit `a`.
TreeDocument apply(const Patch& patch, const TreeDocument& a);

/// True when the patch contains at least one insert or delete operation.
bool hasEdits(const Patch& patch);

}  // namespace tn
