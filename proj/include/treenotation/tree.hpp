#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "treenotation/error.hpp"

namespace tn {

/// Y Increment: separates nodes.
inline constexpr char kYi = '\n';
/// X Increment: one per depth level. Tabs are content.
inline constexpr char kXi = ' ';
/// Word Increment: splits a line into words. Fixed to the same character as XI.
inline constexpr char kWi = ' ';

/// One line of text plus its ordered children.
struct TreeNode {
  std::string line;
  std::vector<TreeNode> children;

  TreeNode() = default;
  explicit TreeNode(std::string line, std::vector<TreeNode> children = {})
      : line(std::move(line)), children(std::move(children)) {}

  bool operator==(const TreeNode&) const = default;
};

/// The top-level nodes of a Tree Notation text.
///
/// A document built by parse() satisfies two conditions that the checked edit
/// functions below preserve:
///   - no line contains YI;
///   - a line starts with XI only if its node is the first node of the
///     document or the first child of its parent.
/// Under those conditions parse(serialize(d)) == d, with one exception: a
/// lone root with an empty line and no children serializes to "", which is
/// the empty document. The edit functions normalize that case to no roots.
struct TreeDocument {
  std::vector<TreeNode> roots;

  TreeDocument() = default;
  explicit TreeDocument(std::vector<TreeNode> roots) : roots(std::move(roots)) {}

  bool empty() const { return roots.empty(); }
  bool operator==(const TreeDocument&) const = default;
};

TreeDocument parse(std::string_view text);

/// Same result as parse(), with top-level blocks parsed on up to `threads` workers.
TreeDocument parseParallel(std::string_view text, unsigned threads = 0);

std::string serialize(const TreeDocument& doc);
/// Serializes a node and its subtree at the given depth.
std::string serialize(const TreeNode& node, std::size_t depth = 0);

std::vector<std::string> words(const TreeNode& node);
std::vector<std::string> words(std::string_view line);
std::string_view firstWord(const TreeNode& node);
/// Everything after the first WI; empty when the line has none.
std::string_view content(const TreeNode& node);

/// Nullptr when the path does not resolve. The empty path never resolves to a node.
const TreeNode* getNode(const TreeDocument& doc, const NodePath& path);
TreeNode* getNode(TreeDocument& doc, const NodePath& path);

TreeNode& appendChild(TreeDocument& doc, std::string line);
TreeNode& appendChild(TreeNode& parent, std::string line);
TreeNode& insertChild(TreeDocument& doc, std::size_t index, TreeNode node);
TreeNode& insertChild(TreeNode& parent, std::size_t index, TreeNode node);
/// Removes the node and its subtree. Throws RangeError if the path does not resolve.
void deleteNode(TreeDocument& doc, const NodePath& path);
/// Throws InvalidLineError if `line` contains YI or starts with XI. The node's
/// position is unknown here, so a leading XI is refused outright; use the
/// path overload to set one on a first child.
void setLine(TreeNode& node, std::string line);
/// Rejects YI, and a leading XI unless the node is the first node of the
/// document or the first child of its parent. Throws RangeError on a bad path.
void setLine(TreeDocument& doc, const NodePath& path, std::string line);

std::size_t nodeCount(const TreeDocument& doc);
std::size_t nodeCount(const TreeNode& node);
/// Depth of the deepest node; roots are at depth 0. Zero for an empty document.
std::size_t maxDepth(const TreeDocument& doc);

/// True when parse(serialize(doc)) == doc.
bool isCanonical(const TreeDocument& doc);

}  // namespace tn
