#include "treenotation/tree.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace tn {

namespace {

std::size_t leadingXi(std::string_view line) {
  std::size_t k = 0;
  while (k < line.size() && line[k] == kXi) ++k;
  return k;
}

bool startsWithXi(std::string_view line) { return !line.empty() && line.front() == kXi; }

void requireNoYi(std::string_view line) {
  if (line.find(kYi) != std::string_view::npos) {
    throw InvalidLineError("line contains a YI character");
  }
}

// A subtree is insertable as a non-first sibling when its own line has no
// leading XI (unless allowed) and every non-first child below it obeys the same rule.
bool subtreeCanonical(const TreeNode& node, bool leadingXiAllowed) {
  if (node.line.find(kYi) != std::string::npos) return false;
  if (!leadingXiAllowed && startsWithXi(node.line)) return false;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (!subtreeCanonical(node.children[i], i == 0)) return false;
  }
  return true;
}

bool siblingsCanonical(const std::vector<TreeNode>& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!subtreeCanonical(nodes[i], i == 0)) return false;
  }
  return true;
}

TreeNode& insertInto(std::vector<TreeNode>& siblings, std::size_t index, TreeNode node) {
  if (index > siblings.size()) {
    throw RangeError("insert index " + std::to_string(index) + " exceeds child count " +
                     std::to_string(siblings.size()));
  }
  if (!subtreeCanonical(node, index == 0)) {
    throw InvalidLineError(
        "subtree contains a YI, or a line starting with XI that is not a first child");
  }
  if (index == 0 && !siblings.empty() && startsWithXi(siblings.front().line)) {
    throw InvalidLineError("the current first child starts with XI and cannot be displaced");
  }
  return *siblings.insert(siblings.begin() + static_cast<std::ptrdiff_t>(index), std::move(node));
}

// {""} and {} share the text "".
void normalize(TreeDocument& doc) {
  if (doc.roots.size() == 1 && doc.roots.front().line.empty() && doc.roots.front().children.empty()) {
    doc.roots.clear();
  }
}

void serializeInto(const TreeNode& node, std::size_t depth, std::string& out, bool& first) {
  if (!first) out.push_back(kYi);
  first = false;
  out.append(depth, kXi);
  out += node.line;
  for (const auto& child : node.children) serializeInto(child, depth + 1, out, first);
}

void maxDepthOf(const TreeNode& node, std::size_t depth, std::size_t& best) {
  best = std::max(best, depth);
  for (const auto& child : node.children) maxDepthOf(child, depth + 1, best);
}

}  // namespace

TreeDocument parse(std::string_view text) {
  TreeDocument doc;
  if (text.empty()) return doc;

  // stack[d] is the most recent node at depth d.
  std::vector<TreeNode*> stack;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(kYi, start);
    const std::string_view line =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);

    const std::size_t depth = std::min(leadingXi(line), stack.size());
    std::string body(line.substr(depth));
    TreeNode* node = nullptr;
    if (depth == 0) {
      node = &doc.roots.emplace_back(std::move(body));
    } else {
      node = &stack[depth - 1]->children.emplace_back(std::move(body));
    }
    stack.resize(depth);
    stack.push_back(node);

    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return doc;
}

TreeDocument parseParallel(std::string_view text, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (text.empty() || threads == 1) return parse(text);

  // A line with no leading XI is always at depth 0, so the text splits into
  // independent top-level blocks at each YI followed by a non-XI character.
  std::vector<std::size_t> blockStarts{0};
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (text[i] == kYi && text[i + 1] != kXi) blockStarts.push_back(i + 1);
  }
  if (text.back() == kYi) blockStarts.push_back(text.size());

  const std::size_t blocks = blockStarts.size();
  const std::size_t workers = std::min<std::size_t>(threads, blocks);
  const std::size_t perWorker = (blocks + workers - 1) / workers;

  std::vector<std::future<TreeDocument>> parts;
  for (std::size_t first = 0; first < blocks; first += perWorker) {
    const std::size_t last = std::min(blocks, first + perWorker);
    const std::size_t from = blockStarts[first];
    // Each chunk ends just before the YI that precedes the next chunk.
    const std::size_t to = last < blocks ? blockStarts[last] - 1 : text.size();
    const std::string_view chunk = text.substr(from, to - from);
    // parse("") yields no roots, but an empty chunk here is a real empty line.
    parts.push_back(std::async(std::launch::async, [chunk] {
      return chunk.empty() ? TreeDocument({TreeNode()}) : parse(chunk);
    }));
  }

  TreeDocument doc;
  for (auto& part : parts) {
    TreeDocument piece = part.get();
    std::move(piece.roots.begin(), piece.roots.end(), std::back_inserter(doc.roots));
  }
  return doc;
}

std::string serialize(const TreeDocument& doc) {
  std::string out;
  bool first = true;
  for (const auto& root : doc.roots) serializeInto(root, 0, out, first);
  return out;
}

std::string serialize(const TreeNode& node, std::size_t depth) {
  std::string out;
  bool first = true;
  serializeInto(node, depth, out, first);
  return out;
}

std::vector<std::string> words(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(kWi, start);
    if (end == std::string_view::npos) {
      out.emplace_back(line.substr(start));
      return out;
    }
    out.emplace_back(line.substr(start, end - start));
    start = end + 1;
  }
}

std::vector<std::string> words(const TreeNode& node) { return words(node.line); }

std::string_view firstWord(const TreeNode& node) {
  const std::string_view line = node.line;
  return line.substr(0, line.find(kWi));
}

std::string_view content(const TreeNode& node) {
  const std::string_view line = node.line;
  const std::size_t wi = line.find(kWi);
  return wi == std::string_view::npos ? std::string_view{} : line.substr(wi + 1);
}

const TreeNode* getNode(const TreeDocument& doc, const NodePath& path) {
  if (path.empty()) return nullptr;
  const std::vector<TreeNode>* siblings = &doc.roots;
  const TreeNode* node = nullptr;
  for (const std::size_t index : path.indices) {
    if (index >= siblings->size()) return nullptr;
    node = &(*siblings)[index];
    siblings = &node->children;
  }
  return node;
}

TreeNode* getNode(TreeDocument& doc, const NodePath& path) {
  return const_cast<TreeNode*>(getNode(static_cast<const TreeDocument&>(doc), path));
}

TreeNode& appendChild(TreeDocument& doc, std::string line) {
  return insertChild(doc, doc.roots.size(), TreeNode(std::move(line)));
}


TreeNode& appendChild(TreeNode& parent, std::string line) {
  return insertChild(parent, parent.children.size(), TreeNode(std::move(line)));
}

TreeNode& insertChild(TreeDocument& doc, std::size_t index, TreeNode node) {
  if (doc.roots.empty() && node.line.empty() && node.children.empty()) {
    throw InvalidLineError("a lone empty line is the empty document");
  }
  return insertInto(doc.roots, index, std::move(node));
}

TreeNode& insertChild(TreeNode& parent, std::size_t index, TreeNode node) {
  return insertInto(parent.children, index, std::move(node));
}

void deleteNode(TreeDocument& doc, const NodePath& path) {
  if (getNode(doc, path) == nullptr) {
    throw RangeError("no node at path [" + to_string(path) + "]");
  }
  std::vector<TreeNode>* siblings = &doc.roots;
  for (std::size_t i = 0; i + 1 < path.indices.size(); ++i) {
    siblings = &(*siblings)[path.indices[i]].children;
  }
  siblings->erase(siblings->begin() + static_cast<std::ptrdiff_t>(path.indices.back()));
  normalize(doc);
}

void setLine(TreeNode& node, std::string line) {
  requireNoYi(line);
  if (startsWithXi(line)) {
    throw InvalidLineError("line starts with XI; set it through its document path");
  }
  node.line = std::move(line);
}

void setLine(TreeDocument& doc, const NodePath& path, std::string line) {
  TreeNode* node = getNode(doc, path);
  if (node == nullptr) throw RangeError("no node at path [" + to_string(path) + "]");
  requireNoYi(line);
  if (startsWithXi(line) && path.indices.back() != 0) {
    throw InvalidLineError("only a first child may start with XI");
  }
  node->line = std::move(line);
  normalize(doc);
}

std::size_t nodeCount(const TreeNode& node) {
  std::size_t n = 1;
  for (const auto& child : node.children) n += nodeCount(child);
  return n;
}

std::size_t nodeCount(const TreeDocument& doc) {
  std::size_t n = 0;
  for (const auto& root : doc.roots) n += nodeCount(root);
  return n;
}

std::size_t maxDepth(const TreeDocument& doc) {
  std::size_t best = 0;
  for (const auto& root : doc.roots) maxDepthOf(root, 0, best);
  return best;
}

bool isCanonical(const TreeDocument& doc) {
  if (doc.roots.size() == 1 && doc.roots.front().line.empty() && doc.roots.front().children.empty()) {
    return false;
  }
  return siblingsCanonical(doc.roots);
}

}  // namespace tn
