#include "treenotation/diff.hpp"

#include <charconv>
#include <string>

namespace tn {

namespace {

constexpr std::string_view kKeep = "keep";
constexpr std::string_view kDelete = "delete";
constexpr std::string_view kInsert = "insert";
constexpr std::string_view kDescend = "descend";

class OpWriter {
 public:
  explicit OpWriter(std::vector<TreeNode>& out) : out_(out) {}

  void keep(std::size_t n) { counted(kKeep, n); }
  void remove(std::size_t n) { counted(kDelete, n); }

  void insert(const TreeNode& node) {
    if (out_.empty() || out_.back().line != kInsert) out_.emplace_back(std::string(kInsert));
    out_.back().children.push_back(node);
  }

  void descend(std::vector<TreeNode> nested) {
    out_.emplace_back(std::string(kDescend), std::move(nested));
  }

 private:
  // Adjacent keep/delete runs merge into one operation.
  void counted(std::string_view op, std::size_t n) {
    if (n == 0) return;
    if (!out_.empty() && firstWord(out_.back()) == op && out_.back().children.empty()) {
      const std::size_t previous = std::stoull(std::string(content(out_.back())));
      out_.back().line = std::string(op) + kWi + std::to_string(previous + n);
      return;
    }
    out_.emplace_back(std::string(op) + kWi + std::to_string(n));
  }

  std::vector<TreeNode>& out_;
};

std::vector<TreeNode> diffSiblings(const std::vector<TreeNode>& a, const std::vector<TreeNode>& b) {
  std::vector<TreeNode> ops;
  OpWriter writer(ops);

  // Common prefix and suffix never change the earliest-match LCS, and they
  // keep the table small for the usual case of a few local edits.
  std::size_t prefix = 0;
  while (prefix < a.size() && prefix < b.size() && a[prefix].line == b[prefix].line) ++prefix;
  std::size_t suffix = 0;
  while (suffix < a.size() - prefix && suffix < b.size() - prefix &&
         a[a.size() - 1 - suffix].line == b[b.size() - 1 - suffix].line) {
    ++suffix;
  }

  const std::size_t n = a.size() - prefix - suffix;
  const std::size_t m = b.size() - prefix - suffix;

  // lcs[i][j] = LCS length of a[prefix+i..] and b[prefix+j..] within the middle.
  std::vector<std::vector<std::uint32_t>> lcs(n + 1, std::vector<std::uint32_t>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      lcs[i][j] = a[prefix + i].line == b[prefix + j].line
                      ? lcs[i + 1][j + 1] + 1
                      : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }

  auto matched = [&](const TreeNode& x, const TreeNode& y) {
    if (x.children == y.children) {
      writer.keep(1);
    } else {
      writer.descend(diffSiblings(x.children, y.children));
    }
  };

  for (std::size_t k = 0; k < prefix; ++k) matched(a[k], b[k]);

  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a[prefix + i].line == b[prefix + j].line) {
      matched(a[prefix + i], b[prefix + j]);
      ++i;
      ++j;
    } else if (i < n && (j == m || lcs[i + 1][j] >= lcs[i][j + 1])) {
      writer.remove(1);
      ++i;
    } else {
      writer.insert(b[prefix + j]);
      ++j;
    }
  }

  for (std::size_t k = 0; k < suffix; ++k) {
    matched(a[a.size() - suffix + k], b[b.size() - suffix + k]);
  }
  return ops;
}

std::size_t countOf(const TreeNode& op, const NodePath& opPath) {
  const std::string_view text = content(op);
  std::size_t n = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw PatchError(opPath, "bad count in \"" + op.line + "\"");
  }
  if (!op.children.empty()) throw PatchError(opPath, "\"" + op.line + "\" takes no children");
  return n;
}

// `where` is the path of the parent of `source` in the source document; the
// error path names the first source sibling the failing operation addresses.
std::vector<TreeNode> applySiblings(const std::vector<TreeNode>& ops,
                                    const std::vector<TreeNode>& source, const NodePath& where) {
  std::vector<TreeNode> out;
  std::size_t cursor = 0;
  for (const TreeNode& op : ops) {
    const std::string_view name = firstWord(op);
    const NodePath at = where.child(cursor);
    if (name == kKeep || name == kDelete) {
      if (op.line.find(kWi) == std::string::npos) {
        throw PatchError(at, "\"" + op.line + "\" needs a count");
      }
      const std::size_t n = countOf(op, at);
      if (n > source.size() - cursor) {
        throw PatchError(at, "\"" + op.line + "\" overruns " +
                                 std::to_string(source.size() - cursor) + " remaining node(s)");
      }
      if (name == kKeep) {
        out.insert(out.end(), source.begin() + static_cast<std::ptrdiff_t>(cursor),
                   source.begin() + static_cast<std::ptrdiff_t>(cursor + n));
      }
      cursor += n;
    } else if (op.line == kInsert) {
      out.insert(out.end(), op.children.begin(), op.children.end());
    } else if (op.line == kDescend) {
      if (cursor >= source.size()) throw PatchError(at, "descend past the last node");
      out.emplace_back(source[cursor].line,
                       applySiblings(op.children, source[cursor].children, at));
      ++cursor;
    } else {
      throw PatchError(at, "unknown patch operation \"" + op.line + "\"");
    }
  }
  if (cursor != source.size()) {
    throw PatchError(where.child(cursor), "patch leaves " + std::to_string(source.size() - cursor) +
                                              " node(s) unconsumed");
  }
  return out;
}

bool containsEdits(const std::vector<TreeNode>& ops) {
  for (const TreeNode& op : ops) {
    const std::string_view name = firstWord(op);
    if (name == kInsert || name == kDelete) return true;
    if (name == kDescend && containsEdits(op.children)) return true;
  }
  return false;
}

}  // namespace

Patch diff(const TreeDocument& a, const TreeDocument& b) {
  Patch patch{TreeDocument(diffSiblings(a.roots, b.roots))};
  if (patch.ops.roots.empty()) patch.ops.roots.emplace_back(std::string(kKeep) + " 0");
  return patch;
}

TreeDocument apply(const Patch& patch, const TreeDocument& a) {
  TreeDocument result(applySiblings(patch.ops.roots, a.roots, NodePath{}));
  if (result == TreeDocument({TreeNode()})) return TreeDocument{};
  if (!isCanonical(result)) {
    throw PatchError(NodePath{}, "inserted content starts with XI where it cannot round trip");
  }
  return result;
}

bool hasEdits(const Patch& patch) { return containsEdits(patch.ops.roots); }

}  // namespace tn
