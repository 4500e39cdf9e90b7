#include "treenotation/grammar.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>

#include "treenotation/codec.hpp"

namespace tn {

namespace {

constexpr std::size_t kSuggestionDistance = 2;

bool isComment(const TreeNode& node) { return firstWord(node).starts_with('#'); }

bool isBlank(const TreeNode& node) {
  return node.children.empty() &&
         std::all_of(node.line.begin(), node.line.end(), [](char c) { return c == kXi; });
}

bool isInteger(std::string_view word) {
  if (!word.empty() && (word.front() == '+' || word.front() == '-')) word.remove_prefix(1);
  return !word.empty() &&
         std::all_of(word.begin(), word.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::optional<CellBase> baseFromName(std::string_view name) {
  if (name == "word") return CellBase::word;
  if (name == "int") return CellBase::integer;
  if (name == "float") return CellBase::decimal;
  if (name == "bool") return CellBase::boolean;
  if (name == "any") return CellBase::any;
  return std::nullopt;
}

std::vector<std::string> argumentsOf(const TreeNode& node) {
  if (node.line.find(kWi) == std::string::npos) return {};
  return words(content(node));
}

// ---- loading ------------------------------------------------------------

class GrammarLoader {
 public:
  explicit GrammarLoader(std::string name) { grammar_.name = std::move(name); }

  Grammar load(const TreeDocument& doc) {
    for (const char* base : {"word", "int", "float", "bool", "any"}) {
      grammar_.cellTypes[base] = CellTypeDef{base, *baseFromName(base), {}, {}, {}};
    }
    for (std::size_t i = 0; i < doc.roots.size(); ++i) {
      const TreeNode& node = doc.roots[i];
      const NodePath path{{i}};
      if (isBlank(node) || isComment(node)) continue;
      const std::string_view kind = firstWord(node);
      const auto args = argumentsOf(node);
      if (kind != "nodetype" && kind != "celltype") {
        throw GrammarError(path, "unknown directive \"" + std::string(kind) + "\"");
      }
      if (args.size() != 1 || args.front().empty()) {
        throw GrammarError(path, std::string(kind) + " needs exactly one name");
      }
      if (kind == "nodetype") {
        loadNodeType(node, path, args.front());
      } else {
        loadCellType(node, path, args.front());
      }
    }
    resolve();
    return std::move(grammar_);
  }

 private:
  void loadNodeType(const TreeNode& node, const NodePath& path, const std::string& name) {
    if (grammar_.nodeTypes.contains(name)) {
      throw GrammarError(path, "nodetype \"" + name + "\" defined twice");
    }
    NodeTypeDef def;
    def.name = name;
    def.match = name;
    std::set<std::string, std::less<>> seen;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const TreeNode& line = node.children[i];
      const NodePath at = path.child(i);
      if (isBlank(line) || isComment(line)) continue;
      const std::string directive(firstWord(line));
      if (!seen.insert(directive).second) {
        throw GrammarError(at, "directive \"" + directive + "\" repeated");
      }
      auto args = argumentsOf(line);
      if (directive != "compile" && !line.children.empty()) {
        throw GrammarError(at.child(0), "directive \"" + directive + "\" takes no children");
      }
      if (directive == "match") {
        def.match = single(args, at, directive);
      } else if (directive == "cells") {
        def.cells = std::move(args);
      } else if (directive == "catchAllCell") {
        def.catchAllCell = single(args, at, directive);
      } else if (directive == "children") {
        def.childTypes = std::move(args);
      } else if (directive == "catchAllChild") {
        def.catchAllChild = single(args, at, directive);
      } else if (directive == "root") {
        def.root = true;
        for (const auto& flag : args) {
          if (flag == "catchAll") {
            def.rootCatchAll = true;
          } else if (flag == "unique") {
            def.rootUnique = true;
          } else {
            throw GrammarError(at, "unknown root flag \"" + flag + "\"");
          }
        }
      } else if (directive == "compile") {
        if (!line.children.empty()) {
          if (!content(line).empty()) {
            throw GrammarError(at, "compile has both an inline template and child lines");
          }
          def.compileTemplate = serialize(TreeDocument(line.children));
        } else {
          def.compileTemplate = std::string(content(line));
        }
      } else {
        throw GrammarError(at, "unknown directive \"" + directive + "\"");
      }
    }
    paths_[name] = path;
    grammar_.nodeTypes.emplace(name, std::move(def));
  }

  void loadCellType(const TreeNode& node, const NodePath& path, const std::string& name) {
    if (grammar_.cellTypes.contains(name)) {
      throw GrammarError(path, "celltype \"" + name + "\" defined twice");
    }
    CellTypeDef def;
    def.name = name;
    bool hasBase = false;
    std::set<std::string, std::less<>> seen;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const TreeNode& line = node.children[i];
      const NodePath at = path.child(i);
      if (isBlank(line) || isComment(line)) continue;
      const std::string directive(firstWord(line));
      if (!seen.insert(directive).second) {
        throw GrammarError(at, "directive \"" + directive + "\" repeated");
      }
      if (!line.children.empty()) {
        throw GrammarError(at.child(0), "directive \"" + directive + "\" takes no children");
      }
      auto args = argumentsOf(line);
      if (directive == "base") {
        const auto base = baseFromName(single(args, at, directive));
        if (!base) throw GrammarError(at, "unknown base \"" + std::string(content(line)) + "\"");
        def.base = *base;
        hasBase = true;
      } else if (directive == "enum") {
        if (args.empty()) throw GrammarError(at, "enum needs at least one value");
        def.enumValues.emplace(args.begin(), args.end());
      } else if (directive == "regex") {
        def.regex = std::string(content(line));
        try {
          def.compiledRegex = std::make_shared<const std::regex>(*def.regex);
        } catch (const std::regex_error& e) {
          throw GrammarError(at, "bad regex: " + std::string(e.what()));
        }
      } else {
        throw GrammarError(at, "unknown directive \"" + directive + "\"");
      }
    }
    if (!hasBase) throw GrammarError(path, "celltype \"" + name + "\" needs a base");
    grammar_.cellTypes.emplace(name, std::move(def));
  }

  static std::string single(const std::vector<std::string>& args, const NodePath& at,
                            const std::string& directive) {
    if (args.size() != 1 || args.front().empty()) {
      throw GrammarError(at, directive + " needs exactly one argument");
    }
    return args.front();
  }

  void resolve() {
    std::map<std::string, std::string, std::less<>> literals;
    std::optional<std::string> rootCatchAll;
    for (const auto& [name, def] : grammar_.nodeTypes) {
      const NodePath& at = paths_.at(name);
      auto requireCell = [&](const std::string& cell) {
        if (grammar_.cellType(cell) == nullptr) {
          throw GrammarError(at, "nodetype \"" + name + "\" references unknown celltype \"" +
                                     cell + "\"");
        }
      };
      auto requireNode = [&](const std::string& type) {
        if (grammar_.nodeType(type) == nullptr) {
          throw GrammarError(at, "nodetype \"" + name + "\" references unknown nodetype \"" +
                                     type + "\"");
        }
      };
      for (const auto& cell : def.cells) requireCell(cell);
      if (def.catchAllCell) requireCell(*def.catchAllCell);
      for (const auto& child : def.childTypes) requireNode(child);
      if (def.catchAllChild) requireNode(*def.catchAllChild);

      if (auto [it, fresh] = literals.emplace(def.match, name); !fresh) {
        throw GrammarError(at, "nodetypes \"" + it->second + "\" and \"" + name +
                                   "\" both match \"" + def.match + "\"");
      }
      if (def.root) grammar_.rootTypes.insert(name);
      if (def.rootCatchAll) {
        if (rootCatchAll) {
          throw GrammarError(at, "nodetypes \"" + *rootCatchAll + "\" and \"" + name +
                                     "\" are both root catchAll");
        }
        rootCatchAll = name;
      }
    }
    if (grammar_.rootTypes.empty()) throw GrammarError(NodePath{}, "empty rootTypes");
  }

  Grammar grammar_;
  std::map<std::string, NodePath, std::less<>> paths_;
};

// ---- checking -----------------------------------------------------------

// The nodetypes a node may take in one position of the tree.
struct Context {
  std::vector<const NodeTypeDef*> literal;
  const NodeTypeDef* catchAll = nullptr;
};

class Checker {
 public:
  explicit Checker(const Grammar& grammar) : grammar_(grammar) {
    for (const auto& name : grammar.rootTypes) {
      const NodeTypeDef* def = grammar.nodeType(name);
      roots_.literal.push_back(def);
      if (def->rootCatchAll) roots_.catchAll = def;
    }
  }

  const Context& rootContext() const { return roots_; }

  Context childContext(const NodeTypeDef& parent) const {
    Context context;
    for (const auto& name : parent.childTypes) context.literal.push_back(grammar_.nodeType(name));
    if (parent.catchAllChild) context.catchAll = grammar_.nodeType(*parent.catchAllChild);
    return context;
  }

  /// The node's type in `context`, or nullptr with an error recorded.
  /// A type that exists but is not allowed here yields illegalChild and is still returned.
  const NodeTypeDef* resolve(const TreeNode& node, const NodePath& path, const Context& context,
                             std::vector<TlError>& errors) const {
    const std::string_view word = firstWord(node);
    for (const NodeTypeDef* def : context.literal) {
      if (def->match == word) return def;
    }
    if (context.catchAll != nullptr) return context.catchAll;
    if (const NodeTypeDef* def = grammar_.byLiteral(word)) {
      errors.push_back({path, TlErrorKind::illegalChild,
                        "\"" + std::string(word) + "\" is not allowed here", std::nullopt});
      return def;
    }
    std::vector<std::string> candidates;
    for (const NodeTypeDef* def : context.literal) candidates.push_back(def->match);
    errors.push_back({path, TlErrorKind::unknownNodeType,
                      "unknown node type \"" + std::string(word) + "\"",
                      nearest(word, candidates, kSuggestionDistance)});
    return nullptr;
  }

  void checkSubtree(const TreeNode& node, const NodePath& path, const NodeTypeDef& type,
                    std::vector<TlError>& errors) const {
    checkCells(node, path, type, errors);
    const Context context = childContext(type);
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const NodePath childPath = path.child(i);
      const TreeNode& child = node.children[i];
      if (const NodeTypeDef* childType = resolve(child, childPath, context, errors)) {
        checkSubtree(child, childPath, *childType, errors);
      }
    }
  }

  // Per-root error blocks holding type resolution and duplicateRoot errors;
  // `types` receives each root's type for the subtree pass.
  std::vector<std::vector<TlError>> rootErrors(const TreeDocument& doc,
                                               std::vector<const NodeTypeDef*>& types) const {
    std::vector<std::vector<TlError>> out(doc.roots.size());
    types.assign(doc.roots.size(), nullptr);
    std::map<const NodeTypeDef*, std::set<std::string_view>> seen;
    for (std::size_t i = 0; i < doc.roots.size(); ++i) {
      const NodePath path{{i}};
      types[i] = resolve(doc.roots[i], path, roots_, out[i]);
      if (types[i] != nullptr && types[i]->rootUnique &&
          !seen[types[i]].insert(firstWord(doc.roots[i])).second) {
        out[i].push_back({path, TlErrorKind::duplicateRoot,
                          "duplicate root \"" + std::string(firstWord(doc.roots[i])) + "\"",
                          std::nullopt});
      }
    }
    return out;
  }

  const Grammar& grammar() const { return grammar_; }

 private:
  void checkCells(const TreeNode& node, const NodePath& path, const NodeTypeDef& type,
                  std::vector<TlError>& errors) const {
    const auto args = argumentsOf(node);
    const std::size_t fixed = type.cells.size();
    if (args.size() < fixed || (args.size() > fixed && !type.catchAllCell)) {
      errors.push_back({path, TlErrorKind::arityMismatch,
                        "\"" + type.name + "\" expects " + std::to_string(fixed) +
                            (type.catchAllCell ? " or more" : "") + " word(s) after \"" +
                            type.match + "\", got " + std::to_string(args.size()),
                        std::nullopt});
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      const std::string* cellName = i < fixed ? &type.cells[i]
                                    : type.catchAllCell ? &*type.catchAllCell
                                                        : nullptr;
      if (cellName == nullptr) break;
      const CellTypeDef& cell = *grammar_.cellType(*cellName);
      if (cell.accepts(args[i])) continue;
      std::optional<std::string> suggestion;
      if (cell.enumValues) {
        suggestion = nearest(args[i], {cell.enumValues->begin(), cell.enumValues->end()},
                             kSuggestionDistance);
      }
      errors.push_back({path, TlErrorKind::cellTypeMismatch,
                        "word " + std::to_string(i + 1) + " \"" + args[i] + "\" is not a " +
                            *cellName,
                        std::move(suggestion)});
    }
  }

  const Grammar& grammar_;
  Context roots_;
};

std::vector<TlError> flatten(std::vector<std::vector<TlError>> blocks) {
  std::vector<TlError> out;
  for (auto& block : blocks) std::move(block.begin(), block.end(), std::back_inserter(out));
  return out;
}

// ---- compiling ----------------------------------------------------------

std::string joined(const std::vector<std::string>& parts, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += separator;
    out += parts[i];
  }
  return out;
}

std::string render(const std::string& tmpl, const TreeNode& node, const NodePath& path,
                   const std::vector<std::string>& compiledChildren) {
  const auto ws = words(node);
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    const std::size_t close = tmpl[i] == '{' ? tmpl.find('}', i + 1) : std::string::npos;
    if (close == std::string::npos) {
      out.push_back(tmpl[i++]);
      continue;
    }
    const std::string_view inner = std::string_view(tmpl).substr(i + 1, close - i - 1);
    if (inner == "c" || inner == "c,") {
      out += joined(compiledChildren, inner == "c" ? std::string_view("\n") : ",\n");
      i = close + 1;
      continue;
    }
    const bool rest = inner.ends_with('*');
    const std::string_view digits = rest ? inner.substr(0, inner.size() - 1) : inner;
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      out.push_back(tmpl[i++]);
      continue;
    }
    const std::size_t index = std::stoull(std::string(digits));
    if (rest ? index > ws.size() : index >= ws.size()) {
      throw CompileError(path, "placeholder {" + std::string(inner) + "} out of range for \"" +
                                   node.line + "\"");
    }
    if (rest) {
      out += joined({ws.begin() + static_cast<std::ptrdiff_t>(index), ws.end()}, " ");
    } else {
      out += ws[index];
    }
    i = close + 1;
  }
  return out;
}

std::string compileNode(const Checker& checker, const TreeNode& node, const NodePath& path,
                        const NodeTypeDef& type) {
  const Context context = checker.childContext(type);
  std::vector<std::string> children;
  std::vector<TlError> ignored;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    const NodeTypeDef* childType = checker.resolve(node.children[i], path.child(i), context, ignored);
    children.push_back(compileNode(checker, node.children[i], path.child(i), *childType));
  }
  if (!type.compileTemplate) return joined(children, "\n");
  return render(*type.compileTemplate, node, path, children);
}

}  // namespace

bool CellTypeDef::accepts(std::string_view word) const {
  switch (base) {
    case CellBase::word:
      if (word.empty()) return false;
      break;
    case CellBase::integer:
      if (!isInteger(word)) return false;
      break;
    case CellBase::decimal:
      if (!isJsonNumber(word)) return false;
      break;
    case CellBase::boolean:
      if (word != "true" && word != "false") return false;
      break;
    case CellBase::any:
      break;
  }
  if (enumValues && !enumValues->contains(std::string(word))) return false;
  if (compiledRegex && !std::regex_match(word.begin(), word.end(), *compiledRegex)) return false;
  return true;
}

const NodeTypeDef* Grammar::nodeType(std::string_view typeName) const {
  const auto it = nodeTypes.find(typeName);
  return it == nodeTypes.end() ? nullptr : &it->second;
}

const CellTypeDef* Grammar::cellType(std::string_view typeName) const {
  const auto it = cellTypes.find(typeName);
  return it == cellTypes.end() ? nullptr : &it->second;
}

const NodeTypeDef* Grammar::byLiteral(std::string_view firstWord) const {
  for (const auto& [name, def] : nodeTypes) {
    if (def.match == firstWord) return &def;
  }
  return nullptr;
}

Grammar loadGrammar(std::string_view text, std::string name) {
  return GrammarLoader(std::move(name)).load(parse(text));
}

std::vector<TlError> check(const TreeDocument& doc, const Grammar& grammar) {
  const Checker checker(grammar);
  std::vector<const NodeTypeDef*> types;
  auto blocks = checker.rootErrors(doc, types);
  for (std::size_t i = 0; i < doc.roots.size(); ++i) {
    if (types[i] != nullptr) checker.checkSubtree(doc.roots[i], NodePath{{i}}, *types[i], blocks[i]);
  }
  return flatten(std::move(blocks));
}

std::vector<TlError> checkParallel(const TreeDocument& doc, const Grammar& grammar,
                                   unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const Checker checker(grammar);
  std::vector<const NodeTypeDef*> types;
  auto blocks = checker.rootErrors(doc, types);

  const std::size_t roots = doc.roots.size();
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, roots));
  const std::size_t perWorker = roots == 0 ? 1 : (roots + workers - 1) / workers;
  std::vector<std::future<void>> jobs;
  for (std::size_t first = 0; first < roots; first += perWorker) {
    const std::size_t last = std::min(roots, first + perWorker);
    // Each job writes only to its own blocks.
    jobs.push_back(std::async(std::launch::async, [&, first, last] {
      for (std::size_t i = first; i < last; ++i) {
        if (types[i] != nullptr) {
          checker.checkSubtree(doc.roots[i], NodePath{{i}}, *types[i], blocks[i]);
        }
      }
    }));
  }
  for (auto& job : jobs) job.get();
  return flatten(std::move(blocks));
}

TreeDocument autofix(const TreeDocument& doc, const Grammar& grammar) {
  TreeDocument fixed = doc;
  while (true) {
    bool changed = false;
    for (const TlError& error : check(fixed, grammar)) {
      if (error.kind != TlErrorKind::unknownNodeType || !error.suggestion) continue;
      TreeNode* node = getNode(fixed, error.path);
      node->line = *error.suggestion + node->line.substr(firstWord(*node).size());
      changed = true;
    }
    if (!changed) return fixed;
  }
}

std::string compile(const TreeDocument& doc, const Grammar& grammar) {
  if (auto errors = check(doc, grammar); !errors.empty()) throw CompileError(std::move(errors));
  const Checker checker(grammar);
  std::vector<const NodeTypeDef*> types;
  checker.rootErrors(doc, types);
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < doc.roots.size(); ++i) {
    parts.push_back(compileNode(checker, doc.roots[i], NodePath{{i}}, *types[i]));
  }
  return joined(parts, "\n");
}

TreeDocument errorReport(const std::vector<TlError>& errors) {
  TreeDocument report;
  for (const TlError& error : errors) {
    TreeNode& node = report.roots.emplace_back("error");
    const std::string path = to_string(error.path);
    node.children.emplace_back(path.empty() ? "path" : "path " + path);
    node.children.emplace_back("kind " + std::string(to_string(error.kind)));
    node.children.emplace_back("message " + error.message);
    if (error.suggestion) node.children.emplace_back("suggestion " + *error.suggestion);
  }
  return report;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diagonal + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diagonal = above;
    }
  }
  return row[b.size()];
}

std::optional<std::string> nearest(std::string_view word,
                                   const std::vector<std::string>& candidates,
                                   std::size_t maxDistance) {
  std::optional<std::string> best;
  std::size_t bestDistance = maxDistance + 1;
  for (const auto& candidate : candidates) {
    const std::size_t d = levenshtein(word, candidate);
    if (d < bestDistance || (d == bestDistance && best && candidate < *best)) {
      best = candidate;
      bestDistance = d;
    }
  }
  return best;
}

}  // namespace tn
