#pragma once

#include <map>
#include <memory>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "treenotation/tree.hpp"

// A minimal grammar notation for Tree Languages, itself written in Tree Notation.
//
//     nodetype <name>
//      match <firstWord>           defaults to <name>
//      cells <celltype>...         types of the words after firstWord
//      catchAllCell <celltype>     type of any surplus words
//      children <nodetype>...      nodetypes allowed as children
//      catchAllChild <nodetype>    type for children matching no listed literal
//      root [catchAll] [unique]    allowed at depth 0
//      compile <template>          or child lines forming a multi-line template
//     celltype <name>
//      base word|int|float|bool|any
//      enum <value>...
//      regex <ECMAScript pattern>
//
// Lines whose firstWord starts with '#' are comments, blank lines are ignored.
// The base names double as predefined cell types.
//
// `root catchAll` gives a type every depth-0 node that matches no other root
// literal; `root unique` makes repeated firstWords among depth-0 nodes of the
// type a duplicateRoot error.
//
// Templates substitute {i} with word i ({0} is the firstWord), {i*} with words
// i.. joined by WI, {c} with the compiled children joined by YI and {c,} with
// the compiled children joined by ",\n". Any other '{' is literal.

namespace tn {

enum class CellBase { word, integer, decimal, boolean, any };

struct CellTypeDef {
  std::string name;
  CellBase base = CellBase::any;
  std::optional<std::set<std::string>> enumValues;
  std::optional<std::string> regex;
  std::shared_ptr<const std::regex> compiledRegex;

  bool accepts(std::string_view word) const;
};

struct NodeTypeDef {
  std::string name;
  std::string match;
  std::vector<std::string> cells;
  std::optional<std::string> catchAllCell;
  std::vector<std::string> childTypes;
  std::optional<std::string> catchAllChild;
  std::optional<std::string> compileTemplate;
  bool root = false;
  bool rootCatchAll = false;
  bool rootUnique = false;
};

/// Immutable after loadGrammar(); safe to share across threads.
struct Grammar {
  std::string name;
  std::map<std::string, NodeTypeDef, std::less<>> nodeTypes;
  std::map<std::string, CellTypeDef, std::less<>> cellTypes;
  std::set<std::string, std::less<>> rootTypes;

  const NodeTypeDef* nodeType(std::string_view typeName) const;
  const CellTypeDef* cellType(std::string_view typeName) const;
  /// The nodetype whose match literal is `firstWord`, if any.
  const NodeTypeDef* byLiteral(std::string_view firstWord) const;
};

/// Throws GrammarError naming the offending line for unknown directives,
/// dangling references and an empty root set.
Grammar loadGrammar(std::string_view text, std::string name = {});

/// Every TL error in preorder. Each root subtree is checked independently.
std::vector<TlError> check(const TreeDocument& doc, const Grammar& grammar);

/// Same result as check(), with root subtrees checked on up to `threads` workers.
std::vector<TlError> checkParallel(const TreeDocument& doc, const Grammar& grammar,
                                   unsigned threads = 0);

/// Applies firstWord suggestions until none remain. Idempotent.
TreeDocument autofix(const TreeDocument& doc, const Grammar& grammar);

/// Renders each node's template depth-first. Throws CompileError when the
/// document has TL errors or a placeholder is out of range.
std::string compile(const TreeDocument& doc, const Grammar& grammar);

/// One `error` node per TlError with `path`, `kind`, `message` and, when
/// present, `suggestion` children.
TreeDocument errorReport(const std::vector<TlError>& errors);

std::size_t levenshtein(std::string_view a, std::string_view b);

/// Nearest candidate within `maxDistance`, ties broken by byte order.
std::optional<std::string> nearest(std::string_view word,
                                   const std::vector<std::string>& candidates,
                                   std::size_t maxDistance = 2);

}  // namespace tn
