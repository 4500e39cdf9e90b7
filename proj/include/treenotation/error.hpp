#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tn {

/// Zero-based child indices from the document root.
struct NodePath {
  std::vector<std::size_t> indices;

  bool operator==(const NodePath&) const = default;
  auto operator<=>(const NodePath&) const = default;

  NodePath child(std::size_t index) const {
    NodePath p = *this;
    p.indices.push_back(index);
    return p;
  }
  bool empty() const { return indices.empty(); }
};

/// Space-separated indices, e.g. "0 2 1". The empty path renders as "".
std::string to_string(const NodePath& path);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A line that cannot be stored at the requested position.
class InvalidLineError : public Error {
 public:
  using Error::Error;
};

/// Path or insertion index out of range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// JSON/map value that has no encoding in the target notation.
class ConversionError : public Error {
 public:
  using Error::Error;
};

enum class TlErrorKind {
  unknownNodeType,
  cellTypeMismatch,
  arityMismatch,
  illegalChild,
  duplicateRoot,
};

std::string_view to_string(TlErrorKind kind);

/// An error at the Tree Language level. The notation itself never fails to parse.
struct TlError {
  NodePath path;
  TlErrorKind kind;
  std::string message;
  std::optional<std::string> suggestion;

  bool operator==(const TlError&) const = default;
};

/// Thrown by decoders that require a document to conform to a Tree Language.
class TlErrors : public Error {
 public:
  explicit TlErrors(std::vector<TlError> errors);
  const std::vector<TlError>& errors() const { return errors_; }

 private:
  std::vector<TlError> errors_;
};

class PatchError : public Error {
 public:
  PatchError(NodePath path, const std::string& message);
  const NodePath& path() const { return path_; }

 private:
  NodePath path_;
};

class GrammarError : public Error {
 public:
  GrammarError(NodePath path, const std::string& message);
  const NodePath& path() const { return path_; }

 private:
  NodePath path_;
};

/// compile() failure: either the document has pending TlErrors or a template is bad.
class CompileError : public Error {
 public:
  explicit CompileError(std::vector<TlError> pending);
  CompileError(NodePath path, const std::string& message);
  const std::vector<TlError>& pending() const { return pending_; }
  const std::optional<NodePath>& path() const { return path_; }

 private:
  std::vector<TlError> pending_;
  std::optional<NodePath> path_;
};

}  // namespace tn
