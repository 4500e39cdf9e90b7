#include "treenotation/error.hpp"

namespace tn {

std::string to_string(const NodePath& path) {
  std::string out;
  for (std::size_t i = 0; i < path.indices.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += std::to_string(path.indices[i]);
  }
  return out;
}

std::string_view to_string(TlErrorKind kind) {
  switch (kind) {
    case TlErrorKind::unknownNodeType: return "unknownNodeType";
    case TlErrorKind::cellTypeMismatch: return "cellTypeMismatch";
    case TlErrorKind::arityMismatch: return "arityMismatch";
    case TlErrorKind::illegalChild: return "illegalChild";
    case TlErrorKind::duplicateRoot: return "duplicateRoot";
  }
  return "unknown";
}

namespace {

std::string summarize(const std::vector<TlError>& errors) {
  if (errors.empty()) return "no Tree Language errors";
  std::string out = std::to_string(errors.size()) + " Tree Language error(s); first at [" +
                    to_string(errors.front().path) + "]: " + errors.front().message;
  return out;
}

}  // namespace

TlErrors::TlErrors(std::vector<TlError> errors)
    : Error(summarize(errors)), errors_(std::move(errors)) {}

PatchError::PatchError(NodePath path, const std::string& message)
    : Error("patch mismatch at [" + to_string(path) + "]: " + message), path_(std::move(path)) {}

GrammarError::GrammarError(NodePath path, const std::string& message)
    : Error("grammar error at [" + to_string(path) + "]: " + message), path_(std::move(path)) {}

CompileError::CompileError(std::vector<TlError> pending)
    : Error("cannot compile: " + summarize(pending)), pending_(std::move(pending)) {}

CompileError::CompileError(NodePath path, const std::string& message)
    : Error("compile error at [" + to_string(path) + "]: " + message), path_(std::move(path)) {}

}  // namespace tn
