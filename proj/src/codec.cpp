#include "treenotation/codec.hpp"

#include <cctype>
#include <cmath>
#include <set>

namespace tn {

namespace {

bool isDigit(char c) { return c >= '0' && c <= '9'; }

void requireKeyWord(const std::string& key, bool allowEmpty) {
  if (!allowEmpty && key.empty()) throw ConversionError("empty key");
  if (key.find(kYi) != std::string::npos) {
    throw ConversionError("key contains a YI character: \"" + key + "\"");
  }
  if (key.find(kXi) != std::string::npos) {
    throw ConversionError("key contains an XI character: \"" + key + "\"");
  }
}

std::string numberText(const JsonValue& value) {
  if (value.is_number_float() && !std::isfinite(value.get<double>())) {
    throw ConversionError("non-finite number");
  }
  return value.dump();
}

std::vector<TreeNode> linesOf(const std::string& text) { return parse(text).roots; }

// ---- untyped ------------------------------------------------------------

TreeNode untypedElement(const JsonValue& value);

std::vector<TreeNode> untypedMembers(const JsonValue& object) {
  std::vector<TreeNode> out;
  out.reserve(object.size());
  for (const auto& [key, value] : object.items()) {
    requireKeyWord(key, false);
    if (value.is_object()) {
      out.emplace_back(key, untypedMembers(value));
    } else if (value.is_array()) {
      std::vector<TreeNode> elements;
      for (const auto& element : value) elements.push_back(untypedElement(element));
      out.emplace_back(key, std::move(elements));
    } else if (value.is_string()) {
      const auto& text = value.get_ref<const std::string&>();
      if (text.find(kYi) != std::string::npos) {
        out.emplace_back(key, linesOf(text));
      } else {
        out.emplace_back(text.empty() ? key : key + kWi + text);
      }
    } else {
      out.emplace_back(key + kWi + numberText(value));
    }
  }
  return out;
}

TreeNode untypedElement(const JsonValue& value) {
  if (value.is_object()) return TreeNode("", untypedMembers(value));
  if (value.is_array()) {
    std::vector<TreeNode> elements;
    for (const auto& element : value) elements.push_back(untypedElement(element));
    return TreeNode("", std::move(elements));
  }
  if (value.is_string()) {
    const auto& text = value.get_ref<const std::string&>();
    if (text.find(kYi) != std::string::npos || (!text.empty() && text.front() == kXi)) {
      return TreeNode("", linesOf(text));
    }
    return TreeNode(text);
  }
  return TreeNode(numberText(value));
}

// ---- JsonTL encoder -----------------------------------------------------

TreeNode typedNode(const JsonValue& value, const std::string* key) {
  auto head = [&](std::string_view tagName) {
    std::string line(tagName);
    if (key != nullptr) {
      line.push_back(kWi);
      line += *key;
    }
    return line;
  };

  switch (value.type()) {
    case JsonValue::value_t::object: {
      TreeNode node(head(tag::object));
      for (const auto& [memberKey, member] : value.items()) {
        requireKeyWord(memberKey, true);
        node.children.push_back(typedNode(member, &memberKey));
      }
      return node;
    }
    case JsonValue::value_t::array: {
      TreeNode node(head(tag::array));
      for (const auto& element : value) node.children.push_back(typedNode(element, nullptr));
      return node;
    }
    case JsonValue::value_t::string: {
      const auto& text = value.get_ref<const std::string&>();
      if (text.find(kYi) != std::string::npos) return TreeNode(head(tag::string), linesOf(text));
      std::string line = head(tag::string);
      if (!text.empty()) line += kWi + text;
      return TreeNode(std::move(line));
    }
    case JsonValue::value_t::boolean:
      return TreeNode(head(tag::boolean) + kWi + (value.get<bool>() ? "true" : "false"));
    case JsonValue::value_t::null:
      return TreeNode(head(tag::null));
    case JsonValue::value_t::number_integer:
    case JsonValue::value_t::number_unsigned:
    case JsonValue::value_t::number_float:
      return TreeNode(head(tag::number) + kWi + numberText(value));
    default:
      throw ConversionError("unsupported JSON value");
  }
}

// ---- JsonTL decoder -----------------------------------------------------

class TypedDecoder {
 public:
  std::vector<TlError> errors;

  // Returns the decoded value; on error records it and returns null.
  JsonValue decode(const TreeNode& node, const NodePath& path, bool inObject, std::string* key) {
    const std::string_view line = node.line;
    const std::string_view tagName = firstWord(node);
    std::string_view rest = content(node);
    const bool hasRest = line.find(kWi) != std::string_view::npos;

    if (inObject) {
      if (!hasRest) {
        fail(path, TlErrorKind::arityMismatch, "missing key in object member");
        return nullptr;
      }
      const std::size_t wi = rest.find(kWi);
      *key = std::string(rest.substr(0, wi));
      rest = wi == std::string_view::npos ? std::string_view{} : rest.substr(wi + 1);
    }

    if (tagName == tag::object || tagName == tag::array) {
      if (!rest.empty()) {
        fail(path, TlErrorKind::arityMismatch,
             "unexpected words after " + std::string(tagName) + ": \"" + std::string(rest) + "\"");
      }
      return tagName == tag::object ? decodeObject(node, path) : decodeArray(node, path);
    }

    if (tagName == tag::string) {
      if (node.children.empty()) return std::string(rest);
      if (!rest.empty()) {
        fail(path, TlErrorKind::arityMismatch, "string has both inline text and child lines");
        return nullptr;
      }
      return serialize(TreeDocument(node.children));
    }

    if (!node.children.empty()) {
      fail(path.child(0), TlErrorKind::illegalChild,
           "scalar node \"" + std::string(tagName) + "\" cannot have children");
      return nullptr;
    }

    if (tagName == tag::number) {
      if (!isJsonNumber(rest)) {
        fail(path, TlErrorKind::cellTypeMismatch, "malformed number \"" + std::string(rest) + "\"");
        return nullptr;
      }
      try {
        return JsonValue::parse(rest);
      } catch (const nlohmann::json::exception&) {
        fail(path, TlErrorKind::cellTypeMismatch,
             "number out of range \"" + std::string(rest) + "\"");
        return nullptr;
      }
    }
    if (tagName == tag::boolean) {
      if (rest == "true") return true;
      if (rest == "false") return false;
      fail(path, TlErrorKind::cellTypeMismatch, "malformed boolean \"" + std::string(rest) + "\"");
      return nullptr;
    }
    if (tagName == tag::null) {
      if (!rest.empty()) {
        fail(path, TlErrorKind::arityMismatch, "unexpected words after z");
      }
      return nullptr;
    }

    fail(path, TlErrorKind::unknownNodeType, "unknown JsonTL tag \"" + std::string(tagName) + "\"");
    return nullptr;
  }

 private:
  JsonValue decodeObject(const TreeNode& node, const NodePath& path) {
    JsonValue object = JsonValue::object();
    std::set<std::string, std::less<>> seen;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      std::string key;
      const NodePath childPath = path.child(i);
      const std::size_t before = errors.size();
      JsonValue member = decode(node.children[i], childPath, true, &key);
      if (errors.size() != before) continue;
      if (!seen.insert(key).second) {
        fail(childPath, TlErrorKind::duplicateRoot, "duplicate key \"" + key + "\"");
        continue;
      }
      object[key] = std::move(member);
    }
    return object;
  }

  JsonValue decodeArray(const TreeNode& node, const NodePath& path) {
    JsonValue array = JsonValue::array();
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      array.push_back(decode(node.children[i], path.child(i), false, nullptr));
    }
    return array;
  }

  void fail(NodePath path, TlErrorKind kind, std::string message) {
    errors.push_back(TlError{std::move(path), kind, std::move(message), std::nullopt});
  }
};

}  // namespace

bool isJsonNumber(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  if (i < n && text[i] == '-') ++i;
  if (i >= n) return false;
  if (text[i] == '0') {
    ++i;
  } else if (isDigit(text[i])) {
    while (i < n && isDigit(text[i])) ++i;
  } else {
    return false;
  }
  if (i < n && text[i] == '.') {
    ++i;
    if (i >= n || !isDigit(text[i])) return false;
    while (i < n && isDigit(text[i])) ++i;
  }
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
    if (i >= n || !isDigit(text[i])) return false;
    while (i < n && isDigit(text[i])) ++i;
  }
  return i == n;
}

TreeDocument fromJsonUntyped(const JsonValue& value) {
  if (!value.is_object()) throw ConversionError("untyped projection needs a top-level object");
  return TreeDocument(untypedMembers(value));
}

TreeDocument fromJsonTyped(const JsonValue& value) {
  return TreeDocument({typedNode(value, nullptr)});
}

JsonValue toJsonTyped(const TreeDocument& doc) {
  if (doc.roots.empty()) throw ConversionError("JsonTL document is empty");
  TypedDecoder decoder;
  JsonValue value = decoder.decode(doc.roots.front(), NodePath{{0}}, false, nullptr);
  for (std::size_t i = 1; i < doc.roots.size(); ++i) {
    decoder.errors.push_back(TlError{NodePath{{i}}, TlErrorKind::duplicateRoot,
                                     "JsonTL document has more than one root", std::nullopt});
  }
  if (!decoder.errors.empty()) throw TlErrors(std::move(decoder.errors));
  return value;
}

StringMap toMap(const TreeDocument& doc) {
  StringMap map;
  std::vector<TlError> errors;
  std::set<std::string_view, std::less<>> seen;
  for (std::size_t i = 0; i < doc.roots.size(); ++i) {
    const TreeNode& node = doc.roots[i];
    const NodePath path{{i}};
    const std::string_view key = firstWord(node);
    if (!node.children.empty()) {
      errors.push_back({path.child(0), TlErrorKind::illegalChild,
                        "MapTL entry \"" + std::string(key) + "\" has children", std::nullopt});
      continue;
    }
    if (key.empty()) {
      errors.push_back({path, TlErrorKind::arityMismatch, "MapTL entry has no key", std::nullopt});
      continue;
    }
    if (!seen.insert(key).second) {
      errors.push_back({path, TlErrorKind::duplicateRoot,
                        "duplicate key \"" + std::string(key) + "\"", std::nullopt});
      continue;
    }
    map.emplace_back(std::string(key), std::string(content(node)));
  }
  if (!errors.empty()) throw TlErrors(std::move(errors));
  return map;
}

TreeDocument fromMap(const StringMap& map) {
  TreeDocument doc;
  std::set<std::string_view, std::less<>> seen;
  for (const auto& [key, value] : map) {
    requireKeyWord(key, false);
    if (!seen.insert(key).second) throw ConversionError("duplicate key \"" + key + "\"");
    if (value.find(kYi) != std::string::npos) {
      throw ConversionError("value for \"" + key + "\" contains a YI character");
    }
    doc.roots.emplace_back(value.empty() ? key : key + kWi + value);
  }
  return doc;
}

}  // namespace tn
