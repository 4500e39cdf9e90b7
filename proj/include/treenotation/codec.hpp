#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "treenotation/tree.hpp"

namespace tn {

/// Object keys keep insertion order so encodings are deterministic.
using JsonValue = nlohmann::ordered_json;

/// Ordered key/value pairs, the in-memory form of a MapTL document.
using StringMap = std::vector<std::pair<std::string, std::string>>;

/// JsonTL node tags.
namespace tag {
inline constexpr std::string_view object = "o";
inline constexpr std::string_view array = "a";
inline constexpr std::string_view string = "s";
inline constexpr std::string_view number = "n";
inline constexpr std::string_view boolean = "b";
inline constexpr std::string_view null = "z";
}  // namespace tag

/// True iff `text` matches the RFC 8259 number production exactly.
bool isJsonNumber(std::string_view text);

/// Untyped projection: keys become firstWords, scalars become content, nested
/// objects become children. Types are not recoverable from the result.
///
/// Strings containing YI become a key node whose children are the parsed
/// string text. Array elements become children: scalars as their own text,
/// containers as an empty line with children.
///
/// Throws ConversionError if the top-level value is not an object or a key is
/// empty or contains XI or YI.
TreeDocument fromJsonUntyped(const JsonValue& value);

/// JsonTL encoder. Each node's firstWord is a one-letter tag; inside objects
/// the second word is the key. Throws ConversionError on keys containing XI or
/// YI and on non-finite numbers.
TreeDocument fromJsonTyped(const JsonValue& value);

/// JsonTL decoder. Throws TlErrors listing every non-conforming node, or
/// ConversionError for an empty document.
JsonValue toJsonTyped(const TreeDocument& doc);

/// MapTL decoder: key = firstWord, value = content. Throws TlErrors on nodes
/// with children, empty keys and duplicate keys.
StringMap toMap(const TreeDocument& doc);

/// MapTL encoder. Throws ConversionError on keys that are empty or contain XI
/// or YI, values containing YI, and duplicate keys.
TreeDocument fromMap(const StringMap& map);

}  // namespace tn
