#pragma once

// Seeded generators shared by the unit and acceptance suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "treenotation/codec.hpp"
#include "treenotation/tree.hpp"

namespace tn::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline void appendUtf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

/// Random Unicode text with heavy runs of spaces, newlines, tabs and CRs.
inline std::string fuzzText(Rng& rng, std::size_t maxLength) {
  const std::size_t target = uniform(rng, 0, maxLength);
  std::string out;
  while (out.size() < target) {
    switch (uniform(rng, 0, 9)) {
      case 0:
      case 1:
        out.append(uniform(rng, 1, 6), ' ');
        break;
      case 2:
        out.append(uniform(rng, 1, 3), '\n');
        break;
      case 3:
        out.push_back("\t\r\f\v"[uniform(rng, 0, 3)]);
        break;
      case 4: {
        // Any scalar value outside the surrogate range.
        char32_t cp = static_cast<char32_t>(uniform(rng, 0x80, 0x10FFFF));
        if (cp >= 0xD800 && cp <= 0xDFFF) cp = 0xFFFD;
        appendUtf8(out, cp);
        break;
      }
      case 5:
        out.push_back(static_cast<char>(uniform(rng, 0, 255)));
        break;
      default:
        out.push_back(static_cast<char>(uniform(rng, 'a', 'z')));
        break;
    }
  }
  out.resize(std::min(out.size(), maxLength));
  return out;
}

/// Short lines from a small alphabet so that random pairs share lines.
inline std::string smallLine(Rng& rng) {
  static const std::vector<std::string> pool = {"a", "b", "c", "title x", "n 1", "s k v", "", "dup", "dup"};
  return pool[uniform(rng, 0, pool.size() - 1)];
}

inline TreeNode randomNode(Rng& rng, std::size_t depth, std::size_t maxDepth) {
  TreeNode node(smallLine(rng));
  if (depth < maxDepth) {
    const std::size_t n = uniform(rng, 0, depth == 0 ? 4 : 3);
    for (std::size_t i = 0; i < n; ++i) node.children.push_back(randomNode(rng, depth + 1, maxDepth));
  }
  return node;
}

inline TreeDocument randomDocument(Rng& rng, std::size_t maxRoots = 6, std::size_t maxDepth = 3) {
  TreeDocument doc;
  const std::size_t n = uniform(rng, 0, maxRoots);
  for (std::size_t i = 0; i < n; ++i) doc.roots.push_back(randomNode(rng, 0, maxDepth));
  return parse(serialize(doc));
}

/// A random edit of `doc`, used to make related document pairs.
inline TreeDocument mutate(Rng& rng, TreeDocument doc) {
  const std::size_t edits = uniform(rng, 0, 4);
  for (std::size_t e = 0; e < edits; ++e) {
    std::vector<TreeNode>* siblings = &doc.roots;
    while (!siblings->empty() && uniform(rng, 0, 2) == 0) {
      siblings = &(*siblings)[uniform(rng, 0, siblings->size() - 1)].children;
    }
    switch (uniform(rng, 0, 2)) {
      case 0:
        siblings->insert(siblings->begin() + static_cast<std::ptrdiff_t>(uniform(rng, 0, siblings->size())),
                         randomNode(rng, 1, 2));
        break;
      case 1:
        if (!siblings->empty()) siblings->erase(siblings->begin() + static_cast<std::ptrdiff_t>(uniform(rng, 0, siblings->size() - 1)));
        break;
      default:
        if (!siblings->empty()) (*siblings)[uniform(rng, 0, siblings->size() - 1)].line = smallLine(rng);
        break;
    }
  }
  return parse(serialize(doc));
}

/// A single word: no XI, no YI, possibly non-ASCII.
inline std::string randomKey(Rng& rng) {
  static const std::vector<std::string> pool = {"dsl", "ma", "title", "k\xC3\xA9y", "s", "o", "n", "x_1", "tab\tkey", "\"q\""};
  if (uniform(rng, 0, 3) == 0) {
    std::string key;
    const std::size_t n = uniform(rng, 1, 8);
    for (std::size_t i = 0; i < n; ++i) key.push_back(static_cast<char>(uniform(rng, 'a', 'z')));
    return key;
  }
  return pool[uniform(rng, 0, pool.size() - 1)];
}

inline std::string randomString(Rng& rng) {
  static const std::vector<std::string> pool = {"", " ", "yrt", "Web Stats", "a\nb", "  lead", "trail  ",
                                                "x\n\n y\n   z", "\n", "def f():\n    return 1", "\"quoted\" \\ back",
                                                "caf\xC3\xA9 \xE2\x98\x83"};
  return pool[uniform(rng, 0, pool.size() - 1)];
}

inline JsonValue randomJson(Rng& rng, std::size_t depth) {
  const std::size_t kind = uniform(rng, 0, depth == 0 ? 5 : 7);
  switch (kind) {
    case 0: return nullptr;
    case 1: return uniform(rng, 0, 1) == 1;
    case 2: return static_cast<std::int64_t>(uniform(rng, 0, 2'000'000)) - 1'000'000;
    case 3: return std::uniform_real_distribution<double>(-1e6, 1e6)(rng) * std::pow(10.0, static_cast<double>(uniform(rng, 0, 40)) - 20.0);
    case 4:
    case 5: return randomString(rng);
    case 6: {
      JsonValue array = JsonValue::array();
      const std::size_t n = uniform(rng, 0, 4);
      for (std::size_t i = 0; i < n; ++i) array.push_back(randomJson(rng, depth - 1));
      return array;
    }
    default: {
      JsonValue object = JsonValue::object();
      const std::size_t n = uniform(rng, 0, 4);
      for (std::size_t i = 0; i < n; ++i) object[randomKey(rng)] = randomJson(rng, depth - 1);
      return object;
    }
  }
}

inline StringMap randomMap(Rng& rng) {
  StringMap map;
  const std::size_t n = uniform(rng, 0, 8);
  for (std::size_t i = 0; i < n; ++i) {
    std::string key = randomKey(rng) + std::to_string(i);
    std::string value;
    const std::size_t words = uniform(rng, 0, 4);
    for (std::size_t w = 0; w < words; ++w) {
      if (w > 0 || uniform(rng, 0, 4) == 0) value.push_back(' ');
      value += randomKey(rng);
    }
    map.emplace_back(std::move(key), std::move(value));
  }
  return map;
}

}  // namespace tn::testing
