#pragma once

// Test-only parser for the linear chain syntax, used to check that
// rendering round-trips (and is therefore injective).

#include <optional>
#include <string>

#include "cglink/chain.hpp"

namespace testsupport {

inline std::optional<cglink::Chain> parse_chain(const std::string& s) {
  if (s == "[]") return cglink::Chain{};
  std::size_t i = 0;

  auto parse_concept = [&]() -> std::optional<cglink::ConceptNode> {
    if (i >= s.size() || s[i] != '[') return std::nullopt;
    std::size_t close = s.find(']', i);
    if (close == std::string::npos) return std::nullopt;
    std::string body = s.substr(i + 1, close - i - 1);
    i = close + 1;
    std::size_t colon = body.find(':');
    if (colon == std::string::npos) return cglink::ConceptNode{body, ""};
    return cglink::ConceptNode{body.substr(0, colon), body.substr(colon + 1)};
  };

  auto first = parse_concept();
  if (!first) return std::nullopt;
  cglink::Chain chain = cglink::Chain::single(*first);

  while (i < s.size()) {
    cglink::Direction dir;
    std::string rel;
    if (s.compare(i, 2, "-(") == 0) {
      std::size_t end = s.find(")->", i);
      if (end == std::string::npos) return std::nullopt;
      rel = s.substr(i + 2, end - i - 2);
      dir = cglink::Direction::forward;
      i = end + 3;
    } else if (s.compare(i, 3, "<-(") == 0) {
      std::size_t end = s.find(")-", i + 3);
      if (end == std::string::npos) return std::nullopt;
      rel = s.substr(i + 3, end - i - 3);
      dir = cglink::Direction::backward;
      i = end + 2;
    } else {
      return std::nullopt;
    }
    auto next = parse_concept();
    if (!next) return std::nullopt;
    chain.extend(cglink::Chain::Link{rel, dir}, *next);
  }
  return chain;
}

}  // namespace testsupport
