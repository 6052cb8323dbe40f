#pragma once

#include <stdexcept>

#include "cglink/cglink.hpp"

namespace testsupport {

/// The shipped menelas-mini knowledge base, loaded once.
inline const cglink::KnowledgeBase& fixture_kb() {
  static cglink::KnowledgeBase kb = [] {
    cglink::LoadResult res = cglink::parse_kb_file(CGLINK_FIXTURE_KB);
    if (!res.ok()) throw std::runtime_error("fixture KB failed to load");
    return std::move(*res.kb);
  }();
  return kb;
}

}  // namespace testsupport
