#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cglink/errors.hpp"
#include "cglink/resolver.hpp"

namespace cglink {

/// Parses a sentence triple file: one `PARENT<TAB>GRAMREL<TAB>CHILD` line
/// per grammatical link, `#` comments and blank lines ignored. The first
/// line's parent is the sentence head; tree-shape is checked at resolution
/// time.
inline std::vector<Triple> parse_triples(const std::string& text) {
  std::vector<Triple> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t tab1 = line.find('\t');
    std::size_t tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos)
      raise(errc::invalid_triple_file,
            "line " + std::to_string(lineno) + ": expected PARENT<TAB>GRAMREL<TAB>CHILD");
    Triple t{line.substr(0, tab1), line.substr(tab1 + 1, tab2 - tab1 - 1), line.substr(tab2 + 1)};
    if (t.parent.empty() || t.gramrel.empty() || t.child.empty())
      raise(errc::invalid_triple_file,
            "line " + std::to_string(lineno) + ": empty field in triple");
    out.push_back(std::move(t));
  }
  return out;
}

inline std::vector<Triple> parse_triples_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::invalid_triple_file, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_triples(buf.str());
}

}  // namespace cglink
