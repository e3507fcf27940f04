// io.hpp
//
// The line-oriented algebra file format and the crosscheck corpus format.
//
//   [quiver]
//   vertices = 1 2 3
//   arrows = a:1->2 b:2->3
//   [relations]
//   1*a.b + -1*c.d
//   [options]
//   cap = 10
//   field = fp:32003
//
// '#' starts a comment, blank lines are skipped, and section headers may
// carry content on the same line.  Construction metadata round-trips through
// a [meta] section whose factors are nested as [factor1.quiver], ... files
// written by serialize_presentation parse back to an identical value.

#pragma once

#include <string>
#include <vector>

#include "tautri/presentation.hpp"

namespace tautri {

struct parse_error : error {
  using error::error;
};

std::string serialize_presentation(const BoundPresentation& p);
BoundPresentation parse_presentation(const std::string& text);

BoundPresentation load_presentation_file(const std::string& path);
void save_presentation_file(const BoundPresentation& p, const std::string& path);

// corpus line: <algebra-path> <n> <tau-finite|tau-infinite|unknown>
struct CorpusItem {
  std::string path;
  BoundPresentation pres;
  int n = 1;
  std::string expected;  // "tau-finite" | "tau-infinite" | "unknown"
};
std::vector<CorpusItem> load_corpus(const std::string& path);

}  // namespace tautri
