// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#include <map>

#include "knotforge/diagram.hpp"
#include "knotforge/error.hpp"

namespace knotforge {

namespace {

// Braid closures cut open on the leftmost strand. The rightmost strands run
// back down to close the braid.
const std::map<std::string, std::string, std::less<>>& base_corpus() {
  static const std::map<std::string, std::string, std::less<>> texts = {
      {"unknot", "tangle unknot\n"},
      {"3_1",
       "tangle 3_1\n"
       "# closure of s1^3\n"
       "cup 1\n"
       "x+ 0\nx+ 0\nx+ 0\n"
       "cap 1\n"},
      {"3_1_pair",
       "tangle 3_1_pair\n"
       "# 3_1 with a cancelling pair s1 s1^-1 inserted\n"
       "cup 1\n"
       "x+ 0\nx- 0\n"
       "x+ 0\nx+ 0\nx+ 0\n"
       "cap 1\n"},
      {"4_1",
       "tangle 4_1\n"
       "# closure of s1 s2^-1 s1 s2^-1\n"
       "cup 1\ncup 2\n"
       "x+ 0\nx- 1\nx+ 0\nx- 1\n"
       "cap 2\ncap 1\n"},
      {"5_1",
       "tangle 5_1\n"
       "# closure of s1^5\n"
       "cup 1\n"
       "x+ 0\nx+ 0\nx+ 0\nx+ 0\nx+ 0\n"
       "cap 1\n"},
      {"5_2",
       "tangle 5_2\n"
       "# closure of s1^3 s2 s1^-1 s2\n"
       "cup 1\ncup 2\n"
       "x+ 0\nx+ 0\nx+ 0\nx+ 1\nx- 0\nx+ 1\n"
       "cap 2\ncap 1\n"},
  };
  return texts;
}

// name -> base knot for the framing-0 variants
const std::map<std::string, std::string, std::less<>>& zero_framed_corpus() {
  static const std::map<std::string, std::string, std::less<>> names = {
      {"3_1_zero", "3_1"}, {"5_1_zero", "5_1"}, {"5_2_zero", "5_2"}};
  return names;
}

}  // namespace

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : base_corpus()) out.push_back(name);
  for (const auto& [name, base] : zero_framed_corpus()) out.push_back(name);
  return out;
}

bool is_corpus_name(std::string_view name) {
  return base_corpus().count(name) || zero_framed_corpus().count(name);
}

const std::string& corpus_text(std::string_view name) {
  if (auto it = base_corpus().find(name); it != base_corpus().end()) return it->second;
  static const std::map<std::string, std::string, std::less<>> generated = [] {
    std::map<std::string, std::string, std::less<>> out;
    for (const auto& [zname, base] : zero_framed_corpus())
      out.emplace(zname, zero_framed(parse_tangle(base_corpus().find(base)->second), zname)
                             .canonical_text());
    return out;
  }();
  if (auto it = generated.find(name); it != generated.end()) return it->second;
  throw ArgumentError("unknown bundled knot '" + std::string(name) + "'");
}

TangleDiagram corpus_diagram(std::string_view name) {
  return parse_tangle(corpus_text(name));
}

}  // namespace knotforge
