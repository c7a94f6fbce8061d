#pragma once

#include <set>
#include <string>
#include <vector>

#include "demazure/pipedreams.hpp"

namespace tables {

/// A displayed set of (skew) pipe dreams: the ladder set L(w) or the
/// mitosis set M(w) of the element with reduced word `word`.
struct DiagramSet {
  char family;
  int rank;
  demazure::Word word;
  bool ladder;
  std::set<std::string> diagrams;
  std::string bottom;  // D(w) when it is singled out, else empty
};

inline std::string rows(std::initializer_list<const char*> r) {
  std::string s;
  for (const char* x : r) s += std::string(x) + "\n";
  return s;
}

inline std::vector<DiagramSet> displayed() {
  return {
      {'A', 2, {1}, true, {rows({"++", "."})}, ""},
      {'A', 2, {2}, true, {rows({"+.", "+"})}, ""},
      {'A', 2, {1, 2}, true, {rows({"+.", "."})}, ""},
      {'A', 2, {2, 1}, true, {rows({"..", "+"}), rows({".+", "."})}, ""},
      {'A',
       4,
       {2, 3, 4, 3, 2, 1},
       true,
       {rows({"....", "++.", "+.", "+"}), rows({".+..", "++.", "..", "+"}), rows({".+..", "++.", ".+", "."}),
        rows({"..+.", "+..", "+.", "+"}), rows({".++.", "...", "+.", "+"}), rows({".++.", ".+.", "..", "+"}),
        rows({".++.", ".+.", ".+", "."})},
       rows({"....", "++.", "+.", "+"})},
      {'C', 2, {1}, false, {rows({"+++", " ."})}, ""},
      {'C', 2, {2}, false, {rows({"++.", " +"})}, ""},
      {'C', 2, {1, 2}, false, {rows({"++.", " ."})}, ""},
      {'C', 2, {2, 1}, false, {rows({"+..", " +"}), rows({"+.+", " ."})}, ""},
      {'C', 2, {1, 2, 1}, false, {rows({"+..", " ."})}, ""},
      {'C', 2, {2, 1, 2}, false, {rows({"...", " +"}), rows({"..+", " ."}), rows({".+.", " ."})}, ""},
      {'C',
       3,
       {2, 1, 3, 2},
       false,
       {rows({"+++..", " +..", "  +"}), rows({"+++.+", " ...", "  +"}), rows({"+++..", " +.+", "  ."}),
        rows({"+++.+", " ..+", "  ."}), rows({"+++.+", " .+.", "  ."})},
       rows({"+++..", " +..", "  +"})},
  };
}

inline std::set<std::string> rendered(const demazure::PipeDreamSet& s) {
  std::set<std::string> out;
  for (const auto& d : s) out.insert(d.render());
  return out;
}

/// Empty string when `d` reproduces its display, else a description of the difference.
inline std::string check(const DiagramSet& d) {
  using namespace demazure;
  auto t = make_type(d.family, d.rank);
  auto sh = make_shape(t);
  auto w = WeylElement::from_word(t, d.word);
  auto got = rendered(d.ladder ? ladder_set(sh, w) : mitosis_set(sh, w));
  std::string name = t.name() + " w=" + word_string(d.word);
  if (got != d.diagrams) return name + ": got " + std::to_string(got.size()) + " diagrams, expected " +
                                std::to_string(d.diagrams.size());
  if (!d.bottom.empty() && bottom_pipe_dream(sh, w).render() != d.bottom) return name + ": bottom pipe dream differs";
  if (d.family == 'A' && rendered(mitosis_set(sh, w)) != d.diagrams) return name + ": mitosis set differs";
  return "";
}

}  // namespace tables
