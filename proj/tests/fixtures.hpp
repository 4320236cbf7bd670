#pragma once

// Shared inputs for the unit tests and the acceptance runner.

#include <initializer_list>
#include <string>
#include <vector>
#include <utility>

#include "superlambda/io.hpp"

namespace sl::fixtures {

// Regular pentagon fanned from vertex 0, sides a..e, diagonals x1, x2.
inline const char* kPentagon = R"({"n":5,"diagonals":[[0,2],[0,3]],
  "edge_labels":{"0-1":"a","0-4":"b","3-4":"c","2-3":"d","1-2":"e","0-2":"x1","0-3":"x2"},
  "triangle_labels":{"0-1-2":"th1","0-2-3":"th2","0-3-4":"th3"}})";

// Quadrilateral with diagonal e from vertex 0 to vertex 2; theta above, sigma below.
inline const char* kQuad = R"({"n":4,"diagonals":[[0,2]],
  "edge_labels":{"0-2":"e","0-3":"a","2-3":"b","1-2":"c","0-1":"d"},
  "triangle_labels":{"0-2-3":"theta","0-1-2":"sigma"}})";

// Hexagon, vertex k at angle 60k degrees; zig-zag diagonals. Longest arc 4 -> 1.
inline const char* kHexZigZag = R"({"n":6,"diagonals":[[0,2],[0,3],[3,5]],
  "edge_labels":{"3-4":"y1","4-5":"y2","0-5":"y3","0-1":"y4","1-2":"y5","2-3":"y6",
                 "3-5":"x1","0-3":"x2","0-2":"x3"},
  "triangle_labels":{"3-4-5":"th1","0-3-5":"th2","0-2-3":"th3","0-1-2":"th4"}})";

// Same hexagon with x3 moved to 1-3. Longest arc 4 -> 2.
inline const char* kHexFan = R"({"n":6,"diagonals":[[1,3],[0,3],[3,5]],
  "edge_labels":{"3-4":"y1","4-5":"y2","0-5":"y3","0-1":"y4","1-2":"y5","2-3":"y6",
                 "3-5":"x1","0-3":"x2","1-3":"x3"},
  "triangle_labels":{"3-4-5":"th1","0-3-5":"th2","0-1-3":"th3","1-2-3":"th4"}})";

inline LabeledTriangulation load(const char* src) { return parse_triangulation(load_json(src)); }

// Term with doubled exponents, e.g. term(a, {{"x1", -2}, {"b", 1}}, {"th1", "th2"}).
// The odd factors are listed greatest first, so the coefficient stays +1.
inline SuperTerm term(Alphabet& a, std::initializer_list<std::pair<const char*, int>> even,
                      std::initializer_list<const char*> odd = {}, int coeff = 1) {
  std::vector<EvenMonomial::Factor> f;
  for (auto [name, e] : even) f.push_back({a.even(name), e});
  OddWord w;
  for (const char* name : odd) w.push_back(a.odd(name));
  return {Rational(coeff), EvenMonomial::from_factors(f), w};
}

inline std::vector<std::string> side_names(const Tile& t, const Alphabet& a) {
  std::vector<std::string> out;
  for (int s = 0; s < 4; ++s) out.push_back(t.label[s] == kUnit ? "1" : a.even_name(t.label[s]));
  return out;
}

inline SuperPoly sum(std::initializer_list<SuperTerm> ts) {
  SuperPoly p;
  for (const auto& t : ts) p.add_term(t);
  return p;
}

}  // namespace sl::fixtures
