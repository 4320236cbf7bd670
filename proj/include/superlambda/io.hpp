#pragma once

// JSON and text forms of triangulations, arcs, snake graphs, covers and
// expressions. Schemas are described in docs/json_schemas.md.

#include <string>

#include <json.hpp>

#include "superlambda/dimers.hpp"
#include "superlambda/supernumber.hpp"

namespace sl {

using Json = nlohmann::json;

// Parses JSON text, or reads it from a file when `source` is not inline JSON.
Json load_json(const std::string& source);

struct LabeledTriangulation {
  Triangulation tri;
  Alphabet names;
};

// Missing labels fall back to x1..x_{2n-3} and th1..th_{n-2}; with
// `seed_labels` the input labels are ignored entirely.
LabeledTriangulation parse_triangulation(const Json& j, bool seed_labels = false);
Json triangulation_json(const Triangulation& t, const Alphabet& a);

// "i,j" with both endpoints in range and distinct.
Arc parse_arc(const std::string& s, int n);

struct LabeledSnake {
  SnakeGraph graph;
  Alphabet names;
  PositiveOrder order;
};

// {"word": "RU", "tiles": [...]} or {"tri": {...}, "arc": [i, j]}.
LabeledSnake parse_snake(const Json& j, bool seed_labels = false);
Json snake_json(const SnakeGraph& g, const Alphabet& a);

Json cover_json(const DoubleDimerCover& m, const SnakeGraph& g);
DoubleDimerCover parse_cover(const Json& j, const SnakeGraph& g);

Json poly_json(const SuperPoly& p, const Alphabet& a);
Json term_json(const SuperTerm& t, const Alphabet& a);

const char* side_name(Side s);
Side parse_side(const std::string& s);

}  // namespace sl
