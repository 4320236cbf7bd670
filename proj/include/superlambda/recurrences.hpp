#pragma once

// Recurrences for double dimer covers: removing tiles from the end of a snake
// graph, with the weight factors they introduce.

#include <string>

#include "superlambda/dimers.hpp"

namespace sl {

struct LemmaCheck {
  bool applies = false;
  bool holds = false;
  std::size_t domain = 0;  // size of the source set
  std::size_t image = 0;   // size of the target set
  std::string detail;      // first failure, if any
};

// Length k >= 2 of the terminal staircase when the word ends in a doubled
// letter followed by alternating letters; 0 when the whole graph alternates.
int terminal_staircase(const SnakeGraph& g);
bool is_full_staircase(const SnakeGraph& g);

// Adding a doubled dimer on the last edge: D(G^(-1)) -> D_R(G) or D_T(G).
LemmaCheck check_lemma1(const SnakeGraph& g, const PositiveOrder& order);
// Terminal staircase of length k: D(G^(-k)) -> D_T(G) or D_R(G).
LemmaCheck check_lemma2(const SnakeGraph& g, const PositiveOrder& order);
// Whole graph a staircase: the corresponding class has a single cover.
LemmaCheck check_lemma3(const SnakeGraph& g, const PositiveOrder& order);
// Split one doubled dimer into a loop around the last tile: D_r(G^(-1)) or
// D_t(G^(-1)) -> D_tr(G).
LemmaCheck check_lemma4(const SnakeGraph& g, const PositiveOrder& order);

// D(G) is the disjoint union of D_R(G), D_T(G), D_tr(G).
bool partition_holds(const SnakeGraph& g);

}  // namespace sl
