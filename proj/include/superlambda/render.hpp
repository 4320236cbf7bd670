#pragma once

// Standalone SVG and TikZ drawings of snake graphs and double dimer covers.
// Single dimers are dashed, doubled dimers solid.

#include <string>

#include "superlambda/dimers.hpp"

namespace sl {

std::string render_svg(const SnakeGraph& g, const Alphabet& a, const DoubleDimerCover* cover = nullptr);
std::string render_tikz(const SnakeGraph& g, const Alphabet& a, const DoubleDimerCover* cover = nullptr);

}  // namespace sl
