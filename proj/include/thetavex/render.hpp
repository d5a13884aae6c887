#pragma once

#include <string>

#include "thetavex/diagram.hpp"

namespace thetavex {

struct RenderOptions {
  bool show_crosses = false;  // mark crossed cells 'x'; '#' then means D(w) only
  bool show_ranks = false;    // append the table of rank(p, q)
  bool overline = false;      // overlined window in the heading
};

/// ASCII picture of D+(w): rows -n..n top to bottom, columns -n..-1 left to right.
/// '.' removed cell, '#' box, 'o' dot, 'x' cross (with show_crosses), and
/// "<k><class letter>" on each SE corner box. A corner list follows the grid.
std::string render_diagram(const SignedPermutation& w, const CornerSet& cs,
                           const RenderOptions& opts = {});

}  // namespace thetavex
