#include "thetavex/render.hpp"

#include <algorithm>
#include <map>

#include "thetavex/format.hpp"

namespace thetavex {

namespace {

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string render_diagram(const SignedPermutation& w, const CornerSet& cs,
                           const RenderOptions& opts) {
  const ExtendedDiagram d = build_extended_diagram(w);
  const int n = d.n;

  std::map<Box, std::string> labels;
  for (const auto& c : cs.corners) {
    labels[c.box()] = std::to_string(c.k) + class_letter(c.cls);
  }

  std::size_t cell = 1;
  for (int col = -n; col <= -1; ++col) cell = std::max(cell, std::to_string(col).size());
  for (const auto& [box, label] : labels) cell = std::max(cell, label.size());
  std::size_t margin = 1;
  for (int row = -n; row <= n; ++row) margin = std::max(margin, std::to_string(row).size());

  std::string out = "w = " + w.to_string(opts.overline) + "\n";
  out += std::string(margin, ' ');
  for (int col = -n; col <= -1; ++col) out += " " + pad_left(std::to_string(col), cell);
  out += "\n";

  for (int row = -n; row <= n; ++row) {
    out += pad_left(std::to_string(row), margin);
    for (int col = -n; col <= -1; ++col) {
      const Box b{row, col};
      std::string glyph;
      if (auto it = labels.find(b); it != labels.end()) {
        glyph = it->second;
      } else if (d.dots.count(b)) {
        glyph = "o";
      } else if (opts.show_crosses && d.crosses.count(b)) {
        glyph = "x";
      } else if (d.boxes.count(b)) {
        glyph = "#";
      } else {
        glyph = ".";
      }
      out += " " + pad_left(glyph, cell);
    }
    out += "\n";
  }

  out += "boxes: " + std::to_string(d.boxes.size()) +
         ", diagram boxes: " + std::to_string(d.diagram_boxes.size()) + "\n";
  out += "corners:";
  if (cs.corners.empty()) out += " none";
  out += "\n";
  for (const auto& c : cs.corners) {
    out += "  " + corner_to_string(c) + " " + std::string(to_string(c.cls)) + "\n";
  }

  out += "iota corners:";
  for (const auto& c : iota_corners(w)) out += " " + corner_to_string(c);
  out += "\n";

  if (opts.show_ranks) {
    std::size_t rcell = 1;
    for (int q = -n; q <= n; ++q) rcell = std::max(rcell, std::to_string(q).size());
    rcell = std::max(rcell, std::to_string(n).size());
    const std::size_t pmargin = std::to_string(n).size() + 2;
    out += "rank(p,q):\n" + std::string(pmargin, ' ');
    for (int q = -n; q <= n; ++q) out += " " + pad_left(std::to_string(q), rcell);
    out += "\n";
    for (int p = 1; p <= n; ++p) {
      out += pad_left("p=" + std::to_string(p), pmargin);
      for (int q = -n; q <= n; ++q) out += " " + pad_left(std::to_string(rank(w, p, q)), rcell);
      out += "\n";
    }
  }
  return out;
}

}  // namespace thetavex
