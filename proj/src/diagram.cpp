#include "thetavex/diagram.hpp"

#include <algorithm>
#include <string>

namespace thetavex {

std::string_view to_string(CornerClass c) {
  switch (c) {
    case CornerClass::NePath: return "ne_path";
    case CornerClass::Unessential: return "unessential";
    case CornerClass::Optional: return "optional";
    case CornerClass::Other: return "other";
  }
  return "other";
}

char class_letter(CornerClass c) {
  switch (c) {
    case CornerClass::NePath: return 'N';
    case CornerClass::Unessential: return 'U';
    case CornerClass::Optional: return 'O';
    case CornerClass::Other: return '*';
  }
  return '*';
}

bool CornerSet::decomposes() const {
  return std::all_of(corners.begin(), corners.end(), [](const CornerRecord& c) {
    return c.cls != CornerClass::Other;
  });
}

namespace {

void sort_corners(std::vector<CornerRecord>& cs) {
  std::sort(cs.begin(), cs.end(), [](const CornerRecord& a, const CornerRecord& b) {
    if (a.p != b.p) return a.p > b.p;
    return a.q > b.q;
  });
}

bool contains_position(const std::vector<CornerRecord>& cs, int p, int q) {
  return std::any_of(cs.begin(), cs.end(),
                     [&](const CornerRecord& c) { return c.p == p && c.q == q; });
}

}  // namespace

int rank(const SignedPermutation& w, int p, int q) {
  const int n = w.rank();
  if (p < 1 || p > n || q < -n || q > n) {
    throw std::out_of_range("rank coordinates (" + std::to_string(p) + ", " +
                            std::to_string(q) + ") outside the rank-" + std::to_string(n) +
                            " grid");
  }
  int count = 0;
  for (int i = p; i <= n; ++i) {
    if (w(i) <= -q) ++count;
  }
  return count;
}

int iota_rank(const FullPermutation& w, int p, int q) {
  const int n = w.rank();
  if (p < -n || p > n || q < -n || q > n) {
    throw std::out_of_range("rank coordinates outside [-n, n]");
  }
  int count = 0;
  for (int i = -n; i <= -p; ++i) {
    if (w(i) >= q) ++count;
  }
  return count;
}

ExtendedDiagram build_extended_diagram(const SignedPermutation& w) {
  const FullPermutation f(w);
  ExtendedDiagram d;
  d.n = w.rank();
  const int n = d.n;
  for (int col = -n; col <= -1; ++col) {
    d.dots.insert({f(col), col});
    for (int b = col; b <= -1; ++b) d.crosses.insert({-f(col), b});
  }
  for (int row = -n; row <= n; ++row) {
    for (int col = -n; col <= -1; ++col) {
      // Not weakly south of the dot in this column, not weakly east of the dot in this row.
      if (f(col) > row && f.inverse(row) > col) {
        d.boxes.insert({row, col});
        if (f.inverse(-row) > col) d.diagram_boxes.insert({row, col});
      }
    }
  }
  return d;
}

bool is_se_corner(const FullPermutation& w, int row, int col) {
  return w(col) > row && row >= w(col + 1) && w.inverse(row) > col &&
         col >= w.inverse(row + 1);
}

std::vector<CornerRecord> iota_corners(const SignedPermutation& w) {
  const FullPermutation f(w);
  const int n = w.rank();
  std::vector<CornerRecord> out;
  for (int col = -n - 1; col <= n; ++col) {
    for (int row = -n - 1; row <= n; ++row) {
      if (!is_se_corner(f, row, col)) continue;
      const int p = -col;
      const int q = row + 1;
      out.push_back({iota_rank(f, p, q), p, q, CornerClass::Other});
    }
  }
  sort_corners(out);
  return out;
}

CornerSet corners(const SignedPermutation& w) {
  const FullPermutation f(w);
  const int n = w.rank();
  CornerSet cs;
  for (int p = 1; p <= n; ++p) {
    for (int row = -n - 1; row <= n; ++row) {
      const int q = row + 1;
      if (p == 1 && q < 0) continue;
      if (!is_se_corner(f, row, -p)) continue;
      cs.corners.push_back({rank(w, p, q), p, q, CornerClass::Other});
    }
  }
  sort_corners(cs.corners);
  cs.ne_path = ne_path(cs.corners);
  cs.unessential = unessential_corners(cs.corners, cs.ne_path);
  for (auto& c : cs.corners) {
    if (contains_position(cs.ne_path, c.p, c.q)) {
      c.cls = CornerClass::NePath;
    } else if (contains_position(cs.unessential, c.p, c.q)) {
      c.cls = CornerClass::Unessential;
    }
  }
  return cs;
}

CornerRecord reflect(const CornerRecord& t) {
  return {t.k + t.p + t.q - 1, 1 - t.p, 1 - t.q, t.cls};
}

std::vector<CornerRecord> ne_path(const std::vector<CornerRecord>& corners) {
  std::vector<CornerRecord> out;
  for (const auto& c : corners) {
    const bool minimal = std::none_of(corners.begin(), corners.end(),
                                      [&](const CornerRecord& o) { return precedes(o, c); });
    if (minimal) {
      out.push_back(c);
      out.back().cls = CornerClass::NePath;
    }
  }
  sort_corners(out);
  return out;
}

std::vector<CornerRecord> unessential_corners(const std::vector<CornerRecord>& corners,
                                              const std::vector<CornerRecord>& ne) {
  std::vector<CornerRecord> out;
  for (const auto& c : corners) {
    if (c.q >= 0) continue;
    const bool above = std::any_of(ne.begin(), ne.end(), [&](const CornerRecord& t) {
      return t.p == c.p && t.q < c.q;
    });
    const bool mirrored_row = std::any_of(ne.begin(), ne.end(), [&](const CornerRecord& t) {
      return t.p > 0 && t.q == 1 - c.q;
    });
    const bool dominated = std::any_of(ne.begin(), ne.end(), [&](const CornerRecord& t) {
      return precedes(t, c);
    });
    if (above && mirrored_row && dominated) {
      out.push_back(c);
      out.back().cls = CornerClass::Unessential;
    }
  }
  sort_corners(out);
  return out;
}

std::set<Box> left_lower_region(const ExtendedDiagram& d, int p, int q) {
  std::set<Box> region;
  for (int row = std::max(q, -d.n); row <= d.n; ++row) {
    for (int col = -d.n; col <= std::min(-p, -1); ++col) region.insert({row, col});
  }
  return region;
}

int count_dots_in_region(const ExtendedDiagram& d, int p, int q) {
  return static_cast<int>(std::count_if(d.dots.begin(), d.dots.end(), [&](const Box& b) {
    return b.row >= q && b.col <= -p;
  }));
}

}  // namespace thetavex
