#pragma once

#include <compare>
#include <set>
#include <string_view>
#include <vector>

#include "thetavex/sigperm.hpp"

namespace thetavex {

/// A box in matrix coordinates: rows top to bottom, columns left to right.
struct Box {
  int row;
  int col;
  friend auto operator<=>(const Box&, const Box&) = default;
};

enum class CornerClass { NePath, Unessential, Optional, Other };

std::string_view to_string(CornerClass c);
/// One-letter tag used by the ASCII renderer: N, U, O or *.
char class_letter(CornerClass c);

/// A corner triple (k, p, q): box (q - 1, -p) is an SE corner and k = rank(p, q).
struct CornerRecord {
  int k = 0;
  int p = 0;
  int q = 0;
  CornerClass cls = CornerClass::Other;

  Box box() const { return {q - 1, -p}; }
  bool same_triple(const CornerRecord& o) const { return k == o.k && p == o.p && q == o.q; }
  friend bool operator==(const CornerRecord&, const CornerRecord&) = default;
};

/// Corners of a signed permutation sorted by (p desc, q desc).
struct CornerSet {
  std::vector<CornerRecord> corners;
  std::vector<CornerRecord> ne_path;
  std::vector<CornerRecord> unessential;

  /// True iff every corner lies on the NE path or is unessential.
  bool decomposes() const;
};

/// The (2n+1) x n grid of a signed permutation: rows [-n, n], columns [-n, -1].
struct ExtendedDiagram {
  int n = 0;
  std::set<Box> dots;
  std::set<Box> crosses;
  std::set<Box> boxes;          // D+(w)
  std::set<Box> diagram_boxes;  // D(w): boxes without a cross
};

/// #{i in [p, n] : w(i) <= -q}. Requires 1 <= p <= n and -n <= q <= n.
int rank(const SignedPermutation& w, int p, int q);

/// Rank function of the odd embedding: #{i <= -p : w(i) >= q}, for p, q in [-n, n].
int iota_rank(const FullPermutation& w, int p, int q);

ExtendedDiagram build_extended_diagram(const SignedPermutation& w);

/// Double-descent test at box (row, col):
/// w(col) > row >= w(col+1) and w^-1(row) > col >= w^-1(row+1).
bool is_se_corner(const FullPermutation& w, int row, int col);

/// Every corner triple of iota(w) in S_{2n+1}, p ranging over [-n, n].
std::vector<CornerRecord> iota_corners(const SignedPermutation& w);

/// Corners with p in [1, n] (excluding p = 1, q < 0), classified as
/// NePath, Unessential or Other.
CornerSet corners(const SignedPermutation& w);

/// (k, p, q) -> (k + p + q - 1, 1 - p, 1 - q).
CornerRecord reflect(const CornerRecord& t);

/// Strict corner order: (p, q) < (p', q') iff p > p' and q < q'.
inline bool precedes(const CornerRecord& a, const CornerRecord& b) {
  return a.p > b.p && a.q < b.q;
}

/// Minimal elements under `precedes`, sorted by (p desc, q desc).
std::vector<CornerRecord> ne_path(const std::vector<CornerRecord>& corners);

/// Corners (p, q), q < 0, flanked on the NE path by (p, q1) with q1 < q, by some
/// (p2, 1 - q), and by some corner strictly below it in the order.
std::vector<CornerRecord> unessential_corners(const std::vector<CornerRecord>& corners,
                                              const std::vector<CornerRecord>& ne);

/// Grid boxes (a, b) with a >= q and b <= -p.
std::set<Box> left_lower_region(const ExtendedDiagram& d, int p, int q);
int count_dots_in_region(const ExtendedDiagram& d, int p, int q);

}  // namespace thetavex
