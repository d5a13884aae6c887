#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace thetavex {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankTooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest rank the exhaustive drivers accept without an explicit override.
inline constexpr int kMaxGuardedRank = 8;

/// Throws RankTooLargeError when n exceeds kMaxGuardedRank and allow_large is
/// false, std::invalid_argument when n < 1.
void check_rank_guard(int n, bool allow_large);

/// An element of the hyperoctahedral group W_n in one-line window notation.
///
/// Only positions 1..n are stored. The full form is implied: w(-i) = -w(i),
/// w(0) = 0 and w(m) = m for |m| > n.
class SignedPermutation {
 public:
  SignedPermutation() = default;

  /// Throws std::invalid_argument unless |window| is a permutation of 1..n.
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);
  /// The longest element -1 -2 ... -n.
  static SignedPermutation longest(int n);

  /// Parses whitespace separated signed integers, e.g. "10 1 5 -2".
  static SignedPermutation parse(std::string_view text);

  int rank() const { return static_cast<int>(window_.size()); }
  std::span<const int> window() const { return window_; }

  /// Full-form evaluation, defined on every integer.
  int operator()(int i) const;

  SignedPermutation inverse() const;

  /// Natural inclusion into W_m for m >= rank().
  SignedPermutation extended(int m) const;

  /// "-2 3 1"; with overline=true, bars are drawn with U+0305 instead.
  std::string to_string(bool overline = false) const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> window_;
};

/// Patterns obey the same shape constraint as permutations of rank m.
using SignedPattern = SignedPermutation;

/// The image of the odd embedding W_n -> S_{2n+1}, indexed by [-n, n].
class FullPermutation {
 public:
  explicit FullPermutation(const SignedPermutation& w);

  int rank() const { return n_; }

  /// Value at position i; fixed points outside [-n, n].
  int operator()(int i) const;
  /// Position holding value a; fixed points outside [-n, n].
  int inverse(int a) const;

  /// Values on positions -n..n in order.
  std::span<const int> values() const { return values_; }

 private:
  int n_ = 0;
  std::vector<int> values_;
  std::vector<int> positions_;
};

FullPermutation embed_odd(const SignedPermutation& w);

/// The full form on [-n, n] with the zero entry removed (2n values).
std::vector<int> embed_even(const SignedPermutation& w);

/// Inversion count: #{1<=i<j<=n : w(i)>w(j)} + #{1<=i<=j<=n : w(-i)>w(j)}.
int length(const SignedPermutation& w);

/// Sorted d in [0, n-1] with w(d) > w(d+1) in the full form.
std::vector<int> descents(const SignedPermutation& w);

/// Lexicographically least 1-based index sequence realising pi in w, if any.
/// Only positive positions take part.
std::optional<std::vector<int>> find_pattern(const SignedPermutation& w,
                                             const SignedPattern& pi);

inline bool contains_pattern(const SignedPermutation& w, const SignedPattern& pi) {
  return find_pattern(w, pi).has_value();
}

/// Rewrites window to its lexicographic successor in W_n, using the order
/// -n < ... < -1 < 1 < ... < n. Returns false (window unchanged) at the end.
bool next_signed_permutation(std::vector<int>& window);

/// All 2^n n! elements of W_n in lexicographic window order.
///
/// Elements are addressable by index so the stream can be split into
/// contiguous chunks and consumed independently.
class GroupEnumeration {
 public:
  struct Chunk {
    std::uint64_t begin;
    std::uint64_t end;
  };

  explicit GroupEnumeration(int n, bool allow_large = false);

  int rank() const { return n_; }
  std::uint64_t size() const { return size_; }

  /// The element at the given lexicographic index.
  SignedPermutation at(std::uint64_t index) const;

  /// Splits [0, size()) into at most `count` contiguous, nearly equal chunks.
  std::vector<Chunk> chunks(std::size_t count) const;

  template <class Fn>
  void for_each(Chunk chunk, Fn&& fn) const {
    if (chunk.begin >= chunk.end) return;
    const SignedPermutation first = at(chunk.begin);
    std::vector<int> window(first.window().begin(), first.window().end());
    for (std::uint64_t i = chunk.begin; i < chunk.end; ++i) {
      fn(SignedPermutation(window));
      if (i + 1 < chunk.end) next_signed_permutation(window);
    }
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for_each(Chunk{0, size_}, std::forward<Fn>(fn));
  }

 private:
  int n_;
  std::uint64_t size_;
};

}  // namespace thetavex
