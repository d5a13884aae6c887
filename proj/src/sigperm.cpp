#include "thetavex/sigperm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace thetavex {

void check_rank_guard(int n, bool allow_large) {
  if (n < 1) throw std::out_of_range("rank must be positive, got " + std::to_string(n));
  if (n > kMaxGuardedRank && !allow_large) {
    throw RankTooLargeError("rank " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxGuardedRank) +
                            "; pass the large-rank override to proceed");
  }
}

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = rank();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : window_) {
    const int a = std::abs(v);
    if (v == 0 || a > n || seen[a]) {
      throw std::invalid_argument("window is not a signed permutation of rank " +
                                  std::to_string(n));
    }
    seen[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::longest(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = -(i + 1);
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    const char* first = token.data();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("invalid token '" + std::string(token) + "'");
    }
    values.push_back(value);
    pos = end;
  }
  if (values.empty()) throw ParseError("empty window");

  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values) {
    const std::string tok = std::to_string(v);
    if (v == 0) throw ParseError("zero entry '" + tok + "' in window");
    if (std::abs(v) > n) {
      throw ParseError("entry '" + tok + "' out of range for rank " + std::to_string(n));
    }
    if (seen[std::abs(v)]) throw ParseError("repeated absolute value in entry '" + tok + "'");
    seen[std::abs(v)] = true;
  }
  return SignedPermutation(std::move(values));
}

int SignedPermutation::operator()(int i) const {
  const int n = rank();
  if (i == 0) return 0;
  if (i > n || i < -n) return i;
  return i > 0 ? window_[i - 1] : -window_[-i - 1];
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(window_.size());
  for (int i = 1; i <= rank(); ++i) {
    const int v = window_[i - 1];
    if (v > 0) {
      inv[v - 1] = i;
    } else {
      inv[-v - 1] = -i;
    }
  }
  return SignedPermutation(std::move(inv));
}

SignedPermutation SignedPermutation::extended(int m) const {
  if (m < rank()) throw std::invalid_argument("cannot shrink a signed permutation");
  std::vector<int> w = window_;
  for (int i = rank() + 1; i <= m; ++i) w.push_back(i);
  return SignedPermutation(std::move(w));
}

std::string SignedPermutation::to_string(bool overline) const {
  std::string out;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i) out += ' ';
    const int v = window_[i];
    if (overline && v < 0) {
      for (char c : std::to_string(-v)) {
        out += c;
        out += "\xCC\x85";
      }
    } else {
      out += std::to_string(v);
    }
  }
  return out;
}

FullPermutation::FullPermutation(const SignedPermutation& w)
    : n_(w.rank()),
      values_(static_cast<std::size_t>(2 * w.rank() + 1)),
      positions_(static_cast<std::size_t>(2 * w.rank() + 1)) {
  for (int i = -n_; i <= n_; ++i) {
    const int v = w(i);
    values_[i + n_] = v;
    positions_[v + n_] = i;
  }
}

int FullPermutation::operator()(int i) const {
  if (i < -n_ || i > n_) return i;
  return values_[i + n_];
}

int FullPermutation::inverse(int a) const {
  if (a < -n_ || a > n_) return a;
  return positions_[a + n_];
}

FullPermutation embed_odd(const SignedPermutation& w) { return FullPermutation(w); }

std::vector<int> embed_even(const SignedPermutation& w) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(2 * w.rank()));
  for (int i = -w.rank(); i <= w.rank(); ++i) {
    if (i != 0) out.push_back(w(i));
  }
  return out;
}

int length(const SignedPermutation& w) {
  const int n = w.rank();
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      if (i < j && w(i) > w(j)) ++count;
      if (w(-i) > w(j)) ++count;
    }
  }
  return count;
}

std::vector<int> descents(const SignedPermutation& w) {
  std::vector<int> out;
  for (int d = 0; d < w.rank(); ++d) {
    if (w(d) > w(d + 1)) out.push_back(d);
  }
  return out;
}

namespace {

struct PatternSearch {
  std::span<const int> w;
  std::span<const int> pi;
  std::vector<int> chosen;  // 0-based indices into w

  bool compatible(int idx, std::size_t j) const {
    const int value = w[idx];
    if ((value > 0) != (pi[j] > 0)) return false;
    const int av = std::abs(value);
    const int ap = std::abs(pi[j]);
    for (std::size_t t = 0; t < j; ++t) {
      const bool w_less = std::abs(w[chosen[t]]) < av;
      const bool p_less = std::abs(pi[t]) < ap;
      if (w_less != p_less) return false;
    }
    return true;
  }

  bool search(int start, std::size_t j) {
    if (j == pi.size()) return true;
    const int remaining = static_cast<int>(pi.size() - j);
    for (int idx = start; idx + remaining <= static_cast<int>(w.size()); ++idx) {
      if (!compatible(idx, j)) continue;
      chosen.push_back(idx);
      if (search(idx + 1, j + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Block size of completions once `filled` positions of a rank-n window are fixed.
std::uint64_t completions(int n, int filled) {
  const int rest = n - filled;
  return (std::uint64_t{1} << rest) * factorial(rest);
}

}  // namespace

std::optional<std::vector<int>> find_pattern(const SignedPermutation& w, const SignedPattern& pi) {
  if (pi.rank() > w.rank()) return std::nullopt;
  PatternSearch s{w.window(), pi.window(), {}};
  s.chosen.reserve(pi.window().size());
  if (!s.search(0, 0)) return std::nullopt;
  std::vector<int> witness;
  for (int idx : s.chosen) witness.push_back(idx + 1);
  return witness;
}

bool next_signed_permutation(std::vector<int>& window) {
  const int n = static_cast<int>(window.size());
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int v : window) used[std::abs(v)] = true;
  // Walk from the right, releasing each entry and looking for a larger one.
  for (int j = n - 1; j >= 0; --j) {
    used[std::abs(window[j])] = false;
    int best = 0;
    for (int v = window[j] + 1; v <= n; ++v) {
      if (v != 0 && !used[std::abs(v)]) {
        best = v;
        break;
      }
    }
    if (best == 0) continue;
    window[j] = best;
    used[std::abs(best)] = true;
    int pos = j + 1;
    for (int a = n; a >= 1; --a) {
      if (!used[a]) window[pos++] = -a;
    }
    return true;
  }
  return false;
}

GroupEnumeration::GroupEnumeration(int n, bool allow_large) : n_(n), size_(0) {
  check_rank_guard(n, allow_large);
  size_ = completions(n, 0);
}

SignedPermutation GroupEnumeration::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("enumeration index out of range");
  std::vector<int> window;
  std::vector<bool> used(static_cast<std::size_t>(n_) + 1, false);
  for (int j = 0; j < n_; ++j) {
    const std::uint64_t block = completions(n_, j + 1);
    std::uint64_t digit = index / block;
    index %= block;
    for (int v = -n_; v <= n_; ++v) {
      if (v == 0 || used[std::abs(v)]) continue;
      if (digit-- == 0) {
        window.push_back(v);
        used[std::abs(v)] = true;
        break;
      }
    }
  }
  return SignedPermutation(std::move(window));
}

std::vector<GroupEnumeration::Chunk> GroupEnumeration::chunks(std::size_t count) const {
  std::vector<Chunk> out;
  if (count == 0) count = 1;
  const std::uint64_t parts = std::min<std::uint64_t>(count, size_);
  const std::uint64_t base = size_ / parts;
  const std::uint64_t extra = size_ % parts;
  std::uint64_t begin = 0;
  for (std::uint64_t i = 0; i < parts; ++i) {
    const std::uint64_t len = base + (i < extra ? 1 : 0);
    out.push_back({begin, begin + len});
    begin += len;
  }
  return out;
}

}  // namespace thetavex
