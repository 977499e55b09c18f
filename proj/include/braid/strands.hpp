#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "braid/word.hpp"

namespace braid {

/// Permutation of {1..n}. images[k-1] is the image of k. For a braid word
/// this is the induced strand permutation: strand starting at position k
/// ends at position images[k-1], reading the word left to right.
struct Permutation {
  std::vector<int> images;

  int n() const { return static_cast<int>(images.size()); }
  int image_of(int k) const { return images[static_cast<std::size_t>(k) - 1]; }

  bool is_identity() const {
    for (int k = 1; k <= n(); ++k)
      if (image_of(k) != k) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

inline Permutation identity_permutation(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
  Permutation p;
  p.images.resize(static_cast<std::size_t>(n));
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

/// Apply a first, then b.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("compose: mismatched sizes");
  Permutation out;
  out.images.reserve(a.images.size());
  for (int k = 1; k <= a.n(); ++k) out.images.push_back(b.image_of(a.image_of(k)));
  return out;
}

inline Permutation inverse(const Permutation& p) {
  Permutation out;
  out.images.assign(p.images.size(), 0);
  for (int k = 1; k <= p.n(); ++k) out.images[static_cast<std::size_t>(p.image_of(k)) - 1] = k;
  return out;
}

/// Strand permutation of a word. Each letter with index i swaps the strands
/// currently at positions i and i+1, regardless of the letter's sign.
inline Permutation permutation(const BraidWord& w) {
  // strand_at[p-1] = label of the strand currently at position p
  std::vector<int> strand_at(static_cast<std::size_t>(w.n));
  std::iota(strand_at.begin(), strand_at.end(), 1);
  for (int e : w.letters) {
    int i = std::abs(e);
    std::swap(strand_at[static_cast<std::size_t>(i) - 1], strand_at[static_cast<std::size_t>(i)]);
  }
  Permutation out;
  out.images.assign(static_cast<std::size_t>(w.n), 0);
  for (int p = 1; p <= w.n; ++p) out.images[static_cast<std::size_t>(strand_at[static_cast<std::size_t>(p) - 1]) - 1] = p;
  return out;
}

/// Deletes the strand starting at position k: every crossing involving it is
/// dropped and the remaining letters are reindexed, giving a word in B_{n-1}.
inline BraidWord remove_strand(const BraidWord& w, int k) {
  if (w.n < 2) throw std::invalid_argument("remove_strand: need at least 2 strands");
  if (k < 1 || k > w.n) throw std::invalid_argument("remove_strand: strand out of range");
  BraidWord out{w.n - 1, {}};
  out.letters.reserve(w.letters.size());
  int cur = k;  // current position of the tracked strand
  for (int e : w.letters) {
    int i = std::abs(e);
    if (i == cur) {
      cur = i + 1;  // tracked strand crosses to the right
    } else if (i + 1 == cur) {
      cur = i;  // tracked strand crosses to the left
    } else {
      out.letters.push_back(e > 0 ? e - (i > cur ? 1 : 0) : e + (i > cur ? 1 : 0));
    }
  }
  return out;
}

/// Symmetric table of signed crossing counts between pairs of strands,
/// labelled by their starting positions.
struct CrossingTable {
  int n = 1;
  std::vector<long long> counts;  // row-major n*n

  long long at(int a, int b) const {
    return counts[static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(b - 1)];
  }
};

/// e[a][b] = sum of crossing signs between strands a and b (start labels).
/// The total over unordered pairs equals exponent_sum(w).
inline CrossingTable crossing_table(const BraidWord& w) {
  CrossingTable t;
  t.n = w.n;
  t.counts.assign(static_cast<std::size_t>(w.n) * static_cast<std::size_t>(w.n), 0);
  std::vector<int> strand_at(static_cast<std::size_t>(w.n));
  std::iota(strand_at.begin(), strand_at.end(), 1);
  auto cell = [&](int a, int b) -> long long& {
    return t.counts[static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(w.n) +
                    static_cast<std::size_t>(b - 1)];
  };
  for (int e : w.letters) {
    int i = std::abs(e);
    int a = strand_at[static_cast<std::size_t>(i) - 1];
    int b = strand_at[static_cast<std::size_t>(i)];
    int s = e > 0 ? 1 : -1;
    cell(a, b) += s;
    cell(b, a) += s;
    std::swap(strand_at[static_cast<std::size_t>(i) - 1], strand_at[static_cast<std::size_t>(i)]);
  }
  return t;
}

}  // namespace braid
