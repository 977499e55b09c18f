#pragma once

// Exhaustive word-problem oracle, used only by tests. It shares no code with
// the library's handle-reduction machinery: equivalence is decided by
// breadth-first enumeration of an entire rewriting class.
//
// Moves (all length-preserving except the free pair moves):
//   * delete / insert an adjacent inverse pair
//   * swap adjacent letters whose indices differ by at least 2
//   * braid moves on windows (a b c) with ||a|-|b|| = 1:
//       (a  b  a)  <-> (b  a  b)    when sign(a) = sign(b)
//       (a  b -a)  ->  (-b a  b)    when sign(a) = sign(b)
//       (a  b -a)  ->  (b -a -b)    when sign(b) = sign(-a)
// The last two are mutually inverse images of the first under inverting one
// strand crossing, and each is checkable directly from the defining
// relations; together the move set is sound and symmetric.

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "braid/word.hpp"

namespace testsupport {

class RewriteClassOracle {
 public:
  // Enumerates the full rewriting class of the empty word in B_n among words
  // of at most max_len letters (max_len <= 16, indices <= 7).
  RewriteClassOracle(int n, int max_len) : n_(n), max_len_(max_len) {
    if (n < 2 || n > 8) throw std::invalid_argument("oracle: n out of range");
    if (max_len < 2 || max_len > 16) throw std::invalid_argument("oracle: bad length bound");
    std::deque<std::vector<int>> queue;
    class_.insert(pack({}));
    queue.push_back({});
    std::vector<int> next;
    while (!queue.empty()) {
      std::vector<int> w = std::move(queue.front());
      queue.pop_front();
      auto visit = [&](const std::vector<int>& v) {
        if (class_.insert(pack(v)).second) queue.push_back(v);
      };
      const int len = static_cast<int>(w.size());
      // adjacent inverse pair deletion
      for (int p = 0; p + 1 < len; ++p) {
        if (w[p] != -w[p + 1]) continue;
        next.assign(w.begin(), w.begin() + p);
        next.insert(next.end(), w.begin() + p + 2, w.end());
        visit(next);
      }
      // adjacent inverse pair insertion
      if (len + 2 <= max_len_) {
        for (int p = 0; p <= len; ++p) {
          for (int g = 1; g < n_; ++g) {
            for (int s : {g, -g}) {
              next.assign(w.begin(), w.begin() + p);
              next.push_back(s);
              next.push_back(-s);
              next.insert(next.end(), w.begin() + p, w.end());
              visit(next);
            }
          }
        }
      }
      // far commutation
      for (int p = 0; p + 1 < len; ++p) {
        int da = std::abs(w[p]), db = std::abs(w[p + 1]);
        if (da - db >= 2 || db - da >= 2) {
          next = w;
          std::swap(next[p], next[p + 1]);
          visit(next);
        }
      }
      // braid moves
      for (int p = 0; p + 2 < len; ++p) {
        int a = w[p], b = w[p + 1], c = w[p + 2];
        int da = std::abs(a), db = std::abs(b);
        if (da - db != 1 && db - da != 1) continue;
        bool same_ab = (a > 0) == (b > 0);
        if (c == a && same_ab) {
          next = w;
          next[p] = b, next[p + 1] = a, next[p + 2] = b;
          visit(next);
        } else if (c == -a && same_ab) {
          next = w;
          next[p] = -b, next[p + 1] = a, next[p + 2] = b;
          visit(next);
        } else if (c == -a && (b > 0) == (c > 0)) {
          next = w;
          next[p] = b, next[p + 1] = c, next[p + 2] = -b;
          visit(next);
        }
      }
    }
  }

  bool is_trivial(const braid::BraidWord& w) const {
    if (static_cast<int>(w.letters.size()) > max_len_) throw std::invalid_argument("oracle: word too long");
    return class_.count(pack(w.letters)) != 0;
  }

  std::size_t class_size() const { return class_.size(); }

 private:
  // 4 bits per letter, (index << 1) | negative-bit; letter codes are >= 2 so
  // unused high nibbles (zero) cannot collide with a letter.
  static std::uint64_t pack(const std::vector<int>& w) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t code = (static_cast<std::uint64_t>(std::abs(w[i])) << 1) | (w[i] < 0 ? 1u : 0u);
      key |= code << (4 * i);
    }
    return key;
  }

  int n_;
  int max_len_;
  std::unordered_set<std::uint64_t> class_;
};

}  // namespace testsupport
