#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "braid/word.hpp"

namespace braid {

inline constexpr long kDefaultStepBudget = 1'000'000;

/// Thrown when handle reduction does not finish within its step budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(long budget)
      : std::runtime_error("handle reduction exceeded step budget " + std::to_string(budget)) {}
};

struct ReduceStats {
  long steps = 0;              // handle reductions performed (free cancellations included)
  std::size_t max_length = 0;  // longest intermediate word seen
};

namespace detail {

/// One full handle-reduction run over a single word.
///
/// The word lives in an arena-backed doubly linked list. A sigma_h-handle is
/// a subword sigma_h^e u sigma_h^{-e} where u only uses indices below h.
/// Reducing it deletes the outer pair and conjugates the index-(h-1) letters
/// through: sigma_{h-1}^d becomes sigma_{h-1}^{-e} sigma_h^d sigma_{h-1}^e.
/// Letters of index h-2 and below pass through unchanged.
///
/// The scan keeps a stack of node ids whose letter indices strictly decrease
/// from bottom to top, so the top matching the current letter's index with
/// opposite sign is exactly the earliest-closing handle. Reducing that handle
/// first means its interior never contains an unreduced index-(h-1) handle,
/// which is the admissibility condition for termination.
class HandleReducer {
 public:
  HandleReducer(const BraidWord& w, long budget) : n_(w.n), budget_(budget) {
    if (budget < 1) throw std::invalid_argument("step budget must be >= 1");
    nodes_.reserve(w.letters.size() + 2);
    nodes_.push_back({0, -1, kTail});  // head sentinel
    nodes_.push_back({0, kHead, -1});  // tail sentinel
    // Free reduction is a preprocessing pass, not counted against the budget.
    for (int e : free_reduce(w).letters) {
      int id = alloc(e);
      link_before(kTail, id);
    }
    max_len_ = len_;
  }

  BraidWord run() {
    std::vector<int> stack;
    int cur = nodes_[kHead].next;
    while (cur != kTail) {
      int h = index_of(cur);
      while (!stack.empty() && index_of(stack.back()) < h) stack.pop_back();
      if (!stack.empty() && index_of(stack.back()) == h) {
        int p = stack.back();
        if (nodes_[p].letter == -nodes_[cur].letter) {
          reduce_handle(p, cur);
          stack.pop_back();
          // Nodes once displaced from the stack by p may be exposed again now
          // that p is gone, so rescan from the surviving stack top. The
          // rescanned stretch left of the rewritten zone is unchanged and
          // rebuilds the same stack state without further reductions.
          cur = stack.empty() ? nodes_[kHead].next : nodes_[stack.back()].next;
          continue;
        }
        // Same-sign repeat of the index: the later letter supersedes the
        // earlier one as a potential handle opener.
        stack.back() = cur;
      } else {
        stack.push_back(cur);
      }
      cur = nodes_[cur].next;
    }
    BraidWord out{n_, {}};
    out.letters.reserve(len_);
    for (int x = nodes_[kHead].next; x != kTail; x = nodes_[x].next)
      out.letters.push_back(nodes_[x].letter);
    return out;
  }

  ReduceStats stats() const { return {steps_, max_len_}; }

 private:
  struct Node {
    int letter;
    int prev;
    int next;
  };
  static constexpr int kHead = 0;
  static constexpr int kTail = 1;

  int index_of(int id) const { return std::abs(nodes_[id].letter); }

  int alloc(int letter) {
    if (free_ != -1) {
      int id = free_;
      free_ = nodes_[id].next;
      nodes_[id].letter = letter;
      return id;
    }
    nodes_.push_back({letter, -1, -1});
    return static_cast<int>(nodes_.size()) - 1;
  }

  void link_before(int pos, int id) {
    int before = nodes_[pos].prev;
    nodes_[id].prev = before;
    nodes_[id].next = pos;
    nodes_[before].next = id;
    nodes_[pos].prev = id;
    ++len_;
    if (len_ > max_len_) max_len_ = len_;
  }

  void unlink(int id) {
    nodes_[nodes_[id].prev].next = nodes_[id].next;
    nodes_[nodes_[id].next].prev = nodes_[id].prev;
    nodes_[id].next = free_;
    free_ = id;
    --len_;
  }

  void reduce_handle(int p, int q) {
    if (++steps_ > budget_) throw BudgetExceeded(budget_);
    int h = index_of(p);
    int e = nodes_[p].letter > 0 ? 1 : -1;
    int x = nodes_[p].next;
    while (x != q) {
      if (index_of(x) == h - 1) {
        int d = nodes_[x].letter > 0 ? 1 : -1;
        link_before(x, alloc(-e * (h - 1)));
        link_before(x, alloc(d * h));
        nodes_[x].letter = e * (h - 1);
      }
      x = nodes_[x].next;
    }
    unlink(p);
    unlink(q);
  }

  int n_;
  long budget_;
  long steps_ = 0;
  std::size_t len_ = 0;
  std::size_t max_len_ = 0;
  int free_ = -1;
  std::vector<Node> nodes_;
};

}  // namespace detail

/// Fully handle-reduces w. The result represents the same element of B_n and
/// is either empty or has all occurrences of its maximal index with one sign.
/// Throws BudgetExceeded if more than `budget` reductions are needed.
inline BraidWord handle_reduce(const BraidWord& w, long budget = kDefaultStepBudget,
                               ReduceStats* stats = nullptr) {
  detail::HandleReducer r(w, budget);
  BraidWord out = r.run();
  if (stats) *stats = r.stats();
  return out;
}

/// Sign classification of a braid relative to the subword ordering:
/// sign +1 with index i means some word for the braid uses sigma_i only
/// positively and no higher index; sign -1 is the mirror statement; sign 0
/// is the identity. Exactly one case holds per element.
struct SigmaSign {
  int sign = 0;   // +1, -1, or 0
  int index = 0;  // dominant generator index; 0 iff trivial

  bool is_positive() const { return sign > 0; }
  bool is_negative() const { return sign < 0; }
  bool is_trivial() const { return sign == 0; }

  static SigmaSign positive(int i) { return {1, i}; }
  static SigmaSign negative(int i) { return {-1, i}; }
  static SigmaSign trivial() { return {0, 0}; }

  friend bool operator==(const SigmaSign&, const SigmaSign&) = default;
};

inline SigmaSign sigma_sign(const BraidWord& w, long budget = kDefaultStepBudget) {
  BraidWord r = handle_reduce(w, budget);
  if (r.letters.empty()) return SigmaSign::trivial();
  int h = 0;
  for (int e : r.letters) h = std::max(h, std::abs(e));
  // A reduced word carries its dominant index with one sign only, so the
  // last occurrence decides. (Scanning with an early break on purpose: gcc
  // 11 miscompiles the equivalent conditional-reduction loop at -O3.)
  int sign = 0;
  for (auto it = r.letters.rbegin(); it != r.letters.rend(); ++it) {
    if (std::abs(*it) == h) {
      sign = *it > 0 ? 1 : -1;
      break;
    }
  }
  assert(sign != 0);
  return sign > 0 ? SigmaSign::positive(h) : SigmaSign::negative(h);
}

inline bool is_trivial(const BraidWord& w, long budget = kDefaultStepBudget) {
  return handle_reduce(w, budget).letters.empty();
}

enum class Ordering { LT, EQ, GT };

inline std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::LT: return "LT";
    case Ordering::EQ: return "EQ";
    default: return "GT";
  }
}

/// Left-invariant total order: a < b iff a^{-1} b has positive sigma sign.
inline Ordering compare(const BraidWord& a, const BraidWord& b, long budget = kDefaultStepBudget) {
  if (a.n != b.n) throw std::invalid_argument("compare: mismatched strand counts");
  SigmaSign s = sigma_sign(concat(inverse(a), b), budget);
  if (s.is_positive()) return Ordering::LT;
  if (s.is_negative()) return Ordering::GT;
  return Ordering::EQ;
}

}  // namespace braid
