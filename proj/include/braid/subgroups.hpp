#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "braid/burau.hpp"
#include "braid/garside.hpp"
#include "braid/order.hpp"
#include "braid/strands.hpp"
#include "braid/word.hpp"

namespace braid {

/// The distinguished normal subgroups of B_n handled by this module. Some
/// have a membership test, some a random sampler, some both; see
/// supports_decide / supports_sample.
enum class SubgroupId {
  commutator,        // words of exponent sum zero
  pure,              // trivial strand permutation
  pure_commutator,   // commutator subgroup of the pure braid group (sampled)
  brunnian,          // trivial after deleting any one strand
  burau_kernel,      // kernel of the unreduced Burau representation
  ker_h4,            // kernel of the fold B_4 -> B_3
  shepperd,          // normal closure of the half-twist squares (sampled)
};

inline const char* subgroup_token(SubgroupId id) {
  switch (id) {
    case SubgroupId::commutator: return "commutator";
    case SubgroupId::pure: return "pure";
    case SubgroupId::pure_commutator: return "pure-commutator";
    case SubgroupId::brunnian: return "brunnian";
    case SubgroupId::burau_kernel: return "burau-kernel";
    case SubgroupId::ker_h4: return "ker-h4";
    default: return "shepperd";
  }
}

inline std::optional<SubgroupId> parse_subgroup(const std::string& token) {
  for (SubgroupId id :
       {SubgroupId::commutator, SubgroupId::pure, SubgroupId::pure_commutator,
        SubgroupId::brunnian, SubgroupId::burau_kernel, SubgroupId::ker_h4,
        SubgroupId::shepperd}) {
    if (token == subgroup_token(id)) return id;
  }
  return std::nullopt;
}

inline bool supports_decide(SubgroupId id) {
  switch (id) {
    case SubgroupId::commutator:
    case SubgroupId::pure:
    case SubgroupId::brunnian:
    case SubgroupId::burau_kernel:
    case SubgroupId::ker_h4: return true;
    default: return false;
  }
}

inline bool supports_sample(SubgroupId id) {
  switch (id) {
    case SubgroupId::commutator:
    case SubgroupId::pure:
    case SubgroupId::pure_commutator:
    case SubgroupId::ker_h4:
    case SubgroupId::shepperd: return true;
    default: return false;
  }
}

/// Membership test. Throws std::invalid_argument for sample-only subgroups
/// and for ker-h4 queries outside B_4.
inline bool decide(SubgroupId id, const BraidWord& w, long budget = kDefaultStepBudget) {
  switch (id) {
    case SubgroupId::commutator: return exponent_sum(w) == 0;
    case SubgroupId::pure: return permutation(w).is_identity();
    case SubgroupId::brunnian:
      if (w.n < 2) return true;
      for (int k = 1; k <= w.n; ++k)
        if (!is_trivial(remove_strand(w, k), budget)) return false;
      return true;
    case SubgroupId::burau_kernel: return in_burau_kernel(w);
    case SubgroupId::ker_h4:
      if (w.n != 4) throw std::invalid_argument("ker-h4 membership needs a word in B_4");
      return is_trivial(b4_to_b3(w), budget);
    default:
      throw std::invalid_argument(std::string("no membership test for subgroup ") +
                                  subgroup_token(id));
  }
}

namespace detail {

/// Deterministic cross-platform word sampling: raw mt19937_64 draws with
/// modulo range narrowing, never std::uniform_int_distribution (its output
/// is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next(std::uint64_t bound) { return eng_() % bound; }

  int letter(int n) {
    int idx = 1 + static_cast<int>(next(static_cast<std::uint64_t>(n - 1)));
    return next(2) ? idx : -idx;
  }

  BraidWord word(int n, int len) {
    BraidWord out{n, {}};
    out.letters.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) out.letters.push_back(letter(n));
    return out;
  }

 private:
  std::mt19937_64 eng_;
};

inline BraidWord commutator_of(const BraidWord& a, const BraidWord& b) {
  return free_reduce(concat(concat(a, b), concat(inverse(a), inverse(b))));
}

/// A positive word realizing the permutation that sorts w's strands back to
/// the identity arrangement, built by bubble-moving each strand into place.
inline BraidWord sorting_word(const BraidWord& w) {
  Permutation p = permutation(w);
  const int n = p.n();
  // a positive v with permutation(v) inverse to permutation(w): starting
  // from the identity arrangement, bubble strand p(j) into slot j
  BraidWord out{w.n, {}};
  std::vector<int> target(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) target[static_cast<std::size_t>(j) - 1] = p.image_of(j);
  std::vector<int> cur(static_cast<std::size_t>(n));
  for (int pos = 1; pos <= n; ++pos) cur[static_cast<std::size_t>(pos) - 1] = pos;
  for (int j = 1; j <= n; ++j) {
    int want = target[static_cast<std::size_t>(j) - 1];
    int pos = j;
    while (cur[static_cast<std::size_t>(pos) - 1] != want) ++pos;
    for (int q = pos - 1; q >= j; --q) {
      out.letters.push_back(q);
      std::swap(cur[static_cast<std::size_t>(q) - 1], cur[static_cast<std::size_t>(q)]);
    }
  }
  return out;
}

inline BraidWord sample_pure(int n, int size, Rng& rng) {
  BraidWord w = rng.word(n, size);
  return free_reduce(concat(w, sorting_word(w)));
}

inline BraidWord sample_impl(SubgroupId id, int n, int size, Rng& rng) {
  switch (id) {
    case SubgroupId::commutator: {
      int half = size / 2 > 0 ? size / 2 : 1;
      return commutator_of(rng.word(n, half), rng.word(n, half));
    }
    case SubgroupId::pure: return sample_pure(n, size, rng);
    case SubgroupId::pure_commutator: {
      int half = size / 2 > 0 ? size / 2 : 1;
      return commutator_of(sample_pure(n, half, rng), sample_pure(n, half, rng));
    }
    case SubgroupId::ker_h4: {
      // products of conjugates of (s_1 s_3^{-1})^{+-1}, the normal generator
      // of the fold kernel
      int factors = size / 10 > 0 ? size / 10 : 1;
      BraidWord out = identity_word(4);
      for (int k = 0; k < factors; ++k) {
        BraidWord g = rng.word(4, 4);
        BraidWord core = rng.next(2) ? make_word(4, {1, -3}) : make_word(4, {3, -1});
        out = concat(out, concat(concat(g, core), inverse(g)));
      }
      return free_reduce(out);
    }
    default: {  // shepperd
      int per = n * (n - 1) > 0 ? n * (n - 1) : 1;
      int factors = size / per > 0 ? size / per : 1;
      std::vector<int> indices;
      for (int k = 0; k < factors; ++k) {
        int i = 1 + static_cast<int>(rng.next(static_cast<std::uint64_t>(n)));
        indices.push_back(rng.next(2) ? i : -i);
      }
      return shepperd_word(n, indices);
    }
  }
}

}  // namespace detail

/// Draws a deterministic pseudo-random element of the subgroup. `size` sets
/// the approximate letter count before free reduction. Throws for subgroups
/// without a sampler and for strand counts outside the subgroup's domain.
inline BraidWord sample(SubgroupId id, int n, int size, std::uint64_t seed) {
  if (!supports_sample(id))
    throw std::invalid_argument(std::string("no sampler for subgroup ") + subgroup_token(id));
  if (size < 1) throw std::invalid_argument("sample: size must be >= 1");
  if (id == SubgroupId::ker_h4) {
    if (n != 4) throw std::invalid_argument("ker-h4 sampling needs n = 4");
  } else if (id == SubgroupId::shepperd) {
    if (n < 3) throw std::invalid_argument("shepperd sampling needs n >= 3");
  } else if (n < 2) {
    throw std::invalid_argument("sample: need at least 2 strands");
  }
  detail::Rng rng(seed);
  return detail::sample_impl(id, n, size, rng);
}

/// All pairwise signed crossing counts of a pure braid vanish. For Brunnian
/// braids on at least 3 strands this is a consequence of membership; the
/// check takes any pure input.
inline bool linking_check_brunnian(const BraidWord& w) {
  if (!decide(SubgroupId::pure, w))
    throw std::invalid_argument("linking_check_brunnian: word must be pure");
  CrossingTable t = crossing_table(w);
  for (int a = 1; a <= w.n; ++a)
    for (int b = a + 1; b <= w.n; ++b)
      if (t.at(a, b) != 0) return false;
  return true;
}

}  // namespace braid
