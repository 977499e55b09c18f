#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braid/order.hpp"
#include "braid/subgroups.hpp"
#include "braid/word.hpp"

namespace braid {

inline constexpr long kDefaultWitnessBudget = 10'000;
inline constexpr int kWitnessCandidateMaxLen = 4;

/// Outcome of a witness search. `budget` echoes the comparator-invocation
/// allowance the search ran under; `candidates_tried` counts attempted
/// conjugating candidates (both commutator orientations separately).
struct WitnessReport {
  bool found = false;
  std::optional<BraidWord> witness;
  long candidates_tried = 0;
  long budget = 0;
};

namespace detail {

/// Subgroups usable in witness searches: those with a membership test, plus
/// the sampled pure-braid commutator subgroup, which gets the conjunction of
/// its two decidable supergroups as a necessary membership check (witnesses
/// are commutators of members, so they stay in the subgroup by construction).
inline bool density_searchable(SubgroupId id) {
  return supports_decide(id) || id == SubgroupId::pure_commutator;
}

inline bool density_member(SubgroupId id, const BraidWord& w, long budget) {
  if (id == SubgroupId::pure_commutator)
    return decide(SubgroupId::pure, w) && decide(SubgroupId::commutator, w);
  return decide(id, w, budget);
}

/// Enumerates freely reduced candidate words over generator indices <= max
/// index in length-then-lexicographic order; returns false when the pool is
/// exhausted. `state` is the flat odometer (letter codes 0..2*max_index-1).
class CandidatePool {
 public:
  CandidatePool(int n, int max_index, int max_len)
      : n_(n), max_index_(max_index), max_len_(max_len) {}

  std::optional<BraidWord> next() {
    while (true) {
      if (!advance()) return std::nullopt;
      BraidWord w{n_, {}};
      for (int code : state_) {
        int idx = code / 2 + 1;
        w.letters.push_back(code % 2 ? -idx : idx);
      }
      if (free_reduce(w) == w) return w;
    }
  }

 private:
  bool advance() {
    if (static_cast<int>(state_.size()) > max_len_) return false;
    int codes = 2 * max_index_;
    int pos = static_cast<int>(state_.size()) - 1;
    while (pos >= 0 && state_[static_cast<std::size_t>(pos)] == codes - 1) {
      state_[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) {
      if (static_cast<int>(state_.size()) == max_len_) return false;
      state_.assign(state_.size() + 1, 0);
      return true;
    }
    ++state_[static_cast<std::size_t>(pos)];
    return true;
  }

  int n_;
  int max_index_;
  int max_len_;
  std::vector<int> state_;
};

}  // namespace detail

/// Searches for a subgroup element strictly between the identity and beta.
/// beta must be a positive element of the subgroup. Candidates are the two
/// commutator forms beta c beta^{-1} c^{-1} and beta c^{-1} beta^{-1} c for
/// conjugators c drawn from the freely reduced words over indices up to
/// beta's dominant index, in length-then-lexicographic order. The budget
/// caps comparator invocations (sign evaluations); every hit is re-validated
/// for ordering and membership before it is returned.
inline WitnessReport smaller_positive(SubgroupId id, const BraidWord& beta,
                                      long budget = kDefaultWitnessBudget,
                                      long step_budget = kDefaultStepBudget) {
  if (!detail::density_searchable(id))
    throw std::invalid_argument(std::string("no membership check usable for subgroup ") +
                                subgroup_token(id));
  if (budget < 1) throw std::invalid_argument("smaller_positive: budget must be >= 1");
  if (!detail::density_member(id, beta, step_budget))
    throw std::invalid_argument("smaller_positive: beta is not in the subgroup");
  SigmaSign s = sigma_sign(beta, step_budget);
  if (!s.is_positive())
    throw std::invalid_argument("smaller_positive: beta must be positive");

  WitnessReport report;
  report.budget = budget;
  long used = 0;
  detail::CandidatePool pool(beta.n, s.index, kWitnessCandidateMaxLen);
  BraidWord beta_inv = inverse(beta);
  while (auto c = pool.next()) {
    for (int orientation = 0; orientation < 2; ++orientation) {
      if (used >= budget) return report;
      BraidWord conj = orientation == 0 ? *c : inverse(*c);
      BraidWord gamma = free_reduce(
          concat(concat(beta, conj), concat(beta_inv, inverse(conj))));
      ++report.candidates_tried;
      ++used;
      SigmaSign gs = sigma_sign(gamma, step_budget);
      if (!gs.is_positive()) continue;
      if (used >= budget) return report;
      ++used;
      if (compare(gamma, beta, step_budget) != Ordering::LT) continue;
      if (!detail::density_member(id, gamma, step_budget)) continue;
      report.found = true;
      report.witness = std::move(gamma);
      return report;
    }
  }
  return report;
}

/// Finds a subgroup element h with f < h < g, via a witness for the gap
/// between the identity and f^{-1} g. Preconditions: f and g lie in the
/// subgroup and f < g.
inline WitnessReport between(SubgroupId id, const BraidWord& f, const BraidWord& g,
                             long budget = kDefaultWitnessBudget,
                             long step_budget = kDefaultStepBudget) {
  if (!detail::density_searchable(id))
    throw std::invalid_argument(std::string("no membership check usable for subgroup ") +
                                subgroup_token(id));
  if (f.n != g.n) throw std::invalid_argument("between: mismatched strand counts");
  if (!detail::density_member(id, f, step_budget) ||
      !detail::density_member(id, g, step_budget))
    throw std::invalid_argument("between: endpoints must lie in the subgroup");
  if (compare(f, g, step_budget) != Ordering::LT)
    throw std::invalid_argument("between: requires f < g");

  BraidWord delta = free_reduce(concat(inverse(f), g));
  WitnessReport inner = smaller_positive(id, delta, budget, step_budget);
  if (!inner.found) return inner;
  BraidWord h = free_reduce(concat(f, *inner.witness));
  if (compare(f, h, step_budget) != Ordering::LT ||
      compare(h, g, step_budget) != Ordering::LT ||
      !detail::density_member(id, h, step_budget))
    throw std::logic_error("between: witness failed revalidation");
  inner.witness = std::move(h);
  return inner;
}

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Aggregate result of repeated between-searches on sampled pairs.
struct DensitySummary {
  SubgroupId id = SubgroupId::commutator;
  int n = 0;
  int trials = 0;
  int successes = 0;
  int failures = 0;
  long long total_candidates = 0;
  long max_candidates = 0;
  std::optional<int> first_failure_trial;
  std::optional<BraidWord> first_failure_f;
  std::optional<BraidWord> first_failure_g;

  bool all_ok() const { return failures == 0 && successes == trials; }

  std::string to_text() const {
    std::ostringstream out;
    out << "subgroup=" << subgroup_token(id) << " n=" << n << " trials=" << trials
        << " successes=" << successes << " failures=" << failures
        << " total_candidates=" << total_candidates
        << " max_candidates=" << max_candidates << "\n";
    if (first_failure_trial) {
      out << "first_failure_trial=" << *first_failure_trial
          << " f=" << format_word(*first_failure_f) << " g=" << format_word(*first_failure_g)
          << "\n";
    }
    return out.str();
  }
};

/// Samples pairs of subgroup elements, orders each pair, and requires a
/// strictly-between witness for every pair. Equal samples are re-drawn a few
/// times before the trial counts as a failure.
inline DensitySummary verify_dense(SubgroupId id, int n, int trials, std::uint64_t seed,
                                   long budget = kDefaultWitnessBudget, int size = 16,
                                   long step_budget = kDefaultStepBudget) {
  if (!supports_sample(id))
    throw std::invalid_argument(std::string("verify_dense needs a sampler for ") +
                                subgroup_token(id));
  if (!detail::density_searchable(id))
    throw std::invalid_argument(std::string("verify_dense needs a membership check for ") +
                                subgroup_token(id));
  if (trials < 0) throw std::invalid_argument("verify_dense: negative trial count");
  DensitySummary summary;
  summary.id = id;
  summary.n = n;
  summary.trials = trials;
  for (int t = 0; t < trials; ++t) {
    BraidWord f = sample(id, n, size, detail::mix_seed(seed, 2 * static_cast<unsigned>(t)));
    BraidWord g = sample(id, n, size, detail::mix_seed(seed, 2 * static_cast<unsigned>(t) + 1));
    for (int retry = 0; retry < 16 && compare(f, g, step_budget) == Ordering::EQ; ++retry)
      g = sample(id, n, size, detail::mix_seed(seed, (static_cast<unsigned>(t) << 16) + 0xd15c0 + static_cast<unsigned>(retry)));
    Ordering ord = compare(f, g, step_budget);
    bool ok = false;
    WitnessReport rep;
    if (ord != Ordering::EQ) {
      if (ord == Ordering::GT) std::swap(f, g);
      rep = between(id, f, g, budget, step_budget);
      ok = rep.found;
    }
    summary.total_candidates += rep.candidates_tried;
    if (rep.candidates_tried > summary.max_candidates)
      summary.max_candidates = rep.candidates_tried;
    if (ok) {
      ++summary.successes;
    } else {
      ++summary.failures;
      if (!summary.first_failure_trial) {
        summary.first_failure_trial = t;
        summary.first_failure_f = f;
        summary.first_failure_g = g;
      }
    }
  }
  return summary;
}

/// Aggregate result of least-element spot checks against sampled members.
struct LeastSummary {
  SubgroupId id = SubgroupId::commutator;
  int n = 0;
  int requested = 0;
  int tested = 0;
  int skipped_trivial = 0;
  int violations = 0;
  BraidWord candidate;
  std::optional<BraidWord> first_counterexample;

  bool all_ok() const { return violations == 0; }

  std::string to_text() const {
    std::ostringstream out;
    out << "subgroup=" << subgroup_token(id) << " n=" << n << " requested=" << requested
        << " tested=" << tested << " skipped_trivial=" << skipped_trivial
        << " violations=" << violations << " candidate=" << format_word(candidate) << "\n";
    if (first_counterexample)
      out << "first_counterexample=" << format_word(*first_counterexample) << "\n";
    return out.str();
  }
};

/// Checks that `candidate` is a lower bound for the positive part of the
/// subgroup: for sampled members w (inverted when negative so the sample is
/// positive), candidate <= w must hold. Trivial samples are skipped.
inline LeastSummary verify_least(SubgroupId id, const BraidWord& candidate, int n, int trials,
                                 std::uint64_t seed, int size = 16,
                                 long step_budget = kDefaultStepBudget) {
  if (!supports_sample(id))
    throw std::invalid_argument(std::string("verify_least needs a sampler for ") +
                                subgroup_token(id));
  if (candidate.n != n) throw std::invalid_argument("verify_least: candidate strand count");
  if (trials < 0) throw std::invalid_argument("verify_least: negative trial count");
  if (!sigma_sign(candidate, step_budget).is_positive())
    throw std::invalid_argument("verify_least: candidate must be positive");
  if (supports_decide(id) && !decide(id, candidate, step_budget))
    throw std::invalid_argument("verify_least: candidate not in the subgroup");

  LeastSummary summary;
  summary.id = id;
  summary.n = n;
  summary.requested = trials;
  summary.candidate = candidate;
  long attempts = 0;
  const long max_attempts = 20L * trials + 16;
  while (summary.tested < trials && attempts < max_attempts) {
    BraidWord w = sample(id, n, size, detail::mix_seed(seed, static_cast<std::uint64_t>(attempts)));
    ++attempts;
    SigmaSign s = sigma_sign(w, step_budget);
    if (s.is_trivial()) {
      ++summary.skipped_trivial;
      continue;
    }
    if (s.is_negative()) w = inverse(w);
    ++summary.tested;
    if (compare(candidate, w, step_budget) == Ordering::GT) {
      ++summary.violations;
      if (!summary.first_counterexample) summary.first_counterexample = w;
    }
  }
  return summary;
}

}  // namespace braid
