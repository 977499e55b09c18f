#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braid/order.hpp"
#include "braid/word.hpp"

namespace braid {

struct BenchConfig {
  int n = 6;
  int len = 200;
  int count = 100;
  std::uint64_t seed = 1;
  long budget = kDefaultStepBudget;
};

struct BenchResult {
  int words = 0;
  long long total_steps = 0;
  std::size_t max_intermediate_length = 0;
  double seconds = 0.0;

  double mean_steps() const { return words ? static_cast<double>(total_steps) / words : 0.0; }
  double words_per_sec() const { return seconds > 0 ? words / seconds : 0.0; }
};

/// Reduces `count` uniform random words of length `len` and accumulates
/// rewrite statistics. Word generation happens up front so timing covers
/// only the reduction itself.
inline BenchResult run_bench(const BenchConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("bench: need n >= 2");
  if (cfg.len < 1 || cfg.count < 1) throw std::invalid_argument("bench: need len, count >= 1");
  std::mt19937_64 rng(cfg.seed);
  std::vector<BraidWord> words;
  words.reserve(static_cast<std::size_t>(cfg.count));
  for (int i = 0; i < cfg.count; ++i) {
    BraidWord w{cfg.n, {}};
    w.letters.reserve(static_cast<std::size_t>(cfg.len));
    for (int j = 0; j < cfg.len; ++j) {
      int idx = 1 + static_cast<int>(rng() % static_cast<unsigned>(cfg.n - 1));
      w.letters.push_back(rng() % 2 ? idx : -idx);
    }
    words.push_back(std::move(w));
  }

  BenchResult result;
  result.words = cfg.count;
  auto start = std::chrono::steady_clock::now();
  for (const BraidWord& w : words) {
    ReduceStats stats;
    handle_reduce(w, cfg.budget, &stats);
    result.total_steps += stats.steps;
    if (stats.max_length > result.max_intermediate_length)
      result.max_intermediate_length = stats.max_length;
  }
  auto stop = std::chrono::steady_clock::now();
  result.seconds = std::chrono::duration<double>(stop - start).count();
  return result;
}

/// Four-line report; only the last line depends on timing.
inline std::string format_bench(const BenchResult& r) {
  std::ostringstream out;
  out << "words=" << r.words << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", r.mean_steps());
  out << "mean_rewrite_steps=" << buf << "\n";
  out << "max_intermediate_length=" << r.max_intermediate_length << "\n";
  std::snprintf(buf, sizeof buf, "%.1f", r.words_per_sec());
  out << "words_per_sec=" << buf << "\n";
  return out.str();
}

}  // namespace braid
