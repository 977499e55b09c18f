// End-to-end acceptance battery. Each criterion prints one PASS/FAIL line;
// the exit code is the number of failures. Sizes, seeds, and time limits are
// pinned here so runs are comparable.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "braid/bench.hpp"
#include "braid/burau.hpp"
#include "braid/density.hpp"
#include "braid/garside.hpp"
#include "braid/order.hpp"
#include "braid/strands.hpp"
#include "braid/subgroups.hpp"
#include "braid/word.hpp"
#include "support/rewrite_oracle.hpp"

namespace {

using braid::BraidWord;
using braid::compare;
using braid::make_word;
using braid::Ordering;
using braid::SubgroupId;

constexpr double kOracleTimeLimitSec = 300.0;
constexpr double kTrichotomyTimeLimitSec = 120.0;
constexpr double kDensityTimeLimitSec = 600.0;
constexpr int kOracleLenB3 = 8, kOracleBoundB3 = 12;
constexpr int kOracleLenB4 = 6, kOracleBoundB4 = 10;
constexpr int kTrichotomyWords = 10'000;
constexpr int kLeastPositives = 1'000;
constexpr int kDetLawWords = 1'000;
constexpr int kContainmentSamples = 500;
constexpr int kDensityTrials = 100;
constexpr int kPureFloorTrials = 1'000;
constexpr int kShepperdFloorTrials = 500;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

/// Deterministic word source; raw engine draws keep it identical everywhere.
struct Source {
  std::mt19937_64 eng;
  explicit Source(std::uint64_t seed) : eng(seed) {}
  std::uint64_t next(std::uint64_t bound) { return eng() % bound; }
  BraidWord word(int n, int len) {
    BraidWord w{n, {}};
    for (int i = 0; i < len; ++i) {
      int idx = 1 + static_cast<int>(next(static_cast<unsigned>(n - 1)));
      w.letters.push_back(next(2) ? idx : -idx);
    }
    return w;
  }
};

/// Walks every word over the 2(n-1)-letter alphabet up to max_len.
template <typename Fn>
void for_each_word(int n, int max_len, Fn&& fn) {
  BraidWord w{n, {}};
  fn(w);
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> state(static_cast<std::size_t>(len), 0);
    int codes = 2 * (n - 1);
    while (true) {
      w.letters.clear();
      for (int code : state) {
        int idx = code / 2 + 1;
        w.letters.push_back(code % 2 ? -idx : idx);
      }
      fn(w);
      int pos = len - 1;
      while (pos >= 0 && state[static_cast<std::size_t>(pos)] == codes - 1) {
        state[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++state[static_cast<std::size_t>(pos)];
    }
  }
}

bool criterion_oracle_agreement(std::string& detail) {
  Timer timer;
  long checked = 0;
  long disagreements = 0;
  struct Config {
    int n, max_len, bound;
  };
  for (Config cfg : {Config{3, kOracleLenB3, kOracleBoundB3}, Config{4, kOracleLenB4, kOracleBoundB4}}) {
    testsupport::RewriteClassOracle oracle(cfg.n, cfg.bound);
    for_each_word(cfg.n, cfg.max_len, [&](const BraidWord& w) {
      ++checked;
      if (braid::is_trivial(w) != oracle.is_trivial(w)) ++disagreements;
    });
  }
  double elapsed = timer.seconds();
  detail = "words=" + std::to_string(checked) + " disagreements=" + std::to_string(disagreements) +
           " seconds=" + std::to_string(elapsed);
  return disagreements == 0 && elapsed < kOracleTimeLimitSec;
}

bool criterion_trichotomy(std::string& detail) {
  Timer timer;
  Source src(11);
  long failures = 0;
  for (int t = 0; t < kTrichotomyWords; ++t) {
    int n = 2 + static_cast<int>(src.next(5));
    BraidWord w = src.word(n, 1 + static_cast<int>(src.next(40)));
    BraidWord v = src.word(n, 1 + static_cast<int>(src.next(40)));
    braid::SigmaSign fwd = braid::sigma_sign(w);
    braid::SigmaSign bwd = braid::sigma_sign(braid::inverse(w));
    bool sign_ok = (fwd.is_trivial() && bwd.is_trivial()) ||
                   (fwd.is_positive() && bwd.is_negative()) ||
                   (fwd.is_negative() && bwd.is_positive());
    if (!sign_ok || fwd.is_trivial() != braid::is_trivial(w)) ++failures;
    Ordering ab = compare(w, v);
    Ordering ba = compare(v, w);
    bool pair_ok = (ab == Ordering::EQ && ba == Ordering::EQ) ||
                   (ab == Ordering::LT && ba == Ordering::GT) ||
                   (ab == Ordering::GT && ba == Ordering::LT);
    if (!pair_ok) ++failures;
  }
  double elapsed = timer.seconds();
  detail = "words=" + std::to_string(kTrichotomyWords) + " failures=" + std::to_string(failures) +
           " seconds=" + std::to_string(elapsed);
  return failures == 0 && elapsed < kTrichotomyTimeLimitSec;
}

bool criterion_least_positive(std::string& detail) {
  long tested = 0;
  long failures = 0;
  for (int n = 3; n <= 6; ++n) {
    Source src(300 + static_cast<unsigned>(n));
    BraidWord sigma1 = make_word(n, {1});
    int found = 0;
    while (found < kLeastPositives) {
      BraidWord w = src.word(n, 1 + static_cast<int>(src.next(30)));
      braid::SigmaSign s = braid::sigma_sign(w);
      if (s.is_trivial()) continue;
      if (s.is_negative()) w = braid::inverse(w);
      Ordering ord = compare(sigma1, w);
      if (ord == Ordering::EQ) continue;  // the criterion is strict: w != s1
      ++found;
      ++tested;
      if (ord != Ordering::LT) ++failures;
    }
  }
  detail = "positives=" + std::to_string(tested) + " failures=" + std::to_string(failures);
  return failures == 0;
}

bool criterion_burau(std::string& detail) {
  long checked = 0;
  long failures = 0;
  for (int n = 3; n <= 7; ++n)
    for (int i = 1; i < n - 1; ++i)
      for (int j = i + 1; j < n; ++j) {
        BraidWord rel = j == i + 1 ? make_word(n, {i, j, i, -j, -i, -j})
                                   : make_word(n, {i, j, -i, -j});
        ++checked;
        if (!(braid::burau_matrix(rel) == braid::BurauMatrix::identity(n))) ++failures;
      }
  Source src(44);
  for (int t = 0; t < kDetLawWords; ++t) {
    int n = 2 + static_cast<int>(src.next(5));
    BraidWord w = src.word(n, 1 + static_cast<int>(src.next(20)));
    int e = braid::exponent_sum(w);
    braid::LaurentPoly expected = braid::LaurentPoly::monomial(e % 2 == 0 ? 1 : -1, e);
    ++checked;
    if (!(braid::burau_det(w) == expected)) ++failures;
  }
  braid::BurauMatrix s2 = braid::burau_matrix(make_word(3, {2}));
  braid::LaurentPoly one = braid::LaurentPoly::from_int(1);
  braid::LaurentPoly t = braid::LaurentPoly::variable();
  braid::LaurentPoly zero;
  const braid::LaurentPoly* rows[3][3] = {{&one, &zero, &zero},
                                          {&zero, nullptr, &t},
                                          {&zero, &one, &zero}};
  braid::LaurentPoly mid = one - t;
  rows[1][1] = &mid;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ++checked;
      if (!(s2.at(i, j) == *rows[i][j])) ++failures;
    }
  detail = "identities=" + std::to_string(checked) + " failures=" + std::to_string(failures);
  return failures == 0;
}

bool criterion_centralizer(std::string& detail) {
  long checked = 0;
  long failures = 0;
  for (int r : {3, 4, 5}) {
    for (int p = -2; p <= 2; ++p) {
      for (int q = -2; q <= 2; ++q) {
        braid::CentralizerParams params{r, braid::CentralizerForm::pq, p, q};
        BraidWord w = braid::centralizer_element(params, r);
        for (int i = 1; i <= r - 2; ++i) {
          BraidWord gen = make_word(r, {i});
          BraidWord comm = braid::free_reduce(braid::concat(
              braid::concat(w, gen), braid::concat(braid::inverse(w), braid::inverse(gen))));
          ++checked;
          if (!braid::is_trivial(comm)) ++failures;
        }
        ++checked;
        if (compare(w, braid::centralizer_element(braid::to_uv_form(params), r)) !=
            Ordering::EQ)
          ++failures;
      }
    }
  }
  detail = "identities=" + std::to_string(checked) + " failures=" + std::to_string(failures);
  return failures == 0;
}

bool criterion_containments(std::string& detail) {
  long checked = 0;
  long failures = 0;
  for (int t = 0; t < kContainmentSamples; ++t) {
    std::uint64_t seed = 9000 + static_cast<unsigned>(t);
    BraidWord h4 = braid::sample(SubgroupId::ker_h4, 4, 20, seed);
    ++checked;
    if (!braid::decide(SubgroupId::ker_h4, h4) || !braid::decide(SubgroupId::commutator, h4))
      ++failures;

    int n = 3 + static_cast<int>(seed % 3);
    BraidWord sh = braid::sample(SubgroupId::shepperd, n, 12, seed);
    ++checked;
    if (!braid::decide(SubgroupId::pure, sh)) ++failures;

    BraidWord pc = braid::sample(SubgroupId::pure_commutator, n, 8, seed);
    ++checked;
    if (!braid::decide(SubgroupId::pure, pc) || !braid::decide(SubgroupId::commutator, pc))
      ++failures;

    Source src(seed);
    BraidWord plain = src.word(4, 9);
    if (braid::exponent_sum(plain) != 0) {
      ++checked;
      if (braid::decide(SubgroupId::burau_kernel, plain)) ++failures;
    }
  }

  bool found_expected = false;
  long brunnian_hits = 0;
  BraidWord expected = make_word(3, {1, -2, 1, -2, 1, -2});
  for_each_word(3, 6, [&](const BraidWord& w) {
    ++checked;
    if (!braid::decide(SubgroupId::brunnian, w) || braid::is_trivial(w)) return;
    ++brunnian_hits;
    if (!braid::linking_check_brunnian(w)) ++failures;
    if (!braid::decide(SubgroupId::commutator, w)) ++failures;
    if (compare(w, expected) == Ordering::EQ) found_expected = true;
  });
  if (!found_expected) ++failures;
  detail = "checked=" + std::to_string(checked) + " brunnian_hits=" +
           std::to_string(brunnian_hits) + " failures=" + std::to_string(failures);
  return failures == 0;
}

bool criterion_density(std::string& detail) {
  Timer timer;
  struct Config {
    SubgroupId id;
    int n, size;
  };
  const Config configs[] = {{SubgroupId::commutator, 3, 12},
                            {SubgroupId::commutator, 4, 12},
                            {SubgroupId::pure_commutator, 3, 8},
                            {SubgroupId::ker_h4, 4, 20}};
  long successes = 0;
  long failures = 0;
  int idx = 0;
  for (const Config& cfg : configs) {
    braid::DensitySummary s = braid::verify_dense(cfg.id, cfg.n, kDensityTrials,
                                                  7000 + static_cast<unsigned>(idx++),
                                                  braid::kDefaultWitnessBudget, cfg.size);
    successes += s.successes;
    failures += s.failures;
  }
  double elapsed = timer.seconds();
  detail = "successes=" + std::to_string(successes) + "/" +
           std::to_string(4 * kDensityTrials) + " seconds=" + std::to_string(elapsed);
  return failures == 0 && successes == 4 * kDensityTrials && elapsed < kDensityTimeLimitSec;
}

bool criterion_discreteness(std::string& detail) {
  long tested = 0;
  long violations = 0;
  for (int n = 3; n <= 5; ++n) {
    braid::LeastSummary s = braid::verify_least(SubgroupId::pure, make_word(n, {1, 1}), n,
                                                kPureFloorTrials, 500 + static_cast<unsigned>(n));
    tested += s.tested;
    violations += s.violations;
    if (s.tested < kPureFloorTrials) ++violations;
  }
  for (int n = 3; n <= 4; ++n) {
    braid::LeastSummary s =
        braid::verify_least(SubgroupId::shepperd, braid::full_twist(n - 1, n, 1), n,
                            kShepperdFloorTrials, 600 + static_cast<unsigned>(n), 12);
    tested += s.tested;
    violations += s.violations;
    if (s.tested < kShepperdFloorTrials) ++violations;
  }
  detail = "tested=" + std::to_string(tested) + " violations=" + std::to_string(violations);
  return violations == 0;
}

bool criterion_bench_reproducible(std::string& detail) {
  braid::BenchConfig cfg;
  cfg.n = 6;
  cfg.len = 200;
  cfg.count = 100;
  cfg.seed = 1;
  braid::BenchResult a = braid::run_bench(cfg);
  braid::BenchResult b = braid::run_bench(cfg);
  bool same = a.words == b.words && a.total_steps == b.total_steps &&
              a.max_intermediate_length == b.max_intermediate_length;
  detail = "mean_steps=" + std::to_string(a.mean_steps()) +
           " max_len=" + std::to_string(a.max_intermediate_length) +
           (same ? " runs_identical=yes" : " runs_identical=no");
  return same;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*run)(std::string&);
  };
  const Criterion criteria[] = {
      {"1-order-oracle-agreement", criterion_oracle_agreement},
      {"2-trichotomy-antisymmetry", criterion_trichotomy},
      {"3-sigma1-least-positive", criterion_least_positive},
      {"4-burau-laws", criterion_burau},
      {"5-centralizer-family", criterion_centralizer},
      {"6-subgroup-containments", criterion_containments},
      {"7-density-witnesses", criterion_density},
      {"8-discreteness-floors", criterion_discreteness},
      {"9-bench-reproducibility", criterion_bench_reproducible},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string det;
    bool ok = false;
    try {
      ok = c.run(det);
    } catch (const std::exception& e) {
      det = std::string("exception: ") + e.what();
    }
    std::printf("%s %s %s\n", ok ? "PASS" : "FAIL", c.name, det.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  std::printf("failed=%d/9\n", failures);
  return failures;
}
