#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "braid/burau.hpp"
#include "braid/density.hpp"
#include "braid/garside.hpp"
#include "braid/order.hpp"
#include "braid/strands.hpp"
#include "braid/subgroups.hpp"
#include "braid/word.hpp"

namespace braid {

struct VerifyConfig {
  int trials = 100;
  std::uint64_t seed = 1;
  int n_min = 3;
  int n_max = 6;
  long budget = kDefaultStepBudget;
  long witness_budget = kDefaultWitnessBudget;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }

  std::string to_text() const {
    std::ostringstream out;
    int passed = 0;
    for (const CheckResult& c : checks) {
      out << (c.pass ? "PASS" : "FAIL") << " " << c.name;
      if (!c.detail.empty()) out << " " << c.detail;
      out << "\n";
      if (c.pass) ++passed;
    }
    out << "passed=" << passed << "/" << checks.size() << "\n";
    return out.str();
  }
};

namespace detail {

inline bool commutes(const BraidWord& a, const BraidWord& b, long budget) {
  return is_trivial(commutator_of(a, b), budget);
}

inline CheckResult check_relation_soundness(const VerifyConfig& cfg) {
  CheckResult res{"relation-soundness", true, ""};
  int checked = 0;
  for (int n = 3; n <= 7; ++n) {
    for (int i = 1; i < n - 1; ++i) {
      for (int j = i + 1; j < n; ++j) {
        BraidWord rel = j == i + 1 ? make_word(n, {i, j, i, -j, -i, -j})
                                   : make_word(n, {i, j, -i, -j});
        ++checked;
        if (!is_trivial(rel, cfg.budget)) {
          res.pass = false;
          res.detail = "nontrivial relator " + format_word(rel);
          return res;
        }
      }
    }
  }
  res.detail = "relators=" + std::to_string(checked);
  return res;
}

inline CheckResult check_order_trichotomy(const VerifyConfig& cfg) {
  CheckResult res{"order-trichotomy", true, ""};
  int checked = 0;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    Rng rng(mix_seed(cfg.seed, 101 + static_cast<unsigned>(n)));
    for (int t = 0; t < cfg.trials; ++t) {
      BraidWord w = rng.word(n, 1 + static_cast<int>(rng.next(40)));
      SigmaSign fwd = sigma_sign(w, cfg.budget);
      SigmaSign bwd = sigma_sign(inverse(w), cfg.budget);
      ++checked;
      bool ok = (fwd.is_trivial() && bwd.is_trivial()) ||
                (fwd.is_positive() && bwd.is_negative()) ||
                (fwd.is_negative() && bwd.is_positive());
      if (!ok) {
        res.pass = false;
        res.detail = "sign asymmetry at " + format_word(w);
        return res;
      }
    }
  }
  res.detail = "words=" + std::to_string(checked);
  return res;
}

inline CheckResult check_least_positive_generator(const VerifyConfig& cfg) {
  CheckResult res{"least-positive-generator", true, ""};
  int checked = 0;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    BraidWord sigma1 = make_word(n, {1});
    Rng rng(mix_seed(cfg.seed, 202 + static_cast<unsigned>(n)));
    int tested = 0;
    long attempts = 0;
    while (tested < cfg.trials && attempts < 20L * cfg.trials) {
      BraidWord w = rng.word(n, 1 + static_cast<int>(rng.next(30)));
      ++attempts;
      SigmaSign s = sigma_sign(w, cfg.budget);
      if (s.is_trivial()) continue;
      if (s.is_negative()) w = inverse(w);
      Ordering ord = compare(sigma1, w, cfg.budget);
      if (ord == Ordering::EQ) continue;  // strictness only applies off s1 itself
      ++tested;
      ++checked;
      if (ord != Ordering::LT) {
        res.pass = false;
        res.detail = "positive word below s1: " + format_word(w);
        return res;
      }
    }
  }
  res.detail = "positives=" + std::to_string(checked);
  return res;
}

inline CheckResult check_half_twist_centrality(const VerifyConfig& cfg) {
  CheckResult res{"half-twist-centrality", true, ""};
  int checked = 0;
  for (int k = 2; k <= 6; ++k) {
    BraidWord twist = full_twist(k, k, 1);
    BraidWord half = half_twist(k, k);
    for (int i = 1; i < k; ++i) {
      BraidWord gen = make_word(k, {i});
      ++checked;
      if (!commutes(twist, gen, cfg.budget)) {
        res.pass = false;
        res.detail = "full twist not central in B_" + std::to_string(k);
        return res;
      }
      // Delta_k conjugation realizes the index flip i -> k - i.
      BraidWord flipped = make_word(k, {k - i});
      BraidWord conj = concat(concat(half, gen), inverse(half));
      ++checked;
      if (compare(conj, flipped, cfg.budget) != Ordering::EQ) {
        res.pass = false;
        res.detail = "half twist flip failed in B_" + std::to_string(k);
        return res;
      }
    }
  }
  res.detail = "identities=" + std::to_string(checked);
  return res;
}

inline CheckResult check_centralizer_forms(const VerifyConfig& cfg) {
  CheckResult res{"centralizer-forms", true, ""};
  int checked = 0;
  for (int r : {3, 4, 5}) {
    for (int p = -2; p <= 2; ++p) {
      for (int q = -2; q <= 2; ++q) {
        CentralizerParams params{r, CentralizerForm::pq, p, q};
        BraidWord w = centralizer_element(params, r);
        for (int i = 1; i <= r - 2; ++i) {
          ++checked;
          if (!commutes(w, make_word(r, {i}), cfg.budget)) {
            res.pass = false;
            res.detail = "C(" + std::to_string(r) + ") element fails to centralize s" +
                         std::to_string(i);
            return res;
          }
        }
        BraidWord uv = centralizer_element(to_uv_form(params), r);
        ++checked;
        if (compare(w, uv, cfg.budget) != Ordering::EQ) {
          res.pass = false;
          res.detail = "pq/uv mismatch at r=" + std::to_string(r) + " p=" +
                       std::to_string(p) + " q=" + std::to_string(q);
          return res;
        }
      }
    }
  }
  res.detail = "identities=" + std::to_string(checked);
  return res;
}

inline CheckResult check_burau_laws(const VerifyConfig& cfg) {
  CheckResult res{"burau-laws", true, ""};
  int checked = 0;
  for (int n = 3; n <= 5; ++n) {
    for (int i = 1; i < n - 1; ++i) {
      for (int j = i + 1; j < n; ++j) {
        BraidWord rel = j == i + 1 ? make_word(n, {i, j, i, -j, -i, -j})
                                   : make_word(n, {i, j, -i, -j});
        ++checked;
        if (!(burau_matrix(rel) == BurauMatrix::identity(n))) {
          res.pass = false;
          res.detail = "relator image is not the identity matrix";
          return res;
        }
      }
    }
  }
  LaurentPoly minus_t = -LaurentPoly::variable();
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      ++checked;
      if (!(burau_det(make_word(n, {i})) == minus_t)) {
        res.pass = false;
        res.detail = "det of a generator is not -t";
        return res;
      }
    }
  }
  Rng rng(mix_seed(cfg.seed, 303));
  for (int t = 0; t < cfg.trials; ++t) {
    int n = cfg.n_min + static_cast<int>(rng.next(
                static_cast<std::uint64_t>(cfg.n_max - cfg.n_min + 1)));
    BraidWord w = rng.word(n, 1 + static_cast<int>(rng.next(24)));
    ++checked;
    int e = exponent_sum(w);
    LaurentPoly expected_det = LaurentPoly::monomial(e % 2 == 0 ? 1 : -1, e);
    if (!(burau_det(w) == expected_det)) {
      res.pass = false;
      res.detail = "det law fails at " + format_word(w);
      return res;
    }
  }
  BurauMatrix s2 = burau_matrix(make_word(3, {2}));
  LaurentPoly one = LaurentPoly::from_int(1);
  LaurentPoly zero;
  LaurentPoly tpoly = LaurentPoly::variable();
  LaurentPoly one_minus_t = one - tpoly;
  const LaurentPoly* expect[3][3] = {{&one, &zero, &zero},
                                     {&zero, &one_minus_t, &tpoly},
                                     {&zero, &one, &zero}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ++checked;
      if (!(s2.at(i, j) == *expect[i][j])) {
        res.pass = false;
        res.detail = "unreduced Burau image of s2 in B_3 is wrong";
        return res;
      }
    }
  res.detail = "identities=" + std::to_string(checked);
  return res;
}

inline CheckResult check_subgroup_containments(const VerifyConfig& cfg) {
  CheckResult res{"subgroup-containments", true, ""};
  int checked = 0;
  int per_id = cfg.trials;
  for (int t = 0; t < per_id; ++t) {
    std::uint64_t s = mix_seed(cfg.seed, 404 + static_cast<unsigned>(t));
    BraidWord h4 = sample(SubgroupId::ker_h4, 4, 20, s);
    ++checked;
    if (!decide(SubgroupId::ker_h4, h4, cfg.budget) ||
        !decide(SubgroupId::commutator, h4, cfg.budget)) {
      res.pass = false;
      res.detail = "ker-h4 sample escapes the commutator subgroup";
      return res;
    }
    for (int n = 3; n <= 4; ++n) {
      BraidWord sh = sample(SubgroupId::shepperd, n, 12, s);
      ++checked;
      if (!decide(SubgroupId::pure, sh, cfg.budget)) {
        res.pass = false;
        res.detail = "shepperd sample is not pure";
        return res;
      }
      BraidWord pc = sample(SubgroupId::pure_commutator, n, 8, s);
      ++checked;
      if (!decide(SubgroupId::pure, pc, cfg.budget) ||
          !decide(SubgroupId::commutator, pc, cfg.budget)) {
        res.pass = false;
        res.detail = "pure-commutator sample escapes pure or commutator";
        return res;
      }
      BraidWord plain = Rng(s).word(n, 15);
      if (exponent_sum(plain) != 0) {
        ++checked;
        if (decide(SubgroupId::burau_kernel, plain, cfg.budget)) {
          res.pass = false;
          res.detail = "burau kernel admits nonzero exponent sum";
          return res;
        }
      }
    }
  }
  // Exhaustive short-word search in B_3 must find Brunnian words, and every
  // hit must have all pairwise linking numbers zero.
  std::vector<BraidWord> brunnian;
  std::vector<int> letters;
  BraidWord probe{3, {}};
  for (int len = 1; len <= 6; ++len) {
    std::vector<int> state(static_cast<std::size_t>(len), 0);
    while (true) {
      probe.letters.clear();
      for (int code : state) {
        int idx = code / 2 + 1;
        probe.letters.push_back(code % 2 ? -idx : idx);
      }
      ++checked;
      if (decide(SubgroupId::brunnian, probe, cfg.budget) && !is_trivial(probe, cfg.budget)) {
        if (!linking_check_brunnian(probe)) {
          res.pass = false;
          res.detail = "brunnian word with nonzero linking: " + format_word(probe);
          return res;
        }
        if (!decide(SubgroupId::commutator, probe, cfg.budget)) {
          res.pass = false;
          res.detail = "brunnian word outside the commutator subgroup: " + format_word(probe);
          return res;
        }
        brunnian.push_back(probe);
      }
      int pos = len - 1;
      while (pos >= 0 && state[static_cast<std::size_t>(pos)] == 3) {
        state[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++state[static_cast<std::size_t>(pos)];
    }
  }
  BraidWord expected = make_word(3, {1, -2, 1, -2, 1, -2});
  bool found = false;
  for (const BraidWord& b : brunnian)
    if (compare(b, expected, cfg.budget) == Ordering::EQ) found = true;
  if (!found) {
    res.pass = false;
    res.detail = "short Brunnian search misses (s1 s2^-1)^3";
    return res;
  }
  res.detail = "checked=" + std::to_string(checked) +
               " brunnian_words=" + std::to_string(brunnian.size());
  return res;
}

inline CheckResult check_least_elements(const VerifyConfig& cfg) {
  CheckResult res{"least-elements", true, ""};
  std::ostringstream detail;
  for (int n = 3; n <= 5; ++n) {
    LeastSummary s = verify_least(SubgroupId::pure, make_word(n, {1, 1}), n, cfg.trials,
                                  mix_seed(cfg.seed, 505 + static_cast<unsigned>(n)), 16,
                                  cfg.budget);
    if (!s.all_ok() || s.tested == 0) {
      res.pass = false;
      res.detail = "s1^2 not minimal among pure samples, n=" + std::to_string(n);
      return res;
    }
    detail << "pure_n" << n << "=" << s.tested << " ";
  }
  for (int n = 3; n <= 4; ++n) {
    LeastSummary s = verify_least(SubgroupId::shepperd, full_twist(n - 1, n, 1), n,
                                  cfg.trials, mix_seed(cfg.seed, 606 + static_cast<unsigned>(n)),
                                  12, cfg.budget);
    if (!s.all_ok() || s.tested == 0) {
      res.pass = false;
      res.detail = "half-twist square not minimal among samples, n=" + std::to_string(n);
      return res;
    }
    detail << "shepperd_n" << n << "=" << s.tested << " ";
  }
  res.detail = detail.str();
  res.detail.pop_back();
  return res;
}

inline CheckResult check_density_witnesses(const VerifyConfig& cfg) {
  CheckResult res{"density-witnesses", true, ""};
  struct Case {
    SubgroupId id;
    int n;
    int size;
  };
  const Case cases[] = {{SubgroupId::commutator, 3, 12},
                        {SubgroupId::commutator, 4, 12},
                        {SubgroupId::ker_h4, 4, 20},
                        {SubgroupId::pure_commutator, 3, 8}};
  std::ostringstream detail;
  int case_index = 0;
  for (const Case& c : cases) {
    DensitySummary s =
        verify_dense(c.id, c.n, cfg.trials, mix_seed(cfg.seed, 707 + static_cast<unsigned>(case_index++)),
                     cfg.witness_budget, c.size, cfg.budget);
    if (!s.all_ok()) {
      res.pass = false;
      res.detail = std::string(subgroup_token(c.id)) + " n=" + std::to_string(c.n) +
                   " failures=" + std::to_string(s.failures);
      return res;
    }
    detail << subgroup_token(c.id) << "_n" << c.n << "=" << s.successes << " ";
  }
  res.detail = detail.str();
  res.detail.pop_back();
  return res;
}

inline CheckResult check_brunnian_between(const VerifyConfig& cfg) {
  CheckResult res{"brunnian-between", true, ""};
  BraidWord b = make_word(3, {1, -2, 1, -2, 1, -2});
  SigmaSign s = sigma_sign(b, cfg.budget);
  BraidWord pos = s.is_negative() ? inverse(b) : b;
  WitnessReport rep = between(SubgroupId::brunnian, pos, free_reduce(concat(pos, pos)),
                              cfg.witness_budget, cfg.budget);
  if (!rep.found) {
    res.pass = false;
    res.detail = "no witness between b and b^2";
    return res;
  }
  res.detail = "witness=" + format_word(*rep.witness) +
               " candidates=" + std::to_string(rep.candidates_tried);
  return res;
}

}  // namespace detail

/// Runs the full battery of constructive checks. Check names are stable so
/// output can be diffed across runs.
inline VerifyReport run_verification(const VerifyConfig& cfg = {}) {
  VerifyReport report;
  report.checks.push_back(detail::check_relation_soundness(cfg));
  report.checks.push_back(detail::check_order_trichotomy(cfg));
  report.checks.push_back(detail::check_least_positive_generator(cfg));
  report.checks.push_back(detail::check_half_twist_centrality(cfg));
  report.checks.push_back(detail::check_centralizer_forms(cfg));
  report.checks.push_back(detail::check_burau_laws(cfg));
  report.checks.push_back(detail::check_subgroup_containments(cfg));
  report.checks.push_back(detail::check_least_elements(cfg));
  report.checks.push_back(detail::check_density_witnesses(cfg));
  report.checks.push_back(detail::check_brunnian_between(cfg));
  return report;
}

}  // namespace braid
