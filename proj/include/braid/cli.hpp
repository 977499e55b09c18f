#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braid/bench.hpp"
#include "braid/burau.hpp"
#include "braid/density.hpp"
#include "braid/garside.hpp"
#include "braid/order.hpp"
#include "braid/subgroups.hpp"
#include "braid/verification.hpp"
#include "braid/word.hpp"

namespace braid {
namespace cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Flags form a closed set so that word positionals like "-1 2 -1" are never
/// mistaken for options. Every flag takes one value.
struct Options {
  std::optional<int> n;
  std::uint64_t seed = 1;
  int trials = 100;
  std::optional<long> budget;
  int len = 0;
  int count = 0;
  WordStyle style = WordStyle::integer;
  bool len_set = false;
  bool count_set = false;
};

inline long parse_integer(const std::string& text, const char* what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string("expected an integer for ") + what + ", got '" + text + "'");
  }
  if (used != text.size())
    throw UsageError(std::string("expected an integer for ") + what + ", got '" + text + "'");
  return value;
}

inline int parse_int(const std::string& text, const char* what) {
  return static_cast<int>(parse_integer(text, what));
}

inline Options split_args(const std::vector<std::string>& args,
                          std::vector<std::string>& positionals) {
  Options opt;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    auto value = [&](const char* what) -> const std::string& {
      if (i + 1 >= args.size())
        throw UsageError(std::string("flag ") + what + " needs a value");
      return args[++i];
    };
    if (a == "-n" || a == "--n") {
      opt.n = parse_int(value("-n"), "-n");
    } else if (a == "--seed") {
      opt.seed = static_cast<std::uint64_t>(parse_integer(value("--seed"), "--seed"));
    } else if (a == "--trials") {
      opt.trials = parse_int(value("--trials"), "--trials");
    } else if (a == "--budget") {
      opt.budget = parse_integer(value("--budget"), "--budget");
    } else if (a == "--len") {
      opt.len = parse_int(value("--len"), "--len");
      opt.len_set = true;
    } else if (a == "--count") {
      opt.count = parse_int(value("--count"), "--count");
      opt.count_set = true;
    } else if (a == "--style") {
      const std::string& s = value("--style");
      if (s == "integer") {
        opt.style = WordStyle::integer;
      } else if (s == "letter") {
        opt.style = WordStyle::letter;
      } else {
        throw UsageError("--style must be 'integer' or 'letter'");
      }
    } else if (a.size() >= 2 && a[0] == '-' && a[1] == '-') {
      throw UsageError("unknown flag '" + a + "'");
    } else {
      positionals.push_back(a);
    }
  }
  return opt;
}

inline const std::string& positional(const std::vector<std::string>& pos, std::size_t i,
                                     const char* what) {
  if (i >= pos.size()) throw UsageError(std::string("missing argument: ") + what);
  return pos[i];
}

inline void expect_positionals(const std::vector<std::string>& pos, std::size_t count,
                               const char* usage) {
  if (pos.size() != count) throw UsageError(std::string("usage: ") + usage);
}

/// Parses a word under the -n flag when given; otherwise infers the strand
/// count from the word's letters.
inline BraidWord word_arg(const std::string& text, const Options& opt) {
  return parse_word(text, opt.n);
}

/// Parses two words onto a common strand count.
inline std::pair<BraidWord, BraidWord> word_pair(const std::string& a, const std::string& b,
                                                 const Options& opt) {
  if (opt.n) return {parse_word(a, opt.n), parse_word(b, opt.n)};
  BraidWord wa = parse_word(a);
  BraidWord wb = parse_word(b);
  int n = wa.n > wb.n ? wa.n : wb.n;
  return {make_word(n, wa.letters), make_word(n, wb.letters)};
}

inline SubgroupId subgroup_arg(const std::string& token) {
  std::optional<SubgroupId> id = parse_subgroup(token);
  if (!id) throw UsageError("unknown subgroup '" + token + "'");
  return *id;
}

inline long step_budget(const Options& opt) { return opt.budget.value_or(kDefaultStepBudget); }

inline const char* kUsage =
    "usage: braid <command> [flags] [args]\n"
    "\n"
    "commands:\n"
    "  compare <a> <b>              order two words (LT, EQ, or GT)\n"
    "  sign <w>                     sigma sign: positive:<i>, negative:<i>, trivial\n"
    "  trivial <w>                  whether the word is the identity braid\n"
    "  reduce <w>                   handle-reduced form of the word\n"
    "  member <subgroup> <w>        subgroup membership\n"
    "  sample <subgroup>            draw one element (-n, --len, --seed)\n"
    "  construct delta <k>          half twist on k strands\n"
    "  construct fulltwist <k> <p>  full twist power\n"
    "  construct centralizer <r> <p> <q>\n"
    "  construct uv <r> <u> <v>\n"
    "  construct shepperd <n> <i>\n"
    "  construct least <n> <r> <umax>\n"
    "  construct h4 <w>             image of a 4-strand word under h4\n"
    "  burau <w>                    unreduced Burau matrix, one row per line\n"
    "  det <w>                      Burau determinant\n"
    "  between <subgroup> <f> <g>   witness search strictly between f and g\n"
    "  verify                       run the verification battery\n"
    "  bench                        handle-reduction benchmark\n"
    "\n"
    "subgroups: commutator, pure, pure-commutator, brunnian, burau-kernel,\n"
    "           ker-h4, shepperd\n"
    "flags: -n <strands>, --seed <s>, --trials <t>, --budget <b>, --len <l>,\n"
    "       --count <c>, --style integer|letter\n";

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << kUsage;
    return 2;
  }
  const std::string& cmd = args[0];
  std::vector<std::string> pos;
  Options opt = split_args({args.begin() + 1, args.end()}, pos);

  if (cmd == "help" || cmd == "--help") {
    out << kUsage;
    return 0;
  }
  if (cmd == "compare") {
    expect_positionals(pos, 2, "braid compare [-n N] <a> <b>");
    auto [a, b] = word_pair(pos[0], pos[1], opt);
    out << to_string(compare(a, b, step_budget(opt))) << "\n";
    return 0;
  }
  if (cmd == "sign") {
    expect_positionals(pos, 1, "braid sign [-n N] <w>");
    SigmaSign s = sigma_sign(word_arg(pos[0], opt), step_budget(opt));
    if (s.is_trivial())
      out << "trivial\n";
    else
      out << (s.is_positive() ? "positive:" : "negative:") << s.index << "\n";
    return 0;
  }
  if (cmd == "trivial") {
    expect_positionals(pos, 1, "braid trivial [-n N] <w>");
    out << (is_trivial(word_arg(pos[0], opt), step_budget(opt)) ? "true" : "false") << "\n";
    return 0;
  }
  if (cmd == "reduce") {
    expect_positionals(pos, 1, "braid reduce [-n N] <w>");
    out << format_word(handle_reduce(word_arg(pos[0], opt), step_budget(opt)), opt.style)
        << "\n";
    return 0;
  }
  if (cmd == "member") {
    expect_positionals(pos, 2, "braid member [-n N] <subgroup> <w>");
    SubgroupId id = subgroup_arg(pos[0]);
    out << (decide(id, word_arg(pos[1], opt), step_budget(opt)) ? "true" : "false") << "\n";
    return 0;
  }
  if (cmd == "sample") {
    expect_positionals(pos, 1, "braid sample -n N [--len L] [--seed S] <subgroup>");
    SubgroupId id = subgroup_arg(pos[0]);
    if (!opt.n) throw UsageError("sample needs -n");
    int size = opt.len_set ? opt.len : 16;
    out << format_word(sample(id, *opt.n, size, opt.seed), opt.style) << "\n";
    return 0;
  }
  if (cmd == "construct") {
    const std::string& target = positional(pos, 0, "construct target");
    if (target == "delta") {
      expect_positionals(pos, 2, "braid construct delta [-n N] <k>");
      int k = parse_int(pos[1], "k");
      out << format_word(half_twist(k, opt.n.value_or(k)), opt.style) << "\n";
      return 0;
    }
    if (target == "fulltwist") {
      expect_positionals(pos, 3, "braid construct fulltwist [-n N] <k> <p>");
      int k = parse_int(pos[1], "k");
      out << format_word(full_twist(k, opt.n.value_or(k), parse_int(pos[2], "p")), opt.style)
          << "\n";
      return 0;
    }
    if (target == "centralizer" || target == "uv") {
      expect_positionals(pos, 4, "braid construct centralizer|uv [-n N] <r> <a> <b>");
      CentralizerParams params;
      params.r = parse_int(pos[1], "r");
      params.form = target == "uv" ? CentralizerForm::uv : CentralizerForm::pq;
      params.p = parse_int(pos[2], "p");
      params.q = parse_int(pos[3], "q");
      out << format_word(centralizer_element(params, opt.n.value_or(params.r)), opt.style)
          << "\n";
      return 0;
    }
    if (target == "shepperd") {
      expect_positionals(pos, 3, "braid construct shepperd <n> <i>");
      out << format_word(shepperd_generator(parse_int(pos[1], "n"), parse_int(pos[2], "i")),
                         opt.style)
          << "\n";
      return 0;
    }
    if (target == "least") {
      expect_positionals(pos, 4, "braid construct least <n> <r> <umax>");
      for (const BraidWord& w : least_element_candidates(
               parse_int(pos[1], "n"), parse_int(pos[2], "r"), parse_int(pos[3], "umax")))
        out << format_word(w, opt.style) << "\n";
      return 0;
    }
    if (target == "h4") {
      expect_positionals(pos, 2, "braid construct h4 <w>");
      out << format_word(b4_to_b3(parse_word(pos[1], 4)), opt.style) << "\n";
      return 0;
    }
    throw UsageError("unknown construct target '" + target + "'");
  }
  if (cmd == "burau") {
    expect_positionals(pos, 1, "braid burau [-n N] <w>");
    BurauMatrix m = burau_matrix(word_arg(pos[0], opt));
    for (int i = 0; i < m.n; ++i) {
      for (int j = 0; j < m.n; ++j) {
        if (j) out << " ";
        out << m.at(i, j).to_string();
      }
      out << "\n";
    }
    return 0;
  }
  if (cmd == "det") {
    expect_positionals(pos, 1, "braid det [-n N] <w>");
    out << burau_det(word_arg(pos[0], opt)).to_string() << "\n";
    return 0;
  }
  if (cmd == "between") {
    expect_positionals(pos, 3, "braid between [-n N] <subgroup> <f> <g>");
    SubgroupId id = subgroup_arg(pos[0]);
    auto [f, g] = word_pair(pos[1], pos[2], opt);
    WitnessReport rep = between(id, f, g, opt.budget.value_or(kDefaultWitnessBudget));
    out << "found=" << (rep.found ? "true" : "false") << "\n";
    if (rep.found) out << "witness=" << format_word(*rep.witness, opt.style) << "\n";
    out << "candidates_tried=" << rep.candidates_tried << "\n";
    out << "budget=" << rep.budget << "\n";
    return 0;
  }
  if (cmd == "verify") {
    expect_positionals(pos, 0, "braid verify [--trials T] [--seed S] [--budget B]");
    VerifyConfig cfg;
    cfg.trials = opt.trials;
    cfg.seed = opt.seed;
    if (opt.budget) cfg.budget = *opt.budget;
    VerifyReport report = run_verification(cfg);
    out << report.to_text();
    return report.all_pass() ? 0 : 1;
  }
  if (cmd == "bench") {
    expect_positionals(pos, 0, "braid bench [-n N] [--len L] [--count C] [--seed S]");
    BenchConfig cfg;
    if (opt.n) cfg.n = *opt.n;
    if (opt.len_set) cfg.len = opt.len;
    if (opt.count_set) cfg.count = opt.count;
    cfg.seed = opt.seed;
    if (opt.budget) cfg.budget = *opt.budget;
    out << format_bench(run_bench(cfg));
    return 0;
  }
  err << kUsage;
  err << "error: unknown command '" << cmd << "'\n";
  return 2;
}

}  // namespace detail

/// Runs one CLI invocation. Returns 0 on success, 1 for domain errors
/// (bad word or parameter values, exceeded budgets), 2 for usage errors.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return detail::run(args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cli
}  // namespace braid
