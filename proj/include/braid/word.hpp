#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braid {

/// Thrown when braid-word text cannot be tokenized.
class ParseError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A word in the Artin generators of B_n.
///
/// Each letter is a signed generator index: +i encodes sigma_i, -i encodes
/// sigma_i^{-1}, with 1 <= i <= n-1. The empty word is the identity. A
/// BraidWord is a plain word: distinct words may represent the same group
/// element. Element equality is decided by the ordering machinery
/// (is_trivial / compare in order.hpp), never by operator== here.
struct BraidWord {
  int n = 1;
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline bool letter_in_range(int e, int n) { return e != 0 && std::abs(e) <= n - 1; }

/// Checked constructor. Throws std::invalid_argument on a bad strand count
/// or an out-of-range letter.
inline BraidWord make_word(int n, std::vector<int> letters) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
  for (int e : letters) {
    if (!letter_in_range(e, n))
      throw std::invalid_argument("letter index " + std::to_string(std::abs(e)) +
                                  " out of range for " + std::to_string(n) + " strands");
  }
  return BraidWord{n, std::move(letters)};
}

inline BraidWord identity_word(int n) { return make_word(n, {}); }

namespace detail {

inline int parse_token(std::string_view tok) {
  if (tok.empty()) throw ParseError("empty token");
  if (tok.front() == 's') {
    // letter notation: s<k> or s<k>^-1
    bool inverse = false;
    std::string_view body = tok.substr(1);
    if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
      inverse = true;
      body = body.substr(0, body.size() - 3);
    }
    int k = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), k);
    if (ec != std::errc{} || ptr != body.data() + body.size() || k < 1)
      throw ParseError("bad generator token '" + std::string(tok) + "'");
    return inverse ? -k : k;
  }
  int e = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), e);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || e == 0)
    throw ParseError("bad letter token '" + std::string(tok) + "'");
  return e;
}

}  // namespace detail

/// Parses whitespace-separated letters, either as signed integers ("1 -2 1")
/// or in letter notation ("s1 s2^-1 s1"). When n is omitted it is inferred
/// as 1 + the maximal index; the empty word then has no inferable strand
/// count and is rejected.
inline BraidWord parse_word(std::string_view text, std::optional<int> n = std::nullopt) {
  std::vector<int> letters;
  int max_index = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    int e = detail::parse_token(text.substr(pos, end - pos));
    letters.push_back(e);
    max_index = std::max(max_index, std::abs(e));
    pos = end;
  }
  if (!n && letters.empty())
    throw ParseError("cannot infer strand count for the empty word");
  return make_word(n ? *n : max_index + 1, std::move(letters));
}

enum class WordStyle { integer, letter };

/// Inverse of parse_word: integer style emits signed decimal integers
/// separated by single spaces, letter style emits s<k> / s<k>^-1 tokens.
/// The identity formats as the empty string.
inline std::string format_word(const BraidWord& w, WordStyle style = WordStyle::integer) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    int e = w.letters[i];
    if (style == WordStyle::integer) {
      out += std::to_string(e);
    } else {
      out += 's';
      out += std::to_string(std::abs(e));
      if (e < 0) out += "^-1";
    }
  }
  return out;
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw std::invalid_argument("concat: mismatched strand counts");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

inline BraidWord inverse(const BraidWord& w) {
  BraidWord out{w.n, {}};
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

/// Single left-to-right stack pass; removes all adjacent e, -e pairs.
inline BraidWord free_reduce(const BraidWord& w) {
  BraidWord out{w.n, {}};
  out.letters.reserve(w.letters.size());
  for (int e : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -e)
      out.letters.pop_back();
    else
      out.letters.push_back(e);
  }
  return out;
}

inline long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (int e : w.letters) s += (e > 0) ? 1 : -1;
  return s;
}

/// Shifts every index by `offset` and re-homes the word in B_{target_n}.
/// offset 0 is the natural inclusion B_m < B_n.
inline BraidWord embed_shift(const BraidWord& w, int offset, int target_n) {
  if (offset < 0) throw std::invalid_argument("embed_shift: negative offset");
  if (target_n < w.n + offset)
    throw std::invalid_argument("embed_shift: target strand count too small");
  BraidWord out{target_n, {}};
  out.letters.reserve(w.letters.size());
  for (int e : w.letters) out.letters.push_back(e > 0 ? e + offset : e - offset);
  return out;
}

/// w^k as a plain word; negative k uses the inverse word.
inline BraidWord word_power(const BraidWord& w, int k) {
  BraidWord base = k >= 0 ? w : inverse(w);
  BraidWord out{w.n, {}};
  for (int i = 0; i < std::abs(k); ++i) out = concat(out, base);
  return out;
}

}  // namespace braid
