#pragma once

#include <stdexcept>
#include <vector>

#include "braid/word.hpp"

namespace braid {

/// Positive half twist Delta_k on the first k strands, as a word in
/// B_{target_n}: (s_{k-1} ... s_1)(s_{k-1} ... s_2) ... (s_{k-1}).
/// Its length is k(k-1)/2; Delta_1 is the empty word.
inline BraidWord half_twist(int k, int target_n) {
  if (k < 1) throw std::invalid_argument("half_twist: k must be >= 1");
  if (target_n < k) throw std::invalid_argument("half_twist: need at least k strands");
  BraidWord out{target_n, {}};
  out.letters.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k - 1) / 2);
  for (int j = 1; j <= k - 1; ++j)
    for (int i = k - 1; i >= j; --i) out.letters.push_back(i);
  return out;
}

/// Delta_k^{2*power}, the full twist on the first k strands to the given
/// power. The square of the half twist generates the center of B_k.
inline BraidWord full_twist(int k, int target_n, int power) {
  BraidWord d = half_twist(k, target_n);
  return word_power(concat(d, d), power);
}

enum class CentralizerForm {
  pq,  // (s_{r-1}..s_2 s_1^2 s_2..s_{r-1})^p Delta_{r-1}^{2q}, degenerating
       // to (s_2 s_1^2 s_2)^p s_1^q when r = 3
  uv,  // Delta_r^{2u} Delta_{r-1}^{2v}, degenerating to Delta_3^{2u} s_1^v
};

/// Parameters for an element of the centralizer family C(r). In uv form the
/// fields p, q carry the exponents u, v. The two forms parameterize the same
/// family: u = p and v = q - 2p for r = 3, v = q - p otherwise.
struct CentralizerParams {
  int r = 3;
  CentralizerForm form = CentralizerForm::pq;
  int p = 0;
  int q = 0;
};

inline BraidWord centralizer_element(const CentralizerParams& params, int target_n) {
  if (params.r < 3) throw std::invalid_argument("centralizer_element: r must be >= 3");
  if (target_n < params.r)
    throw std::invalid_argument("centralizer_element: need at least r strands");
  const int r = params.r;
  if (params.form == CentralizerForm::pq) {
    BraidWord core{target_n, {}};
    for (int i = r - 1; i >= 1; --i) core.letters.push_back(i);
    for (int i = 1; i <= r - 1; ++i) core.letters.push_back(i);
    BraidWord out = word_power(core, params.p);
    if (r == 3) return concat(out, word_power(make_word(target_n, {1}), params.q));
    return concat(out, full_twist(r - 1, target_n, params.q));
  }
  if (r == 3)
    return concat(full_twist(3, target_n, params.p),
                  word_power(make_word(target_n, {1}), params.q));
  return concat(full_twist(r, target_n, params.p), full_twist(r - 1, target_n, params.q));
}

/// Converts pq-form parameters to the uv form of the same element.
inline CentralizerParams to_uv_form(const CentralizerParams& params) {
  if (params.form == CentralizerForm::uv) return params;
  int u = params.p;
  int v = params.r == 3 ? params.q - 2 * params.p : params.q - params.p;
  return {params.r, CentralizerForm::uv, u, v};
}

/// The increasing family of conjecturally-least positive elements for the
/// standard normal families: sigma_1^u for r = 2 (powers of the first
/// generator), Delta_r^{2u} for 3 <= r <= n-2. Returns candidates for
/// u = 1..u_max.
inline std::vector<BraidWord> least_element_candidates(int n, int r, int u_max) {
  if (u_max < 1) throw std::invalid_argument("least_element_candidates: u_max must be >= 1");
  if (n < 2) throw std::invalid_argument("least_element_candidates: need at least 2 strands");
  std::vector<BraidWord> out;
  out.reserve(static_cast<std::size_t>(u_max));
  if (r == 2) {
    for (int u = 1; u <= u_max; ++u) out.push_back(word_power(make_word(n, {1}), u));
    return out;
  }
  if (r < 3 || r > n - 2)
    throw std::invalid_argument("least_element_candidates: r must be 2 or in [3, n-2]");
  for (int u = 1; u <= u_max; ++u) out.push_back(full_twist(r, n, u));
  return out;
}

/// The surjection B_4 -> B_3 identifying the outer generators: letters of
/// index 3 map to index 1 with the same sign, others are unchanged.
inline BraidWord b4_to_b3(const BraidWord& w) {
  if (w.n != 4) throw std::invalid_argument("b4_to_b3: word must live in B_4");
  BraidWord out{3, {}};
  out.letters.reserve(w.letters.size());
  for (int e : w.letters) out.letters.push_back(e == 3 ? 1 : (e == -3 ? -1 : e));
  return out;
}

/// Generator beta_i of the untwisted pure-braid normal family:
/// beta_i = Delta_i^2 sh^i(Delta_{n-i})^{-2} for i < n, beta_n = Delta_n^2,
/// where sh shifts every generator index up by one.
inline BraidWord shepperd_generator(int n, int i) {
  if (n < 3) throw std::invalid_argument("shepperd_generator: need at least 3 strands");
  if (i < 1 || i > n) throw std::invalid_argument("shepperd_generator: index out of range");
  if (i == n) return full_twist(n, n, 1);
  BraidWord shifted = embed_shift(full_twist(n - i, n - i, 1), i, n);
  return free_reduce(concat(full_twist(i, n, 1), inverse(shifted)));
}

/// Product of beta_{|i|}^{sign(i)} over the given signed indices.
inline BraidWord shepperd_word(int n, const std::vector<int>& indices) {
  BraidWord out = identity_word(n);
  for (int idx : indices) {
    if (idx == 0 || std::abs(idx) > n)
      throw std::invalid_argument("shepperd_word: index out of range");
    BraidWord g = shepperd_generator(n, std::abs(idx));
    out = concat(out, idx > 0 ? g : inverse(g));
  }
  return free_reduce(out);
}

}  // namespace braid
