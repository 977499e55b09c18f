#pragma once

#include <stdexcept>
#include <vector>

#include "braid/laurent.hpp"
#include "braid/word.hpp"

namespace braid {

/// Dense n x n matrix over the Laurent ring, row-major, 0-indexed.
struct BurauMatrix {
  int n = 1;
  std::vector<LaurentPoly> entries;

  static BurauMatrix identity(int n) {
    if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
    BurauMatrix m;
    m.n = n;
    m.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {});
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::from_int(1);
    return m;
  }

  LaurentPoly& at(int i, int j) {
    return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(j)];
  }
  const LaurentPoly& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(j)];
  }

  friend BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b) {
    if (a.n != b.n) throw std::invalid_argument("matrix product: mismatched sizes");
    BurauMatrix out;
    out.n = a.n;
    out.entries.assign(a.entries.size(), {});
    for (int i = 0; i < a.n; ++i)
      for (int k = 0; k < a.n; ++k) {
        const LaurentPoly& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < a.n; ++j) {
          if (b.at(k, j).is_zero()) continue;
          out.at(i, j) += aik * b.at(k, j);
        }
      }
    return out;
  }

  friend bool operator==(const BurauMatrix&, const BurauMatrix&) = default;
};

/// Unreduced Burau matrix of a word: the generator with index i maps to the
/// identity with the 2x2 block [[1-t, t], [1, 0]] at rows/columns (i, i+1)
/// in 1-based terms. Each letter touches two columns of the running product,
/// so evaluation is column-update rather than repeated full products.
inline BurauMatrix burau_matrix(const BraidWord& w) {
  static const LaurentPoly kOne = LaurentPoly::from_int(1);
  static const LaurentPoly kT = LaurentPoly::variable();
  static const LaurentPoly kOneMinusT = kOne - kT;
  static const LaurentPoly kTInv = LaurentPoly::monomial(1, -1);
  static const LaurentPoly kOneMinusTInv = kOne - kTInv;

  BurauMatrix m = BurauMatrix::identity(w.n);
  for (int e : w.letters) {
    int c = std::abs(e) - 1;  // 0-based left column of the block
    for (int x = 0; x < w.n; ++x) {
      LaurentPoly& left = m.at(x, c);
      LaurentPoly& right = m.at(x, c + 1);
      if (e > 0) {
        LaurentPoly old_left = left;
        left = old_left * kOneMinusT + right;
        right = old_left * kT;
      } else {
        LaurentPoly old_left = left;
        left = right * kTInv;
        right = old_left + right * kOneMinusTInv;
      }
    }
  }
  return m;
}

/// Determinant by fraction-free (Bareiss) elimination; every division along
/// the way is exact in the Laurent ring.
inline LaurentPoly burau_det(const BurauMatrix& m) {
  const int n = m.n;
  BurauMatrix a = m;
  LaurentPoly prev = LaurentPoly::from_int(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!a.at(i, k).is_zero()) {
          swap_row = i;
          break;
        }
      }
      if (swap_row == -1) return {};
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = divide_exact(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
      a.at(i, k) = {};
    }
    prev = a.at(k, k);
  }
  LaurentPoly det = a.at(n - 1, n - 1);
  return sign > 0 ? det : -det;
}

inline LaurentPoly burau_det(const BraidWord& w) { return burau_det(burau_matrix(w)); }

/// True when the word lies in the kernel of the Burau representation.
inline bool in_burau_kernel(const BraidWord& w) {
  return burau_matrix(w) == BurauMatrix::identity(w.n);
}

}  // namespace braid
