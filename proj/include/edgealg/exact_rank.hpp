#pragma once

// Exact matrix ranks over Q and over prime fields.
//
// Rank over Q uses fraction-free Bareiss elimination on 64-bit integers with
// overflow detection; on overflow the computation restarts transparently on
// GMP integers, so results are exact for any input.  Rank mod 2 uses
// bit-packed Gaussian elimination; other primes use plain modular
// elimination.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "edgealg/field.hpp"

namespace edgealg {

// Dense row-major integer matrix.  Only small entries are ever stored here
// (boundary matrices have entries in {-1, 0, 1}); the rank routines copy
// into wider working storage as needed.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;  // rows * cols entries

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

  std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
  std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
};

namespace detail {

// One-step Bareiss elimination on int64.  Returns false if any intermediate
// product would overflow, in which case the caller falls back to GMP.
// Intermediate entries are minors of the input matrix, so the division by
// the previous pivot is always exact.
inline bool bareiss_rank_i64(std::vector<std::int64_t> a, int rows, int cols, int& rank_out) {
  auto idx = [cols](int r, int c) { return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c); };
  std::int64_t prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[idx(i, c)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < cols; ++j) std::swap(a[idx(piv, j)], a[idx(r, j)]);
    for (int i = r + 1; i < rows; ++i) {
      const std::int64_t airc = a[idx(i, c)];
      if (airc == 0) {
        // row already reduced in this column; remaining entries still need
        // the Bareiss rescale to stay on the exact-minor ladder
        for (int j = c + 1; j < cols; ++j) {
          std::int64_t t;
          if (__builtin_mul_overflow(a[idx(r, c)], a[idx(i, j)], &t)) return false;
          a[idx(i, j)] = t / prev;
        }
        continue;
      }
      for (int j = c + 1; j < cols; ++j) {
        std::int64_t t1, t2, num;
        if (__builtin_mul_overflow(a[idx(r, c)], a[idx(i, j)], &t1)) return false;
        if (__builtin_mul_overflow(airc, a[idx(r, j)], &t2)) return false;
        if (__builtin_sub_overflow(t1, t2, &num)) return false;
        a[idx(i, j)] = num / prev;
      }
      a[idx(i, c)] = 0;
    }
    prev = a[idx(r, c)];
    ++r;
  }
  rank_out = r;
  return true;
}

inline int bareiss_rank_mpz(const std::vector<std::int64_t>& in, int rows, int cols) {
  std::vector<mpz_class> a(in.begin(), in.end());
  auto idx = [cols](int r, int c) { return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c); };
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[idx(i, c)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < cols; ++j) std::swap(a[idx(piv, j)], a[idx(r, j)]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class num = a[idx(r, c)] * a[idx(i, j)] - a[idx(i, c)] * a[idx(r, j)];
        mpz_divexact(a[idx(i, j)].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[idx(i, c)] = 0;
    }
    prev = a[idx(r, c)];
    ++r;
  }
  return r;
}

inline std::int64_t mod_inverse(std::int64_t v, std::int64_t p) {
  // extended Euclid; v is nonzero mod p, p prime
  std::int64_t t = 0, new_t = 1, r = p, new_r = v % p;
  if (new_r < 0) new_r += p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::logic_error("mod_inverse: input not invertible");
  t %= p;
  if (t < 0) t += p;
  return t;
}

}  // namespace detail

// Rank over the rationals (exact).
inline int rank_over_q(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  int r = 0;
  if (detail::bareiss_rank_i64(m.a, m.rows, m.cols, r)) return r;
  return detail::bareiss_rank_mpz(m.a, m.rows, m.cols);
}

// Rank over F_2 via bit-packed elimination.
inline int rank_mod_2(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  const int words = (m.cols + 63) / 64;
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(m.rows) * static_cast<std::size_t>(words), 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) & 1)
        bits[static_cast<std::size_t>(i) * static_cast<std::size_t>(words) + static_cast<std::size_t>(j / 64)] |= std::uint64_t{1} << (j % 64);
  auto row = [&](int i) { return bits.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(words); };
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    const int w = c / 64;
    const std::uint64_t b = std::uint64_t{1} << (c % 64);
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (row(i)[w] & b) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int k = 0; k < words; ++k) std::swap(row(piv)[k], row(rank)[k]);
    for (int i = rank + 1; i < m.rows; ++i)
      if (row(i)[w] & b)
        for (int k = w; k < words; ++k) row(i)[k] ^= row(rank)[k];
    ++rank;
  }
  return rank;
}

// Rank over F_p for an odd prime p.
inline int rank_mod_p(const IntMatrix& m, int p) {
  if (m.rows == 0 || m.cols == 0) return 0;
  std::vector<std::int64_t> a(m.a);
  for (auto& v : a) {
    v %= p;
    if (v < 0) v += p;
  }
  auto idx = [&](int r, int c) { return static_cast<std::size_t>(r) * static_cast<std::size_t>(m.cols) + static_cast<std::size_t>(c); };
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (a[idx(i, c)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = c; j < m.cols; ++j) std::swap(a[idx(piv, j)], a[idx(rank, j)]);
    const std::int64_t inv = detail::mod_inverse(a[idx(rank, c)], p);
    for (int j = c; j < m.cols; ++j) a[idx(rank, j)] = a[idx(rank, j)] * inv % p;
    for (int i = rank + 1; i < m.rows; ++i) {
      const std::int64_t f = a[idx(i, c)];
      if (f == 0) continue;
      for (int j = c; j < m.cols; ++j) {
        a[idx(i, j)] = (a[idx(i, j)] - f * a[idx(rank, j)]) % p;
        if (a[idx(i, j)] < 0) a[idx(i, j)] += p;
      }
    }
    ++rank;
  }
  return rank;
}

inline int matrix_rank(const IntMatrix& m, const FieldTag& field) {
  if (field.kind == FieldTag::Kind::rationals) return rank_over_q(m);
  if (field.p == 2) return rank_mod_2(m);
  return rank_mod_p(m, field.p);
}

}  // namespace edgealg
