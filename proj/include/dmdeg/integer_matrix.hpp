#pragma once

// Dense integer matrices with Hermite and Smith normal forms.

#include "dmdeg/ring.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dmdeg {

using IntMatrix = std::vector<std::vector<Integer>>;

inline IntMatrix to_int_matrix(const std::vector<std::vector<long>>& a) {
  IntMatrix m;
  for (const auto& row : a) {
    std::vector<Integer> r;
    for (long v : row) r.emplace_back(v);
    m.push_back(std::move(r));
  }
  return m;
}

inline IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), std::vector<Integer>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

/// Row-style Hermite normal form computed in place with unimodular row
/// operations; `companion` (if given) receives the same row operations.
/// Returns the pivot columns.
inline std::vector<int> hermite_rows(IntMatrix& m, IntMatrix* companion = nullptr) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  auto swap_rows = [&](int a, int b) {
    std::swap(m[a], m[b]);
    if (companion) std::swap((*companion)[a], (*companion)[b]);
  };
  auto combine = [&](int dst, int src, const Integer& f) {  // row dst -= f * row src
    for (int c = 0; c < cols; ++c) m[dst][c] -= f * m[src][c];
    if (companion)
      for (std::size_t c = 0; c < (*companion)[dst].size(); ++c) (*companion)[dst][c] -= f * (*companion)[src][c];
  };
  auto negate = [&](int r) {
    for (auto& v : m[r]) v = -v;
    if (companion)
      for (auto& v : (*companion)[r]) v = -v;
  };
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c below row r.
    for (;;) {
      int best = -1;
      for (int i = r; i < rows; ++i)
        if (m[i][c] != 0 && (best < 0 || abs(m[i][c]) < abs(m[best][c]))) best = i;
      if (best < 0) break;
      swap_rows(r, best);
      bool done = true;
      for (int i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        combine(i, r, q);
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0) negate(r);
    for (int i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (q != 0) combine(i, r, q);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int integer_rank(IntMatrix m) { return static_cast<int>(hermite_rows(m).size()); }

/// Z-basis of {u in Z^n : A u = 0} for a d x n matrix A.
inline std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& a) {
  if (a.empty()) return {};
  const int n = static_cast<int>(a[0].size());
  IntMatrix t = transpose(a);  // n x d
  IntMatrix id(n, std::vector<Integer>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  auto piv = hermite_rows(t, &id);
  std::vector<std::vector<Integer>> ker;
  for (int i = static_cast<int>(piv.size()); i < n; ++i) ker.push_back(id[i]);
  return ker;
}

/// Diagonal of the Smith normal form (nonzero invariant factors only).
inline std::vector<Integer> smith_invariants(IntMatrix m) {
  std::vector<Integer> diag;
  if (m.empty()) return diag;
  const int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  for (int k = 0; k < std::min(rows, cols); ++k) {
    int pr = -1, pc = -1;
    for (int i = k; i < rows; ++i)
      for (int j = k; j < cols; ++j)
        if (m[i][j] != 0 && (pr < 0 || abs(m[i][j]) < abs(m[pr][pc]))) pr = i, pc = j;
    if (pr < 0) break;
    for (;;) {
      std::swap(m[k], m[pr]);
      for (auto& row : m) std::swap(row[k], row[pc]);
      bool clean = true;
      for (int i = k + 1; i < rows; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][k].get_mpz_t(), m[k][k].get_mpz_t());
        for (int j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
        if (m[i][k] != 0) clean = false;
      }
      for (int j = k + 1; j < cols; ++j) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[k][j].get_mpz_t(), m[k][k].get_mpz_t());
        for (int i = k; i < rows; ++i) m[i][j] -= q * m[i][k];
        if (m[k][j] != 0) clean = false;
      }
      if (clean) {
        // Divisibility condition: fold a non-multiple entry into row k.
        int bad_i = -1;
        for (int i = k + 1; i < rows && bad_i < 0; ++i)
          for (int j = k + 1; j < cols; ++j)
            if (m[i][j] % m[k][k] != 0) {
              bad_i = i;
              break;
            }
        if (bad_i < 0) break;
        for (int j = k; j < cols; ++j) m[k][j] += m[bad_i][j];
      }
      pr = k, pc = k;
      for (int i = k; i < rows; ++i)
        if (m[i][k] != 0 && abs(m[i][k]) < abs(m[pr][pc])) pr = i, pc = k;
      for (int j = k; j < cols; ++j)
        if (m[k][j] != 0 && abs(m[k][j]) < abs(m[pr][pc])) pr = k, pc = j;
    }
    diag.push_back(abs(m[k][k]));
  }
  return diag;
}

/// Rational rank (equals the integer rank).
inline int rank(const IntMatrix& m) { return integer_rank(m); }

}  // namespace dmdeg
