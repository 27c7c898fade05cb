#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "campana/arith/bigint.hpp"

namespace campana {

template <typename T>
using IntMatrix = std::vector<std::vector<T>>;

template <typename T>
struct ExtendedGcd {
  T gcd;  // nonnegative
  T s;
  T t;    // s * a + t * b == gcd
};

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

template <typename T>
ExtendedGcd<T> extended_gcd(T a, T b) {
  T old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    T q = old_r / r;
    T tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {T(-old_r), T(-old_s), T(-old_t)};
  return {old_r, old_s, old_t};
}

/// Unimodular U with (a * U) = (g, 0, ..., 0), g = gcd(a), built by
/// chaining extended Euclid on the first column against each other one.
template <typename T>
IntMatrix<T> unimodular_column_reduction(std::span<const T> a) {
  const std::size_t r = a.size();
  IntMatrix<T> u(r, std::vector<T>(r, T(0)));
  for (std::size_t i = 0; i < r; ++i) u[i][i] = 1;
  if (r == 0) return u;
  T lead = a[0];
  for (std::size_t j = 1; j < r; ++j) {
    if (a[j] == 0) continue;
    const auto e = extended_gcd<T>(lead, a[j]);
    const T keep = lead / e.gcd, kill = a[j] / e.gcd;
    for (std::size_t i = 0; i < r; ++i) {
      const T c0 = u[i][0], cj = u[i][j];
      u[i][0] = e.s * c0 + e.t * cj;
      u[i][j] = keep * cj - kill * c0;
    }
    lead = e.gcd;
  }
  if (lead < 0)
    for (std::size_t i = 0; i < r; ++i) u[i][0] = -u[i][0];
  return u;
}

/// Row-style Hermite normal form of a full-row-rank matrix: pivots
/// positive, entries above each pivot reduced into [0, pivot).
template <typename T>
IntMatrix<T> hermite_normal_form(IntMatrix<T> m) {
  if (m.empty()) return m;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      if (m[row][col] == 0) {
        std::swap(m[row], m[i]);
        continue;
      }
      const auto e = extended_gcd<T>(m[row][col], m[i][col]);
      const T p = m[row][col] / e.gcd, q = m[i][col] / e.gcd;
      for (std::size_t k = 0; k < cols; ++k) {
        const T x = m[row][k], y = m[i][k];
        m[row][k] = e.s * x + e.t * y;
        m[i][k] = p * y - q * x;
      }
    }
    if (m[row][col] == 0) continue;
    if (m[row][col] < 0)
      for (auto& v : m[row]) v = -v;
    for (std::size_t k = 0; k < row; ++k) {
      const T f = floor_div(m[k][col], m[row][col]);
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) m[k][c] -= f * m[row][c];
    }
    ++row;
  }
  return m;
}

/// Basis (as rows, in Hermite normal form) of the kernel of
/// v -> sum_i a_i v_i on Z^r, for a with at least one nonzero entry.
template <typename T>
IntMatrix<T> weight_kernel_basis(std::span<const T> a) {
  const auto u = unimodular_column_reduction<T>(a);
  IntMatrix<T> basis;
  for (std::size_t j = 1; j < a.size(); ++j) {
    std::vector<T> row(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) row[i] = u[i][j];
    basis.push_back(std::move(row));
  }
  return hermite_normal_form<T>(std::move(basis));
}

/// sigma with sum_i sigma_i a_i = gcd(a): the first column of the
/// unimodular reduction.
template <typename T>
std::vector<T> weight_splitting(std::span<const T> a) {
  const auto u = unimodular_column_reduction<T>(a);
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = u[i][0];
  return out;
}

}  // namespace campana
