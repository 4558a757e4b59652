#pragma once

#include "mckaykit/matrix.hpp"

#include <optional>
#include <vector>

namespace mckaykit {

template <class T>
struct Echelon {
  Matrix<T> rref;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form; pivot = first nonzero entry scanning rows in order.
template <class T>
Echelon<T> rref(Matrix<T> m) {
  std::size_t R = m.rows(), C = m.cols(), row = 0;
  std::vector<std::size_t> piv;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t p = row;
    while (p < R && m(p, col).is_zero()) ++p;
    if (p == R) continue;
    if (p != row)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(p, j), m(row, j));
    T iv = m(row, col).inv();
    for (std::size_t j = col; j < C; ++j)
      if (!m(row, j).is_zero()) m(row, j) = m(row, j) * iv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      T f = m(i, col);
      for (std::size_t j = col; j < C; ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(piv)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

// Basis of {x : m x = 0}; one vector per free column, free entry 1.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
  auto e = rref(m);
  std::size_t C = m.cols();
  std::vector<bool> is_piv(C, false);
  for (auto p : e.pivots) is_piv[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_piv[f]) continue;
    std::vector<T> v(C);
    v[f] = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (!e.rref(r, f).is_zero()) v[e.pivots[r]] = -e.rref(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of m x = b, or nullopt.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto e = rref(aug);
  std::vector<T> x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.rref(r, m.cols());
  }
  return x;
}

template <class T>
Matrix<T> from_columns(const std::vector<std::vector<T>>& cols, std::size_t n) {
  Matrix<T> m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return m;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix<T> r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = e.rref(i, n + j);
  return r;
}

// Characteristic polynomial det(tI - m), low degree first (Faddeev-LeVerrier).
template <class T>
std::vector<T> charpoly(const Matrix<T>& m) {
  std::size_t n = m.rows();
  std::vector<T> c(n + 1);
  c[n] = T(1);
  Matrix<T> M(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<T> Mk = m * M;
    for (std::size_t i = 0; i < n; ++i) Mk(i, i) += c[n - k + 1];
    Matrix<T> AM = m * Mk;
    T tr;
    for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
    c[n - k] = -(tr * T(Rational(1, static_cast<std::int64_t>(k))));
    M = std::move(Mk);
  }
  return c;
}

}  // namespace mckaykit
