#pragma once

#include "mckaykit/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace mckaykit {

struct SympSpace {
  Mat form;

  SympSpace() = default;
  explicit SympSpace(Mat J) : form(std::move(J)) {
    if (form.rows() != form.cols() || form.rows() % 2 != 0) throw std::invalid_argument("symplectic form must be square of even size");
    for (std::size_t i = 0; i < form.rows(); ++i)
      for (std::size_t j = 0; j < form.cols(); ++j)
        if (!(form(i, j) + form(j, i)).is_zero()) throw std::invalid_argument("symplectic form is not skew");
    if (rank(form) != form.rows()) throw std::invalid_argument("symplectic form is degenerate");
  }
  std::size_t dim() const { return form.rows(); }

  // standard form [[0, I], [-I, 0]]
  static SympSpace standard(std::size_t half) {
    Mat J(2 * half, 2 * half);
    for (std::size_t i = 0; i < half; ++i) {
      J(i, half + i) = CycloNum(1);
      J(half + i, i) = CycloNum(-1);
    }
    return SympSpace(J);
  }
};

template <class T>
std::vector<std::vector<T>> fixed_space(const Matrix<T>& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("fixed_space needs a square matrix");
  return kernel_basis(g - Matrix<T>::identity(g.rows()));
}

template <class T>
std::size_t reflection_rank(const Matrix<T>& g) {
  return rank(Matrix<T>::identity(g.rows()) - g);
}

// Gram matrix of the form on span(W); W given as a list of column vectors.
inline Mat restrict_form(const SympSpace& V, const std::vector<std::vector<CycloNum>>& W) {
  Mat B = from_columns(W, V.dim());
  if (rank(B) != W.size()) throw std::invalid_argument("restrict_form: dependent basis");
  return B.transpose() * V.form * B;
}

inline bool preserves_form(const Mat& g, const Mat& J) { return g.transpose() * J * g == J; }

}  // namespace mckaykit
