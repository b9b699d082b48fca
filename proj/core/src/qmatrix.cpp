#include "hopf/qmatrix.hpp"

#include <utility>

namespace hopf {

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot
// row, top to bottom.
std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    const Rational lead = m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) /= lead;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const Rational factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t qm_rank(QMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> qm_kernel_basis(QMatrix m) {
  const std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (const std::size_t col : pivots) is_pivot[col] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(m.cols());
    v[free_col] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hopf
