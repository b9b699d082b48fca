#pragma once

#include "hopf/rational.hpp"

#include <cstddef>
#include <vector>

namespace hopf {

/// Dense matrix over Q.  Small and exact: everything downstream is a
/// condition matrix with at most a few dozen rows.
class QMatrix {
public:
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

std::size_t qm_rank(QMatrix m);

/// Basis of the right null space {v : M v = 0}, from the reduced row echelon
/// form: one vector per free column, in column order.  Deterministic.
std::vector<std::vector<Rational>> qm_kernel_basis(QMatrix m);

}  // namespace hopf
