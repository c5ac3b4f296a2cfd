#pragma once

#include <cstddef>
#include <vector>

#include "cyclodet/cyclo_ring.hpp"

namespace cyclodet {

// Dense matrix of CycInt entries sharing one conductor, row-major.
class CycMatrix {
 public:
  CycMatrix(std::size_t rows, std::size_t cols, unsigned conductor)
      : rows_(rows), cols_(cols), m_(conductor), a_(rows * cols, CycInt::zero(conductor)) {
    if (rows == 0 || cols == 0) throw ParameterError("matrix dimensions must be positive");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned conductor() const { return m_; }

  CycInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const CycInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void set(std::size_t i, std::size_t j, CycInt v) {
    if (v.conductor() != m_) throw ParameterError("entry conductor mismatch");
    a_[i * cols_ + j] = std::move(v);
  }

 private:
  std::size_t rows_, cols_;
  unsigned m_;
  std::vector<CycInt> a_;
};

}  // namespace cyclodet
