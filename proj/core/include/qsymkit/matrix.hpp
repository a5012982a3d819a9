#pragma once

#include <vector>

#include "qsymkit/rational.hpp"

namespace qsym {

// Small dense matrix with exact rational entries.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RMatrix identity(int n);
  static RMatrix scalar(const Rational& value) {
    RMatrix m(1, 1);
    m.at(0, 0) = value;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[r * cols_ + c]; }
  const Rational& at(int r, int c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_symmetric() const;

  RMatrix operator+(const RMatrix& other) const;
  RMatrix operator-(const RMatrix& other) const;
  RMatrix operator*(const RMatrix& other) const;
  RMatrix operator*(const Rational& scalar) const;
  RMatrix transpose() const;

  bool operator==(const RMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

RMatrix direct_sum(const RMatrix& a, const RMatrix& b);

}  // namespace qsym
