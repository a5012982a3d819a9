#include "qsymkit/matrix.hpp"

#include <algorithm>

#include "qsymkit/errors.hpp"

namespace qsym {

RMatrix RMatrix::identity(int n) {
  RMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return v == 0; });
}

bool RMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

RMatrix RMatrix::operator+(const RMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DomainError("matrix shape mismatch");
  RMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

RMatrix RMatrix::operator-(const RMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DomainError("matrix shape mismatch");
  RMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

RMatrix RMatrix::operator*(const RMatrix& other) const {
  if (cols_ != other.rows_) throw DomainError("matrix shape mismatch");
  RMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out.at(i, j) += v * other.at(k, j);
    }
  return out;
}

RMatrix RMatrix::operator*(const Rational& scalar) const {
  RMatrix out = *this;
  for (auto& v : out.data_) v *= scalar;
  return out;
}

RMatrix RMatrix::transpose() const {
  RMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

RMatrix direct_sum(const RMatrix& a, const RMatrix& b) {
  RMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

}  // namespace qsym
