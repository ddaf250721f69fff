#include "minorb/linalg.hpp"

#include <stdexcept>

namespace minorb {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
  QMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (minorb::is_zero(x)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rat& y = o.at(k, j);
        if (!minorb::is_zero(y)) r.at(i, j) += x * y;
      }
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  QMatrix r = *this;
  r += o;
  return r;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: shape mismatch in sum");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

QMatrix QMatrix::scaled(const Rat& c) const {
  QMatrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

QVec QMatrix::apply(const QVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("QMatrix: shape mismatch in apply");
  QVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rat& x = at(i, j);
      if (!minorb::is_zero(x)) r[i] += x * v[j];
    }
  return r;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!minorb::is_zero(x)) return false;
  return true;
}

std::size_t QMatrix::rank() const {
  QMatrix m = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && minorb::is_zero(m.at(piv, col))) ++piv;
    if (piv == rows_) continue;
    if (piv != rank)
      for (std::size_t j = col; j < cols_; ++j) swap(m.at(piv, j), m.at(rank, j));
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      if (minorb::is_zero(m.at(i, col))) continue;
      Rat f = m.at(i, col) / m.at(rank, col);
      for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::optional<QVec> solve_linear(QMatrix a, QVec b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_linear: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a.at(piv, col))) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) swap(a.at(piv, j), a.at(col, j));
      swap(b[piv], b[col]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(a.at(i, col))) continue;
      Rat f = a.at(i, col) / a.at(col, col);
      for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
      b[i] -= f * b[col];
    }
  }
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a.at(i, i);
  return x;
}

}  // namespace minorb
