#ifndef MINORB_LINALG_HPP
#define MINORB_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "minorb/rational.hpp"

namespace minorb {

// Dense matrix over Rat. Small sizes only (dim g at most a few hundred),
// so plain Gaussian elimination with exact pivots is enough.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix& operator+=(const QMatrix& o);
  QMatrix scaled(const Rat& c) const;
  QVec apply(const QVec& v) const;
  bool is_zero() const;

  std::size_t rank() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

// Solves A x = b for square nonsingular A; returns nullopt when singular.
std::optional<QVec> solve_linear(QMatrix a, QVec b);

}  // namespace minorb

#endif
