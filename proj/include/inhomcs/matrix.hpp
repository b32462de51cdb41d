#pragma once

#include <string>
#include <vector>

#include "inhomcs/rational.hpp"

namespace inhomcs {

// Dense matrix over the rationals. Products skip zero entries of the left
// factor, which keeps the very sparse representation matrices cheap.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return data_[r * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Rational trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  // Copy of the block starting at (r0, c0).
  Matrix block(int r0, int c0, int rows, int cols) const;
  void set_block(int r0, int c0, const Matrix& b);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Rational& s, Matrix a);

// a*b - b*a
Matrix commutator(const Matrix& a, const Matrix& b);

// Throws InvalidArgument if singular or not square.
Matrix inverse(const Matrix& m);

// Rank by Gaussian elimination over Q.
int rank(std::vector<std::vector<Rational>> rows);

std::string to_string(const Matrix& m);

}  // namespace inhomcs
