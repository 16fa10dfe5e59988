#pragma once

#include <vector>

#include "osculant/poly.hpp"
#include "osculant/rational.hpp"

namespace osculant {

// Dense matrix over the rationals. All rank and kernel computations are
// exact; kernels come back in a canonical reduced echelon form.
class MatrixQ {
 public:
  MatrixQ() : rows_(0), cols_(0) {}
  MatrixQ(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static MatrixQ identity(int n);
  static MatrixQ from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::vector<Rational> row(int r) const;

  MatrixQ transposed() const;
  MatrixQ stacked(const MatrixQ& below) const;
  void append_row(const std::vector<Rational>& r);
  friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
  friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// Rank by fraction-free (Bareiss) elimination: rows are cleared to integers
// first, after which every intermediate entry stays integral.
int rank_exact(const MatrixQ& m);

// Reduced row echelon form; returns pivot column indices through `pivots`.
MatrixQ rref(MatrixQ m, std::vector<int>* pivots = nullptr);

// RREF computed over a permuted column order; entries stay in natural
// positions, only the pivoting sweep follows `column_order`.
MatrixQ rref_in_column_order(MatrixQ m, const std::vector<int>& column_order,
                             std::vector<int>* pivots = nullptr);

// Canonical basis of the right kernel { v : M v = 0 }: the basis matrix is
// itself in reduced row echelon form. Size is cols - rank.
std::vector<std::vector<Rational>> nullspace(const MatrixQ& m);

// Canonical representative of the row space: RREF with zero rows dropped.
MatrixQ row_space_echelon(const MatrixQ& m);

// True when rowspace(a) is contained in rowspace(b); both need equal cols.
bool row_space_contained(const MatrixQ& a, const MatrixQ& b);

// ---------------------------------------------------------------------------

// Matrix with polynomial entries, used for generic ranks over the function
// field of the parameters.
class MatrixP {
 public:
  MatrixP(int rows, int cols, int vars);
  static MatrixP from_rows(std::vector<std::vector<Poly>> rows, int vars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int vars() const { return vars_; }
  Poly& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Poly& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  MatrixP transposed() const;
  MatrixQ eval(const std::vector<Rational>& point) const;

 private:
  int rows_, cols_, vars_;
  std::vector<Poly> a_;
};

// Generic rank over the field of fractions, by fraction-free elimination
// with exact polynomial division (pivots chosen sparsest-first).
int rank_symbolic(const MatrixP& m);

// Basis of the right kernel over the function field, cleared to polynomial
// vectors (each scaled to content 1).
std::vector<std::vector<Poly>> nullspace_symbolic(const MatrixP& m);

}  // namespace osculant
