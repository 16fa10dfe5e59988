#include "osculant/matrix.hpp"

#include <numeric>
#include <stdexcept>

#include "osculant/errors.hpp"

namespace osculant {

MatrixQ MatrixQ::identity(int n) {
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

MatrixQ MatrixQ::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return MatrixQ(0, 0);
  MatrixQ m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols_) {
      throw std::invalid_argument("ragged row list");
    }
    for (int c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Rational> MatrixQ::row(int r) const {
  std::vector<Rational> out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

MatrixQ MatrixQ::transposed() const {
  MatrixQ m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

MatrixQ MatrixQ::stacked(const MatrixQ& below) const {
  if (cols_ != below.cols_ && rows_ != 0 && below.rows_ != 0) {
    throw std::invalid_argument("stacking with mismatched column count");
  }
  int cols = rows_ == 0 ? below.cols_ : cols_;
  MatrixQ m(rows_ + below.rows_, cols);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
  for (int r = 0; r < below.rows_; ++r)
    for (int c = 0; c < below.cols_; ++c) m.at(rows_ + r, c) = below.at(r, c);
  return m;
}

void MatrixQ::append_row(const std::vector<Rational>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
  if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("row length mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  MatrixQ m(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& arc = a.at(r, k);
      if (arc.is_zero()) continue;
      for (int c = 0; c < b.cols_; ++c) m.at(r, c) += arc * b.at(k, c);
    }
  }
  return m;
}

int rank_exact(const MatrixQ& m) {
  int rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  // Clear each row to integers; scaling a row by a nonzero rational keeps rank.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int r = 0; r < rows; ++r) {
    mpz_class lcm(1);
    for (int c = 0; c < cols; ++c) {
      mpz_class d = m.at(r, c).den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    for (int c = 0; c < cols; ++c) {
      const Rational& q = m.at(r, c);
      a[r][c] = q.num() * (lcm / q.den());
    }
  }
  mpz_class prev(1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (sgn(a[r][col]) != 0) {
        // Smallest magnitude pivot keeps the integers short.
        if (pivot < 0 ||
            mpz_cmpabs(a[r][col].get_mpz_t(), a[pivot][col].get_mpz_t()) < 0) {
          pivot = r;
        }
      }
    }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        mpz_class t = a[r][c] * a[rank][col] - a[r][col] * a[rank][c];
        mpz_divexact(a[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

MatrixQ rref(MatrixQ m, std::vector<int>* pivots) {
  std::vector<int> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  return rref_in_column_order(std::move(m), order, pivots);
}

MatrixQ rref_in_column_order(MatrixQ m, const std::vector<int>& column_order,
                             std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  int rank = 0;
  for (int col : column_order) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(rank, c), m.at(pivot, c));
    }
    Rational inv = Rational(1) / m.at(rank, col);
    for (int c = 0; c < m.cols(); ++c) m.at(rank, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || m.at(r, col).is_zero()) continue;
      Rational f = m.at(r, col);
      for (int c = 0; c < m.cols(); ++c) m.at(r, c) -= f * m.at(rank, c);
    }
    if (pivots) pivots->push_back(col);
    ++rank;
    if (rank == m.rows()) break;
  }
  return m;
}

std::vector<std::vector<Rational>> nullspace(const MatrixQ& m) {
  int cols = m.cols();
  std::vector<int> pivots;
  MatrixQ r = rref(m, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -r.at(static_cast<int>(i), f);
    }
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  MatrixQ canon = row_space_echelon(MatrixQ::from_rows(basis));
  basis.clear();
  for (int i = 0; i < canon.rows(); ++i) basis.push_back(canon.row(i));
  return basis;
}

MatrixQ row_space_echelon(const MatrixQ& m) {
  std::vector<int> pivots;
  MatrixQ r = rref(m, &pivots);
  MatrixQ out(static_cast<int>(pivots.size()), m.cols());
  for (int i = 0; i < out.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c) out.at(i, c) = r.at(i, c);
  return out;
}

bool row_space_contained(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() == 0) return true;
  if (a.cols() != b.cols() && b.rows() != 0) {
    throw std::invalid_argument("containment with mismatched column count");
  }
  return rank_exact(b.stacked(a)) == rank_exact(b);
}

// ---------------------------------------------------------------------------

MatrixP::MatrixP(int rows, int cols, int vars)
    : rows_(rows), cols_(cols), vars_(vars),
      a_(static_cast<std::size_t>(rows) * cols, Poly(vars)) {}

MatrixP MatrixP::from_rows(std::vector<std::vector<Poly>> rows, int vars) {
  MatrixP m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()),
            vars);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols_) throw std::invalid_argument("ragged row list");
    for (int c = 0; c < m.cols_; ++c) m.at(r, c) = std::move(rows[r][c]);
  }
  return m;
}

MatrixP MatrixP::transposed() const {
  MatrixP m(cols_, rows_, vars_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

MatrixQ MatrixP::eval(const std::vector<Rational>& point) const {
  MatrixQ m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c).eval(point);
  return m;
}

int rank_symbolic(const MatrixP& m) {
  int rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<Poly>> a(rows, std::vector<Poly>(cols, Poly(m.vars())));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][c] = m.at(r, c);

  Poly prev = Poly::constant(m.vars(), Rational(1));
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][col].is_zero()) continue;
      if (pivot < 0 || a[r][col].term_count() < a[pivot][col].term_count()) pivot = r;
    }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][col].is_zero()) {
        // Bareiss still rescales the row: a[r][c] = a[r][c] * pivot / prev.
        for (int c = col + 1; c < cols; ++c) {
          if (a[r][c].is_zero()) continue;
          auto q = (a[r][c] * a[rank][col]).divided_exactly_by(prev);
          if (!q) throw std::logic_error("fraction-free elimination: inexact division");
          a[r][c] = std::move(*q);
        }
        continue;
      }
      for (int c = col + 1; c < cols; ++c) {
        Poly t = a[r][c] * a[rank][col] - a[r][col] * a[rank][c];
        if (t.is_zero()) {
          a[r][c] = std::move(t);
          continue;
        }
        auto q = t.divided_exactly_by(prev);
        if (!q) throw std::logic_error("fraction-free elimination: inexact division");
        a[r][c] = std::move(*q);
      }
      a[r][col] = Poly(m.vars());
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

namespace {

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  mpz_class n = gcd(a.num() * b.den(), b.num() * a.den());
  return Rational(mpq_class(n, a.den() * b.den()));
}

}  // namespace

// Gauss-Jordan over the fraction field; the RatFunc normaliser keeps the
// num/den pairs small enough for the matrix sizes used here.
std::vector<std::vector<Poly>> nullspace_symbolic(const MatrixP& m) {
  int rows = m.rows(), cols = m.cols();
  int vars = m.vars();
  std::vector<std::vector<RatFunc>> a(rows, std::vector<RatFunc>(cols, RatFunc(Poly(vars))));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][c] = RatFunc(m.at(r, c));

  std::vector<int> pivots;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][col].is_zero()) continue;
      if (pivot < 0 ||
          a[r][col].num().term_count() + a[r][col].den().term_count() <
              a[pivot][col].num().term_count() + a[pivot][col].den().term_count()) {
        pivot = r;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    RatFunc inv(a[rank][col].den(), a[rank][col].num());
    for (int c = 0; c < cols; ++c) a[rank][c] = a[rank][c] * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      RatFunc f = a[r][col];
      for (int c = 0; c < cols; ++c) a[r][c] = a[r][c] - f * a[rank][c];
    }
    pivots.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Poly>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    // Kernel vector with v[f] = 1 and v[pivot_i] = -a[i][f]; clear to a
    // common polynomial denominator, then strip content.
    std::vector<RatFunc> v(cols, RatFunc(Poly(vars)));
    v[f] = RatFunc(Poly::constant(vars, Rational(1)));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -a[static_cast<int>(i)][f];
    }
    Poly common = Poly::constant(vars, Rational(1));
    for (const RatFunc& e : v) {
      if (!e.is_zero() && !e.is_polynomial()) common = common * e.den();
    }
    std::vector<Poly> w;
    w.reserve(cols);
    for (const RatFunc& e : v) {
      RatFunc cleared = e * RatFunc(common);
      if (!cleared.is_polynomial()) throw std::logic_error("kernel clearing left a denominator");
      w.push_back(cleared.num());
    }
    Rational content(0);
    for (const Poly& p : w) {
      if (!p.is_zero()) content = rational_gcd(content, p.content());
    }
    if (!content.is_zero() && !content.is_one()) {
      for (Poly& p : w) p = p.scaled(Rational(1) / content);
    }
    basis.push_back(std::move(w));
  }
  return basis;
}

}  // namespace osculant
