#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "adhmlab/laurent.hpp"
#include "adhmlab/rational.hpp"

namespace adhmlab {

// Dense row-major matrix over an exact scalar (Rational or Laurent).
template <class S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  }

  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = S(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const S& operator()(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  const std::vector<S>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik == S(0)) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const S& s, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = s * a.data_[k];
    return r;
  }

  bool is_zero() const {
    for (const S& v : data_)
      if (!(v == S(0))) return false;
    return true;
  }

  std::vector<S> column(int c) const {
    std::vector<S> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  std::vector<S> row_vector(int r) const {
    std::vector<S> v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw std::invalid_argument("apply: vector length mismatch");
    std::vector<S> out(rows_, S(0));
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (!(v[c] == S(0))) out[r] += (*this)(r, c) * v[c];
    return out;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<S> data_;
};

using MatrixQ = Matrix<Rational>;
using MatrixL = Matrix<Laurent>;

inline MatrixL to_laurent(const MatrixQ& m) {
  MatrixL out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = Laurent(m(r, c));
  return out;
}

// Reduced row echelon form in place; returns the pivot columns. Unique, so
// every basis derived from it is canonical.
inline std::vector<int> rref(MatrixQ& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    Rational inv = Rational(1) / m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

struct RankKernel {
  int rank = 0;
  std::vector<std::vector<Rational>> kernel_basis;  // canonical, one per free column
};

// rank plus a canonical kernel basis: for each free column f the vector with
// 1 at f and minus the reduced-echelon coefficients at the pivot columns.
inline RankKernel rank_kernel(const MatrixQ& m) {
  MatrixQ red = m;
  std::vector<int> pivots = rref(red);
  RankKernel out;
  out.rank = static_cast<int>(pivots.size());
  std::vector<int> pivot_of_col(m.cols(), -1);
  for (int k = 0; k < out.rank; ++k) pivot_of_col[pivots[k]] = k;
  for (int col = 0; col < m.cols(); ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[col] = 1;
    for (int k = 0; k < out.rank; ++k) v[pivots[k]] = -red(k, col);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

inline int rank_of(const MatrixQ& m) {
  MatrixQ red = m;
  return static_cast<int>(rref(red).size());
}

// Inverse over the rationals; throws on a singular input.
inline MatrixQ inverse(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  int n = m.rows();
  MatrixQ aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n)
    throw std::invalid_argument("inverse: singular matrix");
  MatrixQ out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

inline Rational determinant(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  int n = m.rows();
  MatrixQ a = m;
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != col) {
      for (int c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    Rational inv = Rational(1) / a(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Rational f = a(r, col) * inv;
      for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

// Incremental row-echelon model of a subspace of Q^dim. Insertion keeps the
// rows fully reduced, so basis() is canonical for the subspace it spans.
class Subspace {
 public:
  explicit Subspace(int ambient_dim) : dim_(ambient_dim) {}

  int ambient_dim() const { return dim_; }
  int dim() const { return static_cast<int>(rows_.size()); }

  // Returns true when the vector enlarged the subspace.
  bool insert(std::vector<Rational> v) {
    if (static_cast<int>(v.size()) != dim_)
      throw std::invalid_argument("subspace insert: length mismatch");
    reduce(v);
    int lead = leading_index(v);
    if (lead < 0) return false;
    Rational inv = Rational(1) / v[lead];
    for (auto& x : v) x *= inv;
    // Reduce existing rows against the new pivot, then keep rows sorted by
    // leading index.
    for (auto& row : rows_) {
      Rational f = row[lead];
      if (f == 0) continue;
      for (int c = 0; c < dim_; ++c) row[c] -= f * v[c];
    }
    size_t pos = 0;
    while (pos < rows_.size() && leading_index(rows_[pos]) < lead) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
    return true;
  }

  bool contains(std::vector<Rational> v) const {
    reduce(v);
    return leading_index(v) < 0;
  }

  const std::vector<std::vector<Rational>>& basis() const { return rows_; }

 private:
  int leading_index(const std::vector<Rational>& v) const {
    for (int c = 0; c < dim_; ++c)
      if (v[c] != 0) return c;
    return -1;
  }
  void reduce(std::vector<Rational>& v) const {
    for (const auto& row : rows_) {
      int lead = -1;
      for (int c = 0; c < dim_; ++c)
        if (row[c] != 0) {
          lead = c;
          break;
        }
      if (lead < 0) continue;
      Rational f = v[lead];
      if (f == 0) continue;
      for (int c = 0; c < dim_; ++c) v[c] -= f * row[c];
    }
  }

  int dim_;
  std::vector<std::vector<Rational>> rows_;
};

// Smallest subspace containing the seeds and closed under every generator,
// by saturation. The dimension can grow at most n times, which bounds the
// loop.
inline std::vector<std::vector<Rational>> smallest_invariant_subspace(
    const std::vector<MatrixQ>& generators, const std::vector<std::vector<Rational>>& seeds) {
  int n = -1;
  for (const auto& g : generators) {
    if (g.rows() != g.cols()) throw std::invalid_argument("generator not square");
    if (n < 0) n = g.rows();
    if (g.rows() != n) throw std::invalid_argument("generator size mismatch");
  }
  for (const auto& s : seeds) {
    if (n < 0) n = static_cast<int>(s.size());
    if (static_cast<int>(s.size()) != n)
      throw std::invalid_argument("seed length mismatch");
  }
  if (n < 0) n = 0;

  Subspace space(n);
  std::vector<std::vector<Rational>> frontier;
  for (const auto& s : seeds)
    if (space.insert(s)) frontier.push_back(s);
  for (int round = 0; round < n && !frontier.empty(); ++round) {
    std::vector<std::vector<Rational>> next;
    for (const auto& g : generators)
      for (const auto& v : frontier) {
        auto w = g.apply(v);
        if (space.insert(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return space.basis();
}

struct LaurentLimit {
  bool exists = false;
  MatrixQ value;                          // constant terms, valid when exists
  std::vector<std::pair<int, int>> poles; // entries with a negative exponent
};

// Limit of a Laurent matrix family as the parameter goes to zero.
inline LaurentLimit laurent_limit_at_zero(const MatrixL& m) {
  LaurentLimit out;
  out.value = MatrixQ(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const Laurent& p = m(r, c);
      if (!p.is_zero() && p.min_exponent() < 0) out.poles.emplace_back(r, c);
      out.value(r, c) = p.coefficient(0);
    }
  out.exists = out.poles.empty();
  if (!out.exists) out.value = MatrixQ();
  return out;
}

}  // namespace adhmlab
