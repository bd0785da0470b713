#pragma once

// Dense matrices over a field and exact Gaussian elimination. Pivoting is
// deterministic: first nonzero entry in the current column.

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "wdsmooth/error.hpp"

namespace wdsmooth {

template <class Field>
class Matrix {
 public:
  using value_type = typename Field::value_type;

  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  static Matrix identity(const Field& F, int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F.one();
    return m;
  }

  static Matrix unit(int n, int i, int j, value_type v = 1) {
    Matrix m(n, n);
    m(i, j) = v;
    return m;
  }

  static Matrix diagonal(std::span<const value_type> d) {
    const int n = static_cast<int>(d.size());
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  value_type& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  value_type operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::span<const value_type> flat() const { return data_; }
  const std::vector<value_type>& data() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](value_type v) { return v == 0; });
  }

  auto operator<=>(const Matrix&) const = default;
  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<value_type> data_;
};

template <class Field>
Matrix<Field> add(const Field& F, const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("matrix size mismatch");
  Matrix<Field> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = F.add(a(i, j), b(i, j));
  return c;
}

template <class Field>
Matrix<Field> sub(const Field& F, const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("matrix size mismatch");
  Matrix<Field> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = F.sub(a(i, j), b(i, j));
  return c;
}

template <class Field>
Matrix<Field> scale(const Field& F, typename Field::value_type s, const Matrix<Field>& a) {
  Matrix<Field> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = F.mul(s, a(i, j));
  return c;
}

template <class Field>
Matrix<Field> mul(const Field& F, const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix size mismatch");
  Matrix<Field> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) = F.add(c(i, j), F.mul(aik, b(k, j)));
    }
  }
  return c;
}

template <class Field>
Matrix<Field> transpose(const Matrix<Field>& a) {
  Matrix<Field> t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

/// [a, b] = ab - ba
template <class Field>
Matrix<Field> bracket(const Field& F, const Matrix<Field>& a, const Matrix<Field>& b) {
  return sub(F, mul(F, a, b), mul(F, b, a));
}

template <class Field>
Matrix<Field> power(const Field& F, Matrix<Field> a, std::uint64_t e) {
  Matrix<Field> r = Matrix<Field>::identity(F, a.rows());
  while (e) {
    if (e & 1) r = mul(F, r, a);
    a = mul(F, a, a);
    e >>= 1;
  }
  return r;
}

/// In-place reduced row echelon form; returns the pivot columns.
template <class Field>
std::vector<int> rref(const Field& F, Matrix<Field>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    const auto inv = F.inv(m(row, col));
    for (int j = col; j < m.cols(); ++j) m(row, j) = F.mul(m(row, j), inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const auto factor = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Field>
int rank(const Field& F, Matrix<Field> m) {
  return static_cast<int>(rref(F, m).size());
}

/// Basis of {x : m x = 0}, one column vector per entry.
template <class Field>
std::vector<std::vector<typename Field::value_type>> kernel_basis(const Field& F, Matrix<Field> m) {
  const std::vector<int> pivots = rref(F, m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<typename Field::value_type>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<typename Field::value_type> v(static_cast<std::size_t>(m.cols()), 0);
    v[static_cast<std::size_t>(free)] = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<std::size_t>(pivots[r])] = F.neg(m(static_cast<int>(r), free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class Field>
int nullity(const Field& F, const Matrix<Field>& m) {
  return m.cols() - rank(F, m);
}

/// Dimension of the span of a list of vectors of equal length.
template <class Field>
int span_dim(const Field& F, const std::vector<std::vector<typename Field::value_type>>& vectors) {
  if (vectors.empty()) return 0;
  Matrix<Field> m(static_cast<int>(vectors.size()), static_cast<int>(vectors.front().size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return rank(F, std::move(m));
}

template <class Field>
typename Field::value_type determinant(const Field& F, Matrix<Field> m) {
  if (!m.square()) throw ValidationError("determinant of non-square matrix");
  typename Field::value_type det = F.one();
  const int n = m.rows();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i) {
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return F.zero();
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = F.neg(det);
    }
    det = F.mul(det, m(col, col));
    const auto inv = F.inv(m(col, col));
    for (int i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const auto factor = F.mul(m(i, col), inv);
      for (int j = col; j < n; ++j) m(i, j) = F.sub(m(i, j), F.mul(factor, m(col, j)));
    }
  }
  return det;
}

template <class Field>
std::optional<Matrix<Field>> inverse(const Field& F, const Matrix<Field>& m) {
  if (!m.square()) throw ValidationError("inverse of non-square matrix");
  const int n = m.rows();
  Matrix<Field> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F.one();
  }
  auto pivots = rref(F, aug);
  if (static_cast<int>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
  Matrix<Field> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

/// Flattened entries as a coordinate vector.
template <class Field>
std::vector<typename Field::value_type> flatten(const Matrix<Field>& m) {
  return m.data();
}

template <class Field>
Matrix<Field> unflatten(std::span<const typename Field::value_type> v, int n) {
  Matrix<Field> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = v[static_cast<std::size_t>(i * n + j)];
  return m;
}

}  // namespace wdsmooth
