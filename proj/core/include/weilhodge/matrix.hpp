#pragma once

#include <concepts>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace weilhodge {

/// Requirements on matrix scalars: an exact field with value semantics.
template <typename T>
concept ExactField = requires(T a, T b) {
  { T(0) };
  { T(1) };
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

/// Dense row-major matrix over an exact field.
template <ExactField T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }

  static Matrix scalar(std::size_t n, const T& value) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = value;
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix column(std::size_t j) const {
    Matrix out(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, j);
    return out;
  }

  void set_column(std::size_t j, const Matrix& values) {
    if (values.rows_ != rows_ || values.cols_ != 1) throw std::invalid_argument("set_column: shape");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values(i, 0);
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (const T& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  std::size_t nonzeros() const {
    std::size_t count = 0;
    for (const T& x : data_)
      if (!x.is_zero()) ++count;
    return count;
  }

  template <typename F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Matrix& operator+=(const Matrix& other) {
    check_same_shape(other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
  }

  Matrix& operator-=(const Matrix& other) {
    check_same_shape(other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
  }

  Matrix& operator*=(const T& factor) {
    for (T& x : data_) x *= factor;
    return *this;
  }

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, const T& factor) { return lhs *= factor; }
  friend Matrix operator*(const T& factor, Matrix rhs) { return rhs *= factor; }

  // Skips zero entries of the left factor; the operators here are sparse.
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
      for (std::size_t k = 0; k < lhs.cols_; ++k) {
        const T& a = lhs(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          const T& b = rhs(k, j);
          if (b.is_zero()) continue;
          out(i, j) += a * b;
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
  }

 private:
  void check_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <ExactField T>
Matrix<T> hcat(const Matrix<T>& lhs, const Matrix<T>& rhs) {
  if (lhs.rows() != rhs.rows()) throw std::invalid_argument("hcat: row mismatch");
  Matrix<T> out(lhs.rows(), lhs.cols() + rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) out(i, j) = lhs(i, j);
    for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, lhs.cols() + j) = rhs(i, j);
  }
  return out;
}

/// Block matrix [[a, b], [c, d]].
template <ExactField T>
Matrix<T> block2x2(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c, const Matrix<T>& d) {
  const std::size_t r = a.rows();
  const std::size_t s = a.cols();
  if (b.rows() != r || c.cols() != s || d.rows() != c.rows() || d.cols() != b.cols()) {
    throw std::invalid_argument("block2x2: incompatible blocks");
  }
  Matrix<T> out(r + c.rows(), s + b.cols());
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      if (i < r) {
        out(i, j) = j < s ? a(i, j) : b(i, j - s);
      } else {
        out(i, j) = j < s ? c(i - r, j) : d(i - r, j - s);
      }
    }
  }
  return out;
}

template <ExactField T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

/// Row echelon form from fraction-free (Bareiss) elimination. Pivots are the
/// first nonzero entry at or below the current row in each column, so the
/// result is reproducible.
template <ExactField T>
struct Echelon {
  Matrix<T> form;
  std::vector<std::size_t> pivot_cols;
  int swap_parity = +1;
  /// Last Bareiss pivot; equals +-det for a nonsingular square input.
  T last_pivot = T(1);

  std::size_t rank() const { return pivot_cols.size(); }
};

template <ExactField T>
Echelon<T> echelon(Matrix<T> a) {
  Echelon<T> out;
  T prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
      out.swap_parity = -out.swap_parity;
    }
    const T p = a(row, col);
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      const T factor = a(i, col);
      for (std::size_t j = col + 1; j < a.cols(); ++j) {
        const bool keep = !a(i, j).is_zero();
        const bool elim = !factor.is_zero() && !a(row, j).is_zero();
        if (!keep && !elim) continue;
        T value = keep ? p * a(i, j) : T(0);
        if (elim) value -= factor * a(row, j);
        a(i, j) = value / prev;
      }
      a(i, col) = T(0);
    }
    prev = p;
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.last_pivot = prev;
  out.form = std::move(a);
  return out;
}

template <ExactField T>
std::size_t rank(const Matrix<T>& a) {
  return echelon(a).rank();
}

template <ExactField T>
T determinant(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (a.rows() == 0) return T(1);
  Echelon<T> e = echelon(a);
  if (e.rank() < a.rows()) return T(0);
  return e.swap_parity > 0 ? e.last_pivot : -e.last_pivot;
}

/// Basis of the right nullspace as columns, one per free column, with that
/// free coordinate equal to 1 and the other free coordinates 0.
template <ExactField T>
Matrix<T> nullspace(const Matrix<T>& a) {
  const Echelon<T> e = echelon(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix<T> basis(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::vector<T> x(n, T(0));
    x[free_cols[k]] = T(1);
    for (std::size_t r = e.rank(); r-- > 0;) {
      const std::size_t pc = e.pivot_cols[r];
      T acc(0);
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (x[j].is_zero() || e.form(r, j).is_zero()) continue;
        acc += e.form(r, j) * x[j];
      }
      x[pc] = -acc / e.form(r, pc);
    }
    for (std::size_t i = 0; i < n; ++i) basis(i, k) = std::move(x[i]);
  }
  return basis;
}

/// Gauss-Jordan inverse; throws std::domain_error when a is singular.
template <ExactField T>
Matrix<T> inverse(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix<T> work = hcat(a, Matrix<T>::identity(n));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("inverse of a singular matrix");
    if (pivot != col)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(work(pivot, j), work(col, j));
    const T p = work(col, col);
    for (std::size_t j = 0; j < 2 * n; ++j) work(col, j) = work(col, j) / p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work(i, col).is_zero()) continue;
      const T factor = work(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (!work(col, j).is_zero()) work(i, j) -= factor * work(col, j);
      }
    }
  }
  Matrix<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = work(i, n + j);
  return out;
}

/// True when the column spaces of a and b coincide.
template <ExactField T>
bool same_column_space(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(hcat(a, b));
}

}  // namespace weilhodge
