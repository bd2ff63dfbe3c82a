#include "pdc/symlin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pdc/kernels.hpp"

namespace pdc {

namespace {

void check_index_set(const IndexSet& idx, int dim) {
  for (int v : idx) {
    if (v < 1 || v > dim) {
      throw IndexOutOfRange("index " + std::to_string(v) + " outside 1.." +
                            std::to_string(dim));
    }
  }
}

std::span<const double> head(std::span<const double> row, int count) {
  return row.first(static_cast<std::size_t>(count));
}

// LU with partial pivoting on a copy of `a`; returns the factor and the row
// permutation, or throws SingularMatrix.
struct LuFactor {
  Matrix lu;
  std::vector<int> perm;
  int sign = 1;
};

LuFactor lu_factor(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("LU needs a square matrix");
  const int n = a.rows();
  LuFactor f{a, std::vector<int>(n), 1};
  std::iota(f.perm.begin(), f.perm.end(), 1);
  double scale = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) scale = std::max(scale, std::abs(a(i, j)));
  const double threshold = 1e-12 * scale;
  for (int k = 1; k <= n; ++k) {
    int pivot_row = k;
    for (int i = k + 1; i <= n; ++i) {
      if (std::abs(f.lu(i, k)) > std::abs(f.lu(pivot_row, k))) pivot_row = i;
    }
    if (scale == 0.0 || std::abs(f.lu(pivot_row, k)) <= threshold) {
      throw SingularMatrix("matrix is numerically singular (LU pivot " +
                           std::to_string(k) + ")");
    }
    if (pivot_row != k) {
      auto rk = f.lu.row(k);
      auto rp = f.lu.row(pivot_row);
      std::swap_ranges(rk.begin(), rk.end(), rp.begin());
      std::swap(f.perm[k - 1], f.perm[pivot_row - 1]);
      f.sign = -f.sign;
    }
    const double pivot = f.lu(k, k);
    for (int i = k + 1; i <= n; ++i) {
      const double factor = f.lu(i, k) / pivot;
      f.lu(i, k) = factor;
      if (k < n) {
        auto src = f.lu.row(k).subspan(static_cast<std::size_t>(k));
        auto dst = f.lu.row(i).subspan(static_cast<std::size_t>(k));
        kernels::axpy(-factor, src, dst);
      }
    }
  }
  return f;
}

Matrix lu_apply(const LuFactor& f, const Matrix& b) {
  const int n = f.lu.rows();
  Matrix x(n, b.cols());
  std::vector<double> y(n);
  for (int c = 1; c <= b.cols(); ++c) {
    for (int i = 1; i <= n; ++i) {
      double s = b(f.perm[i - 1], c);
      for (int k = 1; k < i; ++k) s -= f.lu(i, k) * y[k - 1];
      y[i - 1] = s;
    }
    for (int i = n; i >= 1; --i) {
      double s = y[i - 1];
      for (int k = i + 1; k <= n; ++k) s -= f.lu(i, k) * x(k, c);
      x(i, c) = s / f.lu(i, i);
    }
  }
  return x;
}

}  // namespace

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 1; i <= n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Matrix m(r, c);
  int i = 1;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw DimensionMismatch("ragged rows");
    int j = 1;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape");
  const Matrix bt = b.transpose();
  Matrix c(a.rows(), b.cols());
  for (int i = 1; i <= a.rows(); ++i)
    for (int j = 1; j <= b.cols(); ++j) c(i, j) = kernels::dot(a.row(i), bt.row(j));
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix difference shape");
  Matrix c = a;
  for (int i = 1; i <= a.rows(); ++i)
    for (int j = 1; j <= a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

// ------------------------------------------------------------- SymMatrix

SymMatrix::SymMatrix(int dim, double fill)
    : dim_(dim), data_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), fill) {
  if (dim < 0) throw DimensionMismatch("negative matrix dimension");
}

SymMatrix SymMatrix::identity(int dim) {
  SymMatrix m(dim);
  for (int i = 1; i <= dim; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> values) {
  SymMatrix m(static_cast<int>(values.size()));
  for (int i = 1; i <= m.dim(); ++i) m.set(i, i, values[i - 1]);
  return m;
}

SymMatrix SymMatrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  return from_matrix(Matrix::from_rows(rows));
}

SymMatrix SymMatrix::from_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("symmetric matrix must be square");
  SymMatrix s(m.rows());
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = 1; j <= i; ++j) {
      if (m(i, j) != m(j, i)) throw AsymmetricValue(i, j);
      s.set(i, j, m(i, j));
    }
  }
  return s;
}

SymMatrix SymMatrix::symmetrized(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("symmetric matrix must be square");
  SymMatrix s(m.rows());
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= i; ++j) s.set(i, j, 0.5 * (m(i, j) + m(j, i)));
  return s;
}

void SymMatrix::set(int i, int j, double value) {
  data_[static_cast<std::size_t>(i - 1) * dim_ + static_cast<std::size_t>(j - 1)] = value;
  data_[static_cast<std::size_t>(j - 1) * dim_ + static_cast<std::size_t>(i - 1)] = value;
}

void SymMatrix::add(int i, int j, double value) { set(i, j, (*this)(i, j) + value); }

Matrix SymMatrix::to_matrix() const {
  Matrix m(dim_, dim_);
  for (int i = 1; i <= dim_; ++i)
    for (int j = 1; j <= dim_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

double SymMatrix::max_abs_diagonal() const {
  double v = 0.0;
  for (int i = 1; i <= dim_; ++i) v = std::max(v, std::abs((*this)(i, i)));
  return v;
}

double SymMatrix::max_abs() const {
  double v = 0.0;
  for (double x : data_) v = std::max(v, std::abs(x));
  return v;
}

double SymMatrix::inf_norm() const {
  double v = 0.0;
  for (int i = 1; i <= dim_; ++i) {
    double s = 0.0;
    for (double x : row(i)) s += std::abs(x);
    v = std::max(v, s);
  }
  return v;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix sum shape");
  SymMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix difference shape");
  SymMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

SymMatrix operator*(double s, const SymMatrix& a) {
  SymMatrix c = a;
  for (double& x : c.data_) x *= s;
  return c;
}

SymMatrix LdlFactor::reconstruct() const {
  const int n = dim();
  SymMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      // L is unit lower-triangular: sum over k <= j.
      double s = kernels::weighted_dot(
          std::span<const double>(diag).first(static_cast<std::size_t>(j)),
          head(lower.row(i), j), head(lower.row(j), j));
      m.set(i, j, s);
    }
  }
  return m;
}

// ------------------------------------------------------- factorizations

double zero_pivot_threshold(const SymMatrix& m) {
  return 1e-12 * std::max(1.0, m.max_abs_diagonal());
}

bool is_positive_definite(const SymMatrix& m, double tol) {
  const int n = m.dim();
  const double threshold = tol * std::max(1.0, m.max_abs_diagonal());
  Matrix r(n, n);
  for (int j = 1; j <= n; ++j) {
    const double pivot = m(j, j) - kernels::dot(head(r.row(j), j - 1), head(r.row(j), j - 1));
    if (!(pivot > threshold)) return false;
    const double rjj = std::sqrt(pivot);
    r(j, j) = rjj;
    for (int i = j + 1; i <= n; ++i) {
      r(i, j) = (m(i, j) - kernels::dot(head(r.row(i), j - 1), head(r.row(j), j - 1))) / rjj;
    }
  }
  return true;
}

Matrix cholesky(const SymMatrix& m) {
  const int n = m.dim();
  const double threshold = zero_pivot_threshold(m);
  Matrix r(n, n);
  for (int j = 1; j <= n; ++j) {
    const double pivot = m(j, j) - kernels::dot(head(r.row(j), j - 1), head(r.row(j), j - 1));
    if (!(pivot > threshold)) throw ZeroPivot(j);
    const double rjj = std::sqrt(pivot);
    r(j, j) = rjj;
    for (int i = j + 1; i <= n; ++i) {
      r(i, j) = (m(i, j) - kernels::dot(head(r.row(i), j - 1), head(r.row(j), j - 1))) / rjj;
    }
  }
  return r;
}

LdlFactor modified_cholesky(const SymMatrix& m) {
  const int n = m.dim();
  const double threshold = zero_pivot_threshold(m);
  LdlFactor f{Matrix::identity(n), std::vector<double>(n, 0.0)};
  for (int j = 1; j <= n; ++j) {
    const auto lam = std::span<const double>(f.diag).first(static_cast<std::size_t>(j - 1));
    const double pivot =
        m(j, j) - kernels::weighted_dot(lam, head(f.lower.row(j), j - 1),
                                        head(f.lower.row(j), j - 1));
    if (!(std::abs(pivot) > threshold)) throw ZeroPivot(j);
    f.diag[j - 1] = pivot;
    for (int i = j + 1; i <= n; ++i) {
      const double s = kernels::weighted_dot(lam, head(f.lower.row(i), j - 1),
                                             head(f.lower.row(j), j - 1));
      f.lower(i, j) = (m(i, j) - s) / pivot;
    }
  }
  return f;
}

Matrix ldl_solve(const LdlFactor& f, const Matrix& b) {
  const int n = f.dim();
  if (b.rows() != n) throw DimensionMismatch("ldl_solve right-hand side");
  Matrix x(n, b.cols());
  std::vector<double> y(n);
  for (int c = 1; c <= b.cols(); ++c) {
    for (int i = 1; i <= n; ++i) {
      double s = b(i, c);
      for (int k = 1; k < i; ++k) s -= f.lower(i, k) * y[k - 1];
      y[i - 1] = s;
    }
    for (int i = 1; i <= n; ++i) y[i - 1] /= f.diag[i - 1];
    for (int i = n; i >= 1; --i) {
      double s = y[i - 1];
      for (int k = i + 1; k <= n; ++k) s -= f.lower(k, i) * x(k, c);
      x(i, c) = s;
    }
  }
  return x;
}

Matrix cholesky_solve(const Matrix& r, const Matrix& b) {
  const int n = r.rows();
  if (b.rows() != n) throw DimensionMismatch("cholesky_solve right-hand side");
  Matrix x(n, b.cols());
  std::vector<double> y(n);
  for (int c = 1; c <= b.cols(); ++c) {
    for (int i = 1; i <= n; ++i) {
      double s = b(i, c);
      for (int k = 1; k < i; ++k) s -= r(i, k) * y[k - 1];
      y[i - 1] = s / r(i, i);
    }
    for (int i = n; i >= 1; --i) {
      double s = y[i - 1];
      for (int k = i + 1; k <= n; ++k) s -= r(k, i) * x(k, c);
      x(i, c) = s / r(i, i);
    }
  }
  return x;
}

Matrix lu_solve(const Matrix& a, const Matrix& b) {
  if (b.rows() != a.rows()) throw DimensionMismatch("lu_solve right-hand side");
  return lu_apply(lu_factor(a), b);
}

// ------------------------------------------------------ derived routines

Matrix submatrix(const SymMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  check_index_set(rows, m.dim());
  check_index_set(cols, m.dim());
  Matrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b)
      s(static_cast<int>(a) + 1, static_cast<int>(b) + 1) = m(rows[a], cols[b]);
  return s;
}

SymMatrix principal_submatrix(const SymMatrix& m, const IndexSet& idx) {
  check_index_set(idx, m.dim());
  const int n = static_cast<int>(idx.size());
  SymMatrix s(n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= a; ++b) s.set(a, b, m(idx[a - 1], idx[b - 1]));
  return s;
}

SymMatrix schur_complement(const SymMatrix& m, const IndexSet& i_set,
                           const IndexSet& j_set) {
  check_index_set(i_set, m.dim());
  check_index_set(j_set, m.dim());
  for (int v : i_set) {
    if (std::find(j_set.begin(), j_set.end(), v) != j_set.end())
      throw DimensionMismatch("Schur complement index sets must be disjoint");
  }
  SymMatrix result = principal_submatrix(m, j_set);
  if (i_set.empty()) return result;

  const SymMatrix block = principal_submatrix(m, i_set);
  const Matrix cross = submatrix(m, i_set, j_set);
  Matrix x;
  try {
    x = ldl_solve(modified_cholesky(block), cross);
  } catch (const ZeroPivot&) {
    try {
      x = lu_solve(block.to_matrix(), cross);
    } catch (const SingularMatrix&) {
      throw SingularBlock("Schur complement: M_I is numerically singular");
    }
  }
  const int nj = static_cast<int>(j_set.size());
  const Matrix cross_t = cross.transpose();
  const Matrix xt = x.transpose();
  for (int a = 1; a <= nj; ++a) {
    for (int b = 1; b <= a; ++b) {
      // Average the two evaluation orders so the result stays symmetric.
      const double ab = kernels::dot(cross_t.row(a), xt.row(b));
      const double ba = kernels::dot(cross_t.row(b), xt.row(a));
      result.set(a, b, result(a, b) - 0.5 * (ab + ba));
    }
  }
  return result;
}

SymMatrix inverse(const SymMatrix& m) {
  const Matrix id = Matrix::identity(m.dim());
  try {
    return SymMatrix::symmetrized(ldl_solve(modified_cholesky(m), id));
  } catch (const ZeroPivot&) {
    return SymMatrix::symmetrized(lu_solve(m.to_matrix(), id));
  }
}

double determinant(const SymMatrix& m) {
  try {
    const LdlFactor f = modified_cholesky(m);
    double det = 1.0;
    for (double d : f.diag) det *= d;
    return det;
  } catch (const ZeroPivot&) {
    const LuFactor f = lu_factor(m.to_matrix());
    double det = f.sign;
    for (int i = 1; i <= m.dim(); ++i) det *= f.lu(i, i);
    return det;
  }
}

double log_determinant_pd(const SymMatrix& m) {
  const Matrix r = cholesky(m);
  double s = 0.0;
  for (int i = 1; i <= m.dim(); ++i) s += 2.0 * std::log(r(i, i));
  return s;
}

SymMatrix permute(const SymMatrix& m, std::span<const int> new_label) {
  if (static_cast<int>(new_label.size()) != m.dim())
    throw DimensionMismatch("permutation length");
  SymMatrix out(m.dim());
  for (int i = 1; i <= m.dim(); ++i)
    for (int j = 1; j <= i; ++j) out.set(new_label[i - 1], new_label[j - 1], m(i, j));
  return out;
}

double relative_max_difference(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("comparison shape");
  double diff = 0.0;
  for (int i = 1; i <= a.dim(); ++i)
    for (int j = 1; j <= a.dim(); ++j) diff = std::max(diff, std::abs(a(i, j) - b(i, j)));
  return diff / std::max(1.0, b.max_abs());
}

}  // namespace pdc
