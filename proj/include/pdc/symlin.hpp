#ifndef PDC_SYMLIN_HPP_
#define PDC_SYMLIN_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "pdc/errors.hpp"

// Dense symmetric linear algebra. All public indices are 1-based; index sets
// are sorted vectors of 1-based labels.
namespace pdc {

using IndexSet = std::vector<int>;

// Rectangular dense matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0);
  static Matrix identity(int n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double operator()(int i, int j) const { return data_[offset(i, j)]; }
  double& operator()(int i, int j) { return data_[offset(i, j)]; }

  // Row i as a contiguous span of cols() values (column 1 first).
  std::span<const double> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i - 1) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  std::span<double> row(int i) {
    return {data_.data() + static_cast<std::size_t>(i - 1) * cols_,
            static_cast<std::size_t>(cols_)};
  }

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t offset(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * cols_ + static_cast<std::size_t>(j - 1);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// Symmetric matrix in full dense storage. Writes go through set(), which
// mirrors, so entries(i, j) == entries(j, i) holds exactly.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int dim, double fill = 0.0);
  static SymMatrix identity(int dim);
  static SymMatrix diagonal(std::span<const double> values);
  // Throws AsymmetricValue unless rows are square and exactly symmetric.
  static SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static SymMatrix from_matrix(const Matrix& m);
  // Averages m and its transpose.
  static SymMatrix symmetrized(const Matrix& m);

  int dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i - 1) * dim_ + static_cast<std::size_t>(j - 1)];
  }
  void set(int i, int j, double value);
  void add(int i, int j, double value);

  std::span<const double> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i - 1) * dim_,
            static_cast<std::size_t>(dim_)};
  }

  Matrix to_matrix() const;
  double max_abs_diagonal() const;
  double max_abs() const;
  // Induced infinity norm (largest absolute row sum).
  double inf_norm() const;
  double frobenius_norm() const;

  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator*(double s, const SymMatrix& a);
  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  int dim_ = 0;
  std::vector<double> data_;
};

// Modified Cholesky factor M = L diag(D) L^T with L unit lower-triangular.
struct LdlFactor {
  Matrix lower;
  std::vector<double> diag;

  int dim() const { return lower.rows(); }
  SymMatrix reconstruct() const;
};

// Absolute threshold below which an elimination pivot of `m` counts as zero:
// 1e-12 * max(1, largest absolute diagonal entry).
double zero_pivot_threshold(const SymMatrix& m);

inline constexpr double kDefaultPdTolerance = 1e-10;

// True iff the standard Cholesky factorization succeeds with every pivot
// greater than tol * max(1, max |M_ii|). An empty matrix is positive definite.
bool is_positive_definite(const SymMatrix& m, double tol = kDefaultPdTolerance);

// Lower-triangular R with M = R R^T. Throws ZeroPivot(j) at the first pivot
// that is not positive beyond zero_pivot_threshold.
Matrix cholesky(const SymMatrix& m);

// LDL^T without pivoting; elimination order is the natural index order.
// Throws ZeroPivot(j) when |pivot j| <= zero_pivot_threshold(m).
LdlFactor modified_cholesky(const SymMatrix& m);

// Solves (L diag(D) L^T) X = B.
Matrix ldl_solve(const LdlFactor& f, const Matrix& b);
// Solves (R R^T) X = B.
Matrix cholesky_solve(const Matrix& r, const Matrix& b);
// Solves A X = B by LU with partial pivoting; throws SingularMatrix.
Matrix lu_solve(const Matrix& a, const Matrix& b);

// M_J - M_{J,I} (M_I)^{-1} M_{I,J}. With I empty the result is M_J.
// Throws SingularBlock when M_I is numerically singular.
SymMatrix schur_complement(const SymMatrix& m, const IndexSet& i, const IndexSet& j);

// Inverse via LDL^T, falling back to pivoted LU when a leading minor
// vanishes. Throws SingularMatrix.
SymMatrix inverse(const SymMatrix& m);
// Product of the LDL^T pivots (pivoted LU when a leading minor vanishes).
double determinant(const SymMatrix& m);
// log det for positive definite m; throws ZeroPivot if m is not PD.
double log_determinant_pd(const SymMatrix& m);

Matrix submatrix(const SymMatrix& m, const IndexSet& rows, const IndexSet& cols);
SymMatrix principal_submatrix(const SymMatrix& m, const IndexSet& idx);

// Result has entry (new_label[i-1], new_label[j-1]) = m(i, j).
SymMatrix permute(const SymMatrix& m, std::span<const int> new_label);

// Largest |a_ij - b_ij| / max(1, max |b|).
double relative_max_difference(const SymMatrix& a, const SymMatrix& b);

}  // namespace pdc

#endif  // PDC_SYMLIN_HPP_
