#pragma once

// Foundational numerics: 2x2 spectral norm, dense complex matrices, a cyclic
// Jacobi Hermitian eigensolver, bisection and 1-D maximization.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace normgate {

using Complex = std::complex<double>;
using RealFunction = std::function<double(double)>;

bool is_finite(Complex z);

/// 2x2 complex matrix [[e11, e12], [e21, e22]].
struct Mat2 {
  Complex e11{}, e12{}, e21{}, e22{};

  Mat2 adjoint() const;
  bool operator==(const Mat2&) const = default;
};

Mat2 operator*(const Mat2& x, const Mat2& y);

/// Row-major dense complex matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> values);
  static DenseMatrix from_mat2(const Mat2& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  DenseMatrix adjoint() const;
  double frobenius_norm() const;
  bool all_finite() const;

  /// Copies `block` into this matrix with its top-left corner at (row, col).
  void set_block(std::size_t row, std::size_t col, const DenseMatrix& block);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix operator*(Complex s, const DenseMatrix& x);
std::vector<Complex> operator*(const DenseMatrix& x, std::span<const Complex> v);

/// Square matrix equal to its conjugate transpose.
class HermMatrix {
 public:
  /// Throws InvalidInput unless `m` is square, non-empty, finite and
  /// Hermitian to within 1e-12 * max(1, ||m||_F) entrywise.
  explicit HermMatrix(DenseMatrix m);

  std::size_t dim() const { return m_.rows(); }
  const DenseMatrix& matrix() const { return m_; }

 private:
  DenseMatrix m_;
};

/// Eigenvalues sorted in decreasing order; column k of `vectors` pairs with values[k].
struct HermEigen {
  std::vector<double> values;
  DenseMatrix vectors;
};

struct Bracket {
  double lo;
  double hi;

  /// Throws InvalidInput unless lo < hi and both are finite.
  Bracket(double lo, double hi);
  double width() const { return hi - lo; }
};

/// Spectral norm of a 2x2 matrix, closed form via the Gram matrix M*M.
double norm_mat2(const Mat2& m);

/// Full eigendecomposition by cyclic Jacobi rotations.
HermEigen herm_eigen(const HermMatrix& h);

/// Largest eigenvalue by cyclic Jacobi rotations.
double herm_max_eig(const HermMatrix& h);

/// Final sign-change interval of a bisection (lo == hi on an exact zero).
struct SignChange {
  double lo;
  double hi;
};

SignChange bisect_bracket(const RealFunction& f, const Bracket& b, double tol);

/// Midpoint bisection. Stops once the sign-change interval is no wider than
/// tol * max(1, |lo|, |hi|). Throws BracketError without a sign change.
double bisect_root(const RealFunction& f, const Bracket& b, double tol);

struct Maximum {
  double argmax;
  double value;
};

/// Every grid local maximum of f on `b` (grid_n points, endpoints included),
/// each refined by golden-section search on its neighbouring grid cells.
/// Sorted by value, largest first.
std::vector<Maximum> local_maxima_on_interval(const RealFunction& f, const Bracket& b,
                                              std::size_t grid_n);

/// Grid scan plus golden-section refinement of the best three champions.
Maximum maximize_on_interval(const RealFunction& f, const Bracket& b, std::size_t grid_n = 4096);

/// Hybrid tolerance tol * max(1, |scale|).
inline double hybrid_tol(double tol, double scale) {
  return tol * (std::abs(scale) > 1.0 ? std::abs(scale) : 1.0);
}

}  // namespace normgate
