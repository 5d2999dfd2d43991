#include "normgate/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "normgate/errors.hpp"

namespace normgate {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Mat2 Mat2::adjoint() const {
  return {std::conj(e11), std::conj(e21), std::conj(e12), std::conj(e22)};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.e11 * y.e11 + x.e12 * y.e21, x.e11 * y.e12 + x.e12 * y.e22,
          x.e21 * y.e11 + x.e22 * y.e21, x.e21 * y.e12 + x.e22 * y.e22};
}

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> values) {
  DenseMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

DenseMatrix DenseMatrix::from_mat2(const Mat2& m) {
  DenseMatrix d(2, 2);
  d(0, 0) = m.e11;
  d(0, 1) = m.e12;
  d(1, 0) = m.e21;
  d(1, 1) = m.e22;
  return d;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool DenseMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](Complex z) { return is_finite(z); });
}

void DenseMatrix::set_block(std::size_t row, std::size_t col, const DenseMatrix& block) {
  if (row + block.rows() > rows_ || col + block.cols() > cols_)
    throw InvalidInput("block does not fit inside the target matrix");
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) (*this)(row + i, col + j) = block(i, j);
}

DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.cols() != y.rows()) throw InvalidInput("matrix product dimension mismatch");
  DenseMatrix r(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const Complex xik = x(i, k);
      if (xik == Complex{}) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

namespace {

template <typename Op>
DenseMatrix elementwise(const DenseMatrix& x, const DenseMatrix& y, Op op) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw InvalidInput("matrix shapes differ");
  DenseMatrix r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = op(x(i, j), y(i, j));
  return r;
}

}  // namespace

DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y) {
  return elementwise(x, y, std::plus<>{});
}

DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y) {
  return elementwise(x, y, std::minus<>{});
}

DenseMatrix operator*(Complex s, const DenseMatrix& x) {
  DenseMatrix r = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) *= s;
  return r;
}

std::vector<Complex> operator*(const DenseMatrix& x, std::span<const Complex> v) {
  if (x.cols() != v.size()) throw InvalidInput("matrix-vector dimension mismatch");
  std::vector<Complex> r(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r[i] += x(i, j) * v[j];
  return r;
}

HermMatrix::HermMatrix(DenseMatrix m) : m_(std::move(m)) {
  if (m_.rows() == 0) throw InvalidInput("Hermitian matrix of dimension 0");
  if (m_.rows() != m_.cols()) throw InvalidInput("Hermitian matrix must be square");
  if (!m_.all_finite()) throw InvalidInput("Hermitian matrix has non-finite entries");
  const double tol = hybrid_tol(1e-12, m_.frobenius_norm());
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i; j < m_.cols(); ++j)
      if (std::abs(m_(i, j) - std::conj(m_(j, i))) > tol)
        throw InvalidInput("matrix is not Hermitian");
  // Snap to exact symmetry so the eigensolver sees a real diagonal.
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    m_(i, i) = m_(i, i).real();
    for (std::size_t j = i + 1; j < m_.cols(); ++j) {
      const Complex avg = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
      m_(i, j) = avg;
      m_(j, i) = std::conj(avg);
    }
  }
}

Bracket::Bracket(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
    throw InvalidInput("bracket requires finite lo < hi");
}

// ---------------------------------------------------------------------------
// 2x2 norm

double norm_mat2(const Mat2& m) {
  if (!is_finite(m.e11) || !is_finite(m.e12) || !is_finite(m.e21) || !is_finite(m.e22))
    throw InvalidInput("norm_mat2: non-finite entry");
  // Gram matrix G = M*M.
  const double g11 = std::norm(m.e11) + std::norm(m.e21);
  const double g22 = std::norm(m.e12) + std::norm(m.e22);
  const Complex g12 = std::conj(m.e11) * m.e12 + std::conj(m.e21) * m.e22;
  const double trace = g11 + g22;
  // tr^2 - 4 det(G), written as a sum of squares.
  const double radicand = (g11 - g22) * (g11 - g22) + 4.0 * std::norm(g12);
  const double lambda_max = 0.5 * (trace + std::sqrt(radicand));
  if (lambda_max < 0.0) throw InternalConsistencyError("norm_mat2: negative Gram eigenvalue");
  return std::sqrt(lambda_max);
}

// ---------------------------------------------------------------------------
// Jacobi eigensolver

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

constexpr int kMaxSweeps = 100;

// Diagonalizes `a` in place; accumulates rotations into `v` when non-null.
void jacobi_diagonalize(DenseMatrix& a, DenseMatrix* v) {
  const std::size_t n = a.rows();
  const double target = 1e-13 * a.frobenius_norm();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // G = diag(1, conj(phase)) * [[c, s], [-s, c]] restricted to (p, q).
        const Complex gpp = c;
        const Complex gpq = s;
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        if (v != nullptr) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = (*v)(k, p);
            const Complex vkq = (*v)(k, q);
            (*v)(k, p) = vkp * gpp + vkq * gqp;
            (*v)(k, q) = vkp * gpq + vkq * gqq;
          }
        }
      }
    }
  }
  if (off_diagonal_norm(a) > target)
    throw InternalConsistencyError("Jacobi eigensolver did not converge");
}

}  // namespace

HermEigen herm_eigen(const HermMatrix& h) {
  DenseMatrix a = h.matrix();
  const std::size_t n = a.rows();
  DenseMatrix v = DenseMatrix::identity(n);
  jacobi_diagonalize(a, &v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  HermEigen out{std::vector<double>(n), DenseMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

double herm_max_eig(const HermMatrix& h) {
  DenseMatrix a = h.matrix();
  jacobi_diagonalize(a, nullptr);
  double best = a(0, 0).real();
  for (std::size_t i = 1; i < a.rows(); ++i) best = std::max(best, a(i, i).real());
  return best;
}

// ---------------------------------------------------------------------------
// Bisection

SignChange bisect_bracket(const RealFunction& f, const Bracket& b, double tol) {
  double lo = b.lo;
  double hi = b.hi;
  double flo = f(lo);
  const double fhi = f(hi);
  if (!std::isfinite(flo) || !std::isfinite(fhi))
    throw InvalidInput("bisect_root: non-finite function value at bracket end");
  if (flo == 0.0) return {lo, lo};
  if (fhi == 0.0) return {hi, hi};
  if ((flo < 0.0) == (fhi < 0.0)) throw BracketError("bisect_root: no sign change on bracket");

  const double width_target = hybrid_tol(tol, std::max(std::abs(lo), std::abs(hi)));
  while (hi - lo > width_target) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // bracket exhausted at double resolution
    const double fmid = f(mid);
    if (fmid == 0.0) return {mid, mid};
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

double bisect_root(const RealFunction& f, const Bracket& b, double tol) {
  const SignChange s = bisect_bracket(f, b, tol);
  return s.lo + 0.5 * (s.hi - s.lo);
}

// ---------------------------------------------------------------------------
// Maximization

namespace {

double checked(const RealFunction& f, double x) {
  const double y = f(x);
  if (std::isnan(y)) throw InvalidInput("objective returned NaN");
  return y;
}

struct Grid {
  std::vector<double> x;
  std::vector<double> y;
};

Grid sample(const RealFunction& f, const Bracket& b, std::size_t n) {
  if (n < 2) throw InvalidInput("grid needs at least 2 points");
  Grid g{std::vector<double>(n), std::vector<double>(n)};
  const double step = b.width() / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    g.x[i] = (i + 1 == n) ? b.hi : b.lo + step * static_cast<double>(i);
    g.y[i] = checked(f, g.x[i]);
  }
  return g;
}

std::vector<std::size_t> champions(const Grid& g) {
  std::vector<std::size_t> idx;
  const std::size_t n = g.x.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool left_ok = i == 0 || g.y[i] >= g.y[i - 1];
    const bool right_ok = i + 1 == n || g.y[i] >= g.y[i + 1];
    if (left_ok && right_ok) idx.push_back(i);
  }
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return g.y[i] > g.y[j]; });
  return idx;
}

// Golden-section search on [lo, hi] seeded with the grid champion; returns the
// best point evaluated, so the result is never worse than the seed.
Maximum golden_refine(const RealFunction& f, double lo, double hi, Maximum seed, double width) {
  constexpr double kInvPhi = 0.6180339887498948482;
  Maximum best = seed;
  auto consider = [&](double x, double y) {
    if (y > best.value) best = {x, y};
  };
  consider(lo, checked(f, lo));
  consider(hi, checked(f, hi));

  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = checked(f, x1);
  double f2 = checked(f, x2);
  consider(x1, f1);
  consider(x2, f2);
  for (int iter = 0; iter < 200 && hi - lo > width; ++iter) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = checked(f, x1);
      consider(x1, f1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = checked(f, x2);
      consider(x2, f2);
    }
  }
  return best;
}

Maximum refine_champion(const RealFunction& f, const Grid& g, std::size_t i, double width) {
  const double lo = i == 0 ? g.x[0] : g.x[i - 1];
  const double hi = i + 1 == g.x.size() ? g.x[i] : g.x[i + 1];
  if (!(lo < hi)) return {g.x[i], g.y[i]};
  return golden_refine(f, lo, hi, {g.x[i], g.y[i]}, width);
}

}  // namespace

std::vector<Maximum> local_maxima_on_interval(const RealFunction& f, const Bracket& b,
                                              std::size_t grid_n) {
  const Grid g = sample(f, b, grid_n);
  const double width = 1e-12 * b.width();
  std::vector<Maximum> out;
  for (std::size_t i : champions(g)) out.push_back(refine_champion(f, g, i, width));
  std::stable_sort(out.begin(), out.end(),
                   [](const Maximum& x, const Maximum& y) { return x.value > y.value; });
  return out;
}

Maximum maximize_on_interval(const RealFunction& f, const Bracket& b, std::size_t grid_n) {
  const Grid g = sample(f, b, grid_n);
  const double width = 1e-12 * b.width();
  const auto champs = champions(g);
  Maximum best{g.x[champs.front()], g.y[champs.front()]};
  for (std::size_t k = 0; k < champs.size() && k < 3; ++k) {
    const Maximum m = refine_champion(f, g, champs[k], width);
    if (m.value > best.value) best = m;
  }
  return best;
}

}  // namespace normgate
