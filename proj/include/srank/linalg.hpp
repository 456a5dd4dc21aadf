#pragma once

// Dense complex linear algebra at desk scale: one-sided Jacobi SVD, cyclic
// Jacobi for real symmetric eigenproblems, Gram-Schmidt, LU determinant.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "srank/error.hpp"
#include "srank/tensor.hpp"

namespace srank {

/// Row-major dense complex matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) fail(ErrorCode::invalid_argument, "negative matrix extent");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Complex& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Complex operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<Complex> column(int c) const {
    std::vector<Complex> v(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_column(int c, const std::vector<Complex>& v) {
    for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Matrix adjoint() const {
    Matrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }
  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
  }
  Matrix conjugate() const {
    Matrix m = *this;
    for (auto& x : m.data_) x = std::conj(x);
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : data_) s += std::norm(x);
    return std::sqrt(s);
  }
  double max_abs() const {
    double s = 0.0;
    for (const auto& x : data_) s = std::max(s, std::abs(x));
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::dimension_mismatch, "matrix product extents");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int l = 0; l < a.cols_; ++l) {
        const Complex x = a(i, l);
        if (x == Complex{}) continue;
        for (int j = 0; j < b.cols_; ++j) m(i, j) += x * b(l, j);
      }
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::dimension_mismatch);
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
    return m;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::dimension_mismatch);
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
  }
  friend Matrix operator*(Complex s, const Matrix& a) {
    Matrix m = a;
    for (auto& x : m.data_) x *= s;
    return m;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

/// Coefficient matrix of an order-2 tensor: M(i, j) = u^{ij}.
inline Matrix coefficient_matrix(const Tensor& u) {
  if (u.order() != 2) fail(ErrorCode::wrong_order, "expected an order-2 tensor");
  const int n = u.dim();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = u[static_cast<std::size_t>(i) * n + j];
  return m;
}

inline Tensor tensor_from_matrix(const Matrix& m, Symmetry sym = Symmetry::general) {
  if (m.rows() != m.cols()) fail(ErrorCode::dimension_mismatch, "square matrix expected");
  const int n = m.rows();
  std::vector<Complex> c(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i) * n + j] = m(i, j);
  return Tensor(n, 2, std::move(c), sym);
}

// --- vectors --------------------------------------------------------------------

using Vector = std::vector<Complex>;

inline Complex dot(const Vector& a, const Vector& b) {
  Complex s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double vector_norm(const Vector& a) { return std::sqrt(std::real(dot(a, a))); }

inline Vector conj(const Vector& a) {
  Vector v = a;
  for (auto& x : v) x = std::conj(x);
  return v;
}

/// Rotates v so its first component with |v_i| > tol * max|v| is real positive.
inline void normalize_phase(Vector& v) {
  double mx = 0.0;
  for (const auto& x : v) mx = std::max(mx, std::abs(x));
  if (mx == 0.0) return;
  for (const auto& x : v) {
    if (std::abs(x) > 1e-8 * mx) {
      const Complex ph = std::conj(x) / std::abs(x);
      for (auto& y : v) y *= ph;
      return;
    }
  }
}

// --- SVD ------------------------------------------------------------------------

struct SvdResult {
  Matrix u;                    // m x p, columns are left singular vectors (zero where sigma = 0)
  std::vector<double> sigma;   // p = min(m, n), descending
  Matrix v;                    // n x p, orthonormal columns
};

namespace detail {

// Hestenes one-sided Jacobi on a matrix with rows >= cols.
inline SvdResult jacobi_svd_tall(Matrix a) {
  const int m = a.rows();
  const int n = a.cols();
  Matrix v = Matrix::identity(n);
  constexpr int max_sweeps = 80;
  constexpr double unit = std::numeric_limits<double>::epsilon();
  const double tol = 4.0 * unit * std::sqrt(static_cast<double>(m));
  // Columns already at rounding level of the whole matrix count as zero; rotating
  // them against each other only shuffles noise and never meets the relative test.
  const double floor = std::pow(4.0 * unit * a.frobenius_norm(), 2);
  bool converged = n < 2;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    converged = true;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        Complex gamma{};
        for (int i = 0; i < m; ++i) {
          alpha += std::norm(a(i, p));
          beta += std::norm(a(i, q));
          gamma += std::conj(a(i, p)) * a(i, q);
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || alpha <= floor || beta <= floor || g <= tol * std::sqrt(alpha * beta)) continue;
        converged = false;
        const Complex phase = gamma / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const Complex sp = s * std::conj(phase);  // s e^{-i phi}
        const Complex sq = s * phase;             // s e^{+i phi}
        for (int i = 0; i < m; ++i) {
          const Complex ap = a(i, p), aq = a(i, q);
          a(i, p) = c * ap - sp * aq;
          a(i, q) = sq * ap + c * aq;
        }
        for (int i = 0; i < n; ++i) {
          const Complex vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp - sp * vq;
          v(i, q) = sq * vp + c * vq;
        }
      }
    }
  }
  if (!converged) fail(ErrorCode::no_convergence, "one-sided Jacobi SVD");

  std::vector<double> norms(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += std::norm(a(i, j));
    norms[j] = std::sqrt(s);
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return norms[x] > norms[y]; });

  SvdResult r{Matrix(m, n), std::vector<double>(static_cast<std::size_t>(n)), Matrix(n, n)};
  for (int jj = 0; jj < n; ++jj) {
    const int j = order[jj];
    r.sigma[jj] = norms[j];
    for (int i = 0; i < n; ++i) r.v(i, jj) = v(i, j);
    if (norms[j] > 0.0)
      for (int i = 0; i < m; ++i) r.u(i, jj) = a(i, j) / norms[j];
  }
  return r;
}

}  // namespace detail

/// Thin SVD a = U diag(sigma) V^H with sigma descending.
inline SvdResult svd(const Matrix& a) {
  if (a.rows() >= a.cols()) return detail::jacobi_svd_tall(a);
  // a^H = V S U^H
  SvdResult t = detail::jacobi_svd_tall(a.adjoint());
  return SvdResult{std::move(t.v), std::move(t.sigma), std::move(t.u)};
}

inline std::vector<double> singular_values(const Matrix& a) { return svd(a).sigma; }

/// Count of singular values above eps * sigma_max; 0 for the zero matrix.
inline int numerical_rank(const Matrix& a, double eps = kDefaultEpsilon) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  const auto s = singular_values(a);
  if (s.empty() || s.front() == 0.0) return 0;
  return static_cast<int>(std::count_if(s.begin(), s.end(), [&](double x) { return x > eps * s.front(); }));
}

// --- real symmetric eigenproblem -------------------------------------------------

struct SymmetricEigen {
  std::vector<double> values;           // descending
  std::vector<std::vector<double>> vectors;  // vectors[j] belongs to values[j]
};

/// Cyclic Jacobi for a real symmetric matrix given row-major (n x n).
inline SymmetricEigen symmetric_eigen(std::vector<double> a, int n) {
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };

  double total = 0.0;
  for (double x : a) total += x * x;
  const double floor = 1e-30 * std::max(total, 1e-300);
  bool converged = false;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += 2.0 * A(p, q) * A(p, q);
    if (off <= floor || off <= 1e-32 * total) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int r = 0; r < n; ++r) {
          const double arp = A(r, p), arq = A(r, q);
          A(r, p) = c * arp - s * arq;
          A(r, q) = s * arp + c * arq;
        }
        for (int r = 0; r < n; ++r) {
          const double apr = A(p, r), aqr = A(q, r);
          A(p, r) = c * apr - s * aqr;
          A(q, r) = s * apr + c * aqr;
        }
        for (int r = 0; r < n; ++r) {
          const double vrp = V(r, p), vrq = V(r, q);
          V(r, p) = c * vrp - s * vrq;
          V(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }
  if (!converged) fail(ErrorCode::no_convergence, "Jacobi eigenvalue iteration");

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return A(x, x) > A(y, y); });
  SymmetricEigen r;
  for (int j : order) {
    r.values.push_back(A(j, j));
    std::vector<double> col(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) col[i] = V(i, j);
    r.vectors.push_back(std::move(col));
  }
  return r;
}

// --- orthonormalization -----------------------------------------------------------

/// Extends an orthonormal list to an orthonormal basis of C^n using the
/// standard basis vectors as candidates (modified Gram-Schmidt, twice).
inline std::vector<Vector> complete_orthonormal(std::vector<Vector> basis, int n) {
  for (int e = 0; e < n && static_cast<int>(basis.size()) < n; ++e) {
    Vector cand(static_cast<std::size_t>(n));
    cand[e] = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) {
        const Complex p = dot(b, cand);
        for (int i = 0; i < n; ++i) cand[i] -= p * b[i];
      }
    const double nrm = vector_norm(cand);
    if (nrm > 1e-6) {
      for (auto& x : cand) x /= nrm;
      basis.push_back(std::move(cand));
    }
  }
  return basis;
}

/// Columns to matrix.
inline Matrix from_columns(const std::vector<Vector>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(static_cast<int>(c), cols[c]);
  return m;
}

/// Q factor of a QR decomposition (modified Gram-Schmidt), with R's diagonal made positive.
inline Matrix orthonormalize_columns(const Matrix& a) {
  const int m = a.rows();
  std::vector<Vector> q;
  for (int c = 0; c < a.cols(); ++c) {
    Vector v = a.column(c);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : q) {
        const Complex p = dot(b, v);
        for (int i = 0; i < m; ++i) v[i] -= p * b[i];
      }
    const double nrm = vector_norm(v);
    if (nrm < 1e-12) fail(ErrorCode::dependent_vectors, "columns are linearly dependent");
    for (auto& x : v) x /= nrm;
    q.push_back(std::move(v));
  }
  return from_columns(q, m);
}

/// Haar-distributed unitary from the QR decomposition of a complex Gaussian matrix.
template <class Rng>
Matrix random_unitary(int n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = Complex(g(rng), g(rng));
  return orthonormalize_columns(z);
}

/// Deviation of U^H U from the identity (max abs entry).
inline double unitarity_defect(const Matrix& u) {
  const Matrix d = u.adjoint() * u - Matrix::identity(u.cols());
  return d.max_abs();
}

/// Determinant by LU with partial pivoting.
inline Complex lu_determinant(Matrix a) {
  if (a.rows() != a.cols()) fail(ErrorCode::dimension_mismatch, "determinant of a non-square matrix");
  const int n = a.rows();
  Complex det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (a(piv, col) == Complex{}) return Complex{};
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const Complex f = a(r, col) / a(col, col);
      if (f == Complex{}) continue;
      for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

/// Applies a one-particle matrix to every slot: (U x ... x U) u.
inline Tensor apply_to_every_slot(const Matrix& u_mat, const Tensor& t) {
  const int n = t.dim();
  if (u_mat.rows() != n || u_mat.cols() != n) fail(ErrorCode::dimension_mismatch);
  std::vector<Complex> cur(t.coeffs().begin(), t.coeffs().end());
  const int k = t.order();
  const std::size_t stride_total = cur.size();
  for (int slot = 0; slot < k; ++slot) {
    const std::size_t inner = ipow(n, k - 1 - slot);
    const std::size_t outer = stride_total / (inner * n);
    std::vector<Complex> next(cur.size());
    for (std::size_t o = 0; o < outer; ++o)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Complex x = u_mat(i, j);
          if (x == Complex{}) continue;
          for (std::size_t in = 0; in < inner; ++in)
            next[(o * n + i) * inner + in] += x * cur[(o * n + j) * inner + in];
        }
    cur = std::move(next);
  }
  return Tensor(n, k, std::move(cur), t.symmetry(), t.tableau());
}

}  // namespace srank
