#pragma once

// Schmidt (SVD), Takagi (complex symmetric) and Youla (complex antisymmetric)
// canonical forms of order-2 tensors.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "srank/error.hpp"
#include "srank/linalg.hpp"
#include "srank/symmetry.hpp"
#include "srank/tensor.hpp"

namespace srank {

/// u = sum_i lambda_i left_i x right_i with orthonormal systems.
struct SchmidtDecomposition {
  std::vector<double> lambdas;
  std::vector<Vector> left;
  std::vector<Vector> right;
  double residual = 0.0;

  int rank() const noexcept { return static_cast<int>(lambdas.size()); }
};

enum class SlaterKind { symmetric, antisymmetric };

/// v = sum_i lambda_i e_i v e_i  or  w = sum_i lambda_i f_i ^ f_{n+i}.
struct SlaterDecomposition {
  SlaterKind kind;
  std::vector<double> lambdas;
  std::vector<Vector> vectors;   // e_i, or f_i for the antisymmetric kind
  std::vector<Vector> partners;  // f_{n+i}; empty for the symmetric kind
  Matrix unitary;                // full unitary congruence (columns)
  double residual = 0.0;

  int rank() const noexcept { return static_cast<int>(lambdas.size()); }
};

namespace detail {

inline Tensor outer(const Vector& a, const Vector& b) {
  return tensor_product(vector_tensor(a), vector_tensor(b));
}

inline void require_nonzero(const Tensor& u) {
  if (u.is_zero()) fail(ErrorCode::zero_tensor);
}

}  // namespace detail

/// Reconstruction sum_i lambda_i left_i x right_i.
inline Tensor reconstruct(const SchmidtDecomposition& d, int n) {
  Tensor t(n, 2);
  for (int i = 0; i < d.rank(); ++i) t = t + Complex(d.lambdas[i]) * detail::outer(d.left[i], d.right[i]);
  return t;
}

inline Tensor reconstruct(const SlaterDecomposition& d, int n) {
  Tensor t(n, 2);
  for (int i = 0; i < d.rank(); ++i) {
    if (d.kind == SlaterKind::symmetric) {
      t = t + Complex(d.lambdas[i]) * detail::outer(d.vectors[i], d.vectors[i]);
    } else {
      const Tensor fg = detail::outer(d.vectors[i], d.partners[i]);
      const Tensor gf = detail::outer(d.partners[i], d.vectors[i]);
      t = t + Complex(0.5 * d.lambdas[i]) * (fg - gf);
    }
  }
  return t;
}

inline SchmidtDecomposition schmidt(const Tensor& u, double eps = kDefaultEpsilon) {
  if (u.order() != 2) fail(ErrorCode::wrong_order, "Schmidt decomposition needs an order-2 tensor");
  detail::require_nonzero(u);
  const int n = u.dim();
  const SvdResult s = svd(coefficient_matrix(u));
  SchmidtDecomposition d;
  for (std::size_t i = 0; i < s.sigma.size(); ++i) {
    if (s.sigma[i] <= eps * s.sigma.front()) break;
    Vector left = s.u.column(static_cast<int>(i));
    Vector right = conj(s.v.column(static_cast<int>(i)));
    // Fix the joint phase freedom left -> e^{it} left, right -> e^{-it} right.
    Vector probe = left;
    normalize_phase(probe);
    Complex ph{1.0};
    for (int c = 0; c < n; ++c)
      if (left[c] != Complex{}) {
        ph = probe[c] / left[c];
        break;
      }
    for (auto& x : left) x *= ph;
    for (auto& x : right) x /= ph;
    d.lambdas.push_back(s.sigma[i]);
    d.left.push_back(std::move(left));
    d.right.push_back(std::move(right));
  }
  d.residual = norm(reconstruct(d, n) - u.retagged(Symmetry::general));
  return d;
}

/// A = U diag(lambda) U^T for complex symmetric A, lambda descending, U unitary.
inline SlaterDecomposition takagi(const Tensor& v, double eps = kDefaultEpsilon) {
  if (v.order() != 2) fail(ErrorCode::wrong_order, "Takagi factorization needs an order-2 tensor");
  detail::require_nonzero(v);
  if (symmetry_defect(v, Symmetry::symmetric) > eps) fail(ErrorCode::not_symmetric);
  const int n = v.dim();
  const Matrix a = coefficient_matrix(v);

  // M = [[Re A, Im A], [Im A, -Re A]] has eigenpairs (+-sigma_i); an eigenvector
  // [x; y] for sigma >= 0 yields u = x + i y with A conj(u) = sigma u.
  const int two_n = 2 * n;
  std::vector<double> m(static_cast<std::size_t>(two_n) * two_n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = a(i, j).real(), im = a(i, j).imag();
      m[static_cast<std::size_t>(i) * two_n + j] = re;
      m[static_cast<std::size_t>(i) * two_n + j + n] = im;
      m[static_cast<std::size_t>(i + n) * two_n + j] = im;
      m[static_cast<std::size_t>(i + n) * two_n + j + n] = -re;
    }
  const SymmetricEigen eig = symmetric_eigen(std::move(m), two_n);
  const double top = std::max(eig.values.front(), 0.0);

  SlaterDecomposition d{SlaterKind::symmetric, {}, {}, {}, Matrix(), 0.0};
  std::vector<Vector> basis;
  for (int j = 0; j < n; ++j) {
    const double lam = eig.values[j];
    if (lam <= eps * top) break;
    Vector u(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) u[i] = Complex(eig.vectors[j][i], eig.vectors[j][i + n]);
    // Takagi vectors are fixed up to a real sign; make the leading component's real part positive.
    for (const auto& x : u) {
      if (std::abs(x) > 1e-8) {
        if (x.real() < 0.0 || (x.real() == 0.0 && x.imag() < 0.0))
          for (auto& y : u) y = -y;
        break;
      }
    }
    const double nrm = vector_norm(u);
    for (auto& x : u) x /= nrm;
    d.lambdas.push_back(lam);
    d.vectors.push_back(u);
    basis.push_back(std::move(u));
  }
  d.unitary = from_columns(complete_orthonormal(std::move(basis), n), n);
  d.residual = norm(reconstruct(d, n) - v.retagged(Symmetry::general));
  return d;
}

/// A = U D U^T for complex antisymmetric A with D = diag([[0, s_i], [-s_i, 0]]);
/// reported as w = sum_i lambda_i f_i ^ f_{n+i}, lambda_i = 2 s_i.
inline SlaterDecomposition youla(const Tensor& w, double eps = kDefaultEpsilon) {
  if (w.order() != 2) fail(ErrorCode::wrong_order, "Youla decomposition needs an order-2 tensor");
  detail::require_nonzero(w);
  if (symmetry_defect(w, Symmetry::antisymmetric) > eps) fail(ErrorCode::not_antisymmetric);
  const int n = w.dim();
  Matrix a = coefficient_matrix(w);
  const double top = singular_values(a).front();

  SlaterDecomposition d{SlaterKind::antisymmetric, {}, {}, {}, Matrix(), 0.0};
  std::vector<Vector> basis;
  for (int block = 0; 2 * block < n; ++block) {
    // Largest singular pair of the deflated matrix: A x = s f with g = conj(x).
    const SvdResult s = svd(a);
    const double sv = s.sigma.front();
    if (sv <= eps * top) break;
    const Vector x = s.v.column(0);
    Vector f(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      Complex acc{};
      for (int j = 0; j < n; ++j) acc += a(i, j) * x[j];
      f[i] = acc / sv;
    }
    Vector g = conj(x);
    // Phase freedom f -> e^{it} f, g -> e^{-it} g.
    Vector probe = f;
    normalize_phase(probe);
    for (int c = 0; c < n; ++c)
      if (std::abs(f[c]) > 1e-12) {
        const Complex ph = probe[c] / f[c];
        f = probe;
        for (auto& y : g) y /= ph;
        break;
      }
    // Re-orthonormalize against earlier pairs to stop drift from accumulating.
    for (Vector* v : {&f, &g}) {
      for (const auto& b : basis) {
        const Complex p = dot(b, *v);
        for (int i = 0; i < n; ++i) (*v)[i] -= p * b[i];
      }
      const double nrm = vector_norm(*v);
      for (auto& y : *v) y /= nrm;
    }
    {
      const Complex p = dot(f, g);
      for (int i = 0; i < n; ++i) g[i] -= p * f[i];
      const double nrm = vector_norm(g);
      for (auto& y : g) y /= nrm;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) -= sv * (f[i] * g[j] - g[i] * f[j]);
    d.lambdas.push_back(2.0 * sv);
    d.vectors.push_back(f);
    d.partners.push_back(g);
    basis.push_back(std::move(f));
    basis.push_back(std::move(g));
  }
  d.unitary = from_columns(complete_orthonormal(std::move(basis), n), n);
  d.residual = norm(reconstruct(d, n) - w.retagged(Symmetry::general));
  return d;
}

/// Slater decomposition for a symmetric or antisymmetric order-2 tensor.
inline SlaterDecomposition slater(const Tensor& u, double eps = kDefaultEpsilon) {
  switch (u.symmetry()) {
    case Symmetry::symmetric: return takagi(u, eps);
    case Symmetry::antisymmetric: return youla(u, eps);
    default: fail(ErrorCode::wrong_class, "Slater decomposition needs a symmetric or antisymmetric tensor");
  }
}

}  // namespace srank
