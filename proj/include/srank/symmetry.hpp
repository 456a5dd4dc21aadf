#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "srank/error.hpp"
#include "srank/linalg.hpp"
#include "srank/permutation.hpp"
#include "srank/tensor.hpp"

namespace srank {

/// Projectors are explicit sums over S_k; beyond this order they are refused.
inline constexpr int kMaxProjectorOrder = 8;
inline constexpr int kMaxPermanentSize = 12;

namespace detail {

inline void guard_projector_order(int k) {
  if (k > kMaxProjectorOrder)
    fail(ErrorCode::size_guard_exceeded, "projector order " + std::to_string(k) + " exceeds " +
                                             std::to_string(kMaxProjectorOrder));
}

// (1/m!) sum over permutations of the first m slots, optionally sign-weighted.
inline std::vector<Complex> project_leading_slots(const Tensor& u, int m, bool alternating) {
  const int k = u.order();
  std::vector<Complex> acc(u.size());
  for (const auto& p : all_permutations(m)) {
    std::vector<int> img(p.images());
    for (int s = m; s < k; ++s) img.push_back(s);
    const Tensor pu = permute(u.retagged(Symmetry::general), Permutation(img));
    const double w = alternating ? p.sign() : 1.0;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * pu[i];
  }
  const double scale = 1.0 / static_cast<double>(factorial(m));
  for (auto& x : acc) x *= scale;
  return acc;
}

}  // namespace detail

/// pi^vee_k: (1/k!) sum_sigma U_sigma.
inline Tensor symmetrize(const Tensor& u) {
  detail::guard_projector_order(u.order());
  return Tensor(u.dim(), u.order(), detail::project_leading_slots(u, u.order(), false), Symmetry::symmetric);
}

/// pi^wedge_k: (1/k!) sum_sigma sgn(sigma) U_sigma.
inline Tensor antisymmetrize(const Tensor& u) {
  detail::guard_projector_order(u.order());
  return Tensor(u.dim(), u.order(), detail::project_leading_slots(u, u.order(), true), Symmetry::antisymmetric);
}

/// (pi^wedge_m x id) acting on the first m slots only.
inline Tensor antisymmetrize_leading(const Tensor& u, int m) {
  if (m < 0 || m > u.order()) fail(ErrorCode::order_mismatch);
  detail::guard_projector_order(m);
  return Tensor(u.dim(), u.order(), detail::project_leading_slots(u, m, true));
}

inline Tensor vee(const Tensor& a, const Tensor& b) { return symmetrize(tensor_product(a, b)); }
inline Tensor wedge(const Tensor& a, const Tensor& b) { return antisymmetrize(tensor_product(a, b)); }

/// f_1 v ... v f_k.
inline Tensor vee_of(const std::vector<Tensor>& vectors) { return symmetrize(product_of(vectors)); }
/// f_1 ^ ... ^ f_k.
inline Tensor wedge_of(const std::vector<Tensor>& vectors) { return antisymmetrize(product_of(vectors)); }

/// Permanent by Ryser's inclusion-exclusion formula with Gray-code subset order.
inline Complex permanent(const Matrix& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::dimension_mismatch, "permanent of a non-square matrix");
  const int m = a.rows();
  if (m > kMaxPermanentSize)
    fail(ErrorCode::size_guard_exceeded, "permanent size " + std::to_string(m) + " exceeds " +
                                             std::to_string(kMaxPermanentSize));
  if (m == 0) return 1.0;
  std::vector<Complex> row_sums(static_cast<std::size_t>(m));
  Complex total{};
  unsigned long long gray = 0;
  const unsigned long long count = 1ULL << m;
  for (unsigned long long step = 1; step < count; ++step) {
    const unsigned long long next = step ^ (step >> 1);
    const unsigned long long changed = next ^ gray;
    const int col = __builtin_ctzll(changed);
    const double dir = (next & changed) ? 1.0 : -1.0;
    for (int r = 0; r < m; ++r) row_sums[r] += dir * a(r, col);
    gray = next;
    Complex prod = 1.0;
    for (int r = 0; r < m; ++r) prod *= row_sums[r];
    const int bits = __builtin_popcountll(gray);
    total += ((m - bits) % 2 == 0 ? 1.0 : -1.0) * prod;
  }
  return total;
}

inline Complex determinant(const Matrix& a) { return lu_determinant(a); }

enum class BasisKind { symmetric, antisymmetric };

struct InducedBasisElement {
  BasisKind kind;
  /// Occupation numbers (k_1..k_n) for symmetric elements.
  std::vector<int> multiplicities;
  /// Strictly increasing 1-based indices for antisymmetric elements.
  std::vector<int> indices;
  double normalization;
  Tensor tensor;
};

/// Orthonormal bases sqrt(k!/prod k_j!) e_1^{k_1} v ... v e_n^{k_n} and sqrt(k!) e_{i_1} ^ ... ^ e_{i_k}.
/// For the antisymmetric kind with k > n the space is zero and the list is empty.
inline std::vector<InducedBasisElement> induced_basis(int n, int k, BasisKind kind) {
  if (n < 1 || k < 0) fail(ErrorCode::invalid_argument, "induced basis needs n >= 1, k >= 0");
  std::vector<InducedBasisElement> out;
  if (kind == BasisKind::antisymmetric && k > n) return out;
  detail::guard_projector_order(k);

  std::vector<int> idx(static_cast<std::size_t>(k));
  // Non-decreasing (symmetric) or strictly increasing (antisymmetric) tuples, lexicographic.
  const int step = kind == BasisKind::antisymmetric ? 1 : 0;
  for (int m = 0; m < k; ++m) idx[m] = step * m;
  while (true) {
    std::vector<Tensor> factors;
    for (int m = 0; m < k; ++m) factors.push_back(basis_vector(n, idx[m]));
    InducedBasisElement e{kind, {}, {}, 0.0, Tensor(n, k)};
    if (kind == BasisKind::symmetric) {
      e.multiplicities.assign(static_cast<std::size_t>(n), 0);
      for (int i : idx) ++e.multiplicities[i];
      double denom = 1.0;
      for (int c : e.multiplicities) denom *= static_cast<double>(factorial(c));
      e.normalization = std::sqrt(static_cast<double>(factorial(k)) / denom);
      e.tensor = k == 0 ? scalar_tensor(n, 1.0).retagged(Symmetry::symmetric)
                        : Complex(e.normalization) * vee_of(factors);
    } else {
      for (int i : idx) e.indices.push_back(i + 1);
      e.normalization = std::sqrt(static_cast<double>(factorial(k)));
      e.tensor = k == 0 ? scalar_tensor(n, 1.0).retagged(Symmetry::antisymmetric)
                        : Complex(e.normalization) * wedge_of(factors);
    }
    out.push_back(std::move(e));

    // advance
    int pos = k - 1;
    while (pos >= 0) {
      const int limit = kind == BasisKind::antisymmetric ? n - (k - pos) : n - 1;
      if (idx[pos] < limit) break;
      --pos;
    }
    if (pos < 0) break;
    ++idx[pos];
    for (int m = pos + 1; m < k; ++m) idx[m] = idx[m - 1] + step;
  }
  return out;
}

}  // namespace srank
