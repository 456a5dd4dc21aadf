#pragma once

#include <vector>

#include "srank/error.hpp"
#include "srank/linalg.hpp"
#include "srank/tensor.hpp"

namespace srank {

/// A covariant tensor realized from a primal one through |x> -> <x|:
/// its coefficients are the complex conjugates of the primal coefficients.
class DualTensor {
 public:
  explicit DualTensor(Tensor primal) : primal_(std::move(primal)) {}
  const Tensor& primal() const noexcept { return primal_; }
  int dim() const noexcept { return primal_.dim(); }
  int order() const noexcept { return primal_.order(); }
  Complex coeff(std::size_t flat) const { return std::conj(primal_[flat]); }

 private:
  Tensor primal_;
};

inline DualTensor dual(const Tensor& primal) { return DualTensor(primal); }

/// iota_mu u: pairs mu with the first l slots of u,
/// (iota_mu u)^{j...} = sum_I conj(mu^I) u^{I j...}. Zero scalar when l > k.
inline Tensor contract(const Tensor& u, const DualTensor& mu) {
  if (u.dim() != mu.dim()) fail(ErrorCode::dimension_mismatch);
  const int k = u.order();
  const int l = mu.order();
  if (l > k) return scalar_tensor(u.dim(), 0.0);
  const std::size_t head = ipow(u.dim(), l);
  const std::size_t tail = ipow(u.dim(), k - l);
  std::vector<Complex> out(tail);
  for (std::size_t i = 0; i < head; ++i) {
    const Complex w = mu.coeff(i);
    if (w == Complex{}) continue;
    for (std::size_t j = 0; j < tail; ++j) out[j] += w * u[i * tail + j];
  }
  Symmetry s = Symmetry::general;
  if (u.symmetry() == Symmetry::symmetric || u.symmetry() == Symmetry::antisymmetric) s = u.symmetry();
  return Tensor(u.dim(), k - l, std::move(out), s);
}

inline Tensor contract(const Tensor& u, const Tensor& mu_primal) { return contract(u, dual(mu_primal)); }

/// Flattening whose column space is the image of mu -> iota_mu sigma(u), mu in (H*)^{(k-1)},
/// where sigma moves slot `slot` (1-based) to the last position. Rows run over the
/// n^{k-1} basis dual tensors, columns over H.
inline Matrix contraction_matrix(const Tensor& u, int slot) {
  const int k = u.order();
  if (k < 1 || slot < 1 || slot > k) fail(ErrorCode::order_mismatch, "slot outside 1..k");
  const Tensor moved = permute(u.retagged(Symmetry::general), Permutation::slot_to_last(k, slot - 1));
  const int n = u.dim();
  const int rows = static_cast<int>(ipow(n, k - 1));
  Matrix m(rows, n);
  // The basis dual tensor e^I picks out coefficient (I, col) of sigma(u).
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = moved[static_cast<std::size_t>(r) * n + c];
  return m;
}

}  // namespace srank
