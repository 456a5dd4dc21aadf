#pragma once

// S-rank, simplicity tests and the quadratic entanglement criteria.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "srank/contraction.hpp"
#include "srank/error.hpp"
#include "srank/linalg.hpp"
#include "srank/symmetry.hpp"
#include "srank/tensor.hpp"

namespace srank {

/// Coefficients violating a quadratic identity (1-based indices).
struct Witness {
  /// general: (i_1..i_k), symmetric: (i_1..i_k), antisymmetric: (i_1..i_{k+1})
  MultiIndex first;
  /// general/symmetric: (j_1..j_k), antisymmetric: (j_1..j_{k-1})
  MultiIndex second;
  /// swapped slot s (1-based) for the general criterion; 0 otherwise
  int slot = 0;
  /// general/symmetric: u^I u^J and the swapped product; antisymmetric: bracket value and 0
  Complex lhs;
  Complex rhs;
};

struct Verdict {
  Symmetry symmetry = Symmetry::general;
  int s_rank = 0;
  int minimal_rank = 1;
  bool simple = false;
  std::optional<Witness> witness;
  std::optional<double> score;
};

namespace detail {

inline void require_classifiable(const Tensor& u) {
  if (u.order() < 1) fail(ErrorCode::order_mismatch, "S-rank needs order k >= 1");
  if (u.is_zero()) fail(ErrorCode::zero_tensor);
}

}  // namespace detail

/// Minimal S-rank of a non-zero tensor in the class of u.
inline int minimal_rank(const Tensor& u) {
  switch (u.symmetry()) {
    case Symmetry::antisymmetric: return u.order();
    case Symmetry::young: return u.tableau()->row_count();
    default: return 1;
  }
}

/// Maximum over surviving slots of dim iota_{H^{(k-1)}} sigma(u). For symmetric and
/// antisymmetric tensors every slot gives the same space, so slot 1 is used.
inline int s_rank(const Tensor& u, double eps = kDefaultEpsilon) {
  detail::require_classifiable(u);
  if (u.symmetry() == Symmetry::symmetric || u.symmetry() == Symmetry::antisymmetric)
    return numerical_rank(contraction_matrix(u, 1), eps);
  int best = 0;
  for (int slot = 1; slot <= u.order(); ++slot)
    best = std::max(best, numerical_rank(contraction_matrix(u, slot), eps));
  return best;
}

/// Rank-based verdict: simple iff the S-rank is the class minimum.
inline Verdict is_simple(const Tensor& u, double eps = kDefaultEpsilon) {
  Verdict v;
  v.symmetry = u.symmetry();
  v.s_rank = s_rank(u, eps);
  v.minimal_rank = minimal_rank(u);
  v.simple = v.s_rank == v.minimal_rank;
  return v;
}

/// sigma_i on the order-2k tensor u x u: swaps slot i with slot k+i (0-based i).
inline Permutation interweave(int k, int i) { return Permutation::transposition(2 * k, i, k + i); }

/// Directly verifiable tensor-square conditions:
///   general       sigma_i(u x u) = u x u for all i
///   symmetric     sigma_k(v x v) = v x v
///   antisymmetric (pi^wedge_{k+1} x id)(tau_k(w x w)) = 0
inline bool tensor_square_test(const Tensor& u, double eps = kDefaultEpsilon) {
  detail::require_classifiable(u);
  const int k = u.order();
  const Tensor uu = tensor_product(u, u);
  const double tol = eps * u.max_abs() * u.max_abs();
  switch (u.symmetry()) {
    case Symmetry::general:
      for (int i = 0; i < k; ++i)
        if (max_abs_diff(permute(uu, interweave(k, i)), uu) > tol) return false;
      return true;
    case Symmetry::symmetric:
      return max_abs_diff(permute(uu, interweave(k, k - 1)), uu) <= tol;
    case Symmetry::antisymmetric: {
      const Tensor shifted = permute(uu, Permutation::last_to_front(2 * k));
      return antisymmetrize_leading(shifted, k + 1).max_abs() <= tol;
    }
    case Symmetry::young: break;
  }
  fail(ErrorCode::unsupported_class, "young tensors are classified through the S-rank");
}

/// <u x u, sigma_bar(u x u)> with sigma_bar = (1/k) sum_i sigma_i (general) or sigma_k
/// (symmetric), for unit u. Equals 1 exactly for simple tensors.
inline double overlap_score(const Tensor& u, double eps = kDefaultEpsilon) {
  detail::require_classifiable(u);
  if (u.symmetry() != Symmetry::general && u.symmetry() != Symmetry::symmetric)
    fail(ErrorCode::unsupported_class, "overlap score is defined for general and symmetric tensors");
  if (std::abs(norm(u) - 1.0) > eps) fail(ErrorCode::not_normalized);
  const int k = u.order();
  const Tensor uu = tensor_product(u, u);
  Complex s{};
  if (u.symmetry() == Symmetry::general) {
    for (int i = 0; i < k; ++i) s += inner_product(uu, permute(uu, interweave(k, i)));
    s /= static_cast<double>(k);
  } else {
    s = inner_product(uu, permute(uu, interweave(k, k - 1)));
  }
  return std::clamp(s.real(), 0.0, 1.0);
}

namespace detail {

inline MultiIndex one_based(const MultiIndex& idx) {
  MultiIndex r = idx;
  for (auto& x : r) ++x;
  return r;
}

inline std::optional<Witness> swap_witness(const Tensor& u, const std::vector<int>& slots, double tol) {
  const int n = u.dim();
  const int k = u.order();
  MultiIndex i_idx(static_cast<std::size_t>(k), 0);
  MultiIndex i_sw(static_cast<std::size_t>(k)), j_sw(static_cast<std::size_t>(k));
  do {
    const Complex ui = u.at(i_idx);
    MultiIndex j_idx(static_cast<std::size_t>(k), 0);
    do {
      const Complex uj = u.at(j_idx);
      for (int s : slots) {
        if (i_idx[s] == j_idx[s]) continue;
        i_sw = i_idx;
        j_sw = j_idx;
        std::swap(i_sw[s], j_sw[s]);
        const Complex lhs = ui * uj;
        const Complex rhs = u.at(i_sw) * u.at(j_sw);
        if (std::abs(lhs - rhs) > tol)
          return Witness{one_based(i_idx), one_based(j_idx), s + 1, lhs, rhs};
      }
    } while (next_index(n, j_idx));
  } while (next_index(n, i_idx));
  return std::nullopt;
}

// w^{[i_1..i_k} w^{i_{k+1}] j_1..j_{k-1}} with weights sgn(p)/(k+1)!.
inline Complex bracket(const Tensor& w, const MultiIndex& i_idx, const MultiIndex& j_idx,
                       const std::vector<Permutation>& perms) {
  const int k = w.order();
  MultiIndex a(static_cast<std::size_t>(k)), b(static_cast<std::size_t>(k));
  Complex s{};
  for (const auto& p : perms) {
    for (int m = 0; m < k; ++m) a[m] = i_idx[p(m)];
    b[0] = i_idx[p(k)];
    for (int m = 1; m < k; ++m) b[m] = j_idx[m - 1];
    s += static_cast<double>(p.sign()) * w.at(a) * w.at(b);
  }
  return s / static_cast<double>(factorial(k + 1));
}

}  // namespace detail

/// First coefficient pattern (lexicographic) violating the class's quadratic identity, or none.
inline std::optional<Witness> quadratic_witness(const Tensor& u, double eps = kDefaultEpsilon) {
  detail::require_classifiable(u);
  const int k = u.order();
  const int n = u.dim();
  const double tol = eps * u.max_abs() * u.max_abs();
  switch (u.symmetry()) {
    case Symmetry::general: {
      std::vector<int> slots(static_cast<std::size_t>(k));
      for (int s = 0; s < k; ++s) slots[s] = s;
      return detail::swap_witness(u, slots, tol);
    }
    case Symmetry::symmetric: {
      auto w = detail::swap_witness(u, {k - 1}, tol);
      if (w) w->slot = 0;
      return w;
    }
    case Symmetry::antisymmetric: {
      // The bracket vanishes on repeated i's and only changes sign under reordering,
      // so increasing i-tuples suffice.
      if (k + 1 > n) return std::nullopt;
      detail::guard_projector_order(k + 1);
      const auto perms = all_permutations(k + 1);
      MultiIndex i_idx(static_cast<std::size_t>(k + 1));
      for (int m = 0; m <= k; ++m) i_idx[m] = m;
      while (true) {
        MultiIndex j_idx(static_cast<std::size_t>(k - 1), 0);
        do {
          const Complex val = detail::bracket(u, i_idx, j_idx, perms);
          if (std::abs(val) > tol)
            return Witness{detail::one_based(i_idx), detail::one_based(j_idx), 0, val, Complex{}};
        } while (next_index(n, j_idx));
        int pos = k;
        while (pos >= 0 && i_idx[pos] == n - (k + 1 - pos)) --pos;
        if (pos < 0) break;
        ++i_idx[pos];
        for (int m = pos + 1; m <= k; ++m) i_idx[m] = i_idx[m - 1] + 1;
      }
      return std::nullopt;
    }
    case Symmetry::young: break;
  }
  fail(ErrorCode::unsupported_class, "young tensors are classified through the S-rank");
}

/// Runs every applicable test. The verdict's `simple` is the rank decision; the
/// witness and overlap score are attached where the class supports them.
inline Verdict classify(const Tensor& u, double eps = kDefaultEpsilon) {
  Verdict v = is_simple(u, eps);
  if (u.symmetry() != Symmetry::young) v.witness = quadratic_witness(u, eps);
  if (u.symmetry() == Symmetry::general || u.symmetry() == Symmetry::symmetric)
    v.score = overlap_score(normalized(u), eps);
  return v;
}

}  // namespace srank
