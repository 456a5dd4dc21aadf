#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srank/error.hpp"
#include "srank/permutation.hpp"
#include "srank/tableau.hpp"

namespace srank {

using Complex = std::complex<double>;

/// Relative tolerance used by every invariant check and rank decision.
inline constexpr double kDefaultEpsilon = 1e-9;

enum class Symmetry { general, symmetric, antisymmetric, young };

inline std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::general: return "general";
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::antisymmetric: return "antisymmetric";
    case Symmetry::young: return "young";
  }
  return "general";
}

using MultiIndex = std::vector<int>;

inline std::size_t ipow(int n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<std::size_t>(n);
  return r;
}

/// Row-major flat offset of a 0-based multi-index; the first index is the slowest.
inline std::size_t flat_index(int n, std::span<const int> idx) {
  std::size_t f = 0;
  for (int i : idx) f = f * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
  return f;
}

inline void unflatten(int n, std::size_t flat, std::span<int> idx) {
  for (std::size_t m = idx.size(); m-- > 0;) {
    idx[m] = static_cast<int>(flat % static_cast<std::size_t>(n));
    flat /= static_cast<std::size_t>(n);
  }
}

/// Advances a 0-based multi-index in lexicographic order; false after the last one.
inline bool next_index(int n, std::span<int> idx) {
  for (std::size_t m = idx.size(); m-- > 0;) {
    if (++idx[m] < n) return true;
    idx[m] = 0;
  }
  return false;
}

/// Dense order-k tensor over an n-dimensional single-particle space.
class Tensor {
 public:
  Tensor() : Tensor(1, 0) {}

  Tensor(int n, int k) : n_(n), k_(k) {
    if (n < 1) fail(ErrorCode::invalid_argument, "dimension must be positive");
    if (k < 0) fail(ErrorCode::invalid_argument, "order must be non-negative");
    coeffs_.assign(ipow(n, k), Complex{});
  }

  Tensor(int n, int k, std::vector<Complex> coeffs, Symmetry sym = Symmetry::general,
         std::optional<YoungTableau> tableau = std::nullopt)
      : n_(n), k_(k), coeffs_(std::move(coeffs)), sym_(sym), tableau_(std::move(tableau)) {
    if (n < 1) fail(ErrorCode::invalid_argument, "dimension must be positive");
    if (k < 0) fail(ErrorCode::invalid_argument, "order must be non-negative");
    if (coeffs_.size() != ipow(n, k)) fail(ErrorCode::invalid_argument, "coefficient count must be n^k");
    for (const auto& c : coeffs_)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) fail(ErrorCode::non_finite);
    if (sym_ == Symmetry::young && (!tableau_ || tableau_->size() != k_))
      fail(ErrorCode::invalid_argument, "young symmetry needs a tableau with k boxes");
    if (sym_ != Symmetry::young) tableau_.reset();
  }

  int dim() const noexcept { return n_; }
  int order() const noexcept { return k_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  Symmetry symmetry() const noexcept { return sym_; }
  const std::optional<YoungTableau>& tableau() const noexcept { return tableau_; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  Complex operator[](std::size_t flat) const { return coeffs_[flat]; }
  Complex at(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != k_) fail(ErrorCode::order_mismatch);
    for (int i : idx)
      if (i < 0 || i >= n_) fail(ErrorCode::index_out_of_range);
    return coeffs_[flat_index(n_, idx)];
  }
  Complex at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }
  bool is_zero() const { return max_abs() == 0.0; }

  /// Same coefficients, new tag; no check is made.
  Tensor retagged(Symmetry sym, std::optional<YoungTableau> tableau = std::nullopt) const {
    Tensor t = *this;
    t.sym_ = sym;
    t.tableau_ = sym == Symmetry::young ? std::move(tableau) : std::nullopt;
    return t;
  }

 private:
  int n_ = 1;
  int k_ = 0;
  std::vector<Complex> coeffs_;
  Symmetry sym_ = Symmetry::general;
  std::optional<YoungTableau> tableau_;
};

inline Tensor scalar_tensor(int n, Complex value) { return Tensor(n, 0, {value}); }

/// Unit vector e_i (0-based i) as an order-1 tensor.
inline Tensor basis_vector(int n, int i) {
  if (i < 0 || i >= n) fail(ErrorCode::index_out_of_range);
  std::vector<Complex> c(static_cast<std::size_t>(n));
  c[static_cast<std::size_t>(i)] = 1.0;
  return Tensor(n, 1, std::move(c));
}

inline Tensor vector_tensor(std::vector<Complex> components) {
  const int n = static_cast<int>(components.size());
  return Tensor(n, 1, std::move(components));
}

// --- elementwise arithmetic ---------------------------------------------------

inline void require_same_shape(const Tensor& a, const Tensor& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::dimension_mismatch);
  if (a.order() != b.order()) fail(ErrorCode::order_mismatch);
}

inline Symmetry common_symmetry(const Tensor& a, const Tensor& b) {
  if (a.symmetry() == b.symmetry() && a.symmetry() != Symmetry::young) return a.symmetry();
  if (a.symmetry() == Symmetry::young && b.symmetry() == Symmetry::young && a.tableau() == b.tableau())
    return Symmetry::young;
  return Symmetry::general;
}

inline Tensor operator+(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b);
  std::vector<Complex> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  const Symmetry s = common_symmetry(a, b);
  return Tensor(a.dim(), a.order(), std::move(c), s, s == Symmetry::young ? a.tableau() : std::nullopt);
}

inline Tensor operator*(Complex s, const Tensor& a) {
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= s;
  return Tensor(a.dim(), a.order(), std::move(c), a.symmetry(), a.tableau());
}

inline Tensor operator-(const Tensor& a, const Tensor& b) { return a + Complex(-1.0) * b; }

inline Tensor conj(const Tensor& a) {
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x = std::conj(x);
  return Tensor(a.dim(), a.order(), std::move(c), a.symmetry(), a.tableau());
}

/// Largest absolute coefficient difference.
inline double max_abs_diff(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// --- tensor algebra ------------------------------------------------------------

/// Hermitian product <a|b>, conjugate-linear in a.
inline Complex inner_product(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b);
  Complex s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double norm(const Tensor& a) {
  double s = 0.0;
  for (const auto& c : a.coeffs()) s += std::norm(c);
  return std::sqrt(s);
}

inline Tensor normalized(const Tensor& a) {
  const double nrm = norm(a);
  if (nrm == 0.0) fail(ErrorCode::zero_tensor);
  return Complex(1.0 / nrm) * a;
}

/// (a x b)^{I,J} = a^I b^J.
inline Tensor tensor_product(const Tensor& a, const Tensor& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::dimension_mismatch);
  std::vector<Complex> c(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i * b.size() + j] = a[i] * b[j];
  return Tensor(a.dim(), a.order() + b.order(), std::move(c));
}

/// U_sigma u, with (U_sigma u)^{i_sigma(1) ... i_sigma(k)} = u^{i_1 ... i_k}.
inline Tensor permute(const Tensor& u, const Permutation& sigma) {
  const int k = u.order();
  if (sigma.size() != k) fail(ErrorCode::order_mismatch, "permutation acts on a different number of slots");
  const int n = u.dim();
  std::vector<Complex> out(u.size());
  MultiIndex idx(static_cast<std::size_t>(k), 0), img(static_cast<std::size_t>(k));
  std::size_t flat = 0;
  do {
    for (int m = 0; m < k; ++m) img[m] = idx[sigma(m)];
    out[flat_index(n, img)] = u[flat];
    ++flat;
  } while (next_index(n, idx));
  Symmetry s = u.symmetry();
  if (s == Symmetry::young && !sigma.is_identity()) s = Symmetry::general;
  return Tensor(n, k, std::move(out), s, s == Symmetry::young ? u.tableau() : std::nullopt);
}

/// Largest deviation of u from its class invariant, relative to max|u|.
inline double symmetry_defect(const Tensor& u, Symmetry sym) {
  if (sym == Symmetry::general || sym == Symmetry::young || u.order() < 2) return 0.0;
  const double scale = u.max_abs();
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  const int k = u.order();
  // Adjacent transpositions generate S_k.
  for (int m = 0; m + 1 < k; ++m) {
    const auto p = Permutation::transposition(k, m, m + 1);
    const Tensor pu = permute(u, p);
    const double s = sym == Symmetry::symmetric ? 1.0 : -1.0;
    for (std::size_t i = 0; i < u.size(); ++i) worst = std::max(worst, std::abs(pu[i] - s * u[i]));
  }
  return worst / scale;
}

inline Tensor assert_symmetry(const Tensor& u, Symmetry sym, double eps = kDefaultEpsilon) {
  if (sym == Symmetry::young) fail(ErrorCode::unsupported_class, "young membership is checked against a tableau");
  if (symmetry_defect(u, sym) > eps)
    fail(ErrorCode::symmetry_violation, "coefficients are not " + to_string(sym));
  return u.retagged(sym);
}

struct Entry {
  MultiIndex index;  // 1-based, as in the external format
  Complex value;
};

/// Builds a tensor from sparse 1-based entries; unlisted coefficients are zero.
inline Tensor make_tensor(int n, int k, const std::vector<Entry>& entries, Symmetry sym = Symmetry::general,
                          double eps = kDefaultEpsilon) {
  Tensor zero(n, k);
  std::vector<Complex> c(zero.size());
  std::vector<char> set(c.size(), 0);
  MultiIndex idx(static_cast<std::size_t>(k));
  for (const auto& e : entries) {
    if (static_cast<int>(e.index.size()) != k) fail(ErrorCode::index_out_of_range, "multi-index length differs from k");
    for (int m = 0; m < k; ++m) {
      if (e.index[m] < 1 || e.index[m] > n) fail(ErrorCode::index_out_of_range);
      idx[m] = e.index[m] - 1;
    }
    const auto f = flat_index(n, idx);
    if (set[f]) fail(ErrorCode::duplicate_entry);
    set[f] = 1;
    c[f] = e.value;
  }
  Tensor t(n, k, std::move(c));
  if (sym == Symmetry::general) return t;
  return assert_symmetry(t, sym, eps);
}

/// f_1 x ... x f_k for order-1 tensors.
inline Tensor product_of(const std::vector<Tensor>& factors) {
  if (factors.empty()) fail(ErrorCode::invalid_argument, "need at least one factor");
  Tensor t = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) t = tensor_product(t, factors[i]);
  return t;
}

}  // namespace srank
