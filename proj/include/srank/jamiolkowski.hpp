#pragma once

// Bipartite Jamiolkowski isomorphisms as leg permutations of 4-index tensors.
//
//   layout              legs                      role
//   out_in_out_in       (out1, in1, out2, in2)    source of J and J1 (maps L2(H) -> L2(H))
//   out_in2_out_in1     (out1, in2, out2, in1)    image of J, source of J2
//   out_out_in_in       (out1, out2, in2, in1)    image of J1 and J2 (operators on H x H)
//
//   J : new[a,b,c,d] = old[a,d,c,b]
//   J1: new[a,c,d,b] = old[a,b,c,d]
//   J2: new[a,c,b,d] = old[a,b,c,d]
// so that J2 o J = J1.

#include <string>
#include <vector>

#include "srank/decompositions.hpp"
#include "srank/error.hpp"
#include "srank/linalg.hpp"
#include "srank/tensor.hpp"

namespace srank {

enum class LegLayout { out_in_out_in, out_in2_out_in1, out_out_in_in };

inline std::vector<std::string> leg_names(LegLayout l) {
  switch (l) {
    case LegLayout::out_in_out_in: return {"out1", "in1", "out2", "in2"};
    case LegLayout::out_in2_out_in1: return {"out1", "in2", "out2", "in1"};
    case LegLayout::out_out_in_in: return {"out1", "out2", "in2", "in1"};
  }
  return {};
}

/// Coefficients lambda_{ijkl} of Phi = lambda_{ijkl} |e_i> x <e_j| x |e_k> x <e_l| (in the default layout).
struct FourLegTensor {
  Tensor data;
  LegLayout layout = LegLayout::out_in_out_in;

  FourLegTensor() : data(1, 4) {}
  FourLegTensor(Tensor t, LegLayout l) : data(std::move(t)), layout(l) {
    if (data.order() != 4) fail(ErrorCode::wrong_order, "four-leg tensor needs order 4");
  }

  int dim() const noexcept { return data.dim(); }
  Complex operator()(int a, int b, int c, int d) const { return data.at({a, b, c, d}); }
};

namespace detail {

// new[img] = old[idx], where img[m] = idx[source[m]].
inline Tensor move_legs(const Tensor& t, std::vector<int> source) {
  return permute(t.retagged(Symmetry::general), Permutation(std::move(source)));
}

}  // namespace detail

/// J swaps the two dual legs; it is an involution on coefficients.
inline FourLegTensor jam_J(const FourLegTensor& phi) {
  LegLayout target;
  switch (phi.layout) {
    case LegLayout::out_in_out_in: target = LegLayout::out_in2_out_in1; break;
    case LegLayout::out_in2_out_in1: target = LegLayout::out_in_out_in; break;
    default: fail(ErrorCode::invalid_argument, "J acts on the out/in/out/in layouts");
  }
  return FourLegTensor(detail::move_legs(phi.data, {0, 3, 2, 1}), target);
}

inline FourLegTensor jam_J1(const FourLegTensor& phi) {
  if (phi.layout != LegLayout::out_in_out_in) fail(ErrorCode::invalid_argument, "J1 expects (out1,in1,out2,in2)");
  return FourLegTensor(detail::move_legs(phi.data, {0, 2, 3, 1}), LegLayout::out_out_in_in);
}

inline FourLegTensor jam_J1_inverse(const FourLegTensor& rho) {
  if (rho.layout != LegLayout::out_out_in_in) fail(ErrorCode::invalid_argument, "J1^-1 expects (out1,out2,in2,in1)");
  return FourLegTensor(detail::move_legs(rho.data, {0, 3, 1, 2}), LegLayout::out_in_out_in);
}

inline FourLegTensor jam_J2(const FourLegTensor& phi) {
  if (phi.layout != LegLayout::out_in2_out_in1) fail(ErrorCode::invalid_argument, "J2 expects (out1,in2,out2,in1)");
  return FourLegTensor(detail::move_legs(phi.data, {0, 2, 1, 3}), LegLayout::out_out_in_in);
}

inline FourLegTensor jam_J2_inverse(const FourLegTensor& rho) {
  if (rho.layout != LegLayout::out_out_in_in) fail(ErrorCode::invalid_argument, "J2^-1 expects (out1,out2,in2,in1)");
  return FourLegTensor(detail::move_legs(rho.data, {0, 2, 1, 3}), LegLayout::out_in2_out_in1);
}

enum class SelfAdjointClass { sa_plus, sa_minus, sa, none };

inline std::string to_string(SelfAdjointClass c) {
  switch (c) {
    case SelfAdjointClass::sa_plus: return "sa+";
    case SelfAdjointClass::sa_minus: return "sa-";
    case SelfAdjointClass::sa: return "sa";
    case SelfAdjointClass::none: return "none";
  }
  return "none";
}

/// Self-adjointness lambda_{ijkl} = lambda_{klij}, then the J = +-1 splitting.
inline SelfAdjointClass classify_sa(const FourLegTensor& phi, double eps = kDefaultEpsilon) {
  if (phi.layout != LegLayout::out_in_out_in) fail(ErrorCode::invalid_argument, "expects (out1,in1,out2,in2)");
  const double tol = eps * std::max(phi.data.max_abs(), 1e-300);
  const Tensor swapped = detail::move_legs(phi.data, {2, 3, 0, 1});
  if (max_abs_diff(swapped, phi.data.retagged(Symmetry::general)) > tol) return SelfAdjointClass::none;
  const Tensor j = jam_J(phi).data;
  const Tensor g = phi.data.retagged(Symmetry::general);
  if (max_abs_diff(j, g) <= tol) return SelfAdjointClass::sa_plus;
  if (max_abs_diff(j, Complex(-1.0) * g) <= tol) return SelfAdjointClass::sa_minus;
  return SelfAdjointClass::sa;
}

/// rho_v = |v><v| / ||v||^2 in the (out1, out2, in2, in1) layout.
inline FourLegTensor density_tensor(const Tensor& v) {
  if (v.order() != 2) fail(ErrorCode::wrong_order, "density of an order-2 state");
  if (v.is_zero()) fail(ErrorCode::zero_tensor);
  const int n = v.dim();
  const double nn = norm(v) * norm(v);
  Tensor t(n, 4);
  std::vector<Complex> c(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc)
        for (int d = 0; d < n; ++d)
          c[((static_cast<std::size_t>(a) * n + b) * n + cc) * n + d] = v.at({a, b}) * std::conj(v.at({d, cc})) / nn;
  return FourLegTensor(Tensor(n, 4, std::move(c)), LegLayout::out_out_in_in);
}

/// Phi with J1^+-(Phi) = rho_v, assembled from the Slater decomposition of v / ||v||.
inline FourLegTensor state_to_map(const Tensor& v, double eps = kDefaultEpsilon) {
  if (v.order() != 2) fail(ErrorCode::wrong_order, "Jamiolkowski maps are defined for 2-particle states");
  if (v.is_zero()) fail(ErrorCode::zero_tensor);
  if (v.symmetry() != Symmetry::symmetric && v.symmetry() != Symmetry::antisymmetric)
    fail(ErrorCode::wrong_class, "state must be symmetric or antisymmetric");
  const int n = v.dim();
  const Tensor unit = normalized(v);
  const SlaterDecomposition d = slater(unit, eps);
  std::vector<Complex> c(ipow(n, 4));
  // |x><y| x |z><w| -> coefficient x_a conj(y_b) z_c conj(w_d)
  auto add_term = [&](Complex weight, const Vector& x, const Vector& y, const Vector& z, const Vector& w) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const Complex xy = weight * x[a] * std::conj(y[b]);
        if (xy == Complex{}) continue;
        for (int cc = 0; cc < n; ++cc)
          for (int dd = 0; dd < n; ++dd)
            c[((static_cast<std::size_t>(a) * n + b) * n + cc) * n + dd] += xy * z[cc] * std::conj(w[dd]);
      }
  };
  const int r = d.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const double ll = d.lambdas[i] * d.lambdas[j];
      if (d.kind == SlaterKind::symmetric) {
        add_term(ll, d.vectors[i], d.vectors[j], d.vectors[i], d.vectors[j]);
      } else {
        const Vector& fi = d.vectors[i];
        const Vector& fj = d.vectors[j];
        const Vector& gi = d.partners[i];
        const Vector& gj = d.partners[j];
        // f ^ g = (f x g - g x f)/2, so |w><w| carries a 1/4 per pair.
        add_term(0.25 * ll, fi, fj, gi, gj);
        add_term(-0.25 * ll, gi, fj, fi, gj);
        add_term(-0.25 * ll, fi, gj, gi, fj);
        add_term(0.25 * ll, gi, gj, fi, fj);
      }
    }
  return FourLegTensor(Tensor(n, 4, std::move(c)), LegLayout::out_in_out_in);
}

/// Phi as an operator on L2(H): rows (out1, in1), columns (out2, in2).
inline Matrix map_matrix(const FourLegTensor& phi) {
  if (phi.layout != LegLayout::out_in_out_in) fail(ErrorCode::invalid_argument, "expects (out1,in1,out2,in2)");
  const int n = phi.dim();
  const int nn = n * n;
  Matrix m(nn, nn);
  for (int r = 0; r < nn; ++r)
    for (int c = 0; c < nn; ++c) m(r, c) = phi.data[static_cast<std::size_t>(r) * nn + c];
  return m;
}

inline int map_rank(const FourLegTensor& phi, double eps = kDefaultEpsilon) {
  return numerical_rank(map_matrix(phi), eps);
}

}  // namespace srank
