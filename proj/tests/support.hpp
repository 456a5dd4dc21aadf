#pragma once

// Random generators and independent reference computations used by the tests.

#include <random>
#include <vector>

#include "srank/srank.hpp"

namespace testing_support {

using namespace srank;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240607);
  return gen;
}

inline Complex random_complex() {
  std::normal_distribution<double> g(0.0, 1.0);
  return {g(rng()), g(rng())};
}

inline Tensor random_vector(int n) {
  std::vector<Complex> c(static_cast<std::size_t>(n));
  for (auto& x : c) x = random_complex();
  return vector_tensor(std::move(c));
}

inline Tensor random_tensor(int n, int k) {
  std::vector<Complex> c(ipow(n, k));
  for (auto& x : c) x = random_complex();
  return Tensor(n, k, std::move(c));
}

inline std::vector<Tensor> random_vectors(int n, int count) {
  std::vector<Tensor> v;
  for (int i = 0; i < count; ++i) v.push_back(random_vector(n));
  return v;
}

inline Tensor random_symmetric(int n, int k) { return symmetrize(random_tensor(n, k)); }
inline Tensor random_antisymmetric(int n, int k) { return antisymmetrize(random_tensor(n, k)); }

inline Tensor simple_general(int n, int k) { return product_of(random_vectors(n, k)); }

inline Tensor simple_symmetric(int n, int k) {
  const Tensor f = random_vector(n);
  return vee_of(std::vector<Tensor>(static_cast<std::size_t>(k), f));
}

inline Tensor simple_antisymmetric(int n, int k) { return wedge_of(random_vectors(n, k)); }

// Coefficients of f_1 x ... x f_k computed without the library's tensor product.
inline Complex product_coefficient(const std::vector<Tensor>& fs, const MultiIndex& idx) {
  Complex c{1.0};
  for (std::size_t m = 0; m < fs.size(); ++m) c *= fs[m][static_cast<std::size_t>(idx[m])];
  return c;
}

// Permanent straight from the definition: sum over S_m of prod a_{i,p(i)}.
inline Complex permanent_by_definition(const Matrix& a) {
  const int m = a.rows();
  Complex s{};
  for (const auto& p : all_permutations(m)) {
    Complex t{1.0};
    for (int i = 0; i < m; ++i) t *= a(i, p(i));
    s += t;
  }
  return s;
}

inline Complex determinant_by_definition(const Matrix& a) {
  const int m = a.rows();
  Complex s{};
  for (const auto& p : all_permutations(m)) {
    Complex t{static_cast<double>(p.sign())};
    for (int i = 0; i < m; ++i) t *= a(i, p(i));
    s += t;
  }
  return s;
}

inline Matrix gram(const std::vector<Tensor>& f, const std::vector<Tensor>& g) {
  Matrix m(static_cast<int>(f.size()), static_cast<int>(g.size()));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = inner_product(f[i], g[j]);
  return m;
}

// Flattening of u with `slot` (0-based) as the column index, built by explicit loops.
inline Matrix brute_flattening(const Tensor& u, int slot) {
  const int n = u.dim(), k = u.order();
  Matrix m(static_cast<int>(ipow(n, k - 1)), n);
  MultiIndex idx(static_cast<std::size_t>(k), 0);
  std::size_t flat = 0;
  do {
    std::size_t row = 0;
    for (int s = 0; s < k; ++s)
      if (s != slot) row = row * static_cast<std::size_t>(n) + static_cast<std::size_t>(idx[s]);
    m(static_cast<int>(row), idx[slot]) = u[flat++];
  } while (next_index(n, idx));
  return m;
}

}  // namespace testing_support
