#pragma once

// Exact rank over the Gaussian rationals Q(i), for integer/rational test tensors.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace exact {

using Q = boost::multiprecision::cpp_rational;

struct Gauss {
  Q re, im;
  bool is_zero() const { return re == 0 && im == 0; }
};

inline Gauss operator-(const Gauss& a, const Gauss& b) { return {a.re - b.re, a.im - b.im}; }
inline Gauss operator*(const Gauss& a, const Gauss& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Gauss operator/(const Gauss& a, const Gauss& b) {
  const Q d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

using GaussMatrix = std::vector<std::vector<Gauss>>;

inline int rank(GaussMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const Gauss f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace exact
