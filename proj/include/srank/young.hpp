#pragma once

// Young tableaux, symmetrizers and parastatistics.
//
// A SymmetrizerOperator is an integer-coefficient formal sum over S_k divided by a
// positive integer. Each group element p acts as U_p(f_1 x ... x f_k) = f_p(1) x ... x f_p(k),
// so U_a U_b = U_{b o a} and products of formal sums are exact.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "srank/entanglement.hpp"
#include "srank/error.hpp"
#include "srank/linalg.hpp"
#include "srank/permutation.hpp"
#include "srank/tableau.hpp"
#include "srank/tensor.hpp"

namespace srank {

inline constexpr int kMaxTableauOrder = 8;
inline constexpr int kMaxCentralOrder = 6;

inline std::vector<Partition> enumerate_partitions(int k) {
  if (k < 1) fail(ErrorCode::invalid_argument, "partitions need k >= 1");
  if (k > kMaxTableauOrder) fail(ErrorCode::size_guard_exceeded, "k exceeds " + std::to_string(kMaxTableauOrder));
  std::vector<Partition> out;
  std::vector<int> parts;
  // Reverse lexicographic: (k), (k-1,1), ...
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, k, k);
  return out;
}

/// All k! numberings of the diagram, filled row by row from successive permutations of 1..k.
inline std::vector<YoungTableau> enumerate_tableaux(const Partition& shape) {
  const int k = shape.size();
  if (k > kMaxTableauOrder) fail(ErrorCode::size_guard_exceeded, "k exceeds " + std::to_string(kMaxTableauOrder));
  std::vector<int> labels(static_cast<std::size_t>(k));
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<YoungTableau> out;
  do {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (int len : shape.parts()) {
      rows.emplace_back(labels.begin() + static_cast<long>(pos), labels.begin() + static_cast<long>(pos + len));
      pos += static_cast<std::size_t>(len);
    }
    out.emplace_back(std::move(rows));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

/// Row-major canonical tableau: 1..lambda_1 in the first row, and so on.
inline YoungTableau canonical_tableau(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int len : shape.parts()) {
    std::vector<int> r(static_cast<std::size_t>(len));
    std::iota(r.begin(), r.end(), next);
    next += len;
    rows.push_back(std::move(r));
  }
  return YoungTableau(std::move(rows));
}

class SymmetrizerOperator {
 public:
  using Terms = std::map<Permutation, std::int64_t>;

  SymmetrizerOperator() = default;
  SymmetrizerOperator(int k, Terms terms, std::int64_t denominator = 1)
      : k_(k), terms_(std::move(terms)), denominator_(denominator) {
    if (denominator_ <= 0) fail(ErrorCode::invalid_argument, "denominator must be positive");
    prune();
  }

  static SymmetrizerOperator identity(int k) { return SymmetrizerOperator(k, {{Permutation::identity(k), 1}}); }

  int order() const noexcept { return k_; }
  const Terms& terms() const noexcept { return terms_; }
  std::int64_t denominator() const noexcept { return denominator_; }

  std::int64_t numerator_of(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Operator composition: (lhs * rhs) u = lhs(rhs(u)).
  friend SymmetrizerOperator operator*(const SymmetrizerOperator& lhs, const SymmetrizerOperator& rhs) {
    if (lhs.k_ != rhs.k_) fail(ErrorCode::order_mismatch);
    Terms out;
    for (const auto& [a, ca] : lhs.terms_)
      for (const auto& [b, cb] : rhs.terms_) out[compose(b, a)] += ca * cb;
    return SymmetrizerOperator(lhs.k_, std::move(out), lhs.denominator_ * rhs.denominator_);
  }

  friend SymmetrizerOperator operator+(const SymmetrizerOperator& lhs, const SymmetrizerOperator& rhs) {
    if (lhs.k_ != rhs.k_) fail(ErrorCode::order_mismatch);
    const std::int64_t d = std::lcm(lhs.denominator_, rhs.denominator_);
    Terms out;
    for (const auto& [p, c] : lhs.terms_) out[p] += c * (d / lhs.denominator_);
    for (const auto& [p, c] : rhs.terms_) out[p] += c * (d / rhs.denominator_);
    return SymmetrizerOperator(lhs.k_, std::move(out), d);
  }

  SymmetrizerOperator scaled(std::int64_t num, std::int64_t den) const {
    Terms out = terms_;
    for (auto& [p, c] : out) c *= num;
    return SymmetrizerOperator(k_, std::move(out), denominator_ * den);
  }

  /// Exact equality of the rational formal sums.
  friend bool operator==(const SymmetrizerOperator& a, const SymmetrizerOperator& b) {
    if (a.k_ != b.k_) return false;
    const std::int64_t d = std::lcm(a.denominator_, b.denominator_);
    Terms x, y;
    for (const auto& [p, c] : a.terms_) x[p] = c * (d / a.denominator_);
    for (const auto& [p, c] : b.terms_) y[p] = c * (d / b.denominator_);
    return x == y;
  }

  /// Adjoint: U_p^dagger = U_{p^-1}.
  SymmetrizerOperator adjoint() const {
    Terms out;
    for (const auto& [p, c] : terms_) out[p.inverse()] += c;
    return SymmetrizerOperator(k_, std::move(out), denominator_);
  }

  Tensor apply(const Tensor& u) const {
    if (u.order() != k_) fail(ErrorCode::order_mismatch);
    std::vector<Complex> acc(u.size());
    const Tensor g = u.retagged(Symmetry::general);
    for (const auto& [p, c] : terms_) {
      const Tensor pu = permute(g, p);
      const double w = static_cast<double>(c);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * pu[i];
    }
    const double inv = 1.0 / static_cast<double>(denominator_);
    for (auto& x : acc) x *= inv;
    return Tensor(u.dim(), k_, std::move(acc));
  }

  /// n^k x n^k matrix of the operator in the product basis.
  Matrix matrix(int n) const {
    const std::size_t dim = ipow(n, k_);
    if (dim > 4096) fail(ErrorCode::size_guard_exceeded, "operator matrix larger than 4096 x 4096");
    Matrix m(static_cast<int>(dim), static_cast<int>(dim));
    MultiIndex idx(static_cast<std::size_t>(k_)), img(static_cast<std::size_t>(k_));
    const double inv = 1.0 / static_cast<double>(denominator_);
    for (const auto& [p, c] : terms_) {
      std::fill(idx.begin(), idx.end(), 0);
      std::size_t col = 0;
      do {
        for (int s = 0; s < k_; ++s) img[s] = idx[p(s)];
        m(static_cast<int>(flat_index(n, img)), static_cast<int>(col)) += static_cast<double>(c) * inv;
        ++col;
      } while (next_index(n, idx));
    }
    return m;
  }

  /// Trace on H^{(k)}: sum_p c_p n^{cycles(p)} / denominator.
  double trace(int n) const {
    double t = 0.0;
    for (const auto& [p, c] : terms_) {
      std::vector<char> seen(static_cast<std::size_t>(k_), 0);
      int cycles = 0;
      for (int s = 0; s < k_; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int x = s; !seen[x]; x = p(x)) seen[x] = 1;
      }
      t += static_cast<double>(c) * std::pow(static_cast<double>(n), cycles);
    }
    return t / static_cast<double>(denominator_);
  }

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second == 0)
        it = terms_.erase(it);
      else
        ++it;
    }
    std::int64_t g = denominator_;
    for (const auto& [p, c] : terms_) g = std::gcd(g, c < 0 ? -c : c);
    if (g > 1) {
      for (auto& [p, c] : terms_) c /= g;
      denominator_ /= g;
    }
  }

  int k_ = 0;
  Terms terms_;
  std::int64_t denominator_ = 1;
};

namespace detail {

// All permutations of {0..k-1} preserving each block (blocks given by 1-based labels).
inline std::vector<Permutation> block_preserving(int k, const std::vector<std::vector<int>>& blocks) {
  std::vector<Permutation> group{Permutation::identity(k)};
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<int> positions;
    for (int b : block) positions.push_back(b - 1);
    std::vector<Permutation> next;
    for (const auto& local : all_permutations(static_cast<int>(positions.size()))) {
      std::vector<int> img(static_cast<std::size_t>(k));
      std::iota(img.begin(), img.end(), 0);
      for (std::size_t m = 0; m < positions.size(); ++m) img[positions[m]] = positions[local(static_cast<int>(m))];
      const Permutation lp(img);
      for (const auto& g : group) next.push_back(compose(g, lp));
    }
    group = std::move(next);
  }
  return group;
}

inline std::vector<std::vector<int>> tableau_columns(const YoungTableau& t) {
  std::vector<std::vector<int>> cols;
  for (int j = 0; j < t.shape().columns(); ++j) cols.push_back(t.column(j));
  return cols;
}

}  // namespace detail

/// Row group P_alpha.
inline std::vector<Permutation> row_group(const YoungTableau& t) {
  return detail::block_preserving(t.size(), t.rows());
}

/// Column group Q_alpha.
inline std::vector<Permutation> column_group(const YoungTableau& t) {
  return detail::block_preserving(t.size(), detail::tableau_columns(t));
}

/// a_alpha = sum_{P} p.
inline SymmetrizerOperator row_symmetrizer(const YoungTableau& t) {
  SymmetrizerOperator::Terms terms;
  for (const auto& p : row_group(t)) terms[p] += 1;
  return SymmetrizerOperator(t.size(), std::move(terms));
}

/// b_alpha = sum_{Q} sgn(q) q.
inline SymmetrizerOperator column_antisymmetrizer(const YoungTableau& t) {
  SymmetrizerOperator::Terms terms;
  for (const auto& q : column_group(t)) terms[q] += q.sign();
  return SymmetrizerOperator(t.size(), std::move(terms));
}

/// c_alpha = sum_{tau in P, sigma in Q} sgn(sigma) U_{tau o sigma}: the row symmetrizer acts first.
inline SymmetrizerOperator young_symmetrizer(const YoungTableau& t) {
  if (t.size() > kMaxTableauOrder) fail(ErrorCode::size_guard_exceeded);
  SymmetrizerOperator::Terms terms;
  const auto rows = row_group(t);
  const auto cols = column_group(t);
  for (const auto& tau : rows)
    for (const auto& sigma : cols) terms[compose(tau, sigma)] += sigma.sign();
  return SymmetrizerOperator(t.size(), std::move(terms));
}

/// mu(alpha) from c_alpha o c_alpha = mu c_alpha; c_alpha has identity coefficient 1.
inline std::int64_t mu_constant(const YoungTableau& t) {
  const auto c = young_symmetrizer(t);
  const auto cc = c * c;
  const auto id = Permutation::identity(t.size());
  const std::int64_t mu = cc.numerator_of(id) / cc.denominator();
  if (mu <= 0 || !(cc == c.scaled(mu, 1))) fail(ErrorCode::invalid_argument, "c o c is not proportional to c");
  return mu;
}

/// pi^alpha = c_alpha / mu(alpha); idempotent with image H^alpha.
inline SymmetrizerOperator young_projector(const YoungTableau& t) {
  const auto c = young_symmetrizer(t);
  return c.scaled(1, mu_constant(t));
}

/// epsilon_lambda = (1/mu^2) sum_{alpha in Y_lambda} c_alpha.
inline SymmetrizerOperator central_symmetrizer(const Partition& shape) {
  const int k = shape.size();
  if (k > kMaxCentralOrder) fail(ErrorCode::size_guard_exceeded, "central symmetrizer needs k <= 6");
  const auto tableaux = enumerate_tableaux(shape);
  const std::int64_t mu = mu_constant(tableaux.front());
  SymmetrizerOperator::Terms sum;
  for (const auto& t : tableaux) {
    const auto c_alpha = young_symmetrizer(t);
    for (const auto& [p, c] : c_alpha.terms()) sum[p] += c;
  }
  return SymmetrizerOperator(k, std::move(sum), mu * mu);
}

/// i_alpha(x_1..x_r) = x_{row(1)} x ... x x_{row(k)}.
inline Tensor embed_rows(const YoungTableau& t, const std::vector<Tensor>& xs) {
  if (static_cast<int>(xs.size()) != t.row_count())
    fail(ErrorCode::invalid_argument, "need one vector per row of the tableau");
  std::vector<Tensor> factors;
  for (int box = 1; box <= t.size(); ++box) factors.push_back(xs[t.row_of(box)]);
  return product_of(factors);
}

/// pi^alpha(i_alpha(x_1..x_r)) for linearly independent x_j; tagged young(alpha).
inline Tensor alpha_simple(const YoungTableau& t, const std::vector<Tensor>& xs, double eps = kDefaultEpsilon) {
  if (static_cast<int>(xs.size()) != t.row_count())
    fail(ErrorCode::invalid_argument, "need one vector per row of the tableau");
  const int n = xs.front().dim();
  Matrix m(static_cast<int>(xs.size()), n);
  for (std::size_t r = 0; r < xs.size(); ++r) {
    if (xs[r].order() != 1 || xs[r].dim() != n) fail(ErrorCode::dimension_mismatch);
    for (int c = 0; c < n; ++c) m(static_cast<int>(r), c) = xs[r][static_cast<std::size_t>(c)];
  }
  if (numerical_rank(m, eps) < static_cast<int>(xs.size())) fail(ErrorCode::dependent_vectors);
  return young_projector(t).apply(embed_rows(t, xs)).retagged(Symmetry::young, t);
}

/// Tags u as an element of H^alpha after checking ||pi^alpha u - u|| <= eps ||u||.
inline Tensor as_young(const Tensor& u, const YoungTableau& t, double eps = kDefaultEpsilon) {
  if (u.order() != t.size()) fail(ErrorCode::order_mismatch);
  const Tensor pu = young_projector(t).apply(u);
  if (norm(pu - u.retagged(Symmetry::general)) > eps * norm(u)) fail(ErrorCode::not_in_irreducible);
  return u.retagged(Symmetry::young, t);
}

/// Simple in H^alpha iff the S-rank equals the number of rows.
inline Verdict alpha_is_simple(const Tensor& u, const YoungTableau& t, double eps = kDefaultEpsilon) {
  return is_simple(as_young(u, t, eps), eps);
}

}  // namespace srank
