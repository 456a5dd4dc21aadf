#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "srank/error.hpp"

namespace srank {

/// A bijection on {0, ..., k-1}. Acting on tensors it places factor
/// images[m] in position m, i.e. U_sigma(f_1 x ... x f_k) = f_sigma(1) x ... x f_sigma(k).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v]) {
        fail(ErrorCode::invalid_argument, "permutation images must be a bijection");
      }
      seen[v] = 1;
    }
    sign_ = parity_sign(images_);
  }

  static Permutation identity(int k) {
    std::vector<int> img(static_cast<std::size_t>(k));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }

  /// Swaps positions i and j (0-based).
  static Permutation transposition(int k, int i, int j) {
    auto p = identity(k);
    std::swap(p.images_[i], p.images_[j]);
    if (i != j) p.sign_ = -1;
    return p;
  }

  /// tau with tau(a_1 x ... x a_k) = a_k x a_1 x ... x a_{k-1}.
  static Permutation last_to_front(int k) {
    std::vector<int> img(static_cast<std::size_t>(k));
    if (k > 0) {
      img[0] = k - 1;
      for (int m = 1; m < k; ++m) img[m] = m - 1;
    }
    return Permutation(std::move(img));
  }

  /// Moves slot `slot` to the last position, keeping the others in order.
  static Permutation slot_to_last(int k, int slot) {
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(k));
    for (int m = 0; m < k; ++m)
      if (m != slot) img.push_back(m);
    img.push_back(slot);
    return Permutation(std::move(img));
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }
  int sign() const noexcept { return sign_; }
  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
    return Permutation(std::move(inv));
  }

  /// Group composition (a o b)(i) = a(b(i)).
  friend Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) fail(ErrorCode::order_mismatch, "composing permutations of different size");
    std::vector<int> img(a.images_.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = a.images_[b.images_[i]];
    return Permutation(std::move(img));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(images_[i] + 1);
    }
    return s + ")";
  }

 private:
  static int parity_sign(const std::vector<int>& img) {
    int inversions = 0;
    for (std::size_t i = 0; i < img.size(); ++i)
      for (std::size_t j = i + 1; j < img.size(); ++j)
        if (img[i] > img[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
  }

  std::vector<int> images_;
  int sign_ = 1;
};

/// All k! permutations in lexicographic order of their image arrays.
inline std::vector<Permutation> all_permutations(int k) {
  std::vector<Permutation> out;
  std::vector<int> img(static_cast<std::size_t>(k));
  std::iota(img.begin(), img.end(), 0);
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace srank
