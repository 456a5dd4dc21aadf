#pragma once

#include <numeric>
#include <vector>

#include "srank/error.hpp"

namespace srank {

/// Weakly decreasing positive parts summing to k.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) fail(ErrorCode::invalid_argument, "partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        fail(ErrorCode::invalid_argument, "partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int columns() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  /// Number of boxes in column j.
  int column_length(int j) const {
    int len = 0;
    for (int p : parts_)
      if (p > j) ++len;
    return len;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

/// A numbering of the boxes of a Young diagram by 1..k, stored row by row.
class YoungTableau {
 public:
  YoungTableau() = default;

  explicit YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> parts;
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    shape_ = Partition(parts);
    const int k = shape_.size();
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    row_of_.assign(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (int box : rows_[i]) {
        if (box < 1 || box > k || seen[box - 1])
          fail(ErrorCode::invalid_argument, "tableau numbering must be a bijection onto 1..k");
        seen[box - 1] = 1;
        row_of_[box - 1] = static_cast<int>(i);
      }
    }
  }

  YoungTableau(const Partition& shape, std::vector<std::vector<int>> rows) : YoungTableau(std::move(rows)) {
    if (!(shape_ == shape)) fail(ErrorCode::invalid_argument, "numbering does not fit the partition");
  }

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int size() const { return shape_.size(); }
  int row_count() const noexcept { return shape_.rows(); }

  /// 0-based row holding the box numbered `box` (1-based).
  int row_of(int box) const { return row_of_.at(static_cast<std::size_t>(box - 1)); }

  /// Box numbers in column j, top to bottom.
  std::vector<int> column(int j) const {
    std::vector<int> col;
    for (const auto& r : rows_)
      if (static_cast<int>(r.size()) > j) col.push_back(r[j]);
    return col;
  }

  friend bool operator==(const YoungTableau& a, const YoungTableau& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  Partition shape_;
  std::vector<int> row_of_;
};

}  // namespace srank
