#pragma once

#include <string_view>
#include <vector>

#include "subcond/types.hpp"

namespace subcond {

/// A set of singular-value positions choosing a singular subspace.
///
/// Indices are 1-based (matching the CLI convention), strictly increasing,
/// and bounded by the ambient dimension (m for Left, n for Right). Empty
/// and full selections are legal.
class Selection {
 public:
  Selection(Side side, Index ambient, std::vector<int> indices_1based);

  /// Parses a comma-separated index list; the empty string is the empty
  /// selection. Throws std::invalid_argument on malformed or out-of-range
  /// input.
  static Selection parse(Side side, Index ambient, std::string_view csv);

  Side side() const { return side_; }
  Index ambient() const { return ambient_; }
  int size() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  bool full() const { return static_cast<Index>(indices_.size()) == ambient_; }
  const std::vector<int>& indices() const { return indices_; }
  bool contains(int index_1based) const;

  /// The complementary selection {1..ambient} minus this one, same side.
  Selection complement() const;

  /// Same indices and ambient dimension, relabeled as a Left selection.
  Selection as_left() const;

 private:
  Side side_;
  Index ambient_;
  std::vector<int> indices_;
};

}  // namespace subcond
