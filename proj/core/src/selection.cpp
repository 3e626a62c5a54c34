#include "subcond/selection.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace subcond {

Selection::Selection(Side side, Index ambient, std::vector<int> indices_1based)
    : side_(side), ambient_(ambient), indices_(std::move(indices_1based)) {
  if (ambient_ < 1) {
    throw std::invalid_argument("Selection: ambient dimension must be >= 1");
  }
  std::sort(indices_.begin(), indices_.end());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1 || indices_[i] > ambient_) {
      throw std::invalid_argument("Selection: index " +
                                  std::to_string(indices_[i]) +
                                  " out of range 1.." +
                                  std::to_string(ambient_));
    }
    if (i > 0 && indices_[i] == indices_[i - 1]) {
      throw std::invalid_argument("Selection: duplicate index " +
                                  std::to_string(indices_[i]));
    }
  }
}

Selection Selection::parse(Side side, Index ambient, std::string_view csv) {
  std::vector<int> indices;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view token = csv.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) {
      throw std::invalid_argument("Selection: empty index in list");
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                     value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("Selection: bad index '" +
                                  std::string(token) + "'");
    }
    indices.push_back(value);
    pos = comma + 1;
    if (pos == csv.size() && comma < csv.size()) {
      throw std::invalid_argument("Selection: trailing comma");
    }
  }
  return Selection(side, ambient, std::move(indices));
}

bool Selection::contains(int index_1based) const {
  return std::binary_search(indices_.begin(), indices_.end(), index_1based);
}

Selection Selection::complement() const {
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(ambient_) - indices_.size());
  for (int i = 1; i <= ambient_; ++i) {
    if (!contains(i)) rest.push_back(i);
  }
  return Selection(side_, ambient_, std::move(rest));
}

Selection Selection::as_left() const {
  return Selection(Side::Left, ambient_, indices_);
}

}  // namespace subcond
